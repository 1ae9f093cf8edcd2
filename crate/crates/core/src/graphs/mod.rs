//! Simple graphs, their edge and cover ideals, independence complexes, the
//! layered graphs `G_ℓ` and very well-covered structure.

mod vwc;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hochster::{self, betti_table};
use crate::homology::Field;
use crate::monomials::{prime_power, sr_complex, Monomial, MonomialIdeal, Polarization};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

pub use vwc::{
    graphs_isomorphic, vwc_decompose, vwc_expand, vwc_serre_depth_formula, VwcStructure,
};

/// Simple undirected graph on `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Wire format `{"n": 4, "edges": [[1,2],[3,4]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            if adj[u - 1].contains(v) {
                return Err(Error::InvalidGraph(format!("repeated edge {{{u},{v}}}")));
            }
            adj[u - 1] = adj[u - 1].insert(v);
            adj[v - 1] = adj[v - 1].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn from_json(g: &GraphJson) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = g.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(g.n, &edges)
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        Graph::new(n, &edges).expect("valid")
    }

    /// Path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        Graph::new(n, &edges).expect("valid")
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        if n >= 3 {
            edges.push((1, n));
        }
        Graph::new(n, &edges).expect("valid")
    }

    /// `K_{a,b}` with parts `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (1..=a)
            .flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)))
            .collect();
        Graph::new(a + b, &edges).expect("valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n)
            .flat_map(|u| {
                self.adj[u - 1]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.iter().any(|a| a.is_empty())
    }

    /// Closed neighbourhood `N[S]`.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc.union(self.adj[v - 1]))
    }

    /// Whether `s` spans no edge.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v - 1].intersects(s))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        write!(f, "G[{}]({})", self.n, parts.join(" "))
    }
}

/// `I(G) = (x_u x_v : uv ∈ E)`.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let gens = g
        .edges()
        .into_iter()
        .map(|(u, v)| Monomial::from_set(g.n, VertexSet::singleton(u).insert(v)))
        .collect();
    MonomialIdeal::new(g.n, gens).expect("lengths agree")
}

/// `Δ(G)`, whose faces are the independent sets.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    sr_complex(&edge_ideal(g)).expect("edge ideals are squarefree")
}

/// `J(G)`, generated by the minimal vertex covers.
pub fn cover_ideal(g: &Graph) -> MonomialIdeal {
    let gens = independence_complex(g)
        .facets()
        .iter()
        .map(|f| Monomial::from_set(g.n, f.complement(g.n)))
        .collect();
    MonomialIdeal::new(g.n, gens).expect("lengths agree")
}

/// `J(G)^(ℓ) = ⋂_{uv ∈ E} (x_u, x_v)^ℓ`.
pub fn cover_symbolic_power(g: &Graph, ell: u32) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(g.n);
    for (u, v) in g.edges() {
        acc = acc.intersect(&prime_power(g.n, VertexSet::singleton(u).insert(v), ell))?;
    }
    Ok(acc)
}

/// Largest induced matching, by branching on the first remaining edge.
pub fn induced_matching_number(g: &Graph) -> usize {
    fn go(g: &Graph, edges: &[(usize, usize)], blocked: VertexSet) -> usize {
        let Some(pos) = edges
            .iter()
            .position(|&(u, v)| !blocked.contains(u) && !blocked.contains(v))
        else {
            return 0;
        };
        let (u, v) = edges[pos];
        let rest = &edges[pos + 1..];
        let pair = VertexSet::singleton(u).insert(v);
        // taking uv forbids every vertex adjacent to it
        let take = 1 + go(g, rest, blocked.union(g.closed_neighborhood(pair)));
        let skip = go(g, rest, blocked);
        take.max(skip)
    }
    go(g, &g.edges(), VertexSet::EMPTY)
}

/// Every maximal independent set has the same size.
pub fn is_well_covered(g: &Graph) -> bool {
    independence_complex(g).is_pure()
}

/// Well-covered, no isolated vertices, and minimal covers of size `n/2`.
pub fn is_very_well_covered(g: &Graph) -> bool {
    if g.n == 0 || g.n % 2 == 1 || g.has_isolated_vertex() {
        return false;
    }
    let cx = independence_complex(g);
    cx.is_pure() && cx.facets()[0].len() == g.n / 2
}

/// `G_ℓ` on vertices `x_{i,p}`, `1 ≤ p ≤ ℓ`, labelled `(i-1)ℓ + p`;
/// `x_{i,p} x_{j,q}` is an edge when `x_i x_j` is and `p + q ≤ ℓ + 1`.
pub fn construct_g_ell(g: &Graph, ell: usize) -> Result<Graph> {
    if ell == 0 {
        return Err(Error::Range("ℓ must be at least 1".into()));
    }
    let label = |i: usize, p: usize| (i - 1) * ell + p;
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        for p in 1..=ell {
            for q in 1..=ell + 1 - p {
                edges.push((label(u, p), label(v, q)));
            }
        }
    }
    Graph::new(g.n * ell, &edges)
}

/// Renaming of the polarized ring of `J(G)^(ℓ)` into the vertices of `G_ℓ`:
/// `x_{i,k} ↦ x_{i,k-1}` and `x_i ↦ x_{i,ℓ}`.
pub fn cover_polarization_renaming(pol: &Polarization, ell: usize) -> Result<Vec<usize>> {
    let n = pol.gamma.len();
    if let Some(i) = pol.gamma.iter().position(|&g| g != 0 && g as usize != ell) {
        return Err(Error::InvalidStructure(format!(
            "x{} has largest exponent {} instead of {ell}",
            i + 1,
            pol.gamma[i]
        )));
    }
    let label = |i: usize, p: usize| (i - 1) * ell + p;
    (1..=n + pol.extra)
        .map(|idx| match pol.var_of_index(idx) {
            Some((i, 1)) => Ok(label(i, ell)),
            Some((i, k)) => Ok(label(i, k as usize - 1)),
            None => Err(Error::InvalidStructure(format!("unknown variable {idx}"))),
        })
        .collect()
}

/// `G^a`: vertex `i` replaced by `a_i` copies, copies of adjacent vertices all joined.
pub fn parallelization(g: &Graph, a: &[usize]) -> Result<Graph> {
    if a.len() != g.n {
        return Err(Error::LengthMismatch {
            expected: g.n,
            got: a.len(),
        });
    }
    if a.contains(&0) {
        return Err(Error::Range("multiplicities must be positive".into()));
    }
    let offset: Vec<usize> = a
        .iter()
        .scan(0, |acc, &x| {
            let o = *acc;
            *acc += x;
            Some(o)
        })
        .collect();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        for r in 1..=a[u - 1] {
            for s in 1..=a[v - 1] {
                edges.push((offset[u - 1] + r, offset[v - 1] + s));
            }
        }
    }
    Graph::new(a.iter().sum(), &edges)
}

/// Edges `e, e'` with no edge between them and no shared vertex, read off
/// `β_{2,4}(k[Δ(G)]) ≠ 0`.
pub fn has_3_disjoint_edges(g: &Graph, field: Field) -> Result<bool> {
    Ok(betti_table(&independence_complex(g), field)?.get(2, 4) != 0)
}

/// The same property checked on the graph: some induced subgraph is `2K_2`.
pub fn has_3_disjoint_edges_direct(g: &Graph) -> bool {
    let edges = g.edges();
    edges.iter().enumerate().any(|(i, &(a, b))| {
        edges[i + 1..].iter().any(|&(c, d)| {
            let e = VertexSet::singleton(a).insert(b);
            let f = VertexSet::singleton(c).insert(d);
            !e.intersects(f) && !g.closed_neighborhood(e).intersects(f)
        })
    })
}

/// `S_r`-depth of `S/J(G)` as `n - r - 1`, valid when `reg S/I(G) = im(G)`
/// and `r ≤ im(G)`; `None` when the premise fails.
pub fn cover_serre_depth_special(g: &Graph, r: usize, field: Field) -> Result<Option<usize>> {
    if r < 2 {
        return Err(Error::Range(format!("r = {r} must be at least 2")));
    }
    let im = induced_matching_number(g);
    let reg = betti_table(&independence_complex(g), field)?
        .reg()
        .unwrap_or(0);
    if reg != im || r > im || g.n < r + 1 {
        return Ok(None);
    }
    Ok(Some(g.n - r - 1))
}

/// `S_r`-depth of `S/J(G)` computed on the complex of `J(G)`.
pub fn cover_serre_depth(g: &Graph, r: usize, field: Field) -> Result<usize> {
    hochster::serre_depth(&sr_complex(&cover_ideal(g))?, r, field)
}
