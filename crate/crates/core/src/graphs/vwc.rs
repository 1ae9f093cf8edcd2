//! Very well-covered graphs as expansions `H(n_1, ..., n_{d_0})` of a
//! Cohen-Macaulay very well-covered graph `H`.

use serde::Serialize;

use super::{independence_complex, is_very_well_covered, parallelization, Graph};
use crate::error::{Error, Result};
use crate::hochster;
use crate::homology::Field;
use crate::vertex_set::VertexSet;

/// `H` on `x_1..x_{d_0}` (labels `1..=d_0`) and `y_1..y_{d_0}` (labels
/// `d_0+1..=2d_0`), with `x_i y_i` edges, `Y` independent and `x_i y_j ∈ E`
/// only for `i ≤ j`; plus one multiplicity per matched edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VwcStructure {
    h: Graph,
    mult: Vec<usize>,
}

#[derive(Serialize)]
struct VwcJson {
    h: super::GraphJson,
    multiplicities: Vec<usize>,
}

impl Serialize for VwcStructure {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VwcJson {
            h: self.h.to_json(),
            multiplicities: self.mult.clone(),
        }
        .serialize(s)
    }
}

impl VwcStructure {
    pub fn new(h: Graph, mult: Vec<usize>) -> Result<VwcStructure> {
        let n = h.n();
        if n == 0 || n % 2 == 1 {
            return Err(Error::InvalidStructure(format!("H has {n} vertices")));
        }
        let d0 = n / 2;
        if mult.len() != d0 {
            return Err(Error::LengthMismatch {
                expected: d0,
                got: mult.len(),
            });
        }
        if mult.contains(&0) {
            return Err(Error::InvalidStructure(
                "multiplicities must be positive".into(),
            ));
        }
        for i in 1..=d0 {
            if !h.has_edge(i, d0 + i) {
                return Err(Error::InvalidStructure(format!("x{i} y{i} is not an edge")));
            }
            for j in 1..=d0 {
                if h.has_edge(d0 + i, d0 + j) {
                    return Err(Error::InvalidStructure(format!("y{i} y{j} is an edge")));
                }
                if j < i && h.has_edge(i, d0 + j) {
                    return Err(Error::InvalidStructure(format!(
                        "x{i} y{j} is an edge with {j} < {i}"
                    )));
                }
            }
        }
        if !is_very_well_covered(&h) {
            return Err(Error::NotVeryWellCovered);
        }
        if !hochster::is_cohen_macaulay(&independence_complex(&h), Field::Rationals)? {
            return Err(Error::InvalidStructure("H is not Cohen-Macaulay".into()));
        }
        Ok(VwcStructure { h, mult })
    }

    pub fn h(&self) -> &Graph {
        &self.h
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.mult
    }

    pub fn d0(&self) -> usize {
        self.h.n() / 2
    }

    /// `d = Σ n_i`.
    pub fn d(&self) -> usize {
        self.mult.iter().sum()
    }

    /// `E_T = {x_i y_i : i ∈ T}` is an induced matching of `H`.
    pub fn is_induced_matching(&self, t: VertexSet) -> bool {
        let d0 = self.d0();
        let block = |i: usize| VertexSet::singleton(i).insert(d0 + i);
        t.iter().all(|i| {
            t.iter().filter(|&j| j != i).all(|j| {
                block(i)
                    .iter()
                    .all(|u| !self.h.neighbors(u).intersects(block(j)))
            })
        })
    }
}

/// `H(n_1, ..., n_{d_0})`: each `x_i`, `y_i` becomes `n_i` copies and every
/// edge a complete bipartite graph. Copies of `x_i` get labels before those
/// of `x_{i+1}`; all `x` copies precede all `y` copies.
pub fn vwc_expand(s: &VwcStructure) -> Graph {
    let mut a = s.mult.clone();
    a.extend_from_slice(&s.mult);
    parallelization(&s.h, &a).expect("multiplicities are positive")
}

/// `d - max{N_T - |T| : E_T induced matching, |T| ≤ r - 1}` with `N_T = Σ_{j∈T} n_j`.
pub fn vwc_serre_depth_formula(s: &VwcStructure, r: usize) -> Result<usize> {
    if r < 2 {
        return Err(Error::Range(format!("r = {r} must be at least 2")));
    }
    let best = VertexSet::full(s.d0())
        .subsets()
        .filter(|t| t.len() < r && s.is_induced_matching(*t))
        .map(|t| t.iter().map(|j| s.mult[j - 1]).sum::<usize>() - t.len())
        .max()
        .unwrap_or(0);
    Ok(s.d() - best)
}

/// Recovers `(H, n)` with `G ≅ H(n)`: copies of one vertex of `H` are
/// exactly the classes of vertices with equal neighbourhoods, so `H` is the
/// quotient by those classes; then a matching and an order satisfying the
/// structure conditions are searched, and the expansion is checked against `G`.
pub fn vwc_decompose(g: &Graph) -> Result<VwcStructure> {
    if !is_very_well_covered(g) {
        return Err(Error::NotVeryWellCovered);
    }
    // twin classes, ordered by smallest member
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in 1..=g.n() {
        match classes
            .iter_mut()
            .find(|c| g.neighbors(VertexSet::min(**c).expect("nonempty")) == g.neighbors(v))
        {
            Some(c) => *c = c.insert(v),
            None => classes.push(VertexSet::singleton(v)),
        }
    }
    let k = classes.len();
    let rep: Vec<usize> = classes
        .iter()
        .map(|c| VertexSet::min(*c).expect("nonempty"))
        .collect();
    let mut qedges = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            if g.has_edge(rep[a], rep[b]) {
                qedges.push((a + 1, b + 1));
            }
        }
    }
    let q = Graph::new(k, &qedges)?;
    let sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    if k % 2 == 1 {
        return Err(Error::Decomposition("odd number of twin classes".into()));
    }
    for ys in independence_complex(&q).facets() {
        if ys.len() * 2 != k {
            continue;
        }
        let xs: Vec<usize> = ys.complement(k).to_vec();
        let mut matched = vec![0usize; xs.len()];
        if let Some(s) = search_matching(&q, &sizes, &xs, *ys, 0, VertexSet::EMPTY, &mut matched) {
            if graphs_isomorphic(&vwc_expand(&s), g) {
                return Ok(s);
            }
        }
    }
    Err(Error::Decomposition(
        "no matching and ordering satisfy the structure conditions".into(),
    ))
}

fn search_matching(
    q: &Graph,
    sizes: &[usize],
    xs: &[usize],
    ys: VertexSet,
    pos: usize,
    used: VertexSet,
    matched: &mut Vec<usize>,
) -> Option<VwcStructure> {
    if pos == xs.len() {
        return order_pairs(q, sizes, xs, matched);
    }
    let x = xs[pos];
    for y in q.neighbors(x).intersection(ys).difference(used).iter() {
        if sizes[x - 1] != sizes[y - 1] {
            continue;
        }
        matched[pos] = y;
        if let Some(s) = search_matching(q, sizes, xs, ys, pos + 1, used.insert(y), matched) {
            return Some(s);
        }
    }
    None
}

/// Topologically orders the pairs so that `x_i y_j ∈ E` forces `i ≤ j`.
fn order_pairs(q: &Graph, sizes: &[usize], xs: &[usize], ys: &[usize]) -> Option<VwcStructure> {
    let d0 = xs.len();
    // before[j] = pairs that must precede pair j
    let before: Vec<Vec<usize>> = (0..d0)
        .map(|j| {
            (0..d0)
                .filter(|&i| i != j && q.has_edge(xs[i], ys[j]))
                .collect()
        })
        .collect();
    let mut order = Vec::with_capacity(d0);
    let mut placed = vec![false; d0];
    while order.len() < d0 {
        let next = (0..d0).find(|&j| !placed[j] && before[j].iter().all(|&i| placed[i]))?;
        placed[next] = true;
        order.push(next);
    }
    let mut label = vec![0usize; q.n() + 1];
    for (pos, &p) in order.iter().enumerate() {
        label[xs[p]] = pos + 1;
        label[ys[p]] = d0 + pos + 1;
    }
    let edges: Vec<(usize, usize)> = q
        .edges()
        .into_iter()
        .map(|(u, v)| (label[u], label[v]))
        .collect();
    let h = Graph::new(2 * d0, &edges).ok()?;
    let mult = order.iter().map(|&p| sizes[xs[p] - 1]).collect();
    VwcStructure::new(h, mult).ok()
}

/// Backtracking isomorphism test with degree pruning.
pub fn graphs_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.num_edges() != b.num_edges() {
        return false;
    }
    let mut da: Vec<usize> = (1..=a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (1..=b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    // map high-degree vertices first
    let mut order: Vec<usize> = (1..=a.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));
    let mut image = vec![0usize; a.n() + 1];
    fn go(
        a: &Graph,
        b: &Graph,
        order: &[usize],
        pos: usize,
        image: &mut Vec<usize>,
        used: VertexSet,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        for w in 1..=b.n() {
            if used.contains(w) || a.degree(v) != b.degree(w) {
                continue;
            }
            let consistent = order[..pos]
                .iter()
                .all(|&u| a.has_edge(u, v) == b.has_edge(image[u], w));
            if consistent {
                image[v] = w;
                if go(a, b, order, pos + 1, image, used.insert(w)) {
                    return true;
                }
            }
        }
        false
    }
    go(a, b, &order, 0, &mut image, VertexSet::EMPTY)
}
