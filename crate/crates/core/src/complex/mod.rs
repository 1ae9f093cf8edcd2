//! Finite simplicial complexes on a labelled ground set `[n]`.

mod construct;
mod diameter;
mod shelling;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extint::ExtInt;
use crate::vertex_set::{maximal_sets, minimal_transversals, VertexSet, MAX_VERTICES};

pub use construct::counterexample_complex;
pub use shelling::{ShellingOutcome, DEFAULT_SHELLING_FACET_LIMIT};

/// Default ground-set limit for searches over all vertex subsets.
pub const DEFAULT_SUBSET_LIMIT: usize = 20;

/// Whether a complex has no faces, only the empty face, or at least one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Void,
    Irrelevant,
    Proper,
}

/// A simplicial complex given by its facets.
///
/// Facets form an antichain and are kept in lexicographic order, so two equal
/// complexes compare equal with `==`. Vertices of `[n]` that lie in no facet
/// are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

/// Faces of a fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    pub dim: isize,
    pub members: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `facets`; dominated sets are dropped.
    pub fn from_facets(n: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let sets = facets
            .iter()
            .map(|f| VertexSet::from_labels(n, f))
            .collect::<Result<Vec<_>>>()?;
        Self::from_sets(n, sets)
    }

    /// Same as [`from_facets`](Self::from_facets) for bitmask input.
    pub fn from_sets(n: usize, sets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let ground = VertexSet::full(n);
        let sets: Vec<VertexSet> = sets.into_iter().collect();
        if let Some(bad) = sets.iter().find(|s| !s.is_subset(ground)) {
            let vertex = bad.difference(ground).min().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(SimplicialComplex {
            n,
            facets: maximal_sets(sets),
        })
    }

    /// Trusted constructor for facet lists already known to be an antichain in `[n]`.
    pub(crate) fn from_antichain(n: usize, mut facets: Vec<VertexSet>) -> Self {
        facets.sort();
        debug_assert!(facets.windows(2).all(|w| w[0] != w[1]));
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: vec![] }
    }

    pub fn irrelevant(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::EMPTY],
        }
    }

    /// The full simplex `2^[n]`.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::full(n)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Facets as ascending 1-based label lists.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }

    pub fn kind(&self) -> ComplexKind {
        match self.facets.as_slice() {
            [] => ComplexKind::Void,
            [f] if f.is_empty() => ComplexKind::Irrelevant,
            _ => ComplexKind::Proper,
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `max |F| - 1`; `-1` for `{∅}`, `-inf` for the void complex.
    pub fn dim(&self) -> ExtInt {
        match self.max_facet_size() {
            None => ExtInt::NegInf,
            Some(k) => ExtInt::Finite(k as i64 - 1),
        }
    }

    /// Krull dimension of the Stanley-Reisner ring, `dim + 1`; `None` when void.
    pub fn krull_dim(&self) -> Option<usize> {
        self.max_facet_size()
    }

    fn max_facet_size(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len()).max()
    }

    pub fn contains(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Vertices lying in some face.
    pub fn vertex_set(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
    }

    /// True when every vertex of `[n]` lies in some face.
    pub fn covers_ground_set(&self) -> bool {
        self.vertex_set() == VertexSet::full(self.n)
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f) => self.facets.iter().all(|g| g.len() == f.len()),
        }
    }

    /// All faces, ordered by size and then lexicographically.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut seen: HashSet<VertexSet> = HashSet::new();
        for f in &self.facets {
            seen.extend(f.subsets());
        }
        let mut out: Vec<VertexSet> = seen.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    /// Intersections of nonempty families of facets, ordered by size and then
    /// lexicographically. Any other face `F` lies in a vertex outside `F` common
    /// to all facets through `F`, so its link is a cone.
    pub fn closed_faces(&self) -> Vec<VertexSet> {
        let mut seen: HashSet<VertexSet> = self.facets.iter().copied().collect();
        let mut queue: Vec<VertexSet> = self.facets.clone();
        while let Some(x) = queue.pop() {
            for f in &self.facets {
                let y = x.intersection(*f);
                if seen.insert(y) {
                    queue.push(y);
                }
            }
        }
        let mut out: Vec<VertexSet> = seen.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    /// Faces grouped by cardinality: entry `k` holds the faces with `k` vertices.
    pub fn faces_by_size(&self) -> Vec<Vec<VertexSet>> {
        let top = self.max_facet_size().map_or(0, |k| k + 1);
        let mut out = vec![Vec::new(); top];
        for f in self.faces() {
            out[f.len()].push(f);
        }
        out
    }

    /// Faces of dimension `dim`.
    pub fn faces_of_dim(&self, dim: isize) -> FaceSet {
        let size = dim + 1;
        let mut members: Vec<VertexSet> = Vec::new();
        if size >= 0 {
            let mut seen = HashSet::new();
            for f in &self.facets {
                for s in k_subsets(*f, size as usize) {
                    if seen.insert(s) {
                        members.push(s);
                    }
                }
            }
        }
        members.sort();
        FaceSet { dim, members }
    }

    /// `f_{-1}, f_0, ..., f_dim`; empty for the void complex.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(|v| v.len()).collect()
    }

    /// `link_Δ F`: facets `G \ F` over facets `G ⊇ F`.
    pub fn link(&self, face: VertexSet) -> Result<SimplicialComplex> {
        if !self.contains(face) {
            return Err(Error::NotAFace(face.to_string()));
        }
        Ok(self.link_unchecked(face))
    }

    pub(crate) fn link_unchecked(&self, face: VertexSet) -> SimplicialComplex {
        let facets = self
            .facets
            .iter()
            .filter(|g| face.is_subset(**g))
            .map(|g| g.difference(face))
            .collect();
        SimplicialComplex::from_antichain(self.n, facets)
    }

    /// `Δ_W`: faces contained in `W`.
    pub fn restriction(&self, w: VertexSet) -> SimplicialComplex {
        SimplicialComplex {
            n: self.n,
            facets: maximal_sets(self.facets.iter().map(|f| f.intersection(w))),
        }
    }

    /// Faces of dimension at most `i`; `i >= dim` returns the complex itself.
    pub fn skeleton(&self, i: isize) -> Result<SimplicialComplex> {
        if i < -1 {
            return Err(Error::Range(format!("skeleton index {i} < -1")));
        }
        let size = (i + 1) as usize;
        if self.max_facet_size().is_none_or(|m| m <= size) {
            return Ok(self.clone());
        }
        let mut sets = Vec::new();
        for f in &self.facets {
            if f.len() <= size {
                sets.push(*f);
            } else {
                sets.extend(k_subsets(*f, size));
            }
        }
        Ok(SimplicialComplex {
            n: self.n,
            facets: maximal_sets(sets),
        })
    }

    /// Minimal non-faces, i.e. supports of the minimal Stanley-Reisner generators.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        let complements: Vec<VertexSet> =
            self.facets.iter().map(|f| f.complement(self.n)).collect();
        minimal_transversals(&complements)
    }

    /// `Δ^∨ = {F : [n] \ F ∉ Δ}`; the full simplex maps to the void complex.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let facets = self
            .minimal_nonfaces()
            .into_iter()
            .map(|m| m.complement(self.n))
            .collect();
        SimplicialComplex::from_antichain(self.n, facets)
    }

    /// Whether the complex, viewed on its own vertices, is connected.
    /// Void and `{∅}` count as connected.
    pub fn is_connected(&self) -> bool {
        let mut reached = match self.facets.first() {
            None => return true,
            Some(f) => *f,
        };
        let mut remaining: Vec<VertexSet> = self.facets[1..].to_vec();
        loop {
            let before = remaining.len();
            remaining.retain(|f| {
                if f.intersects(reached) {
                    reached = reached.union(*f);
                    false
                } else {
                    true
                }
            });
            if remaining.is_empty() {
                return true;
            }
            if remaining.len() == before {
                return false;
            }
        }
    }

    /// True when every restriction `Δ_W` is pure. Enumerates all `2^n` subsets.
    pub fn is_matroid(&self, subset_limit: usize) -> Result<bool> {
        if self.n > subset_limit {
            return Err(Error::Budget {
                what: "matroid test over all vertex subsets".into(),
                required: 1u128 << self.n,
                limit: 1u128 << subset_limit,
            });
        }
        Ok(VertexSet::full(self.n)
            .subsets()
            .all(|w| self.restriction(w).is_pure()))
    }

    /// Relabels vertex `v` as `image[v - 1]` on a ground set of size `n`.
    pub fn relabel(&self, n: usize, image: &[usize]) -> Result<SimplicialComplex> {
        if image.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: image.len(),
            });
        }
        if let Some(&bad) = image.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        SimplicialComplex::from_sets(n, self.facets.iter().map(|f| f.map(image)))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, facets={:?})", self.n, self.facet_lists())
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            ComplexKind::Void => write!(f, "void on [{}]", self.n),
            _ => {
                let parts: Vec<String> = self
                    .facets
                    .iter()
                    .map(|g| {
                        let labels: Vec<String> = g.iter().map(|v| v.to_string()).collect();
                        format!("[{}]", labels.join(","))
                    })
                    .collect();
                write!(f, "<{}> on [{}]", parts.join(","), self.n)
            }
        }
    }
}

/// Subsets of `set` with exactly `k` elements, in increasing bit order.
pub(crate) fn k_subsets(set: VertexSet, k: usize) -> Vec<VertexSet> {
    let verts = set.to_vec();
    let m = verts.len();
    if k > m {
        return Vec::new();
    }
    if k == 0 {
        return vec![VertexSet::EMPTY];
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| verts[i]).collect());
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if idx[pos] != pos + m - k {
                idx[pos] += 1;
                for q in pos + 1..k {
                    idx[q] = idx[q - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return out;
            }
        }
    }
}
