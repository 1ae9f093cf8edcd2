#![allow(dead_code)]

use serre_depth::{SimplicialComplex, VertexSet};

pub fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::from_facets(n, &facets).unwrap()
}

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().fold(VertexSet::EMPTY, |s, &v| s.insert(v))
}

/// Brute force: every subset of every facet.
pub fn all_faces(c: &SimplicialComplex) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = c.facets().iter().flat_map(|f| f.subsets()).collect();
    out.sort_unstable();
    out.dedup();
    out
}
