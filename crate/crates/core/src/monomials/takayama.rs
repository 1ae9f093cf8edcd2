//! Local cohomology of `S/I` for an arbitrary monomial ideal, read degree by
//! degree from Takayama's complexes without polarizing.
//!
//! For a degree `a` with negative part `G`, the complex lives on `[n] \ G` and
//! its faces are the sets `F` that contain no `T_u = {j ∉ G : u_j > a_j}`,
//! `u` a minimal generator. Its facets are therefore the complements of the
//! minimal transversals of the `T_u`. Coordinates `a_j ≥ ρ_j` (the largest
//! exponent of `x_j`) make `j` a cone point, so only `0 <= a_j < ρ_j` matter,
//! and the values of the negative coordinates are irrelevant.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hochster::LocalCohDimProfile;
use crate::homology::{reduced_homology, Field};
use crate::vertex_set::{minimal_transversals, VertexSet};

use super::{polarize, sr_complex, MonomialIdeal};

/// Cap on the number of degree complexes examined.
const DEGREE_LIMIT: u128 = 20_000_000;

/// `dims[i] = max{|G| : H̃_{i-|G|-1}(Δ_a) ≠ 0}` over degrees `a` with negative part `G`.
pub fn local_coh_dims_monomial(ideal: &MonomialIdeal, field: Field) -> Result<LocalCohDimProfile> {
    let n = ideal.nvars();
    if ideal.is_unit() {
        return Err(Error::Range("S/I is zero for the unit ideal".into()));
    }
    let d = sr_complex(&ideal.radical())?
        .krull_dim()
        .ok_or(Error::VoidComplex)?;
    let rho = ideal.max_exponents();
    let total: u128 = VertexSet::full(n)
        .subsets()
        .map(|g| {
            (1..=n)
                .filter(|j| !g.contains(*j))
                .map(|j| rho[j - 1] as u128)
                .product::<u128>()
        })
        .sum();
    if total > DEGREE_LIMIT {
        return Err(Error::Budget {
            what: "monomial degree enumeration".into(),
            required: total,
            limit: DEGREE_LIMIT,
        });
    }

    let mut dims: Vec<Option<usize>> = vec![None; d + 1];
    let mut cache: HashMap<Vec<VertexSet>, Vec<i64>> = HashMap::new();
    for g in VertexSet::full(n).subsets() {
        let free: Vec<usize> = (1..=n).filter(|j| !g.contains(*j)).collect();
        if free.iter().any(|&j| rho[j - 1] == 0) {
            continue;
        }
        let mut b = vec![0u32; free.len()];
        loop {
            let facets = degree_facets(ideal, g, &free, &b, n);
            let degrees = match cache.get(&facets) {
                Some(v) => v.clone(),
                None => {
                    let cx = SimplicialComplex::from_sets(n, facets.iter().copied())?;
                    let v: Vec<i64> = reduced_homology(&cx, field)?.nonzero_degrees().collect();
                    cache.insert(facets, v.clone());
                    v
                }
            };
            for k in degrees {
                let i = (k + g.len() as i64 + 1) as usize;
                if i < dims.len() {
                    dims[i] = Some(dims[i].map_or(g.len(), |m| m.max(g.len())));
                }
            }
            // odometer over Π {0..ρ_j - 1}
            let mut pos = 0;
            while pos < b.len() {
                b[pos] += 1;
                if b[pos] < rho[free[pos] - 1] {
                    break;
                }
                b[pos] = 0;
                pos += 1;
            }
            if pos == b.len() {
                break;
            }
        }
    }
    Ok(LocalCohDimProfile::new(dims))
}

fn degree_facets(
    ideal: &MonomialIdeal,
    g: VertexSet,
    free: &[usize],
    b: &[u32],
    n: usize,
) -> Vec<VertexSet> {
    let ground = g.complement(n);
    let family: Vec<VertexSet> = ideal
        .gens()
        .iter()
        .map(|u| {
            free.iter()
                .zip(b)
                .filter(|(&j, &bj)| u.exponents()[j - 1] > bj)
                .map(|(&j, _)| j)
                .collect()
        })
        .collect();
    let mut facets: Vec<VertexSet> = minimal_transversals(&family)
        .into_iter()
        .map(|t| ground.difference(t))
        .collect();
    facets.sort();
    facets
}

/// `depth S/I` without polarization.
pub fn depth_monomial_direct(ideal: &MonomialIdeal, field: Field) -> Result<usize> {
    local_coh_dims_monomial(ideal, field)?
        .depth()
        .ok_or(Error::VoidComplex)
}

/// `S_r`-depth of `S/I` without polarization; `S/I` must be unmixed.
pub fn serre_depth_monomial_direct(ideal: &MonomialIdeal, r: usize, field: Field) -> Result<usize> {
    if r < 2 {
        return Err(Error::Range(format!("r = {r} must be at least 2")));
    }
    // unmixedness of S/I is purity of the polarized complex
    if !sr_complex(&polarize(ideal).ideal)?.is_pure() {
        return Err(Error::NotUnmixed);
    }
    Ok(local_coh_dims_monomial(ideal, field)?.serre_depth(r))
}
