//! First local cohomology of symbolic powers: connectivity of degree
//! complexes, the facet-pair criterion and the diameter bounds built on them.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::extint::ExtInt;
use crate::vertex_set::VertexSet;

use super::{check_symbolic_args, scan_masks, EnumLimits};

/// Number of connected components of the complex generated by `facets`.
fn components(facets: &[VertexSet]) -> usize {
    let mut parent: Vec<usize> = (0..facets.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut count = facets.len();
    for i in 0..facets.len() {
        for j in i + 1..facets.len() {
            if facets[i].intersects(facets[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                    count -= 1;
                }
            }
        }
    }
    count
}

/// Some `a ∈ {0..ℓ}^{V}` makes the degree complex of `facets` disconnected.
fn some_degree_disconnected(
    facets: &[VertexSet],
    ell: u32,
    face: VertexSet,
    limits: EnumLimits,
) -> Result<bool> {
    let scan = scan_masks(facets, ell, ell, face, limits)?;
    Ok(scan.masks.iter().any(|(mask, _)| {
        let chosen: Vec<VertexSet> = scan.chosen(*mask).collect();
        components(&chosen) > 1
    }))
}

/// `H^1_m(S/I_Δ^(ℓ)) = 0`, checked directly: no isolated vertex and every
/// degree complex at the empty face is connected.
pub fn h1_vanishes(cx: &SimplicialComplex, ell: u32, limits: EnumLimits) -> Result<bool> {
    check_symbolic_args(cx, ell)?;
    if cx.facets().iter().any(|f| f.len() == 1) {
        return Ok(false);
    }
    Ok(!some_degree_disconnected(
        cx.facets(),
        ell,
        VertexSet::EMPTY,
        limits,
    )?)
}

/// The facet-pair condition: for disjoint facets `F0, G0` and `a` with
/// `Σ a ≥ ℓ`, `Σ_{i∉F0} a_i = Σ_{i∉G0} a_i = ℓ-1`, some facets `F, G` of
/// `Δ_a` satisfy `F ∩ F0 ≠ ∅`, `G ∩ G0 ≠ ∅` and `F ∩ G ≠ ∅`.
///
/// Every `i` lies outside `F0` or outside `G0`, so `a ∈ {0..ℓ-1}^n`.
pub fn h1_vanishes_criterion(cx: &SimplicialComplex, ell: u32, limits: EnumLimits) -> Result<bool> {
    check_symbolic_args(cx, ell)?;
    if ell < 2 {
        return Err(Error::Range("the criterion needs ℓ ≥ 2".into()));
    }
    if cx.dim() < ExtInt::Finite(1) {
        return Err(Error::Range("the criterion needs dim Δ ≥ 1".into()));
    }
    let n = cx.n();
    let required = (ell as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if required > limits.max_enum {
        return Err(Error::Budget {
            what: "a-vectors for the first local cohomology criterion".into(),
            required,
            limit: limits.max_enum,
        });
    }
    let facets = cx.facets();
    let pairs: Vec<(VertexSet, VertexSet)> = facets
        .iter()
        .enumerate()
        .flat_map(|(i, &f0)| facets[i + 1..].iter().map(move |&g0| (f0, g0)))
        .filter(|(f0, g0)| !f0.intersects(*g0))
        .collect();
    if pairs.is_empty() {
        return Ok(true);
    }
    let mut a = vec![0u32; n];
    loop {
        let total: u32 = a.iter().sum();
        let outside =
            |k: VertexSet| -> u32 { (1..=n).filter(|i| !k.contains(*i)).map(|i| a[i - 1]).sum() };
        if total >= ell {
            let kept: Vec<VertexSet> = facets
                .iter()
                .copied()
                .filter(|&k| outside(k) < ell)
                .collect();
            for &(f0, g0) in &pairs {
                if outside(f0) != ell - 1 || outside(g0) != ell - 1 {
                    continue;
                }
                let ok = kept
                    .iter()
                    .filter(|f| f.intersects(f0))
                    .any(|&f| kept.iter().any(|&g| g.intersects(g0) && f.intersects(g)));
                if !ok {
                    return Ok(false);
                }
            }
        }
        let mut p = 0;
        while p < n {
            a[p] += 1;
            if a[p] < ell {
                break;
            }
            a[p] = 0;
            p += 1;
        }
        if p == n {
            return Ok(true);
        }
    }
}

/// `min{|F| : some Δ_a(I_{link F}^(ℓ)) is disconnected} + 1`, or `dim S/I^(ℓ)`
/// when no face qualifies. Pure complexes only.
pub fn s2_depth_via_links(cx: &SimplicialComplex, ell: u32, limits: EnumLimits) -> Result<usize> {
    let d = check_symbolic_args(cx, ell)?;
    if !cx.is_pure() {
        return Err(Error::NotPure);
    }
    for f in cx.faces() {
        let link = cx.link_unchecked(f);
        if some_degree_disconnected(link.facets(), ell, f, limits)? {
            return Ok((f.len() + 1).min(d));
        }
    }
    Ok(d)
}

/// `diam((link F)^(1)) ≤ 2` for every face with `dim link F ≥ d - s + 1`.
pub fn s2_second_power_bound(cx: &SimplicialComplex, s: usize) -> Result<bool> {
    let d = pure_dim(cx)?;
    if s < 2 || s > d {
        return Err(Error::Range(format!("s = {s} must lie in 2..={d}")));
    }
    for f in cx.faces() {
        // pure: dim link F = d - 1 - |F|
        if f.len() + 2 > s {
            break;
        }
        let diam = cx.link_unchecked(f).one_skeleton_diameter()?;
        if diam > ExtInt::Finite(2) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest `s` passing [`s2_second_power_bound`], or `1` if `s = 2` fails.
pub fn diam_criterion_s2_depth(cx: &SimplicialComplex) -> Result<usize> {
    let d = pure_dim(cx)?;
    if d < 2 {
        return Err(Error::Range("needs dim Δ ≥ 1".into()));
    }
    let mut best = 1;
    for s in 2..=d {
        if !s2_second_power_bound(cx, s)? {
            break;
        }
        best = s;
    }
    Ok(best)
}

/// Whether `(ℓ-1)-diam(Δ) ≤ 2`, the hypothesis that forces `H^1_m(S/I^(ℓ)) = 0`.
pub fn t_diam_sufficient(cx: &SimplicialComplex, ell: u32) -> Result<bool> {
    let top = match cx.dim() {
        ExtInt::Finite(k) => k,
        _ => return Err(Error::VoidComplex),
    };
    if ell < 2 || ell as i64 > top {
        return Err(Error::Range(format!("ℓ = {ell} must lie in 2..={top}")));
    }
    Ok(cx.t_diameter(ell as isize - 1)? <= ExtInt::Finite(2))
}

fn pure_dim(cx: &SimplicialComplex) -> Result<usize> {
    let d = cx.krull_dim().ok_or(Error::VoidComplex)?;
    if !cx.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(d)
}
