//! Depth and Serre depth of `S/I_Δ^(ℓ)` from Takayama's degree complexes.
//!
//! For a face `F` and `a ∈ N^{V(link F)}` the degree complex is generated by
//! the facets `K` of `link F` with `Σ_{i ∉ K} a_i ≤ ℓ - 1`. An entry `a_i ≥ ℓ`
//! already excludes every facet missing `i`, so raising it further changes
//! nothing; enumerating `a ∈ {0..ℓ}^{V(link F)}` is therefore exhaustive.

mod h1;
mod sequence;

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::hochster::LocalCohDimProfile;
use crate::homology::{reduced_homology, Field};
use crate::vertex_set::VertexSet;

pub use h1::{
    diam_criterion_s2_depth, h1_vanishes, h1_vanishes_criterion, s2_depth_via_links,
    s2_second_power_bound, t_diam_sufficient,
};
pub use sequence::{classify_dim1, depth_sequence, serre_depth_sequence, Dim1Class};

/// Default cap on `(ℓ+1)^{|V(link F)|}` for a single face.
pub const DEFAULT_MAX_ENUM: u128 = 5_000_000;

/// Enumeration budget for the `a`-vector search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumLimits {
    pub max_enum: u128,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits {
            max_enum: DEFAULT_MAX_ENUM,
        }
    }
}

/// `Δ_a(I_Δ^(ℓ)) = ⟨K ∈ F(Δ) : Σ_{i∉K} a_i ≤ ℓ-1⟩` for `a` indexed by `[n]`.
pub fn takayama_complex(cx: &SimplicialComplex, a: &[u32], ell: u32) -> Result<SimplicialComplex> {
    if a.len() != cx.n() {
        return Err(Error::LengthMismatch {
            expected: cx.n(),
            got: a.len(),
        });
    }
    if ell == 0 {
        return Err(Error::Range("ℓ must be at least 1".into()));
    }
    let kept = cx.facets().iter().copied().filter(|k| {
        let outside: u64 = (1..=cx.n())
            .filter(|i| !k.contains(*i))
            .map(|i| a[i - 1] as u64)
            .sum();
        outside < ell as u64
    });
    SimplicialComplex::from_sets(cx.n(), kept)
}

/// Componentwise `min(a_i, ℓ)`.
pub fn cap_a(a: &[u32], ell: u32) -> Vec<u32> {
    a.iter().map(|&x| x.min(ell)).collect()
}

/// A face and degree realizing a profile entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub face: Vec<usize>,
    /// The degree over `[n]`; zero outside `V(link F)`.
    pub a: Vec<u32>,
}

/// `dim K^i` of `S/I_Δ^(ℓ)` for every `i`, with one witness per nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicCohProfile {
    ell: u32,
    profile: LocalCohDimProfile,
    witnesses: Vec<Option<Witness>>,
}

impl SymbolicCohProfile {
    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn profile(&self) -> &LocalCohDimProfile {
        &self.profile
    }

    pub fn get(&self, i: usize) -> Option<usize> {
        self.profile.get(i)
    }

    pub fn witness(&self, i: usize) -> Option<&Witness> {
        self.witnesses.get(i).and_then(Option::as_ref)
    }

    pub fn depth(&self) -> usize {
        self.profile.depth().unwrap_or(self.profile.module_dim())
    }

    pub fn serre_depth(&self, r: usize) -> usize {
        self.profile.serre_depth(r)
    }
}

impl Serialize for SymbolicCohProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let witnesses: std::collections::BTreeMap<String, &Witness> = self
            .witnesses
            .iter()
            .enumerate()
            .filter_map(|(i, w)| w.as_ref().map(|w| (i.to_string(), w)))
            .collect();
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("ell", &self.ell)?;
        m.serialize_entry("dims", &self.profile)?;
        m.serialize_entry("witnesses", &witnesses)?;
        m.end()
    }
}

/// Distinct sets of qualifying link facets as `a` ranges over `{0..hi}^verts`,
/// each with the first `a` producing it. Bit `k` of a mask is `facets[k]`.
pub(crate) struct MaskScan {
    pub facets: Vec<VertexSet>,
    pub verts: Vec<usize>,
    pub masks: Vec<(u128, Vec<u32>)>,
}

pub(crate) fn scan_masks(
    facets: &[VertexSet],
    ell: u32,
    hi: u32,
    face: VertexSet,
    limits: EnumLimits,
) -> Result<MaskScan> {
    let verts: Vec<usize> = facets
        .iter()
        .fold(VertexSet::EMPTY, |acc, f| acc.union(*f))
        .to_vec();
    if facets.len() > 128 {
        return Err(Error::Budget {
            what: format!("facets of the link of {face}"),
            required: facets.len() as u128,
            limit: 128,
        });
    }
    let required = (hi as u128 + 1)
        .checked_pow(verts.len() as u32)
        .unwrap_or(u128::MAX);
    if required > limits.max_enum {
        return Err(Error::Budget {
            what: format!("a-vector enumeration at face {face}"),
            required,
            limit: limits.max_enum,
        });
    }
    let outside: Vec<Vec<usize>> = verts
        .iter()
        .map(|&v| {
            (0..facets.len())
                .filter(|&k| !facets[k].contains(v))
                .collect()
        })
        .collect();
    let m = verts.len();
    let mut sums = vec![0u32; facets.len()];
    let mut a = vec![0u32; m];
    let mut seen = HashSet::new();
    let mut masks = Vec::new();
    loop {
        let mask = sums
            .iter()
            .enumerate()
            .filter(|(_, &s)| s < ell)
            .fold(0u128, |acc, (k, _)| acc | (1 << k));
        if seen.insert(mask) {
            masks.push((mask, a.clone()));
        }
        let mut p = 0;
        loop {
            if p == m {
                return Ok(MaskScan {
                    facets: facets.to_vec(),
                    verts,
                    masks,
                });
            }
            if a[p] < hi {
                a[p] += 1;
                for &k in &outside[p] {
                    sums[k] += 1;
                }
                break;
            }
            for &k in &outside[p] {
                sums[k] -= hi;
            }
            a[p] = 0;
            p += 1;
        }
    }
}

impl MaskScan {
    pub fn chosen(&self, mask: u128) -> impl Iterator<Item = VertexSet> + '_ {
        self.facets
            .iter()
            .enumerate()
            .filter(move |(k, _)| mask >> k & 1 == 1)
            .map(|(_, f)| *f)
    }

    /// Spreads a local degree over `[n]`.
    pub fn full_a(&self, n: usize, local: &[u32]) -> Vec<u32> {
        let mut a = vec![0; n];
        for (&v, &x) in self.verts.iter().zip(local) {
            a[v - 1] = x;
        }
        a
    }
}

pub(crate) fn check_symbolic_args(cx: &SimplicialComplex, ell: u32) -> Result<usize> {
    if ell == 0 {
        return Err(Error::Range("ℓ must be at least 1".into()));
    }
    let d = cx.krull_dim().ok_or(Error::VoidComplex)?;
    if !cx.covers_ground_set() {
        return Err(Error::InvalidStructure(format!(
            "every vertex of [{}] must lie in the complex",
            cx.n()
        )));
    }
    Ok(d)
}

/// `dims[i] = max{|F| : H̃_{i-|F|-1}(Δ_a(I_{link F}^(ℓ))) ≠ 0 for some a ∈ {0..ℓ}^{V(link F)}}`.
pub fn symbolic_coh_profile(
    cx: &SimplicialComplex,
    ell: u32,
    field: Field,
    limits: EnumLimits,
) -> Result<SymbolicCohProfile> {
    let d = check_symbolic_args(cx, ell)?;
    let n = cx.n();
    let faces = cx.faces();
    // per face: first witness for each degree i
    let per_face: Vec<Vec<(usize, Vec<u32>)>> = faces
        .par_iter()
        .map(|&f| -> Result<Vec<(usize, Vec<u32>)>> {
            let link = cx.link_unchecked(f);
            let scan = scan_masks(link.facets(), ell, ell, f, limits)?;
            let mut found: Vec<(usize, Vec<u32>)> = Vec::new();
            let mut cache: HashMap<u128, Vec<i64>> = HashMap::new();
            for (mask, a) in &scan.masks {
                let degrees = match cache.get(mask) {
                    Some(v) => v.clone(),
                    None => {
                        let sub = SimplicialComplex::from_sets(n, scan.chosen(*mask))?;
                        let v: Vec<i64> =
                            reduced_homology(&sub, field)?.nonzero_degrees().collect();
                        cache.insert(*mask, v.clone());
                        v
                    }
                };
                for k in degrees {
                    let i = (k + f.len() as i64 + 1) as usize;
                    if !found.iter().any(|(j, _)| *j == i) {
                        found.push((i, scan.full_a(n, a)));
                    }
                }
            }
            Ok(found)
        })
        .collect::<Result<_>>()?;

    let mut dims: Vec<Option<usize>> = vec![None; d + 1];
    let mut witnesses: Vec<Option<Witness>> = vec![None; d + 1];
    for (f, found) in faces.iter().zip(per_face) {
        for (i, a) in found {
            if i > d {
                continue;
            }
            if dims[i].is_none_or(|m| f.len() > m) {
                dims[i] = Some(f.len());
                witnesses[i] = Some(Witness {
                    face: f.to_vec(),
                    a,
                });
            }
        }
    }
    Ok(SymbolicCohProfile {
        ell,
        profile: LocalCohDimProfile::new(dims),
        witnesses,
    })
}

/// `depth S/I_Δ^(ℓ)`.
pub fn symbolic_depth(
    cx: &SimplicialComplex,
    ell: u32,
    field: Field,
    limits: EnumLimits,
) -> Result<usize> {
    Ok(symbolic_coh_profile(cx, ell, field, limits)?.depth())
}

/// `S_r`-depth of `S/I_Δ^(ℓ)` for pure `Δ`.
pub fn symbolic_serre_depth(
    cx: &SimplicialComplex,
    ell: u32,
    r: usize,
    field: Field,
    limits: EnumLimits,
) -> Result<usize> {
    if r < 2 {
        return Err(Error::Range(format!("r = {r} must be at least 2")));
    }
    if !cx.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(symbolic_coh_profile(cx, ell, field, limits)?.serre_depth(r))
}
