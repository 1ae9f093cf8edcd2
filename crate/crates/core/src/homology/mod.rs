//! Reduced simplicial homology over `Q` or `F_p`.
//!
//! Complexes are first shrunk by strong collapses (deleting a vertex whose
//! star lies in a cone), which preserves the homotopy type, and the remaining
//! core is handled by exact sparse elimination on the augmented chain complex.

mod rank;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::{maximal_sets, VertexSet};

pub use rank::{rank, SparseRow};

/// Default cap on the number of faces entering a boundary computation.
pub const DEFAULT_FACE_LIMIT: usize = 4_000_000;

/// Coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rationals,
    /// `F_p` for a prime `p`.
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Field> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if p > 1 << 31 {
            return Err(Error::InvalidField(format!("{p} is too large")));
        }
        Ok(Field::Prime(p))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => f.write_str("q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `q` or `fp:P`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim().to_ascii_lowercase();
        if t == "q" {
            return Ok(Field::Rationals);
        }
        match t.strip_prefix("fp:").map(str::parse::<u32>) {
            Some(Ok(p)) => Field::prime(p),
            _ => Err(Error::InvalidField(format!(
                "expected `q` or `fp:P`, got {s:?}"
            ))),
        }
    }
}

/// `dim H̃_i` for `i = -1, ..., dim Δ`. Degrees outside that range are zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HomologyProfile {
    dims: BTreeMap<i64, usize>,
}

impl HomologyProfile {
    pub fn get(&self, degree: i64) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &BTreeMap<i64, usize> {
        &self.dims
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.values().all(|&d| d == 0)
    }

    /// Degrees with nonzero homology, ascending.
    pub fn nonzero_degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.dims.iter().filter(|(_, &d)| d > 0).map(|(&i, _)| i)
    }

    /// `Σ (-1)^i dim H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .map(|(&i, &d)| {
                if i.rem_euclid(2) == 0 {
                    d as i64
                } else {
                    -(d as i64)
                }
            })
            .sum()
    }
}

impl Serialize for HomologyProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        // numeric degree order, not string order
        let mut m = s.serialize_map(Some(self.dims.len()))?;
        for (i, d) in &self.dims {
            m.serialize_entry(&i.to_string(), d)?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for HomologyProfile {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: BTreeMap<String, usize> = BTreeMap::deserialize(d)?;
        let mut dims = BTreeMap::new();
        for (k, v) in raw {
            let i: i64 = k.parse().map_err(serde::de::Error::custom)?;
            dims.insert(i, v);
        }
        Ok(HomologyProfile { dims })
    }
}

/// Reduced homology of `Δ` with strong-collapse preprocessing and deletion
/// of vertices whose links are acyclic.
pub fn reduced_homology(cx: &SimplicialComplex, field: Field) -> Result<HomologyProfile> {
    let Some(top) = cx.krull_dim() else {
        return Ok(HomologyProfile::default());
    };
    let mut dims: BTreeMap<i64, usize> = (-1..top as i64).map(|i| (i, 0)).collect();
    for (i, d) in reduced_homology_of_facets(cx.facets(), field)? {
        dims.insert(i, d);
    }
    Ok(HomologyProfile { dims })
}

/// Below this many faces the chain complex is built without further reduction.
const SMALL_COMPLEX: u128 = 4096;

/// Dims for the complex generated by `facets`; unlisted degrees are zero.
/// If `link v` strongly collapses to a point, Mayer-Vietoris on
/// `Δ = del v ∪ star v` gives `H̃(Δ) = H̃(del v)`.
fn reduced_homology_of_facets(facets: &[VertexSet], field: Field) -> Result<Vec<(i64, usize)>> {
    let Some(mut core) = strong_core(facets) else {
        return Ok(Vec::new());
    };
    'shrink: while core.iter().map(|f| 1u128 << f.len()).sum::<u128>() > SMALL_COMPLEX {
        let verts = core.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
        for v in verts.iter() {
            let link: Vec<VertexSet> = core
                .iter()
                .filter(|f| f.contains(v))
                .map(|f| f.remove(v))
                .collect();
            if strong_core(&link).is_none() {
                match strong_core(&maximal_sets(core.iter().map(|f| f.remove(v)))) {
                    Some(next) => core = next,
                    None => return Ok(Vec::new()),
                }
                continue 'shrink;
            }
        }
        break;
    }
    homology_of_facets(&core, field)
}

/// Reduced homology straight from the full chain complex, without collapses.
pub fn reduced_homology_direct(cx: &SimplicialComplex, field: Field) -> Result<HomologyProfile> {
    let Some(top) = cx.krull_dim() else {
        return Ok(HomologyProfile::default());
    };
    let mut dims: BTreeMap<i64, usize> = (-1..top as i64).map(|i| (i, 0)).collect();
    for (i, d) in homology_of_facets(cx.facets(), field)? {
        dims.insert(i, d);
    }
    Ok(HomologyProfile { dims })
}

/// Repeatedly deletes dominated vertices. `None` means the complex is a cone
/// (hence acyclic); otherwise the facets of the core are returned.
fn strong_core(facets: &[VertexSet]) -> Option<Vec<VertexSet>> {
    let mut facets = facets.to_vec();
    'outer: loop {
        if facets.len() == 1 {
            return if facets[0].is_empty() {
                Some(facets)
            } else {
                None
            };
        }
        let verts = facets.iter().fold(VertexSet::EMPTY, |a, f| a.union(*f));
        for v in verts.iter() {
            let mut common = verts;
            for f in facets.iter().filter(|f| f.contains(v)) {
                common = common.intersection(*f);
            }
            if common.len() > 1 {
                facets = maximal_sets(facets.iter().map(|f| f.remove(v)));
                continue 'outer;
            }
        }
        return Some(facets);
    }
}

/// Boundary matrices `∂_k` for `k = 0..=dim`, rows indexed by `k`-faces in
/// canonical order and columns by `(k-1)`-faces; `∂_0` maps every vertex to ∅.
pub fn boundary_matrices(facets: &[VertexSet]) -> Result<Vec<(Vec<SparseRow>, usize)>> {
    let by_size = faces_by_size(facets)?;
    let mut out = Vec::new();
    for size in 1..by_size.len() {
        let index: HashMap<VertexSet, u32> = by_size[size - 1]
            .iter()
            .enumerate()
            .map(|(i, f)| (*f, i as u32))
            .collect();
        let rows: Vec<SparseRow> = by_size[size]
            .iter()
            .map(|f| {
                let mut row: SparseRow = f
                    .iter()
                    .enumerate()
                    .map(|(pos, v)| {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        (index[&f.remove(v)], sign)
                    })
                    .collect();
                row.sort_unstable_by_key(|e| e.0);
                row
            })
            .collect();
        out.push((rows, by_size[size - 1].len()));
    }
    Ok(out)
}

/// Checks `∂_{k-1} ∘ ∂_k = 0` for every consecutive pair.
pub fn boundaries_compose_to_zero(mats: &[(Vec<SparseRow>, usize)]) -> bool {
    mats.windows(2).all(|w| {
        let (lower, _) = &w[0];
        let (upper, _) = &w[1];
        upper.iter().all(|row| {
            let mut acc: HashMap<u32, i64> = HashMap::new();
            for &(c, s) in row {
                for &(c2, s2) in &lower[c as usize] {
                    *acc.entry(c2).or_insert(0) += s * s2;
                }
            }
            acc.values().all(|&v| v == 0)
        })
    })
}

fn faces_by_size(facets: &[VertexSet]) -> Result<Vec<Vec<VertexSet>>> {
    let top = facets.iter().map(|f| f.len()).max().unwrap_or(0);
    let estimate: u128 = facets.iter().map(|f| 1u128 << f.len()).sum();
    let mut seen = std::collections::HashSet::new();
    if estimate > DEFAULT_FACE_LIMIT as u128 {
        // exact count before refusing
        for f in facets {
            seen.extend(f.subsets());
            if seen.len() > DEFAULT_FACE_LIMIT {
                return Err(Error::Budget {
                    what: "homology face enumeration".into(),
                    required: estimate,
                    limit: DEFAULT_FACE_LIMIT as u128,
                });
            }
        }
    } else {
        for f in facets {
            seen.extend(f.subsets());
        }
    }
    let mut by_size = vec![Vec::new(); top + 1];
    for f in seen {
        by_size[f.len()].push(f);
    }
    for level in by_size.iter_mut() {
        level.sort();
    }
    Ok(by_size)
}

fn homology_of_facets(facets: &[VertexSet], field: Field) -> Result<Vec<(i64, usize)>> {
    if facets.is_empty() {
        return Ok(Vec::new());
    }
    let mats = boundary_matrices(facets)?;
    // f_{k} = number of faces of dimension k = rows of ∂_k; f_{-1} = 1
    let mut counts = vec![1usize];
    counts.extend(mats.iter().map(|(rows, _)| rows.len()));
    let ranks: Vec<usize> = mats
        .iter()
        .map(|(rows, ncols)| rank(rows, *ncols, field))
        .collect();
    // ranks[k] = rank ∂_k for k = 0..=dim, ∂_{-1} = 0
    let mut out = Vec::new();
    for (k, &f) in counts.iter().enumerate() {
        let below = if k == 0 { 0 } else { ranks[k - 1] };
        let above = ranks.get(k).copied().unwrap_or(0);
        out.push((k as i64 - 1, f - below - above));
    }
    Ok(out)
}
