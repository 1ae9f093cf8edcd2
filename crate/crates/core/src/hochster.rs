//! Graded Betti numbers and local cohomology of Stanley-Reisner rings through
//! Hochster's formulas, and the depth invariants derived from them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{reduced_homology, Field};
use crate::vertex_set::VertexSet;

/// Default ground-set limit for Betti tables (`2^n` restrictions).
pub const DEFAULT_BETTI_LIMIT: usize = 14;

/// Which module a Betti table describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BettiSubject {
    /// The ring `k[Δ] = S/I_Δ`.
    Ring,
    /// The ideal `I_Δ`, with `β_{i,j}(I) = β_{i+1,j}(S/I)`.
    Ideal,
}

/// Graded Betti numbers `β_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    subject: BettiSubject,
    /// always stored in the ring convention
    ring: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn subject(&self) -> BettiSubject {
        self.subject
    }

    /// The same numbers viewed as Betti numbers of the ideal.
    pub fn as_ideal(&self) -> BettiTable {
        BettiTable {
            subject: BettiSubject::Ideal,
            ..self.clone()
        }
    }

    pub fn as_ring(&self) -> BettiTable {
        BettiTable {
            subject: BettiSubject::Ring,
            ..self.clone()
        }
    }

    /// `β_{i,j}` in this table's convention.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        match self.subject {
            BettiSubject::Ring => self.ring_get(i, j),
            BettiSubject::Ideal => self.ring_get(i + 1, j),
        }
    }

    fn ring_get(&self, i: usize, j: usize) -> u64 {
        self.ring.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β_{i,j})` in this table's convention.
    pub fn entries(&self) -> Vec<((usize, usize), u64)> {
        self.ring
            .iter()
            .filter_map(|(&(i, j), &b)| match self.subject {
                BettiSubject::Ring => Some(((i, j), b)),
                BettiSubject::Ideal => (i >= 1).then(|| ((i - 1, j), b)),
            })
            .collect()
    }

    /// Projective dimension (largest `i` with a nonzero entry).
    pub fn pd(&self) -> Option<usize> {
        self.entries().iter().map(|((i, _), _)| *i).max()
    }

    /// Castelnuovo-Mumford regularity `max{j - i}`.
    pub fn reg(&self) -> Option<usize> {
        self.entries().iter().map(|((i, j), _)| j - i).max()
    }

    /// Initial degree of the ideal: least `j` with `β_{0,j}(I) ≠ 0`.
    pub fn indeg(&self) -> Option<usize> {
        self.ring
            .keys()
            .filter(|(i, _)| *i == 1)
            .map(|(_, j)| *j)
            .min()
    }

    /// `reg_{≤r} I = max{j : β_{i,i+j}(I) ≠ 0 for some i ≤ r}` (ideal indexing).
    pub fn reg_leq(&self, r: usize) -> Option<usize> {
        self.ring
            .keys()
            .filter(|(i, _)| *i >= 1 && *i - 1 <= r)
            .map(|(i, j)| j - (i - 1))
            .max()
    }

    /// Condition `N_{c,r}`: `β_{i,j}(I) = 0` for all `i < r` and `j ≠ i + c`.
    pub fn satisfies_n_cr(&self, c: usize, r: usize) -> bool {
        self.ring
            .keys()
            .filter(|(i, _)| *i >= 1 && *i - 1 < r)
            .all(|(i, j)| *j == i - 1 + c)
    }

    /// `max{j : β_{i,i+j} ≠ 0 for some i ≤ r}` in this table's convention.
    pub fn max_strand_upto(&self, r: usize) -> Option<usize> {
        self.entries()
            .iter()
            .filter(|((i, _), _)| *i <= r)
            .map(|((i, j), _)| j - i)
            .max()
    }

    /// Text grid in the usual display: column `i`, row `j - i`, `.` for zero.
    pub fn render(&self) -> String {
        let entries = self.entries();
        if entries.is_empty() {
            return "(zero)\n".to_string();
        }
        let max_i = entries.iter().map(|((i, _), _)| *i).max().unwrap_or(0);
        let min_row = entries.iter().map(|((i, j), _)| j - i).min().unwrap_or(0);
        let max_row = entries.iter().map(|((i, j), _)| j - i).max().unwrap_or(0);
        let cell = |i: usize, row: usize| {
            let b = self.get(i, i + row);
            if b == 0 {
                ".".to_string()
            } else {
                b.to_string()
            }
        };
        let totals: Vec<u64> = (0..=max_i)
            .map(|i| {
                entries
                    .iter()
                    .filter(|((a, _), _)| *a == i)
                    .map(|(_, b)| b)
                    .sum()
            })
            .collect();
        let mut width = totals
            .iter()
            .map(|t| t.to_string().len())
            .max()
            .unwrap_or(1);
        width = width.max(max_i.to_string().len());
        let label_width = format!("{max_row}:").len().max("total:".len());
        let mut out = String::new();
        let _ = write!(out, "{:>label_width$}", "");
        for i in 0..=max_i {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        let _ = write!(out, "{:>label_width$}", "total:");
        for t in &totals {
            let _ = write!(out, " {t:>width$}");
        }
        out.push('\n');
        for row in min_row..=max_row {
            let _ = write!(out, "{:>label_width$}", format!("{row}:"));
            for i in 0..=max_i {
                let _ = write!(out, " {:>width$}", cell(i, row));
            }
            out.push('\n');
        }
        out
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<[u64; 3]> = self
            .entries()
            .into_iter()
            .map(|((i, j), b)| [i as u64, j as u64, b])
            .collect();
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("n", &self.n)?;
        m.serialize_entry("subject", &self.subject)?;
        m.serialize_entry("entries", &entries)?;
        m.end()
    }
}

/// `β_{i,j}(k[Δ]) = Σ_{|W|=j} dim H̃_{j-i-1}(Δ_W)`, summed over all `W ⊆ [n]`.
pub fn betti_table(cx: &SimplicialComplex, field: Field) -> Result<BettiTable> {
    betti_table_with_limit(cx, field, DEFAULT_BETTI_LIMIT)
}

pub fn betti_table_with_limit(
    cx: &SimplicialComplex,
    field: Field,
    limit: usize,
) -> Result<BettiTable> {
    let n = cx.n();
    if n > limit {
        return Err(Error::Budget {
            what: "Betti table over all vertex subsets".into(),
            required: 1u128 << n,
            limit: 1u128 << limit,
        });
    }
    let subsets: Vec<VertexSet> = VertexSet::full(n).subsets().collect();
    let parts: Vec<Vec<((usize, usize), u64)>> = subsets
        .par_iter()
        .map(|&w| -> Result<Vec<((usize, usize), u64)>> {
            let h = reduced_homology(&cx.restriction(w), field)?;
            let j = w.len() as i64;
            Ok(h.dims()
                .iter()
                .filter(|(_, &d)| d > 0)
                .map(|(&k, &d)| (((j - k - 1) as usize, j as usize), d as u64))
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut ring = BTreeMap::new();
    for part in parts {
        for (key, d) in part {
            *ring.entry(key).or_insert(0) += d;
        }
    }
    Ok(BettiTable {
        n,
        subject: BettiSubject::Ring,
        ring,
    })
}

/// Krull dimensions of the local cohomology duals `K^j`, `j = 0..=dim k[Δ]`;
/// `None` marks `K^j = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCohDimProfile {
    dims: Vec<Option<usize>>,
}

impl LocalCohDimProfile {
    pub fn new(dims: Vec<Option<usize>>) -> Self {
        LocalCohDimProfile { dims }
    }

    /// Krull dimension of the module.
    pub fn module_dim(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn get(&self, j: usize) -> Option<usize> {
        self.dims.get(j).copied().flatten()
    }

    pub fn dims(&self) -> &[Option<usize>] {
        &self.dims
    }

    /// `min{j : K^j ≠ 0}`.
    pub fn depth(&self) -> Option<usize> {
        self.dims.iter().position(Option::is_some)
    }

    /// `min{j : dim K^j ≥ j - r + 1}`, or the module dimension if no `j` qualifies.
    pub fn serre_depth(&self, r: usize) -> usize {
        self.dims
            .iter()
            .enumerate()
            .find(|(j, d)| matches!(d, Some(d) if *d as i64 > *j as i64 - r as i64))
            .map(|(j, _)| j)
            .unwrap_or_else(|| self.module_dim())
    }
}

impl Serialize for LocalCohDimProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.dims.len()))?;
        for (j, d) in self.dims.iter().enumerate() {
            m.serialize_entry(&j.to_string(), d)?;
        }
        m.end()
    }
}

/// Nonzero reduced homology degrees of every link that is not a cone.
fn link_homology_degrees(
    cx: &SimplicialComplex,
    field: Field,
) -> Result<Vec<(VertexSet, Vec<i64>)>> {
    let faces = cx.closed_faces();
    faces
        .par_iter()
        .map(|&f| {
            let h = reduced_homology(&cx.link_unchecked(f), field)?;
            Ok((f, h.nonzero_degrees().collect()))
        })
        .collect()
}

/// `dims[j] = max{|F| : H̃_{j-|F|-1}(link F) ≠ 0}` over faces `F`.
pub fn local_coh_dims(cx: &SimplicialComplex, field: Field) -> Result<LocalCohDimProfile> {
    let d = cx.krull_dim().ok_or(Error::VoidComplex)?;
    let mut dims = vec![None; d + 1];
    for (f, degrees) in link_homology_degrees(cx, field)? {
        for k in degrees {
            let j = (k + f.len() as i64 + 1) as usize;
            let slot: &mut Option<usize> = &mut dims[j];
            *slot = Some(slot.map_or(f.len(), |m| m.max(f.len())));
        }
    }
    Ok(LocalCohDimProfile { dims })
}

/// `depth k[Δ]`, scanning faces by size and stopping once `|F|` reaches
/// the best bound found so far.
pub fn depth(cx: &SimplicialComplex, field: Field) -> Result<usize> {
    min_link_violation(cx, None, field)
}

/// Unions of nonempty families of minimal nonfaces. For any other `W`, a
/// vertex of `W` outside every minimal nonface inside `W` is a cone point of
/// `Δ_W`, so `β_{i,W}` vanishes.
fn lcm_lattice(cx: &SimplicialComplex) -> Vec<VertexSet> {
    let gens = cx.minimal_nonfaces();
    let mut seen: std::collections::HashSet<VertexSet> = gens.iter().copied().collect();
    let mut queue = gens.clone();
    while let Some(x) = queue.pop() {
        for g in &gens {
            let y = x.union(*g);
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    let mut out: Vec<VertexSet> = seen.into_iter().collect();
    out.sort();
    out
}

/// `pd k[Δ] = max{|W| - k - 1 : H̃_k(Δ_W) ≠ 0}`, with `W` restricted to the
/// lcm lattice of the minimal nonfaces.
pub fn projective_dimension(cx: &SimplicialComplex, field: Field) -> Result<usize> {
    if cx.is_void() {
        return Err(Error::VoidComplex);
    }
    let pd = lcm_lattice(cx)
        .par_iter()
        .map(|&w| -> Result<usize> {
            let h = reduced_homology(&cx.restriction(w), field)?;
            let top = h
                .nonzero_degrees()
                .map(|k| (w.len() as i64 - k - 1) as usize)
                .max();
            Ok(top.unwrap_or(0))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .max();
    Ok(pd.unwrap_or(0))
}

/// `n - pd k[Δ]` (Auslander-Buchsbaum).
pub fn depth_via_betti(cx: &SimplicialComplex, field: Field) -> Result<usize> {
    Ok(cx.n() - projective_dimension(cx, field)?)
}

/// `min{|F| + k + 1 : H̃_k(link F) ≠ 0, k ≤ k_max}`, capped at `dim k[Δ]`.
/// Faces at least as large as the current bound are never examined.
fn min_link_violation(cx: &SimplicialComplex, k_max: Option<i64>, field: Field) -> Result<usize> {
    let d = cx.krull_dim().ok_or(Error::VoidComplex)?;
    let closed = cx.closed_faces();
    let mut best = d;
    for group in closed.chunk_by(|a, b| a.len() == b.len()) {
        let size = group[0].len();
        let cap = (best as i64 - size as i64 - 2).min(k_max.unwrap_or(i64::MAX));
        if cap < -1 {
            break;
        }
        let found = group
            .par_iter()
            .map(|&f| -> Result<Option<i64>> {
                let h = reduced_homology(&cx.link_unchecked(f), field)?;
                let k = h.nonzero_degrees().find(|&k| k <= cap);
                Ok(k)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .min();
        if let Some(k) = found {
            best = best.min((size as i64 + k + 1) as usize);
        }
    }
    Ok(best)
}

/// `S_r`-depth of `k[Δ]` for pure `Δ` and `r ≥ 2`.
pub fn serre_depth(cx: &SimplicialComplex, r: usize, field: Field) -> Result<usize> {
    check_serre_args(cx, r)?;
    Ok(local_coh_dims(cx, field)?.serre_depth(r))
}

fn check_serre_args(cx: &SimplicialComplex, r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::Range(format!("r = {r} must be at least 2")));
    }
    if cx.is_void() {
        return Err(Error::VoidComplex);
    }
    if !cx.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(())
}

/// Largest `s` with `H̃_i(link F) = 0` for all `i ≤ r - 2` and `|F| ≤ s - i - 2`.
pub fn serre_depth_via_links(cx: &SimplicialComplex, r: usize, field: Field) -> Result<usize> {
    check_serre_args(cx, r)?;
    min_link_violation(cx, Some(r as i64 - 2), field)
}

/// `1 + max{i : Δ^i satisfies (S_r)}`, for `2 ≤ r ≤ dim k[Δ]`.
pub fn serre_depth_via_skeleton(cx: &SimplicialComplex, r: usize, field: Field) -> Result<usize> {
    check_serre_args(cx, r)?;
    let d = cx.krull_dim().unwrap_or(0);
    if r > d {
        return Err(Error::Range(format!("r = {r} exceeds dim k[Δ] = {d}")));
    }
    let mut best = -1i64;
    for i in -1..d as isize {
        if satisfies_serre(&cx.skeleton(i)?, r, field)? {
            best = i as i64;
        }
    }
    Ok((best + 1) as usize)
}

/// `k[Δ]` satisfies `(S_r)`.
pub fn satisfies_serre(cx: &SimplicialComplex, r: usize, field: Field) -> Result<bool> {
    Ok(serre_depth(cx, r, field)? == cx.krull_dim().unwrap_or(0))
}

/// `depth k[Δ] = dim k[Δ]`.
pub fn is_cohen_macaulay(cx: &SimplicialComplex, field: Field) -> Result<bool> {
    Ok(depth(cx, field)? == cx.krull_dim().ok_or(Error::VoidComplex)?)
}

/// `1 + max{i : Δ^i is Cohen-Macaulay}`.
pub fn depth_via_skeleton(cx: &SimplicialComplex, field: Field) -> Result<usize> {
    let d = cx.krull_dim().ok_or(Error::VoidComplex)?;
    let mut best = -1i64;
    for i in -1..d as isize {
        if is_cohen_macaulay(&cx.skeleton(i)?, field)? {
            best = i as i64;
        }
    }
    Ok((best + 1) as usize)
}
