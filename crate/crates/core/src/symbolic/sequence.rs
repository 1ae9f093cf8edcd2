use serde::Serialize;

use crate::complex::{SimplicialComplex, DEFAULT_SUBSET_LIMIT};
use crate::error::{Error, Result};
use crate::extint::ExtInt;
use crate::homology::Field;

use super::{symbolic_coh_profile, EnumLimits};

/// `depth S/I_Δ^(ℓ)` for `ℓ = 1..=ell_max`.
pub fn depth_sequence(
    cx: &SimplicialComplex,
    ell_max: u32,
    field: Field,
    limits: EnumLimits,
) -> Result<Vec<usize>> {
    (1..=ell_max)
        .map(|ell| Ok(symbolic_coh_profile(cx, ell, field, limits)?.depth()))
        .collect()
}

/// `S_r`-depth of `S/I_Δ^(ℓ)` for `ℓ = 1..=ell_max`; `Δ` must be pure.
pub fn serre_depth_sequence(
    cx: &SimplicialComplex,
    ell_max: u32,
    r: usize,
    field: Field,
    limits: EnumLimits,
) -> Result<Vec<usize>> {
    if r < 2 {
        return Err(Error::Range(format!("r = {r} must be at least 2")));
    }
    if !cx.is_pure() {
        return Err(Error::NotPure);
    }
    (1..=ell_max)
        .map(|ell| Ok(symbolic_coh_profile(cx, ell, field, limits)?.serre_depth(r)))
        .collect()
}

/// The four behaviours of `depth S/I_Δ^(ℓ)` for one-dimensional `Δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dim1Class {
    Matroid,
    DiamAtMost2NotMatroid,
    FiniteDiamAtLeast3,
    Disconnected,
}

impl Dim1Class {
    /// Predicted `depth S/I_Δ^(ℓ)`.
    pub fn predicted_depth(self, ell: u32) -> usize {
        match (self, ell) {
            (Dim1Class::Matroid, _) => 2,
            (Dim1Class::DiamAtMost2NotMatroid, 1 | 2) => 2,
            (Dim1Class::FiniteDiamAtLeast3, 1) => 2,
            _ => 1,
        }
    }

    pub fn predicted_prefix(self, ell_max: u32) -> Vec<usize> {
        (1..=ell_max).map(|l| self.predicted_depth(l)).collect()
    }
}

/// Splits one-dimensional complexes by matroid property and graph diameter.
pub fn classify_dim1(cx: &SimplicialComplex) -> Result<Dim1Class> {
    if cx.dim() != ExtInt::Finite(1) {
        return Err(Error::Range(format!("dim Δ = {} is not 1", cx.dim())));
    }
    if cx.is_matroid(DEFAULT_SUBSET_LIMIT)? {
        return Ok(Dim1Class::Matroid);
    }
    Ok(match cx.one_skeleton_diameter()? {
        ExtInt::Finite(d) if d <= 2 => Dim1Class::DiamAtMost2NotMatroid,
        ExtInt::Finite(_) => Dim1Class::FiniteDiamAtLeast3,
        _ => Dim1Class::Disconnected,
    })
}
