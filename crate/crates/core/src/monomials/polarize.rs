use crate::error::{Error, Result};
use crate::hochster;
use crate::homology::Field;

use super::{sr_complex, Monomial, MonomialIdeal};

/// A polarized ideal together with the bookkeeping needed to name its variables.
///
/// Variables `1..=n` are the original `x_i`; then come `x_{i,k}` for
/// `2 <= k <= γ_i`, grouped by `i` ascending and `k` ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    /// `|X_I|`, the number of added variables.
    pub extra: usize,
    /// `γ_i`, the largest exponent of `x_i`.
    pub gamma: Vec<u32>,
}

impl Polarization {
    /// Index of `x_{i,k}` (`2 <= k <= γ_i`) in the polarized ring.
    pub fn var_index(&self, i: usize, k: u32) -> Option<usize> {
        let n = self.gamma.len();
        if i == 0 || i > n || k < 2 || k > self.gamma[i - 1] {
            return None;
        }
        let before: usize = self.gamma[..i - 1]
            .iter()
            .map(|&g| g.saturating_sub(1) as usize)
            .sum();
        Some(n + before + (k as usize - 1))
    }

    /// Inverse of [`Polarization::var_index`]; original variables report `k = 1`.
    pub fn var_of_index(&self, idx: usize) -> Option<(usize, u32)> {
        let n = self.gamma.len();
        if idx == 0 || idx > n + self.extra {
            return None;
        }
        if idx <= n {
            return Some((idx, 1));
        }
        let mut off = idx - n;
        for (i, &g) in self.gamma.iter().enumerate() {
            let block = g.saturating_sub(1) as usize;
            if off <= block {
                return Some((i + 1, off as u32 + 1));
            }
            off -= block;
        }
        None
    }

    pub fn var_name(&self, idx: usize) -> String {
        match self.var_of_index(idx) {
            Some((i, 1)) => format!("x{i}"),
            Some((i, k)) => format!("x{i}_{k}"),
            None => format!("?{idx}"),
        }
    }
}

/// Squarefree polarization: `x_i^c` becomes `x_{i,2} ⋯ x_{i,c+1}` when
/// `c < γ_i` and `x_{i,2} ⋯ x_{i,γ_i} x_i` when `c = γ_i`.
pub fn polarize(ideal: &MonomialIdeal) -> Polarization {
    let n = ideal.nvars();
    let gamma = ideal.max_exponents();
    let extra: usize = gamma.iter().map(|&g| g.saturating_sub(1) as usize).sum();
    let mut out = Polarization {
        ideal: MonomialIdeal::zero(n + extra),
        extra,
        gamma,
    };
    let gens = ideal
        .gens()
        .iter()
        .map(|g| {
            let mut e = vec![0u32; n + extra];
            for (i0, &c) in g.exponents().iter().enumerate() {
                let i = i0 + 1;
                let top = out.gamma[i0];
                if c == 0 {
                    continue;
                }
                let last = if c == top {
                    e[i0] = 1;
                    c
                } else {
                    c + 1
                };
                for k in 2..=last {
                    e[out.var_index(i, k).expect("k within γ_i") - 1] = 1;
                }
            }
            Monomial::new(e)
        })
        .collect();
    out.ideal = MonomialIdeal::new(n + extra, gens).expect("lengths agree");
    out
}

/// `depth S/I = depth S^pol/I^pol - |X_I|`; the polarized depth comes from
/// Hochster's Betti formula and Auslander-Buchsbaum.
pub fn depth_monomial(ideal: &MonomialIdeal, field: Field) -> Result<usize> {
    let pol = polarize(ideal);
    let cx = sr_complex(&pol.ideal)?;
    let d = hochster::depth_via_betti(&cx, field)?;
    Ok(d - pol.extra)
}

/// `S_r`-depth of `S/I` through the polarized complex; `S/I` must be unmixed.
pub fn serre_depth_monomial(ideal: &MonomialIdeal, r: usize, field: Field) -> Result<usize> {
    let pol = polarize(ideal);
    let cx = sr_complex(&pol.ideal)?;
    if !cx.is_pure() {
        return Err(Error::NotUnmixed);
    }
    Ok(hochster::serre_depth(&cx, r, field)? - pol.extra)
}
