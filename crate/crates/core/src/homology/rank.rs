//! Exact rank of sparse integer matrices over `Q` or `F_p`.
//!
//! Rows are inserted one at a time into an echelon basis keyed by leading
//! column. Over `Q` the update is fraction-free (`r <- p*r - a*q`, then divide
//! by the content), first in checked `i64` and, on overflow, in big integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Field;

/// Sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(u32, i64)>;

pub fn rank(rows: &[SparseRow], ncols: usize, field: Field) -> usize {
    match field {
        Field::Prime(p) => rank_mod_p(rows, ncols, p as u64),
        Field::Rationals => match rank_integer::<i64>(rows, ncols) {
            Some(r) => r,
            None => rank_integer::<BigInt>(rows, ncols).expect("big integers do not overflow"),
        },
    }
}

fn rank_mod_p(rows: &[SparseRow], ncols: usize, p: u64) -> usize {
    let mut pivots: Vec<Option<Vec<(u32, u64)>>> = vec![None; ncols];
    let mut rank = 0;
    for row in rows {
        let mut r: Vec<(u32, u64)> = row
            .iter()
            .map(|&(c, v)| (c, v.rem_euclid(p as i64) as u64))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(lead, a)) = r.first() {
            match &pivots[lead as usize] {
                Some(piv) => {
                    // piv has leading coefficient 1
                    r = axpy_mod(&r, piv, p - a, p);
                }
                None => {
                    let inv = inverse_mod(a, p);
                    for e in r.iter_mut() {
                        e.1 = e.1 * inv % p;
                    }
                    pivots[lead as usize] = Some(r);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// `r + c * q (mod p)`.
fn axpy_mod(r: &[(u32, u64)], q: &[(u32, u64)], c: u64, p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(r.len() + q.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < q.len() {
        let take_r = j == q.len() || (i < r.len() && r[i].0 < q[j].0);
        let take_q = i == r.len() || (j < q.len() && q[j].0 < r[i].0);
        if take_r {
            out.push(r[i]);
            i += 1;
        } else if take_q {
            out.push((q[j].0, q[j].1 * c % p));
            j += 1;
        } else {
            let v = (r[i].1 + q[j].1 * c) % p;
            if v != 0 {
                out.push((r[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Integer arithmetic that may refuse (overflow).
trait ExactInt: Clone + PartialEq {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
    /// `a*x - b*y`, or `None` on overflow.
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn div_exact(&self, d: &Self) -> Self;
}

impl ExactInt for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl ExactInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

fn rank_integer<T: ExactInt>(rows: &[SparseRow], ncols: usize) -> Option<usize> {
    let mut pivots: Vec<Option<Vec<(u32, T)>>> = vec![None; ncols];
    let mut rank = 0;
    for row in rows {
        let mut r: Vec<(u32, T)> = row
            .iter()
            .filter(|&&(_, v)| v != 0)
            .map(|&(c, v)| (c, T::from_i64(v)))
            .collect();
        while let Some((lead, a)) = r.first().cloned() {
            match &pivots[lead as usize] {
                Some(piv) => {
                    let p = piv[0].1.clone();
                    r = combine(&r, &p, piv, &a)?;
                    normalize(&mut r);
                }
                None => {
                    normalize(&mut r);
                    pivots[lead as usize] = Some(r);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

/// `p*r - a*q` where `r` and `q` share the leading column, which cancels.
fn combine<T: ExactInt>(r: &[(u32, T)], p: &T, q: &[(u32, T)], a: &T) -> Option<Vec<(u32, T)>> {
    let zero = T::from_i64(0);
    let mut out = Vec::with_capacity(r.len() + q.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < q.len() {
        let take_r = j == q.len() || (i < r.len() && r[i].0 < q[j].0);
        let take_q = i == r.len() || (j < q.len() && q[j].0 < r[i].0);
        let (col, v) = if take_r {
            i += 1;
            (r[i - 1].0, T::cross(p, &r[i - 1].1, &zero, &zero)?)
        } else if take_q {
            j += 1;
            (q[j - 1].0, T::cross(&zero, &zero, a, &q[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (r[i - 1].0, T::cross(p, &r[i - 1].1, a, &q[j - 1].1)?)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    Some(out)
}

/// Divides by the content and makes the leading entry positive.
fn normalize<T: ExactInt>(r: &mut [(u32, T)]) {
    let Some(first) = r.first() else { return };
    let mut g = first.1.clone();
    for (_, v) in r.iter().skip(1) {
        if g.is_unit() {
            break;
        }
        g = g.gcd(v);
    }
    if g.is_negative() {
        g = g.neg();
    }
    let flip = r[0].1.is_negative();
    let divide = !g.is_unit();
    if !divide && !flip {
        return;
    }
    for e in r.iter_mut() {
        if divide {
            e.1 = e.1.div_exact(&g);
        }
        if flip {
            e.1 = e.1.neg();
        }
    }
}
