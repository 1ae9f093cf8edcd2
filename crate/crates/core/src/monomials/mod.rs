//! Monomial ideals: Stanley-Reisner correspondence, intersections, symbolic
//! powers of squarefree ideals, radical, colon and polarization.

mod polarize;
mod takayama;

use std::collections::HashSet;
use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::{minimal_transversals, VertexSet, MAX_VERTICES};

pub use polarize::{depth_monomial, polarize, serre_depth_monomial, Polarization};
pub use takayama::{depth_monomial_direct, local_coh_dims_monomial, serre_depth_monomial_direct};

/// `x^a` as an exponent vector over `x_1..x_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// Squarefree monomial `Π_{i∈S} x_i`.
    pub fn from_set(n: usize, set: VertexSet) -> Self {
        Monomial((1..=n).map(|i| set.contains(i) as u32).collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VertexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{e}", i + 1)
                }
            })
            .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

/// A monomial ideal of `k[x_1..x_n]` given by its minimal generators, kept in
/// descending lexicographic order of exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                got: g.nvars(),
            });
        }
        Ok(MonomialIdeal {
            n,
            gens: minimalize(gens),
        })
    }

    pub fn from_exponents(n: usize, gens: &[Vec<u32>]) -> Result<Self> {
        Self::new(n, gens.iter().cloned().map(Monomial).collect())
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![] }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `γ_i`: largest exponent of `x_i` among the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        (0..self.n)
            .map(|i| self.gens.iter().map(|g| g.0[i]).max().unwrap_or(0))
            .collect()
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut lcms = HashSet::new();
        for a in &self.gens {
            for b in &other.gens {
                lcms.insert(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.n, lcms.into_iter().collect())
    }

    /// Ordinary power `I^ℓ`.
    pub fn power(&self, ell: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..ell {
            let mut prods = HashSet::new();
            for a in &acc.gens {
                for b in &self.gens {
                    prods.insert(a.mul(b));
                }
            }
            acc = MonomialIdeal {
                n: self.n,
                gens: minimalize(prods.into_iter().collect()),
            };
        }
        acc
    }

    /// `√I`: supports of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| Monomial::from_set(self.n, g.support()))
            .collect();
        MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        }
    }

    /// `I : f`, generated by `g / gcd(g, f)`; gives the unit ideal when `f ∈ I`.
    pub fn colon(&self, f: &Monomial) -> Result<MonomialIdeal> {
        if f.nvars() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: f.nvars(),
            });
        }
        let gens = self.gens.iter().map(|g| g.div(&g.gcd(f))).collect();
        Ok(MonomialIdeal {
            n: self.n,
            gens: minimalize(gens),
        })
    }

    /// Multiplies every generator divisible by `x_v` by a new variable `x_{n+1}`.
    pub fn inflate(&self, v: usize) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.0.clone();
                e.push((e[v - 1] > 0) as u32);
                Monomial(e)
            })
            .collect();
        MonomialIdeal {
            n: self.n + 1,
            gens: minimalize(gens),
        }
    }

    /// Renames variable `x_i` to `x_{image[i-1]}` in a ring with `n` variables.
    pub fn rename(&self, n: usize, image: &[usize]) -> Result<MonomialIdeal> {
        if image.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: image.len(),
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0; n];
                for (i, &x) in g.0.iter().enumerate() {
                    e[image[i] - 1] += x;
                }
                Monomial(e)
            })
            .collect();
        MonomialIdeal::new(n, gens)
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.n,
                got: other.n,
            })
        }
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self}) in {} variables", self.n)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Drops generators divisible by others and sorts canonically.
fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = gens
        .into_iter()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    all.sort_by_key(|g| g.degree());
    let mut kept: Vec<Monomial> = Vec::new();
    for g in all {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

/// Stanley-Reisner ideal: one generator per minimal non-face.
pub fn sr_ideal(cx: &SimplicialComplex) -> MonomialIdeal {
    let gens = cx
        .minimal_nonfaces()
        .into_iter()
        .map(|m| Monomial::from_set(cx.n(), m))
        .collect();
    MonomialIdeal {
        n: cx.n(),
        gens: minimalize(gens),
    }
}

/// Complex whose Stanley-Reisner ideal is the squarefree ideal `I`.
pub fn sr_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.n > MAX_VERTICES {
        return Err(Error::TooManyVertices(ideal.n));
    }
    let supports: Vec<VertexSet> = ideal.gens.iter().map(Monomial::support).collect();
    let facets = minimal_transversals(&supports)
        .into_iter()
        .map(|t| t.complement(ideal.n));
    SimplicialComplex::from_sets(ideal.n, facets)
}

/// All monomials of degree `ell` in the variables of `vars`.
pub fn prime_power(n: usize, vars: VertexSet, ell: u32) -> MonomialIdeal {
    let vars = vars.to_vec();
    let mut gens = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(vars: &[usize], left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        match vars.split_first() {
            None => {
                if left == 0 {
                    out.push(Monomial(exps.clone()));
                }
            }
            Some((&v, rest)) => {
                for e in (0..=left).rev() {
                    exps[v - 1] = e;
                    rec(rest, left - e, exps, out);
                }
                exps[v - 1] = 0;
            }
        }
    }
    rec(&vars, ell, &mut exps, &mut gens);
    MonomialIdeal {
        n,
        gens: minimalize(gens),
    }
}

/// `I^(ℓ) = ⋂ P^ℓ` over the minimal primes `P` of the squarefree ideal `I`,
/// which are generated by the complements of the facets of its complex.
pub fn symbolic_power(ideal: &MonomialIdeal, ell: u32) -> Result<MonomialIdeal> {
    if ell == 0 {
        return Err(Error::Range(
            "symbolic power exponent must be at least 1".into(),
        ));
    }
    let cx = sr_complex(ideal)?;
    let mut primes: Vec<VertexSet> = cx.facets().iter().map(|f| f.complement(ideal.n)).collect();
    // small primes first keeps intermediate generator sets small
    primes.sort_by_key(|p| p.len());
    let mut acc = MonomialIdeal::unit(ideal.n);
    for p in primes {
        acc = acc.intersect(&prime_power(ideal.n, p, ell))?;
    }
    Ok(acc)
}
