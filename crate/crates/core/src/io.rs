//! JSON wire formats and the textual monomial-ideal syntax.
//!
//! ```text
//! complex  {"n": 4, "facets": [[1,2],[2,3]]}      [] = void, [[]] = irrelevant
//! ideal    {"n": 4, "gens": [[1,0,1,0],[0,1,0,1]]} exponent vectors
//! graph    {"n": 4, "edges": [[1,2],[3,4]]}
//! ```

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::graphs::{Graph, GraphJson};
use crate::monomials::{Monomial, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<Vec<u32>>,
}

fn from_json_text<T: DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!(
            "{what} at line {}, column {}: {e}",
            e.line(),
            e.column()
        ))
    })
}

pub fn complex_to_json(cx: &SimplicialComplex) -> ComplexJson {
    ComplexJson {
        n: cx.n(),
        facets: cx.facet_lists(),
    }
}

pub fn complex_from_json(j: &ComplexJson) -> Result<SimplicialComplex> {
    SimplicialComplex::from_facets(j.n, &j.facets)
}

pub fn read_complex(text: &str) -> Result<SimplicialComplex> {
    complex_from_json(&from_json_text(text, "complex JSON")?)
}

pub fn ideal_to_json(ideal: &MonomialIdeal) -> IdealJson {
    IdealJson {
        n: ideal.nvars(),
        gens: ideal
            .gens()
            .iter()
            .map(|g| g.exponents().to_vec())
            .collect(),
    }
}

pub fn ideal_from_json(j: &IdealJson) -> Result<MonomialIdeal> {
    MonomialIdeal::from_exponents(j.n, &j.gens)
}

pub fn read_graph(text: &str) -> Result<Graph> {
    Graph::from_json(&from_json_text::<GraphJson>(text, "graph JSON")?)
}

/// Reads an ideal either as JSON or in the textual syntax of [`parse_ideal`].
pub fn read_ideal(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    if text.trim_start().starts_with('{') {
        let ideal = ideal_from_json(&from_json_text(text, "ideal JSON")?)?;
        match n {
            Some(m) if m != ideal.nvars() => Err(Error::LengthMismatch {
                expected: m,
                got: ideal.nvars(),
            }),
            _ => Ok(ideal),
        }
    } else {
        parse_ideal(text, n)
    }
}

/// Parses comma-separated monomials such as `x1*x3, x2^2*x4`. `1` is the unit
/// monomial and an empty list or `0` the zero ideal. Without `n` the ring has
/// as many variables as the largest index used.
pub fn parse_ideal(text: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let trimmed = text.trim();
    let mut exps: Vec<Vec<(usize, u32)>> = Vec::new();
    if !(trimmed.is_empty() || trimmed == "0") {
        for (k, term) in trimmed.split(',').enumerate() {
            exps.push(
                parse_monomial(term.trim())
                    .map_err(|m| Error::Parse(format!("generator {}: {m}", k + 1)))?,
            );
        }
    }
    let used = exps.iter().flatten().map(|&(i, _)| i).max().unwrap_or(0);
    let n = match n {
        Some(n) if used > n => return Err(Error::VertexOutOfRange { vertex: used, n }),
        Some(n) => n,
        None => used,
    };
    let gens = exps
        .into_iter()
        .map(|factors| {
            let mut e = vec![0u32; n];
            for (i, p) in factors {
                e[i - 1] += p;
            }
            Monomial::new(e)
        })
        .collect();
    MonomialIdeal::new(n, gens)
}

fn parse_monomial(term: &str) -> std::result::Result<Vec<(usize, u32)>, String> {
    if term == "1" {
        return Ok(Vec::new());
    }
    term.split('*')
        .map(|factor| {
            let factor = factor.trim();
            let (var, pow) = match factor.split_once('^') {
                Some((v, p)) => (
                    v.trim(),
                    p.trim()
                        .parse::<u32>()
                        .map_err(|_| format!("bad exponent in `{factor}`"))?,
                ),
                None => (factor, 1),
            };
            let idx = var
                .strip_prefix('x')
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&i| i >= 1)
                .ok_or_else(|| format!("expected a variable x1, x2, ... but found `{var}`"))?;
            Ok((idx, pow))
        })
        .collect()
}
