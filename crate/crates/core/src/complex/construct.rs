use super::{k_subsets, SimplicialComplex};
use crate::error::{Error, Result};
use crate::monomials::{sr_complex, sr_ideal};
use crate::vertex_set::VertexSet;

impl SimplicialComplex {
    /// The 1-vertex inflation at `v`: every minimal non-face containing `v`
    /// gains the new vertex `n + 1`.
    pub fn one_vertex_inflation(&self, v: usize) -> Result<SimplicialComplex> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let ideal = sr_ideal(self).inflate(v);
        sr_complex(&ideal)
    }
}

/// Pure `(d-1)`-dimensional complex on `2d + 1` vertices whose symbolic powers
/// have non-monotone depth. Vertices `1..=d` are `x_i`, `d+1..=2d` are `y_j`
/// and `2d + 1` is `z`.
///
/// Facets: `X`, `Y`, `X ∪ {z}` minus one `x`, `Y ∪ {z}` minus one `y`, and
/// `k` of the `x`'s with `d - k - 1` of the `y`'s and `z` for `1 <= k <= d - 1`.
pub fn counterexample_complex(d: usize) -> Result<SimplicialComplex> {
    if d < 3 {
        return Err(Error::Range(format!("d = {d} must be at least 3")));
    }
    let n = 2 * d + 1;
    let xs: VertexSet = (1..=d).collect();
    let ys: VertexSet = (d + 1..=2 * d).collect();
    let z = VertexSet::singleton(n);
    let mut facets = vec![xs, ys];
    for i in xs.iter() {
        facets.push(xs.remove(i).union(z));
    }
    for j in ys.iter() {
        facets.push(ys.remove(j).union(z));
    }
    for k in 1..d {
        for x_part in k_subsets(xs, k) {
            for y_part in k_subsets(ys, d - k - 1) {
                facets.push(x_part.union(y_part).union(z));
            }
        }
    }
    SimplicialComplex::from_sets(n, facets)
}
