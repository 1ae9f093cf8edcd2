//! Depth and Serre depth (`S_r`-depth) of Stanley-Reisner rings, monomial
//! ideals and symbolic powers, computed from finite combinatorial data.

pub mod complex;
pub mod error;
pub mod extint;
pub mod families;
pub mod graphs;
pub mod hochster;
pub mod homology;
pub mod io;
pub mod monomials;
pub mod symbolic;
pub mod verify;
pub mod vertex_set;

pub use complex::{counterexample_complex, SimplicialComplex};
pub use error::{Error, Result};
pub use extint::ExtInt;
pub use homology::Field;
pub use monomials::{Monomial, MonomialIdeal};
pub use vertex_set::VertexSet;
