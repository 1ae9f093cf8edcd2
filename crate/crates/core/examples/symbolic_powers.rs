//! Depth sequences of symbolic powers through degree complexes.

use serre_depth::symbolic::{
    classify_dim1, depth_sequence, serre_depth_sequence, symbolic_coh_profile, EnumLimits,
};
use serre_depth::{counterexample_complex, families, Field, Result};

fn main() -> Result<()> {
    let q = Field::Rationals;
    let lim = EnumLimits::default();

    let ce = counterexample_complex(3)?;
    println!(
        "counterexample, depth for l = 1..5: {:?}",
        depth_sequence(&ce, 5, q, lim)?
    );
    let p = symbolic_coh_profile(&ce, 4, q, lim)?;
    if let Some(w) = p.witness(1) {
        println!(
            "  H^1 at l = 4 witnessed by face {:?}, degree {:?}",
            w.face, w.a
        );
    }

    for (name, c) in [
        ("C4", families::c4()),
        ("triangle + pendant", families::triangle_with_pendant()),
        ("P4", families::p4()),
        ("2K2", families::two_k2()),
    ] {
        println!(
            "{name:>18}: {:?}  depth {:?}  S2 {:?}",
            classify_dim1(&c)?,
            depth_sequence(&c, 4, q, lim)?,
            serre_depth_sequence(&c, 4, 2, q, lim)?
        );
    }

    println!(
        "CE2, depth for l = 1..8: {:?}",
        depth_sequence(&families::ce2(), 8, q, lim)?
    );
    Ok(())
}
