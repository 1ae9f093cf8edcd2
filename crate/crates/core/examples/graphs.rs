//! Edge and cover ideals, the layered graphs G_l, and very well-covered graphs.

use serre_depth::graphs::{
    construct_g_ell, cover_ideal, cover_polarization_renaming, cover_symbolic_power, edge_ideal,
    induced_matching_number, vwc_decompose, vwc_expand, vwc_serre_depth_formula, Graph,
    VwcStructure,
};
use serre_depth::monomials::polarize;
use serre_depth::{families, Result};

fn main() -> Result<()> {
    let c5 = Graph::cycle(5);
    println!(
        "C5: I = ({}), J = ({}), im = {}",
        edge_ideal(&c5),
        cover_ideal(&c5),
        induced_matching_number(&c5)
    );

    let p4 = Graph::path(4);
    let ell = 2;
    let pol = polarize(&cover_symbolic_power(&p4, ell)?);
    let image = cover_polarization_renaming(&pol, ell as usize)?;
    let renamed = pol.ideal.rename(p4.n() * ell as usize, &image)?;
    let g2 = construct_g_ell(&p4, ell as usize)?;
    println!(
        "P4: polarized J^(2) renamed equals J(G_2): {}",
        renamed == cover_ideal(&g2)
    );

    let s = VwcStructure::new(families::matched_p4(), vec![1, 2])?;
    let g = vwc_expand(&s);
    println!("expansion of the matched P4 by (1, 2): {g}");
    for r in 2..=3 {
        println!("  S_{r}-depth {}", vwc_serre_depth_formula(&s, r)?);
    }
    let back = vwc_decompose(&g)?;
    println!("  recovered multiplicities {:?}", back.multiplicities());
    Ok(())
}
