//! Depth and Serre depth of Stanley-Reisner rings, three ways each.

use serre_depth::hochster::{
    depth, depth_via_betti, depth_via_skeleton, local_coh_dims, serre_depth, serre_depth_via_links,
    serre_depth_via_skeleton,
};
use serre_depth::{Field, Result, SimplicialComplex};

fn main() -> Result<()> {
    let q = Field::Rationals;
    // two triangles glued at a vertex
    let fan = SimplicialComplex::from_facets(5, &[vec![1, 2, 3], vec![1, 4, 5]])?;
    println!(
        "local cohomology dims {:?}",
        local_coh_dims(&fan, q)?.dims()
    );
    println!(
        "depth {} / via Betti {} / via skeleta {}",
        depth(&fan, q)?,
        depth_via_betti(&fan, q)?,
        depth_via_skeleton(&fan, q)?
    );
    for r in 2..=3 {
        println!(
            "S_{r}-depth {} / via links {} / via skeleta {}",
            serre_depth(&fan, r, q)?,
            serre_depth_via_links(&fan, r, q)?,
            serre_depth_via_skeleton(&fan, r, q)?
        );
    }
    let inflated = fan.one_vertex_inflation(1)?;
    println!(
        "after inflating vertex 1: S_2-depth {}",
        serre_depth(&inflated, 2, q)?
    );
    Ok(())
}
