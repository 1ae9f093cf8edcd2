//! Links, duals, skeletons, diameters and shellings of a few small complexes.

use serre_depth::complex::{ShellingOutcome, DEFAULT_SHELLING_FACET_LIMIT};
use serre_depth::{counterexample_complex, families, Result, VertexSet};

fn main() -> Result<()> {
    let c4 = families::c4();
    println!("C4 = {c4}");
    println!("  f-vector        {:?}", c4.f_vector());
    println!("  Alexander dual  {}", c4.alexander_dual());
    println!("  link of 1       {}", c4.link(VertexSet::singleton(1))?);
    println!("  diameter        {}", c4.one_skeleton_diameter()?);
    println!("  matroid         {}", c4.is_matroid(20)?);

    let fan = families::ce2();
    println!("\nCE2 = {fan}");
    println!("  1-skeleton has {} edges", fan.skeleton(1)?.facets().len());
    println!("  1-diameter      {}", fan.t_diameter(1)?);

    let ce = counterexample_complex(3)?;
    println!(
        "\ncounterexample for d = 3: {} facets, pure {}",
        ce.facets().len(),
        ce.is_pure()
    );
    if let ShellingOutcome::Shellable(order) = ce.is_shellable(DEFAULT_SHELLING_FACET_LIMIT)? {
        let order: Vec<Vec<usize>> = order.iter().map(|f| f.to_vec()).collect();
        println!("  shelling order  {order:?}");
    }
    let inflated = ce.one_vertex_inflation(1)?;
    println!(
        "  inflated at 1   {} vertices, dim {}",
        inflated.n(),
        inflated.dim()
    );
    Ok(())
}
