//! Graded Betti numbers from restrictions, printed as a grid with column `i`
//! and row `j - i`.

use serre_depth::hochster::betti_table;
use serre_depth::{families, Field, Result};

fn main() -> Result<()> {
    let c4 = betti_table(&families::c4(), Field::Rationals)?;
    println!("k[C4]:\n{}", c4.render());
    println!("I(C4):\n{}", c4.as_ideal().render());
    println!("reg_<=1 I(C4) = {:?}", c4.as_ideal().reg_leq(1));

    for field in [Field::Rationals, Field::Prime(2)] {
        println!(
            "k[RP2] over {field}:\n{}",
            betti_table(&families::rp2(), field)?.render()
        );
    }
    Ok(())
}
