//! Reduced homology over Q and over F_2: the projective plane tells them apart.

use serre_depth::homology::reduced_homology;
use serre_depth::{families, Field, Result};

fn main() -> Result<()> {
    let rp2 = families::rp2();
    for field in [Field::Rationals, Field::Prime(2)] {
        let h = reduced_homology(&rp2, field)?;
        println!(
            "RP2 over {field}: {:?}, euler {}",
            h.dims(),
            h.euler_characteristic()
        );
    }
    let circle = families::hollow_triangle();
    println!(
        "circle over q: {:?}",
        reduced_homology(&circle, Field::Rationals)?.dims()
    );
    Ok(())
}
