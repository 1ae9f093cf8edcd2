//! Polarization, symbolic powers and depth of monomial quotients.

use serre_depth::io::parse_ideal;
use serre_depth::monomials::{
    depth_monomial, depth_monomial_direct, polarize, serre_depth_monomial, sr_ideal, symbolic_power,
};
use serre_depth::{families, Field, Result};

fn main() -> Result<()> {
    let q = Field::Rationals;
    let i = parse_ideal("x1^2, x1*x2, x2^2", None)?;
    let p = polarize(&i);
    let names: Vec<String> = (1..=p.ideal.nvars()).map(|k| p.var_name(k)).collect();
    println!("polarization of ({i}) is ({}) in {names:?}", p.ideal);

    let j = parse_ideal("x1^2*x2, x2^3*x3", None)?;
    println!(
        "depth S/({j}) = {} (direct {})",
        depth_monomial(&j, q)?,
        depth_monomial_direct(&j, q)?
    );

    let c4 = sr_ideal(&families::c4());
    for ell in 1..=3 {
        let sp = symbolic_power(&c4, ell)?;
        println!(
            "I(C4)^({ell}) = {sp}; depth {}, S_2-depth {}",
            depth_monomial(&sp, q)?,
            serre_depth_monomial(&sp, 2, q)?
        );
    }
    Ok(())
}
