mod common;

use common::cx;
use serre_depth::io::parse_ideal;
use serre_depth::monomials::{
    depth_monomial, depth_monomial_direct, local_coh_dims_monomial, polarize, prime_power,
    serre_depth_monomial, serre_depth_monomial_direct, sr_complex, sr_ideal, symbolic_power,
};
use serre_depth::symbolic::{symbolic_depth, EnumLimits};
use serre_depth::{families, hochster, Field, Monomial, MonomialIdeal, VertexSet};

const Q: Field = Field::Rationals;

fn ideal(text: &str, n: usize) -> MonomialIdeal {
    parse_ideal(text, Some(n)).unwrap()
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

/// Every exponent vector with entries at most `max`.
fn boxes(n: usize, max: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=max).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

#[test]
fn stanley_reisner_correspondence() {
    assert_eq!(sr_ideal(&cx(2, &[&[1], &[2]])), ideal("x1*x2", 2));
    assert_eq!(sr_ideal(&families::c4()), ideal("x1*x3, x2*x4", 4));
    assert_eq!(sr_complex(&ideal("x1, x2, x3", 3)).unwrap(), cx(3, &[&[]]));
    assert!(sr_complex(&ideal("x1^2", 1)).is_err());
    for c in families::covering_complexes_up_to_iso(5) {
        assert_eq!(sr_complex(&sr_ideal(&c)).unwrap(), c);
    }
}

#[test]
fn intersections_and_prime_powers() {
    assert_eq!(
        ideal("x1", 2).intersect(&ideal("x2", 2)).unwrap(),
        ideal("x1*x2", 2)
    );
    assert_eq!(
        prime_power(2, VertexSet::full(2), 2),
        ideal("x1^2, x1*x2, x2^2", 2)
    );
    let i = ideal("x1^2, x2", 2);
    let j = ideal("x1", 2);
    let meet = i.intersect(&j).unwrap();
    assert_eq!(meet, ideal("x1^2, x1*x2", 2));
    for m in boxes(2, 3) {
        assert_eq!(meet.contains(&m), i.contains(&m) && j.contains(&m), "{m}");
    }
}

#[test]
fn symbolic_powers() {
    assert_eq!(
        symbolic_power(&ideal("x1*x2", 2), 2).unwrap(),
        ideal("x1^2*x2^2", 2)
    );
    let c4 = symbolic_power(&sr_ideal(&families::c4()), 2).unwrap();
    assert!(c4.contains(&mono(&[2, 0, 2, 0])));
    assert!(!c4.contains(&mono(&[1, 0, 1, 0])));
    let tri = symbolic_power(&ideal("x1*x2, x1*x3, x2*x3", 3), 2).unwrap();
    assert!(tri.contains(&mono(&[1, 1, 1])));
    assert!(!ideal("x1*x2, x1*x3, x2*x3", 3)
        .power(2)
        .contains(&mono(&[1, 1, 1])));
    assert!(symbolic_power(&ideal("x1*x2", 2), 0).is_err());
}

#[test]
fn symbolic_power_membership_by_brute_force() {
    // m ∈ I^(ℓ) iff for every facet F the degree of m outside F is at least ℓ
    for c in [families::c4(), families::p4(), cx(3, &[&[1], &[2], &[3]])] {
        for ell in 1..=3 {
            let sp = symbolic_power(&sr_ideal(&c), ell).unwrap();
            for m in boxes(c.n(), ell) {
                let expected = c.facets().iter().all(|f| {
                    f.complement(c.n())
                        .iter()
                        .map(|v| m.exponents()[v - 1])
                        .sum::<u32>()
                        >= ell
                });
                assert_eq!(sp.contains(&m), expected, "{c} l={ell} {m}");
            }
        }
    }
}

#[test]
fn polarization() {
    let p = polarize(&ideal("x1^2", 1));
    assert_eq!((p.ideal.clone(), p.extra), (ideal("x1*x2", 2), 1));
    assert_eq!(p.var_name(2), "x1_2");
    let sq = ideal("x1*x3, x2*x4", 4);
    let p = polarize(&sq);
    assert_eq!((p.ideal, p.extra), (sq, 0));
    // x1^2 -> x1 x_{1,2}; x1 x2 -> x_{1,2} x_{2,2}; x2^2 -> x2 x_{2,2}
    let p = polarize(&ideal("x1^2, x1*x2, x2^2", 2));
    assert_eq!(p.extra, 2);
    assert_eq!(p.ideal, ideal("x1*x3, x3*x4, x2*x4", 4));
}

#[test]
fn radical_and_colon() {
    assert_eq!(ideal("x1^2*x2", 2).radical(), ideal("x1*x2", 2));
    assert_eq!(
        ideal("x1*x2, x1*x3", 3).colon(&mono(&[1, 0, 0])).unwrap(),
        ideal("x2, x3", 3)
    );
    assert!(ideal("x1*x2", 2).colon(&mono(&[1, 1])).unwrap().is_unit());
}

#[test]
fn depth_of_an_artinian_quotient() {
    assert_eq!(depth_monomial(&ideal("x1^2", 1), Q).unwrap(), 0);
    assert_eq!(depth_monomial_direct(&ideal("x1^2", 1), Q).unwrap(), 0);
}

#[test]
fn squarefree_ideals_agree_with_hochster() {
    for c in families::covering_complexes_up_to_iso(4) {
        let i = sr_ideal(&c);
        assert_eq!(
            depth_monomial(&i, Q).unwrap(),
            hochster::depth(&c, Q).unwrap(),
            "{c}"
        );
        if c.is_pure() {
            assert_eq!(
                serre_depth_monomial(&i, 2, Q).unwrap(),
                hochster::serre_depth(&c, 2, Q).unwrap(),
                "{c}"
            );
        }
    }
}

#[test]
fn second_symbolic_power_of_the_fan() {
    let fan = cx(5, &[&[1, 2, 3], &[1, 4, 5]]);
    let i2 = symbolic_power(&sr_ideal(&fan), 2).unwrap();
    let t = symbolic_depth(&fan, 2, Q, EnumLimits::default()).unwrap();
    assert_eq!(depth_monomial(&i2, Q).unwrap(), t);
    assert_eq!(depth_monomial_direct(&i2, Q).unwrap(), t);
}

#[test]
fn local_cohomology_of_monomial_quotients_matches_polarization() {
    for text in [
        "x1^2*x2, x2^3",
        "x1^2, x1*x2",
        "x1*x2^2, x2*x3^2",
        "x1^3, x2^2, x1*x2*x3",
    ] {
        let i = ideal(text, 3);
        let direct = local_coh_dims_monomial(&i, Q).unwrap();
        assert_eq!(
            direct.depth(),
            Some(depth_monomial(&i, Q).unwrap()),
            "{text}"
        );
    }
}

#[test]
fn serre_depth_needs_an_unmixed_quotient() {
    assert!(serre_depth_monomial(&ideal("x1^2, x1*x2", 2), 2, Q).is_err());
    let i = ideal("x1^2*x2^2", 2);
    assert_eq!(serre_depth_monomial(&i, 2, Q).unwrap(), 1);
    assert_eq!(serre_depth_monomial_direct(&i, 2, Q).unwrap(), 1);
}

#[test]
fn inflation_and_renaming() {
    assert_eq!(ideal("x1*x2", 2).inflate(2), ideal("x1*x2*x3", 3));
    assert_eq!(
        ideal("x1*x3, x2*x4", 4).inflate(1),
        ideal("x1*x3*x5, x2*x4", 5)
    );
    assert_eq!(
        ideal("x1*x2^2", 2).rename(3, &[3, 1]).unwrap(),
        ideal("x1^2*x3", 3)
    );
}
