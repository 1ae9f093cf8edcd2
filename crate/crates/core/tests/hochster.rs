mod common;

use common::cx;
use serre_depth::hochster::{
    betti_table, depth, depth_via_betti, depth_via_skeleton, is_cohen_macaulay, local_coh_dims,
    projective_dimension, satisfies_serre, serre_depth, serre_depth_via_links,
    serre_depth_via_skeleton,
};
use serre_depth::{counterexample_complex, families, Field, SimplicialComplex};

const Q: Field = Field::Rationals;

fn fan() -> SimplicialComplex {
    cx(5, &[&[1, 2, 3], &[1, 4, 5]])
}

#[test]
fn betti_table_of_a_principal_ideal() {
    let t = betti_table(&cx(2, &[&[1], &[2]]), Q).unwrap();
    assert_eq!(t.entries(), vec![((0, 0), 1), ((1, 2), 1)]);
    assert_eq!(
        betti_table(&cx(3, &[&[1, 2, 3]]), Q).unwrap().entries(),
        vec![((0, 0), 1)]
    );
}

#[test]
fn betti_table_of_the_four_cycle_is_koszul() {
    let t = betti_table(&families::c4(), Q).unwrap();
    assert_eq!(t.entries(), vec![((0, 0), 1), ((1, 2), 2), ((2, 4), 1)]);
    assert_eq!(t.pd(), Some(2));
    assert_eq!(t.reg(), Some(2));
    let ideal = t.as_ideal();
    assert_eq!(ideal.get(0, 2), 2);
    assert_eq!(ideal.get(1, 4), 1);
    assert_eq!(ideal.indeg(), Some(2));
    assert_eq!(ideal.reg_leq(0), Some(2));
    assert_eq!(ideal.reg_leq(1), Some(3));
    assert!(ideal.satisfies_n_cr(2, 1));
    assert!(!ideal.satisfies_n_cr(2, 2));
}

#[test]
fn principal_ideal_is_linear_in_every_step() {
    let t = betti_table(&cx(2, &[&[1], &[2]]), Q).unwrap().as_ideal();
    assert_eq!(t.reg_leq(1), Some(2));
    assert!((1..5).all(|r| t.satisfies_n_cr(2, r)));
}

#[test]
fn rendering_uses_rows_j_minus_i() {
    let text = betti_table(&families::c4(), Q).unwrap().render();
    let expected = "       0 1 2\ntotal: 1 2 1\n    0: 1 . .\n    1: . 2 .\n    2: . . 1\n";
    assert_eq!(text, expected);
}

#[test]
fn betti_numbers_of_projective_plane_depend_on_field() {
    let q = betti_table(&families::rp2(), Q).unwrap();
    let f2 = betti_table(&families::rp2(), Field::Prime(2)).unwrap();
    assert_ne!(q, f2);
    assert_eq!(q.pd(), Some(3));
    assert_eq!(f2.pd(), Some(4));
}

#[test]
fn local_cohomology_profiles() {
    let p = local_coh_dims(&cx(2, &[&[1], &[2]]), Q).unwrap();
    assert_eq!(p.dims(), &[None, Some(1)]);
    let p = local_coh_dims(&fan(), Q).unwrap();
    assert_eq!(p.dims(), &[None, None, Some(1), Some(3)]);
    let p = local_coh_dims(&cx(2, &[&[1, 2]]), Q).unwrap();
    assert_eq!(p.dims(), &[None, None, Some(2)]);
}

#[test]
fn depths() {
    assert_eq!(depth(&cx(2, &[&[1], &[2]]), Q).unwrap(), 1);
    assert_eq!(depth(&families::two_k2(), Q).unwrap(), 1);
    assert_eq!(depth(&counterexample_complex(3).unwrap(), Q).unwrap(), 3);
    assert_eq!(depth(&fan(), Q).unwrap(), 2);
    assert_eq!(depth(&families::rp2(), Q).unwrap(), 3);
    assert_eq!(depth(&families::rp2(), Field::Prime(2)).unwrap(), 2);
}

#[test]
fn serre_depths() {
    assert_eq!(serre_depth(&families::two_k2(), 2, Q).unwrap(), 1);
    assert_eq!(serre_depth(&fan(), 2, Q).unwrap(), 2);
    assert_eq!(serre_depth_via_links(&fan(), 2, Q).unwrap(), 2);
    assert_eq!(serre_depth_via_skeleton(&fan(), 2, Q).unwrap(), 2);
    assert_eq!(
        serre_depth_via_skeleton(&families::two_k2(), 2, Q).unwrap(),
        1
    );
    assert_eq!(serre_depth_via_links(&families::two_k2(), 2, Q).unwrap(), 1);
    assert!(serre_depth(&fan(), 1, Q).is_err());
}

#[test]
fn cohen_macaulay_complexes_reach_their_dimension() {
    for c in [
        families::c4(),
        families::hollow_triangle(),
        counterexample_complex(3).unwrap(),
    ] {
        let d = c.krull_dim().unwrap();
        assert!(is_cohen_macaulay(&c, Q).unwrap());
        for r in 2..=d {
            assert_eq!(serre_depth(&c, r, Q).unwrap(), d);
            assert_eq!(serre_depth_via_links(&c, r, Q).unwrap(), d);
        }
    }
    assert!(!is_cohen_macaulay(&fan(), Q).unwrap());
}

#[test]
fn serre_condition() {
    assert!(satisfies_serre(&families::hollow_triangle(), 2, Q).unwrap());
    assert!(!satisfies_serre(&fan(), 2, Q).unwrap());
    assert!(!satisfies_serre(&families::two_k2(), 2, Q).unwrap());
}

#[test]
fn depth_three_ways() {
    for n in 1..=5 {
        for c in families::covering_complexes_up_to_iso(n) {
            let d = depth(&c, Q).unwrap();
            assert_eq!(depth_via_betti(&c, Q).unwrap(), d, "{c}");
            assert_eq!(depth_via_skeleton(&c, Q).unwrap(), d, "{c}");
            assert_eq!(local_coh_dims(&c, Q).unwrap().depth(), Some(d), "{c}");
        }
    }
}

#[test]
fn projective_dimension_matches_betti_table() {
    for c in families::covering_complexes_up_to_iso(4) {
        assert_eq!(
            Some(projective_dimension(&c, Q).unwrap()),
            betti_table(&c, Q).unwrap().pd(),
            "{c}"
        );
    }
    assert!(projective_dimension(&SimplicialComplex::void(2), Q).is_err());
}

#[test]
fn serre_depth_is_monotone_in_r() {
    for c in families::pure_complexes_up_to_iso(5, 6) {
        let Some(d) = c.krull_dim() else { continue };
        let values: Vec<usize> = (2..=d.max(2))
            .map(|r| serre_depth(&c, r, Q).unwrap())
            .collect();
        assert!(values.windows(2).all(|w| w[0] >= w[1]), "{c}: {values:?}");
        assert!(values.iter().all(|&v| v >= depth(&c, Q).unwrap()));
    }
}
