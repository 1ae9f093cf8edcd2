mod common;

use common::cx;
use serre_depth::homology::{
    boundaries_compose_to_zero, boundary_matrices, reduced_homology, reduced_homology_direct,
};
use serre_depth::{counterexample_complex, families, Field, SimplicialComplex};

const Q: Field = Field::Rationals;

#[test]
fn circle_and_points() {
    let h = reduced_homology(&families::hollow_triangle(), Q).unwrap();
    assert_eq!((h.get(0), h.get(1)), (0, 1));
    let h = reduced_homology(&cx(2, &[&[1], &[2]]), Q).unwrap();
    assert_eq!(h.get(0), 1);
    assert_eq!(h.nonzero_degrees().collect::<Vec<_>>(), vec![0]);
}

#[test]
fn irrelevant_complex_has_homology_in_degree_minus_one() {
    for field in [Q, Field::Prime(2), Field::Prime(3)] {
        let h = reduced_homology(&cx(3, &[&[]]), field).unwrap();
        assert_eq!(h.get(-1), 1);
        assert_eq!(h.nonzero_degrees().collect::<Vec<_>>(), vec![-1]);
    }
}

#[test]
fn void_complex_is_acyclic() {
    assert!(reduced_homology(&SimplicialComplex::void(3), Q)
        .unwrap()
        .is_acyclic());
}

#[test]
fn cones_and_simplices_are_acyclic() {
    assert!(reduced_homology(&cx(4, &[&[1, 2, 3, 4]]), Q)
        .unwrap()
        .is_acyclic());
    assert!(reduced_homology(&families::p4(), Q).unwrap().is_acyclic());
    let cone = cx(4, &[&[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
    assert!(reduced_homology(&cone, Q).unwrap().is_acyclic());
}

#[test]
fn projective_plane_depends_on_characteristic() {
    let rp2 = families::rp2();
    let q = reduced_homology(&rp2, Q).unwrap();
    assert!(q.is_acyclic());
    let f2 = reduced_homology(&rp2, Field::Prime(2)).unwrap();
    assert_eq!((f2.get(1), f2.get(2)), (1, 1));
    let f3 = reduced_homology(&rp2, Field::Prime(3)).unwrap();
    assert!(f3.is_acyclic());
}

#[test]
fn tetrahedron_boundary_is_a_sphere() {
    let s2 = cx(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
    let h = reduced_homology(&s2, Q).unwrap();
    assert_eq!(h.nonzero_degrees().collect::<Vec<_>>(), vec![2]);
    assert_eq!(h.get(2), 1);
}

#[test]
fn collapsing_agrees_with_plain_ranks() {
    for n in 1..=5 {
        for c in families::covering_complexes_up_to_iso(n) {
            for field in [Q, Field::Prime(2)] {
                assert_eq!(
                    reduced_homology(&c, field).unwrap(),
                    reduced_homology_direct(&c, field).unwrap(),
                    "{c}"
                );
            }
        }
    }
}

#[test]
fn boundary_of_boundary_vanishes() {
    for c in [
        families::ce2(),
        families::rp2(),
        counterexample_complex(3).unwrap(),
    ] {
        assert!(boundaries_compose_to_zero(
            &boundary_matrices(c.facets()).unwrap()
        ));
    }
}

#[test]
fn field_parsing() {
    assert_eq!("q".parse::<Field>().unwrap(), Q);
    assert_eq!("fp:7".parse::<Field>().unwrap(), Field::Prime(7));
    assert!("fp:8".parse::<Field>().is_err());
    assert!("r".parse::<Field>().is_err());
    assert_eq!(Field::Prime(5).to_string(), "fp:5");
}
