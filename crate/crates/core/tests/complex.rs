mod common;

use common::{all_faces, cx, set};
use serre_depth::complex::{ComplexKind, ShellingOutcome, DEFAULT_SHELLING_FACET_LIMIT};
use serre_depth::{counterexample_complex, families, ExtInt, SimplicialComplex, VertexSet};

#[test]
fn construction_drops_dominated_sets() {
    let c = cx(4, &[&[1, 2], &[2, 3], &[2]]);
    assert_eq!(c.facet_lists(), vec![vec![1, 2], vec![2, 3]]);
    assert_eq!(SimplicialComplex::void(3).kind(), ComplexKind::Void);
    assert_eq!(cx(3, &[&[]]).kind(), ComplexKind::Irrelevant);
}

#[test]
fn construction_rejects_out_of_range_vertices() {
    assert!(SimplicialComplex::from_facets(3, &[vec![1, 4]]).is_err());
    assert!(SimplicialComplex::from_facets(3, &[vec![0]]).is_err());
}

#[test]
fn dimension_conventions() {
    assert_eq!(cx(3, &[&[1, 2], &[2, 3]]).dim(), ExtInt::Finite(1));
    assert_eq!(cx(3, &[&[]]).dim(), ExtInt::Finite(-1));
    assert_eq!(SimplicialComplex::void(3).dim(), ExtInt::NegInf);
}

#[test]
fn links() {
    let c = cx(5, &[&[1, 2, 3], &[1, 4, 5]]);
    assert_eq!(c.link(set(&[1])).unwrap(), cx(5, &[&[2, 3], &[4, 5]]));
    assert_eq!(c.link(VertexSet::EMPTY).unwrap(), c);
    assert_eq!(
        cx(2, &[&[1, 2]]).link(set(&[1, 2])).unwrap().kind(),
        ComplexKind::Irrelevant
    );
    assert!(c.link(set(&[2, 4])).is_err());
}

#[test]
fn restrictions() {
    let c4 = families::c4();
    assert_eq!(c4.restriction(set(&[1, 2, 3])), cx(4, &[&[1, 2], &[2, 3]]));
    assert_eq!(c4.restriction(VertexSet::full(4)), c4);
    assert_eq!(c4.restriction(set(&[1, 3])), cx(4, &[&[1], &[3]]));
}

#[test]
fn skeletons() {
    assert_eq!(
        cx(3, &[&[1, 2, 3]]).skeleton(1).unwrap(),
        families::hollow_triangle()
    );
    let c = families::ce2();
    assert_eq!(c.skeleton(2).unwrap(), c);
    assert_eq!(c.skeleton(-1).unwrap().kind(), ComplexKind::Irrelevant);
}

#[test]
fn alexander_duals() {
    assert_eq!(
        cx(2, &[&[1], &[2]]).alexander_dual().kind(),
        ComplexKind::Irrelevant
    );
    assert_eq!(
        families::hollow_triangle().alexander_dual().kind(),
        ComplexKind::Irrelevant
    );
    assert_eq!(families::c4().alexander_dual(), cx(4, &[&[2, 4], &[1, 3]]));
    assert_eq!(
        cx(3, &[&[1, 2, 3]]).alexander_dual().kind(),
        ComplexKind::Void
    );
}

#[test]
fn alexander_dual_matches_definition() {
    for c in families::covering_complexes_up_to_iso(4) {
        let n = c.n();
        let faces = all_faces(&c);
        let dual = c.alexander_dual();
        for s in VertexSet::full(n).subsets() {
            assert_eq!(dual.contains(s), !faces.contains(&s.complement(n)), "{c}");
        }
        assert_eq!(dual.alexander_dual(), c);
    }
}

#[test]
fn purity() {
    assert!(cx(4, &[&[1, 2], &[3, 4]]).is_pure());
    assert!(!cx(3, &[&[1, 2], &[3]]).is_pure());
    assert!(cx(3, &[&[1, 2, 3]]).is_pure());
}

#[test]
fn one_skeleton_diameters() {
    assert_eq!(
        families::c4().one_skeleton_diameter().unwrap(),
        ExtInt::Finite(2)
    );
    assert_eq!(
        families::p4().one_skeleton_diameter().unwrap(),
        ExtInt::Finite(3)
    );
    assert_eq!(
        families::two_k2().one_skeleton_diameter().unwrap(),
        ExtInt::Inf
    );
}

#[test]
fn t_diameters() {
    assert_eq!(
        cx(3, &[&[1, 2, 3]]).t_diameter(1).unwrap(),
        ExtInt::Finite(1)
    );
    assert_eq!(families::two_k2().t_diameter(0).unwrap(), ExtInt::Inf);
    assert_eq!(families::c4().t_diameter(0).unwrap(), ExtInt::Finite(2));
    assert!(families::c4().t_diameter(2).is_err());
}

#[test]
fn matroids() {
    assert!(families::c4().is_matroid(20).unwrap());
    assert!(!families::triangle_with_pendant().is_matroid(20).unwrap());
    assert!(cx(4, &[&[1, 2, 3, 4]]).is_matroid(20).unwrap());
}

#[test]
fn matroid_test_matches_restriction_purity() {
    for c in families::covering_complexes_up_to_iso(4) {
        let expected = VertexSet::full(c.n())
            .subsets()
            .all(|w| c.restriction(w).is_pure());
        assert_eq!(c.is_matroid(20).unwrap(), expected, "{c}");
    }
}

#[test]
fn shellings() {
    let path = cx(3, &[&[1, 2], &[2, 3]]);
    assert!(path.verify_shelling(&[set(&[1, 2]), set(&[2, 3])]).unwrap());
    assert!(!families::two_k2()
        .verify_shelling(&[set(&[1, 2]), set(&[3, 4])])
        .unwrap());
    assert!(matches!(
        families::two_k2()
            .is_shellable(DEFAULT_SHELLING_FACET_LIMIT)
            .unwrap(),
        ShellingOutcome::NotShellable
    ));
    match counterexample_complex(3)
        .unwrap()
        .is_shellable(DEFAULT_SHELLING_FACET_LIMIT)
        .unwrap()
    {
        ShellingOutcome::Shellable(order) => {
            assert!(counterexample_complex(3)
                .unwrap()
                .verify_shelling(&order)
                .unwrap())
        }
        other => panic!("expected a shelling, got {other:?}"),
    }
}

#[test]
fn rp2_is_not_shellable() {
    assert!(!families::rp2()
        .is_shellable(DEFAULT_SHELLING_FACET_LIMIT)
        .unwrap()
        .is_shellable());
}

#[test]
fn one_vertex_inflation() {
    let two_points = cx(2, &[&[1], &[2]]);
    assert_eq!(
        two_points.one_vertex_inflation(2).unwrap(),
        families::hollow_triangle()
    );
    // (x1 x3, x2 x4) inflated at 1 is (x1 x3 x5, x2 x4)
    let inflated = families::c4().one_vertex_inflation(1).unwrap();
    let mut nonfaces = inflated.minimal_nonfaces();
    nonfaces.sort_unstable();
    let mut expected = vec![set(&[1, 3, 5]), set(&[2, 4])];
    expected.sort_unstable();
    assert_eq!(nonfaces, expected);
}

#[test]
fn counterexample_shape() {
    let c3 = counterexample_complex(3).unwrap();
    assert!(c3.is_pure());
    assert_eq!(c3.dim(), ExtInt::Finite(2));
    assert_eq!(c3.facets().len(), 17);
    assert!(c3.facets().iter().all(|f| f.len() == 3));
    let c4 = counterexample_complex(4).unwrap();
    assert!(c4.is_pure());
    assert_eq!(c4.dim(), ExtInt::Finite(3));
    assert!(counterexample_complex(2).is_err());
}

#[test]
fn closed_faces_are_facet_intersections() {
    for c in families::covering_complexes_up_to_iso(4) {
        let facets = c.facets();
        let mut expected: Vec<VertexSet> = (1u32..1 << facets.len())
            .map(|mask| {
                (0..facets.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| facets[i])
                    .reduce(VertexSet::intersection)
                    .unwrap()
            })
            .collect();
        expected.sort_unstable();
        expected.dedup();
        let mut got = c.closed_faces();
        got.sort_unstable();
        assert_eq!(got, expected, "{c}");
    }
}

#[test]
fn f_vector_counts_faces() {
    for c in families::covering_complexes_up_to_iso(5) {
        let faces = all_faces(&c);
        let f = c.f_vector();
        for (k, &count) in f.iter().enumerate() {
            assert_eq!(count, faces.iter().filter(|s| s.len() == k).count(), "{c}");
        }
    }
}

#[test]
fn relabel_is_an_isomorphism() {
    let c = families::ce2();
    let image = [6, 5, 4, 3, 2, 1];
    let r = c.relabel(6, &image).unwrap();
    assert_eq!(r.f_vector(), c.f_vector());
    assert_eq!(r.relabel(6, &image).unwrap(), c);
}
