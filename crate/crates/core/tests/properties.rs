use proptest::prelude::*;

use serre_depth::homology::{reduced_homology, reduced_homology_direct};
use serre_depth::io::parse_ideal;
use serre_depth::monomials::{depth_monomial, depth_monomial_direct, polarize};
use serre_depth::symbolic::{symbolic_depth, EnumLimits};
use serre_depth::{hochster, Field, Monomial, MonomialIdeal, SimplicialComplex, VertexSet};

const Q: Field = Field::Rationals;

fn complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(1u64..(1 << n), 1..6).prop_map(move |sets| {
            SimplicialComplex::from_sets(n, sets.into_iter().map(VertexSet::from_bits)).unwrap()
        })
    })
}

fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=3, n), 1..4).prop_map(move |gens| {
            let gens = gens
                .into_iter()
                .map(|mut e| {
                    if e.iter().all(|&x| x == 0) {
                        e[0] = 1;
                    }
                    Monomial::new(e)
                })
                .collect();
            MonomialIdeal::new(n, gens).unwrap()
        })
    })
}

fn reduced_euler(cx: &SimplicialComplex) -> i64 {
    cx.f_vector()
        .iter()
        .enumerate()
        .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn homology_agrees_and_satisfies_euler(cx in complex()) {
        for field in [Q, Field::Prime(2), Field::Prime(3)] {
            let h = reduced_homology(&cx, field).unwrap();
            prop_assert_eq!(&h, &reduced_homology_direct(&cx, field).unwrap());
            prop_assert_eq!(h.euler_characteristic(), reduced_euler(&cx));
        }
    }

    #[test]
    fn alexander_duality_is_an_involution(cx in complex()) {
        prop_assert_eq!(cx.alexander_dual().alexander_dual(), cx);
    }

    #[test]
    fn depth_bounds(cx in complex()) {
        let d = cx.krull_dim().unwrap();
        let depth = hochster::depth(&cx, Q).unwrap();
        prop_assert!(depth <= d);
        prop_assert_eq!(hochster::depth_via_betti(&cx, Q).unwrap(), depth);
        if !cx.is_pure() {
            prop_assert!(hochster::serre_depth(&cx, 2, Q).is_err());
            return Ok(());
        }
        for r in 2..=4 {
            let s = hochster::serre_depth(&cx, r, Q).unwrap();
            prop_assert!(depth <= s && s <= d);
            prop_assert_eq!(hochster::serre_depth_via_links(&cx, r, Q).unwrap(), s);
        }
    }

    #[test]
    fn first_symbolic_power_is_the_ring(cx in complex()) {
        prop_assume!(cx.covers_ground_set());
        prop_assert_eq!(
            symbolic_depth(&cx, 1, Q, EnumLimits::default()).unwrap(),
            hochster::depth(&cx, Q).unwrap()
        );
    }

    #[test]
    fn polarization_preserves_depth(i in ideal()) {
        prop_assert_eq!(depth_monomial(&i, Q).unwrap(), depth_monomial_direct(&i, Q).unwrap());
        let p = polarize(&i);
        prop_assert!(p.ideal.is_squarefree());
        prop_assert_eq!(p.ideal.gens().len(), i.gens().len());
    }

    #[test]
    fn ideal_text_round_trips(i in ideal()) {
        prop_assert_eq!(parse_ideal(&i.to_string(), Some(i.nvars())).unwrap(), i);
    }
}
