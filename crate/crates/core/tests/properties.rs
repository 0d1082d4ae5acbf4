use num_rational::BigRational;
use proptest::prelude::*;

use ehrhart_core::counting::{count_interior, count_points};
use ehrhart_core::ehrhart::{from_hstar, interpolate, to_hstar};
use ehrhart_core::{IntPoint, LatticePolytope};

fn polytope(dim: usize) -> impl Strategy<Value = LatticePolytope> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, dim), dim + 1..dim + 5)
        .prop_filter_map("full-dimensional", |pts| {
            LatticePolytope::from_points(pts.into_iter().map(IntPoint).collect(), "prop").ok()
        })
}

fn any_polytope() -> impl Strategy<Value = LatticePolytope> {
    prop_oneof![polytope(2), polytope(3)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polynomial_matches_fresh_counts(p in any_polytope(), k in 1u64..6) {
        let e = interpolate(&p).unwrap();
        let want = BigRational::from_integer(count_points(&p, k).unwrap().into());
        prop_assert_eq!(e.eval_int(k as i64), want);
    }

    #[test]
    fn reciprocity(p in any_polytope(), k in 1i64..5) {
        let e = interpolate(&p).unwrap();
        let want = BigRational::from_integer(count_interior(&p, k as u64).unwrap().into());
        prop_assert_eq!(e.interior_value(k), want);
    }

    #[test]
    fn hstar_round_trip(p in any_polytope()) {
        let e = interpolate(&p).unwrap();
        let h = to_hstar(&e).unwrap();
        prop_assert!(h.entries().iter().all(|&a| a >= 0));
        prop_assert_eq!(h.entries()[0], 1);
        prop_assert_eq!(from_hstar(&h), e);
    }

    #[test]
    fn translation_and_dilation(p in any_polytope(), t in prop::collection::vec(-5i64..=5, 3), k in 2i64..4) {
        let e = interpolate(&p).unwrap();
        let moved = p.translate(&t[..p.dim()]).unwrap();
        prop_assert_eq!(interpolate(&moved).unwrap(), e.clone());
        let big = interpolate(&p.dilate(k).unwrap()).unwrap();
        for s in 0..4 {
            prop_assert_eq!(big.eval_int(s), e.eval_int(k * s));
        }
    }
}
