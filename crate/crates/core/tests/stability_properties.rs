mod support;

use logfutaki::{
    beta_interval, brute_force_threshold, catalog, futaki_line, int, q_membership, r_invariant,
    stability_threshold, DivisorSupport, FutakiLine, RatPoint, Rational,
};
use num_traits::{One, Zero};
use proptest::prelude::*;
use support::*;

fn lambda() -> impl Strategy<Value = RatPoint> {
    (-6i64..=6, -6i64..=6)
        .prop_filter("non-zero", |&(x, y)| (x, y) != (0, 0))
        .prop_map(|(x, y)| p(x, y))
}

fn beta() -> impl Strategy<Value = Rational> {
    (0i64..=60).prop_map(|n| logfutaki::rat(n, 60))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn interval_is_exactly_where_futaki_is_negative(w in small_rational(), c in small_rational(),
                                                    vol in 1i64..=8, b in 1i64..=60) {
        let line = FutakiLine::new(w, c, int(vol));
        let beta = logfutaki::rat(b, 60);
        prop_assert_eq!(line.interval().contains(&beta), line.eval(&beta) < Rational::zero());
    }

    #[test]
    fn futaki_is_affine_in_beta((fano, d) in catalog_support(3), l in lambda(),
                                b1 in beta(), b2 in beta(), b3 in beta()) {
        prop_assume!(b1 != b2);
        let f = |b: &Rational| logfutaki::log_futaki(&fano, &d, b, &l).unwrap();
        let (f1, f2) = (f(&b1), f(&b2));
        let through = &f1 + (&f2 - &f1) / (&b2 - &b1) * (&b3 - &b1);
        prop_assert_eq!(f(&b3), through);
    }

    #[test]
    fn endpoint_is_support_independent(idx in 0..5usize, m in 1u32..=3, s1 in any::<u64>(), s2 in any::<u64>(), l in lambda()) {
        let fano = catalog()[idx].fano.clone();
        let all = fano.lattice_points(m).unwrap();
        let d1 = DivisorSupport::new(&fano, m, subset(&all, s1)).unwrap();
        let d2 = DivisorSupport::new(&fano, m, subset(&all, s2)).unwrap();
        let one = Rational::one();
        let f1 = futaki_line(&fano, &d1, &l).unwrap();
        let f2 = futaki_line(&fano, &d2, &l).unwrap();
        prop_assert_eq!(f1.eval(&one), f2.eval(&one));
        prop_assert_eq!(f1.eval(&one), -(fano.barycenter().dot(&l) * fano.volume()));
    }

    #[test]
    fn interval_is_homogeneous_in_lambda((fano, d) in catalog_support(3), l in lambda(), k in 1i64..=7) {
        let scaled = l.scale(&int(k));
        prop_assert_eq!(beta_interval(&fano, &d, &scaled).unwrap(), beta_interval(&fano, &d, &l).unwrap());
    }

    #[test]
    fn threshold_is_monotone_in_support(idx in 0..5usize, m in 1u32..=3, s1 in any::<u64>(), s2 in any::<u64>(), l in lambda()) {
        let fano = catalog()[idx].fano.clone();
        let all = fano.lattice_points(m).unwrap();
        let big = subset(&all, s1);
        let small = subset(&big, s2);
        let d_big = DivisorSupport::new(&fano, m, big).unwrap();
        let d_small = DivisorSupport::new(&fano, m, small).unwrap();
        prop_assert!(d_small.is_subset_of(&d_big));
        prop_assert!(futaki_line(&fano, &d_small, &l).unwrap().w_value <= futaki_line(&fano, &d_big, &l).unwrap().w_value);
        let r_small = stability_threshold(&fano, &d_small).unwrap();
        let r_big = stability_threshold(&fano, &d_big).unwrap();
        prop_assert!(r_small.r_bar <= r_big.r_bar);
        if r_small.feasible() {
            prop_assert!(r_big.feasible() && r_big.l_bar <= r_small.l_bar);
        }
    }

    #[test]
    fn threshold_matches_ray_oracle((fano, d) in catalog_support(4)) {
        let report = stability_threshold(&fano, &d).unwrap();
        match ray_oracle(&fano, &d) {
            Some((lo, hi)) => {
                prop_assert!(report.feasible());
                prop_assert_eq!(&report.l_bar, &lo);
                prop_assert_eq!(&report.r_bar, &hi);
                prop_assert_eq!(&report.witness_interval.upper, &hi);
            }
            None => prop_assert!(!report.feasible()),
        }
        prop_assert!(report.l_bar >= Rational::zero() && report.l_bar <= report.r_bar && report.r_bar <= Rational::one());
    }

    #[test]
    fn threshold_is_lattice_invariant((fano, d) in catalog_support(3), u in unimodular()) {
        let (image, image_support) = d.transform(&fano, &u).unwrap();
        let before = stability_threshold(&fano, &d).unwrap();
        let after = stability_threshold(&image, &image_support).unwrap();
        prop_assert_eq!(image.volume(), fano.volume());
        prop_assert_eq!(r_invariant(&image).unwrap(), r_invariant(&fano).unwrap());
        prop_assert_eq!(&after.r_bar, &before.r_bar);
        prop_assert_eq!(&after.l_bar, &before.l_bar);
        // The witness moves by the dual action and keeps its interval.
        let moved = u.dual().apply(&before.witness);
        prop_assert_eq!(beta_interval(&image, &image_support, &moved).unwrap(), before.witness_interval);
    }

    #[test]
    fn oracle_is_monotone_and_bounded_below((fano, d) in catalog_support(2), b in 1u32..=6) {
        let exact = stability_threshold(&fano, &d).unwrap();
        let coarse = brute_force_threshold(&fano, &d, b).unwrap();
        let fine = brute_force_threshold(&fano, &d, b + 1).unwrap();
        prop_assert!(fine.value <= coarse.value);
        if exact.feasible() {
            prop_assert!(coarse.value >= exact.r_bar);
        }
    }

    #[test]
    fn sharpness_criterion((fano, d) in catalog_support(3)) {
        prop_assume!(!fano.barycenter().is_zero());
        prop_assume!(d.hull().contains(&RatPoint::origin()).is_inside());
        let report = stability_threshold(&fano, &d).unwrap();
        let q_in = q_membership(&fano, &d).unwrap();
        prop_assert_eq!(report.r_bar < report.r_of_m, !q_in);
    }
}

#[test]
fn generic_support_recovers_r_invariant_under_lattice_maps() {
    let mut runner = proptest::test_runner::TestRunner::default();
    runner
        .run(&(0..5usize, unimodular()), |(idx, u)| {
            let fano = catalog()[idx].fano.transform(&u);
            let generic = DivisorSupport::generic(&fano, 1).unwrap();
            let report = stability_threshold(&fano, &generic).unwrap();
            prop_assert_eq!(report.r_bar, r_invariant(&fano).unwrap());
            Ok(())
        })
        .unwrap();
}
