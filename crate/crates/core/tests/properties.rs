//! Property tests: algebraic invariants that must hold for all inputs, with
//! the sequence solver checked against a brute-force enumeration oracle.

use std::cmp::min;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::ToPrimitive;
use proptest::prelude::*;

use carpetcalc_core::{
    CarpetSpec, ChowClass, CohInfo, Error, HirzebruchDivisor, Interval, JoinThreefold, Lattice2,
    ScrollSpec, SesProblem, SplitBundle,
};

fn interval_strategy(max: i64) -> impl Strategy<Value = Interval> {
    (0..=max)
        .prop_flat_map(move |lo| (Just(lo), lo..=max))
        .prop_map(|(lo, hi)| Interval::new(lo, hi).expect("ordered bounds"))
}

fn cohinfo_strategy(max: i64) -> impl Strategy<Value = CohInfo> {
    (
        interval_strategy(max),
        interval_strategy(max),
        interval_strategy(max),
    )
        .prop_flat_map(|(h0, h1, h2)| {
            let lo = (h0.lo() - h1.hi() + h2.lo()).to_i64().expect("small");
            let hi = (h0.hi() - h1.lo() + h2.hi()).to_i64().expect("small");
            (Just([h0, h1, h2]), lo..=hi)
        })
        .prop_map(|(h, chi)| CohInfo::new(h, chi).expect("chi in the feasible band"))
}

/// Short exact sequence with fully random end slots and a random middle box;
/// the middle chi is forced by additivity and may or may not be attainable.
fn ses_strategy() -> impl Strategy<Value = SesProblem> {
    (cohinfo_strategy(6), cohinfo_strategy(6))
        .prop_flat_map(|(a, c)| {
            (
                Just(a),
                Just(c),
                interval_strategy(12),
                interval_strategy(12),
                interval_strategy(12),
            )
        })
        .prop_filter_map("middle box cannot attain the forced chi", |(a, c, b0, b1, b2)| {
            let chi_b = a.chi() + c.chi();
            let b = CohInfo::new([b0, b1, b2], chi_b).ok()?;
            Some(SesProblem::new(a, b, c).expect("chi additive by construction"))
        })
}

fn bounds(iv: &Interval) -> (i64, i64) {
    (
        iv.lo().to_i64().expect("small"),
        iv.hi().to_i64().expect("small"),
    )
}

/// Enumerate every dimension assignment satisfying the long exact sequence
/// directly from the definition, returning the coordinate hull and one
/// witness assignment (a0, a1, a2, b0, b1, b2, c0, c1, c2).
fn oracle(p: &SesProblem) -> Option<([(i64, i64); 9], [i64; 9])> {
    let (a, b, c) = (p.left(), p.middle(), p.right());
    let chi_a = a.chi().to_i64().expect("small");
    let chi_c = c.chi().to_i64().expect("small");
    let contains = |iv: &Interval, v: i64| {
        let (lo, hi) = bounds(iv);
        lo <= v && v <= hi
    };
    let mut hull: Option<([(i64, i64); 9], [i64; 9])> = None;
    let (a0_lo, a0_hi) = bounds(a.h(0));
    let (a1_lo, a1_hi) = bounds(a.h(1));
    let (c0_lo, c0_hi) = bounds(c.h(0));
    let (c1_lo, c1_hi) = bounds(c.h(1));
    for a0 in a0_lo..=a0_hi {
        for a1 in a1_lo..=a1_hi {
            let a2 = chi_a - a0 + a1;
            if !contains(a.h(2), a2) {
                continue;
            }
            for c0 in c0_lo..=c0_hi {
                for c1 in c1_lo..=c1_hi {
                    let c2 = chi_c - c0 + c1;
                    if !contains(c.h(2), c2) {
                        continue;
                    }
                    for d0 in 0..=min(c0, a1) {
                        for d1 in 0..=min(c1, a2) {
                            let b0 = a0 + c0 - d0;
                            let b1 = a1 + c1 - d0 - d1;
                            let b2 = a2 + c2 - d1;
                            if !contains(b.h(0), b0)
                                || !contains(b.h(1), b1)
                                || !contains(b.h(2), b2)
                            {
                                continue;
                            }
                            let point = [a0, a1, a2, b0, b1, b2, c0, c1, c2];
                            match &mut hull {
                                None => hull = Some((point.map(|v| (v, v)), point)),
                                Some((ranges, _)) => {
                                    for (slot, v) in ranges.iter_mut().zip(point) {
                                        slot.0 = slot.0.min(v);
                                        slot.1 = slot.1.max(v);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    hull
}

fn slot_bounds(p: &SesProblem) -> [(i64, i64); 9] {
    let mut out = [(0, 0); 9];
    for (slot, info) in [p.left(), p.middle(), p.right()].into_iter().enumerate() {
        for degree in 0..3 {
            out[3 * slot + degree] = bounds(info.h(degree));
        }
    }
    out
}

proptest! {
    #[test]
    fn split_bundle_euler_characteristic(degrees in prop::collection::vec(-10i64..=10, 0..=6)) {
        let bundle = SplitBundle::new(degrees.clone());
        prop_assert_eq!(bundle.h0() - bundle.h1(), bundle.euler_char());
        let expected: i64 = degrees.iter().map(|d| d + 1).sum();
        prop_assert_eq!(bundle.euler_char(), BigInt::from(expected));
    }

    #[test]
    fn split_bundle_serre_duality(degrees in prop::collection::vec(-10i64..=10, 0..=6)) {
        let bundle = SplitBundle::new(degrees);
        let dual = bundle.serre_dual();
        prop_assert_eq!(dual.h0(), bundle.h1());
        prop_assert_eq!(dual.h1(), bundle.h0());
        prop_assert_eq!(dual.serre_dual(), bundle);
    }

    #[test]
    fn split_bundle_direct_sum(
        left in prop::collection::vec(-8i64..=8, 0..=4),
        right in prop::collection::vec(-8i64..=8, 0..=4),
    ) {
        let l = SplitBundle::new(left);
        let r = SplitBundle::new(right);
        let sum = l.direct_sum(&r);
        prop_assert_eq!(sum.rank(), l.rank() + r.rank());
        prop_assert_eq!(sum.h0(), l.h0() + r.h0());
        prop_assert_eq!(sum.h1(), l.h1() + r.h1());
        prop_assert_eq!(sum.euler_char(), l.euler_char() + r.euler_char());
    }

    #[test]
    fn hirzebruch_cohomology_identities(n in 0i64..=8, x in -12i64..=12, y in -12i64..=12) {
        let d = HirzebruchDivisor::new(n, x, y).expect("nonnegative index");
        let coh = d.cohomology();
        // chi agrees with the intersection-theoretic polynomial
        prop_assert_eq!(coh.chi(), d.riemann_roch_chi());
        // h0 agrees with a direct lattice-point count
        prop_assert_eq!(coh.h0.clone(), d.h0_lattice_count());
        // duality swaps the outer dimensions
        let dual = d.serre_dual().cohomology();
        prop_assert_eq!(dual.h0, coh.h2);
        prop_assert_eq!(dual.h1, coh.h1);
        prop_assert_eq!(dual.h2, coh.h0);
        // a line bundle never has both derived images along the ruling
        prop_assert!(d.pushforward().is_zero() || d.r1_pushforward().is_zero());
    }

    #[test]
    fn solver_matches_brute_force(problem in ses_strategy()) {
        match (problem.solve(), oracle(&problem)) {
            (Ok(solved), Some((hull, witness))) => {
                prop_assert_eq!(slot_bounds(&solved), hull);
                // idempotent
                let again = solved.solve().expect("solved problems stay solvable");
                prop_assert_eq!(&again, &solved);
                // never widens
                let before = slot_bounds(&problem);
                let after = slot_bounds(&solved);
                for (b, a) in before.iter().zip(after) {
                    prop_assert!(b.0 <= a.0 && a.1 <= b.1);
                }
                // any single witness assignment is a fixed point inside the hull
                let exact = SesProblem::new(
                    CohInfo::exact(witness[0], witness[1], witness[2]),
                    CohInfo::exact(witness[3], witness[4], witness[5]),
                    CohInfo::exact(witness[6], witness[7], witness[8]),
                ).expect("witness has additive chi");
                let pinned = exact.solve().expect("witness is feasible");
                prop_assert_eq!(slot_bounds(&pinned), slot_bounds(&exact));
                for ((lo, hi), v) in after.iter().zip(witness) {
                    prop_assert!(*lo <= v && v <= *hi);
                }
            }
            (Err(Error::Contradiction { .. }), None) => {}
            (solved, hull) => {
                return Err(TestCaseError::fail(format!(
                    "solver and oracle disagree: {solved:?} vs {hull:?}"
                )));
            }
        }
    }

    #[test]
    fn join_ring_axioms(
        coeffs in prop::collection::vec(-3i64..=3, 12),
        n0 in 1i64..=9,
        n1 in 1i64..=9,
    ) {
        let class = |k: &[i64]| {
            ChowClass::one().times(k[0])
                + ChowClass::alpha().times(k[1])
                + ChowClass::beta().times(k[2])
                + ChowClass::hyperplane().times(k[3])
        };
        let x = JoinThreefold::new(n0, n1).expect("positive degrees");
        let (u, v, w) = (class(&coeffs[0..4]), class(&coeffs[4..8]), class(&coeffs[8..12]));
        let uv = x.multiply(&u, &v).expect("divisor products fit");
        let vw = x.multiply(&v, &w).expect("divisor products fit");
        // commutative and associative
        prop_assert_eq!(&x.multiply(&v, &u).expect("fits"), &uv);
        prop_assert_eq!(
            x.multiply(&uv, &w).expect("fits"),
            x.multiply(&u, &vw).expect("fits")
        );
        // distributes over addition
        let vpw = v.clone() + w.clone();
        prop_assert_eq!(
            x.multiply(&u, &vpw).expect("fits"),
            x.multiply(&u, &v).expect("fits") + x.multiply(&u, &w).expect("fits")
        );
    }

    #[test]
    fn join_degree_matches_segre_class(n0 in 1i64..=40, n1 in 1i64..=40) {
        let x = JoinThreefold::new(n0, n1).expect("positive degrees");
        // deg = c1(O(n0,0) + O(0,n1))^2 - c2 on the base: 2 n0 n1 - n0 n1
        prop_assert_eq!(x.image_degree().expect("integer degree"), BigInt::from(n0 * n1));
        let report = x.fano_report().expect("consistent positivity");
        let expected = BigRational::new(BigInt::from(2), BigInt::from(n0))
            + BigRational::new(BigInt::from(2), BigInt::from(n1));
        prop_assert_eq!(report.lambda, expected);
        prop_assert!(x.anticanonical_carpet_identity());
    }

    #[test]
    fn lattice_pairing_is_bilinear(
        g00 in -9i64..=9,
        g01 in -9i64..=9,
        g11 in -9i64..=9,
        u in prop::array::uniform2(-9i64..=9),
        v in prop::array::uniform2(-9i64..=9),
    ) {
        let lat = Lattice2::new(
            [
                [BigInt::from(g00), BigInt::from(g01)],
                [BigInt::from(g01), BigInt::from(g11)],
            ],
            ["u", "v"],
        );
        let ub = u.map(BigInt::from);
        let vb = v.map(BigInt::from);
        prop_assert_eq!(lat.inner(&ub, &vb), lat.inner(&vb, &ub));
        let sum = [&ub[0] + &vb[0], &ub[1] + &vb[1]];
        prop_assert_eq!(
            lat.self_int(&sum),
            lat.self_int(&ub) + 2 * lat.inner(&ub, &vb) + lat.self_int(&vb)
        );
    }

    #[test]
    fn hyperelliptic_section_lattice(g in 2i64..=200) {
        let lat = Lattice2::hyperelliptic_section(g).expect("genus at least 2");
        prop_assert_eq!(lat.det(), BigInt::from(-4));
    }

    #[test]
    fn scroll_normal_geometry(a in 1i64..=16, offset in 0i64..=15) {
        let b = 1 + offset % a;
        let s = ScrollSpec::new(a, b.min(a)).expect("valid scroll");
        let m = BigInt::from(s.ambient_dim() + 1);
        prop_assert_eq!(
            s.normal_bundle_cohomology().expect("collapses").h0,
            &m * &m - 7
        );
        prop_assert_eq!(s.carpet_count().expect("one carpet"), BigInt::from(1));
        let tangent = s.tangent_cohomology().expect("chi 6");
        prop_assert_eq!(tangent.chi(), &BigInt::from(6));
    }

    #[test]
    fn carpet_tangent_data(a in 1i64..=16, offset in 0i64..=15) {
        let b = 1 + offset % a;
        let carpet = CarpetSpec::new(a, b.min(a)).expect("valid carpet");
        let g = BigInt::from(carpet.genus());
        let report = carpet.smoothness().expect("consistent envelope");
        prop_assert_eq!(report.chi_normal, (&g + 1) * (&g + 1) + 18);
        prop_assert_eq!(report.smooth_point, a - b.min(a) <= 2);
        prop_assert_eq!(
            report.h1,
            Interval::new(
                report.h1_omega_minus2.clone(),
                &report.h1_omega_minus2 + &report.h1_omega_dual
            )
            .expect("ordered")
        );
        let membership = carpet.component_membership().expect("classified");
        prop_assert_eq!(membership.genus, g);
        if let Some(second) = membership.second {
            prop_assert_eq!(second.divisibility, BigInt::from(2));
        }
    }
}
