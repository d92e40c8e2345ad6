use hkinv::degeneration::{effectivity_ratio, pell_spherical_classes, WallPoint};
use hkinv::fujiki::{specialized_integral, AbsoluteClass};
use hkinv::hodge_ring::{HodgeRing, Monomial};
use hkinv::lagrangian::{fixed_locus_invariants, project_lagrangian_class};
use hkinv::mukai::MukaiVector;
use hkinv::parallel::{chern_sweep, fujiki_sweep, pell_scan, Execution};
use hkinv::poly::ParametricScalar;
use hkinv::rational::{frac, int};
use hkinv::Rational;
use proptest::prelude::*;

fn fujiki_at(alpha: AbsoluteClass, q: &Rational) -> Rational {
    specialized_integral(alpha, &ParametricScalar::constant(q.clone()))
        .eval(q)
        .unwrap()
}

#[test]
fn ring_top_degree_matches_fujiki() {
    for q in [int(4), frac(1, 3), frac(22, 7)] {
        let ring = HodgeRing::at(&q).unwrap();
        let top = |h, c2| {
            ring.integrate(&ring.reduce(Monomial::new(h, c2, 0)).unwrap())
                .unwrap()
                .eval(&q)
                .unwrap()
        };
        assert_eq!(top(6, 0), fujiki_at(AbsoluteClass::One, &q));
        assert_eq!(top(4, 1), fujiki_at(AbsoluteClass::C2, &q));
        assert_eq!(top(2, 2), fujiki_at(AbsoluteClass::C2Squared, &q));
    }
}

/// `χ(O)` by hand: the two pairings of `[W]` come straight from Fujiki
/// constants, no ring reduction involved.
#[test]
fn fixed_locus_from_fujiki_constants() {
    let (deg, q) = (int(720), int(4));
    let (a, b) = project_lagrangian_class(&deg, &q).unwrap();
    let h3_w = &a * fujiki_at(AbsoluteClass::One, &q) + &b * fujiki_at(AbsoluteClass::C2, &q);
    let hc2_w =
        &a * fujiki_at(AbsoluteClass::C2, &q) + &b * fujiki_at(AbsoluteClass::C2Squared, &q);
    assert_eq!(h3_w, deg);
    assert_eq!(hc2_w, int(240));
    let c1c2 = -(int(4) * &h3_w + &hc2_w);
    let inv = fixed_locus_invariants(&deg, &q).unwrap();
    assert_eq!(inv.c1c2, c1c2);
    assert_eq!(inv.chi_o, c1c2 / int(24));
    assert_eq!(inv.k_cubed, int(8) * h3_w);
}

#[test]
fn pell_classes_on_the_wall() {
    let p = WallPoint::center();
    let (v, s) = (MukaiVector::V, MukaiVector::S);
    for sol in pell_spherical_classes(100_000) {
        let u = sol.x * v + sol.y * s;
        assert_eq!(u.square(), -2);
        let ratio = effectivity_ratio(&u, &v, &p).unwrap();
        assert_eq!(ratio, int(sol.x) + frac(sol.y, 2));
        if sol.x < 0 {
            assert!(ratio < int(0), "{sol:?}");
        }
    }
}

#[test]
fn pell_scan_to_a_million() {
    assert_eq!(
        pell_scan(Execution::default(), 1_000_000),
        pell_spherical_classes(1_000_000)
    );
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..5000, 1i64..500).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sweeps_agree_across_modes(qs in proptest::collection::vec(positive_rational(), 1..6)) {
        prop_assert_eq!(
            chern_sweep(Execution::Sequential, &qs).unwrap(),
            chern_sweep(Execution::Parallel, &qs).unwrap()
        );
        prop_assert!(fujiki_sweep(Execution::Parallel, &qs).unwrap().into_iter().all(|ok| ok));
    }

    #[test]
    fn lagrangian_pairings_scale(q in positive_rational(), d in -5000i64..5000) {
        let (a, b) = project_lagrangian_class(&int(d), &q).unwrap();
        let h3_w = &a * fujiki_at(AbsoluteClass::One, &q) + &b * fujiki_at(AbsoluteClass::C2, &q);
        prop_assert_eq!(h3_w, int(d));
    }
}
