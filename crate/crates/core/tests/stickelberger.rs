use num_rational::Ratio;
use std::sync::OnceLock;
use stickel_core::arith;
use stickel_core::curve::{fixtures, CurveData};
use stickel_core::groupring::{augmentation_order, GaloisGroup, OrderRing, VanishingOrder};
use stickel_core::linalg::Rational;
use stickel_core::maninsym::{self, RationalPeriodMap};
use stickel_core::stickelberger::{self as st, Orientation, PinnedOrientations, Verdict};

struct Fixture {
    curve: CurveData,
    map: RationalPeriodMap,
}

fn battery() -> &'static [Fixture] {
    static B: OnceLock<Vec<Fixture>> = OnceLock::new();
    B.get_or_init(|| {
        fixtures::battery()
            .into_iter()
            .map(|curve| {
                let map = maninsym::cut_eigenspace(&maninsym::build_space(curve.conductor()), &curve).unwrap();
                Fixture { curve, map }
            })
            .collect()
    })
}

fn fixture(level: u64) -> &'static Fixture {
    battery().iter().find(|f| f.curve.conductor() == level).unwrap()
}

fn pins() -> PinnedOrientations {
    let f = fixture(11);
    st::pin_orientations(&f.curve, &f.map).unwrap()
}

#[test]
fn theta_coefficients_are_symbol_values() {
    for f in battery() {
        for m in [3u64, 5, 8, 12, 13] {
            let t = st::theta(&f.curve, &f.map, m).unwrap();
            assert!(t.element.is_integral());
            for a in 1..m as i64 {
                if arith::gcd(a as u64, m) != 1 {
                    continue;
                }
                let g = t.group.element_of(a).unwrap();
                let direct = f.map.symbol_value(Ratio::new(a, m as i64));
                assert_eq!(*t.element.coefficient(g), Rational::from_integer(direct.into()));
            }
        }
    }
}

/// At least ten `(M, l)` pairs per curve, including a prime of bad reduction.
#[test]
fn coprime_norm_relation_on_sampled_pairs() {
    let pins = pins();
    for f in battery() {
        let n = f.curve.conductor();
        let mut pairs: Vec<(u64, u64)> = Vec::new();
        for m in 3u64..=16 {
            for l in [2u64, 3, 5, 7, 11, 13] {
                if m % l != 0 && m * l <= 200 && pairs.len() < 12 && (m + l) % 3 != 1 {
                    pairs.push((m, l));
                }
            }
        }
        pairs.push((3, n));
        pairs.push((4, n));
        assert!(pairs.len() >= 10);
        for (m, l) in pairs {
            let r = st::check_norm_coprime(&f.curve, &f.map, m, l, pins.bad_prime).unwrap();
            assert_eq!(r.verdict, Verdict::ExactEqual, "N={n} M={m} l={l}: {} vs {}", r.left, r.right);
        }
    }
}

#[test]
fn tower_relation_with_pinned_sign() {
    let pins = pins();
    for f in battery() {
        for (m, l, r) in [(5u64, 3u64, 1u32), (5, 3, 2), (3, 2, 1), (3, 2, 3), (4, 3, 1), (7, 2, 2)] {
            let rep = st::check_norm_dividing(&f.curve, &f.map, m, l, r, pins.dividing).unwrap();
            assert_eq!(rep.verdict, Verdict::ExactEqual, "N={} M'={m} l={l} r={r}", f.curve.conductor());
        }
    }
    // At a bad prime the tower has no lower term.
    let f = fixture(11);
    let rep = st::check_norm_dividing(&f.curve, &f.map, 3, 11, 1, pins.dividing).unwrap();
    assert_eq!(rep.verdict, Verdict::ExactEqual);
}

#[test]
fn functional_equation_for_coprime_moduli() {
    let pins = pins();
    for f in battery() {
        let n = f.curve.conductor();
        let eps = f.map.fricke_eigenvalue().unwrap();
        for m in 3u64..=20 {
            if arith::gcd(m, n) != 1 {
                continue;
            }
            let t = st::theta(&f.curve, &f.map, m).unwrap();
            let r = st::check_functional_equation(&t, n, eps, pins.functional_equation).unwrap();
            assert_eq!(r.verdict, Verdict::ExactEqual, "N={n} M={m}");
        }
    }
    let f = fixture(11);
    let t = st::theta(&f.curve, &f.map, 22).unwrap();
    assert!(st::check_functional_equation(&t, 11, -1, Orientation::Direct).is_err());
}

#[test]
fn order_is_invariant_under_rescaling_over_q() {
    for f in battery() {
        for m in [5u64, 7, 8, 13] {
            let t = st::theta(&f.curve, &f.map, m).unwrap();
            let ord = augmentation_order(&t.element, OrderRing::Rationals, 4).unwrap();
            let scaled = t.element.scale(&Rational::new(3.into(), 7.into()));
            assert_eq!(augmentation_order(&scaled, OrderRing::Rationals, 4).unwrap(), ord);
        }
    }
}

#[test]
fn parity_where_order_is_finite() {
    for f in battery() {
        let eps = f.map.fricke_eigenvalue().unwrap();
        let mut decided = 0;
        for m in [7u64, 9, 13, 19] {
            let t = st::theta(&f.curve, &f.map, m).unwrap();
            let ring = OrderRing::half_integers();
            let ord = augmentation_order(&t.element, ring.clone(), 6).unwrap();
            let r = st::check_parity(&t, ord, &ring, f.curve.conductor(), eps);
            assert!(r.passed(), "N={} M={m} ord={ord}", f.curve.conductor());
            decided += usize::from(r.verdict == Verdict::Holds);
        }
        assert!(decided > 0, "no finite order for N={}", f.curve.conductor());
    }
}

#[test]
fn vanishing_bound_at_split_primes() {
    let f = fixture(11);
    for m in [22u64, 33, 44, 55, 66, 77, 88, 99] {
        let t = st::theta(&f.curve, &f.map, m).unwrap();
        let ord = augmentation_order(&t.element, OrderRing::Integers, 4).unwrap();
        assert_eq!(st::check_vanishing_bound(&t, ord).verdict, Verdict::Holds, "M={m}");
    }
    // The rank-0 curve has Theta_M of order 0 when no split prime divides M,
    // as soon as the augmentation is nonzero.
    let t = st::theta(&f.curve, &f.map, 7).unwrap();
    assert_eq!(augmentation_order(&t.element, OrderRing::Integers, 4).unwrap(), VanishingOrder::Finite(0));
}

#[test]
fn projection_of_theta_is_compatible_with_groups() {
    let f = fixture(37);
    let big = GaloisGroup::new(35).unwrap();
    let t = st::theta_element(&f.map, &big);
    let small = GaloisGroup::new(5).unwrap();
    let p = stickel_core::groupring::project(&big, &small, &t).unwrap();
    assert_eq!(p.augmentation(), t.augmentation());
}

#[test]
fn parity_when_the_conductor_divides_the_modulus() {
    let f = fixture(11);
    assert_eq!(st::parity_sign(22, 11, -1), Some(-1));
    assert_eq!(st::parity_sign(5, 11, -1), Some(1));
    assert_eq!(st::parity_sign(6, 66, 1), None);
    for m in [11u64, 22, 33, 44] {
        let t = st::theta(&f.curve, &f.map, m).unwrap();
        let ring = OrderRing::half_integers();
        let ord = augmentation_order(&t.element, ring.clone(), 10).unwrap();
        let r = st::check_parity(&t, ord, &ring, 11, -1);
        assert!(r.passed(), "M={m} ord={ord}");
    }
}
