use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stickel_core::arith;
use stickel_core::groupring::{
    augmentation_order, galois_group, project, AbelianGroup, AugmentationFiltration, Character,
    GroupRingElement, OrderRing, VanishingOrder,
};
use stickel_core::linalg::Rational;

mod support;

use support::oracle::*;

#[test]
fn augmentation_order_matches_oracle_on_small_groups() {
    const R_MAX: u32 = 5;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut seen = BTreeMap::new();
    for inv in small_groups() {
        let group = Arc::new(AbelianGroup::new(&inv));
        let layers = oracle_layers(&group, R_MAX as usize + 2);
        let mut filt = AugmentationFiltration::new(&group, OrderRing::Integers);
        for _ in 0..100 {
            let x = random_element(&group, &mut rng);
            let coeffs = x.integer_coefficients().unwrap();
            let expect = oracle_order(&layers, &coeffs, R_MAX);
            assert_eq!(filt.order(&x, R_MAX).unwrap(), expect, "group {inv:?}, x = {coeffs:?}");
            *seen.entry(format!("{expect}")).or_insert(0) += 1;
        }
    }
    for kind in ["0", "1", "2", "3", "zero", ">=6"] {
        assert!(seen.contains_key(kind), "no sample with order {kind}: {seen:?}");
    }
}

#[test]
fn localized_filtration_stabilizes_only_when_order_is_inverted() {
    let x = |g: &Arc<AbelianGroup>| &GroupRingElement::basis(g, 1) - &GroupRingElement::one(g);
    let z2 = Arc::new(AbelianGroup::new(&[2]));
    assert_eq!(
        augmentation_order(&x(&z2), OrderRing::half_integers(), 10).unwrap(),
        VanishingOrder::Stabilized { at: 1 }
    );
    let z6 = Arc::new(AbelianGroup::new(&[6]));
    let mut filt = AugmentationFiltration::new(&z6, OrderRing::half_integers());
    for r in 1..6 {
        assert_ne!(filt.layer(r).clone(), filt.layer(r + 1).clone());
    }
    let mut filt = AugmentationFiltration::new(&z6, OrderRing::Localized(vec![2, 3]));
    assert_eq!(filt.order(&x(&z6), 10).unwrap(), VanishingOrder::Stabilized { at: 1 });
    // Over Z the filtration never stabilizes for a nontrivial group.
    let mut filt = AugmentationFiltration::new(&z6, OrderRing::Integers);
    assert_eq!(filt.order(&x(&z6), 8).unwrap(), VanishingOrder::Finite(1));
    filt.layer(9);
    assert_eq!(filt.stabilized_at(), None);
}

#[test]
fn order_two_powers_are_scaled_copies() {
    let group = Arc::new(AbelianGroup::new(&[2]));
    let mut filt = AugmentationFiltration::new(&group, OrderRing::Integers);
    let sigma_minus_one = GroupRingElement::from_i64(&group, &[-1, 1]);
    for n in 1..=6u32 {
        let k = BigInt::from(2).pow(n - 1);
        let gen = sigma_minus_one.scale(&Rational::from_integer(k.clone()));
        assert!(filt.contains(&gen, n as usize).unwrap());
        assert_eq!(filt.layer(n as usize).basis(), &[vec![k]]);
    }
}

#[test]
fn rational_filtration_stabilizes_immediately() {
    for m in [5u64, 7, 13, 16, 21] {
        let g = galois_group(m).unwrap();
        let gen = g.sigma(g.generator_residues()[0] as i64).unwrap();
        let x = &gen - &g.one();
        assert_eq!(
            augmentation_order(&x, OrderRing::Rationals, 20).unwrap(),
            VanishingOrder::Stabilized { at: 1 }
        );
    }
}

fn order_histogram_brute(m: u64) -> BTreeMap<u64, usize> {
    let units: Vec<u64> = (1..m).filter(|&a| arith::gcd(a, m) == 1 && a <= m - a).collect();
    let canon = |a: u64| a.min(m - a);
    let mut hist = BTreeMap::new();
    for &a in &units {
        let mut k = 1;
        let mut x = a;
        while canon(x) != 1 {
            x = x * a % m;
            k += 1;
        }
        *hist.entry(k).or_insert(0) += 1;
    }
    hist
}

#[test]
fn galois_structure_matches_multiplication_table() {
    for m in 3..=200u64 {
        let g = galois_group(m).unwrap();
        assert_eq!(g.order() as u64, arith::totient(m) / 2);
        let ab = g.group();
        let mut hist = BTreeMap::new();
        for e in 0..ab.order() {
            *hist.entry(ab.element_order(e)).or_insert(0) += 1;
        }
        assert_eq!(hist, order_histogram_brute(m), "M={m}");
        // The residue map is a homomorphism.
        for a in 1..m.min(40) {
            for b in 1..m.min(40) {
                if arith::gcd(a * b, m) == 1 {
                    let lhs = g.element_of((a * b % m) as i64).unwrap();
                    let rhs = ab.mul(g.element_of(a as i64).unwrap(), g.element_of(b as i64).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
        for (i, &r) in g.generator_residues().iter().enumerate() {
            let mut e = vec![0; ab.rank()];
            e[i] = 1;
            assert_eq!(g.element_of(r as i64).unwrap(), ab.element(&e));
        }
    }
}

#[test]
fn character_orthogonality_on_g16() {
    let g = galois_group(16).unwrap();
    let chars = g.characters();
    assert_eq!(chars.len(), 4);
    for e in 0..g.order() {
        let s: num_complex::Complex64 = chars.iter().map(|c| c.value(e)).sum();
        let expect = if e == 0 { g.order() as f64 } else { 0.0 };
        assert!((s.re - expect).abs() < 1e-10 && s.im.abs() < 1e-10);
    }
    for a in &chars {
        for b in &chars {
            let s: num_complex::Complex64 = (0..g.order()).map(|e| a.value(e) * b.value(e).conj()).sum();
            let expect = if a == b { 4.0 } else { 0.0 };
            assert!((s - expect).norm() < 1e-10);
        }
    }
}

#[test]
fn trivial_character_is_augmentation() {
    let g = galois_group(21).unwrap();
    let x = GroupRingElement::from_i64(g.group(), &[3, -1, 4, 1, -5, 9]);
    let triv = Character::trivial(g.group());
    assert!((triv.evaluate(&x).re - 11.0).abs() < 1e-12);
}

#[test]
fn conductors_of_characters_mod_15() {
    let g = galois_group(15).unwrap();
    let mut conductors: Vec<u64> = g.characters().iter().map(|c| g.conductor(c)).collect();
    conductors.sort();
    // Even characters mod 15: trivial, the quadratic lifted from mod 5, and two primitive ones.
    assert_eq!(conductors, vec![1, 5, 15, 15]);
}

fn group_and_pair() -> impl Strategy<Value = (u64, Vec<i64>, Vec<i64>)> {
    prop::sample::select(vec![5u64, 7, 9, 13, 15, 16, 20, 21, 24]).prop_flat_map(|m| {
        let n = (arith::totient(m) / 2) as usize;
        (Just(m), prop::collection::vec(-9i64..9, n), prop::collection::vec(-9i64..9, n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn evaluation_is_multiplicative((m, a, b) in group_and_pair()) {
        let g = galois_group(m).unwrap();
        let x = GroupRingElement::from_i64(g.group(), &a);
        let y = GroupRingElement::from_i64(g.group(), &b);
        let xy = &x * &y;
        for chi in g.characters() {
            let lhs = chi.evaluate(&xy);
            let rhs = chi.evaluate(&x) * chi.evaluate(&y);
            prop_assert!((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
        }
    }

    #[test]
    fn involution_properties((m, a, _b) in group_and_pair()) {
        let g = galois_group(m).unwrap();
        let x = GroupRingElement::from_i64(g.group(), &a);
        prop_assert_eq!(x.involution().involution(), x.clone());
        prop_assert_eq!(x.involution().augmentation(), x.augmentation());
        for d in arith::divisors(m).into_iter().filter(|&d| d >= 3) {
            let t = galois_group(d).unwrap();
            let p = project(&g, &t, &x).unwrap();
            prop_assert_eq!(p.augmentation(), x.augmentation());
            prop_assert_eq!(project(&g, &t, &x.involution()).unwrap(), p.involution());
        }
        let mut filt = AugmentationFiltration::new(g.group(), OrderRing::Integers);
        let ord = filt.order(&x, 4).unwrap();
        prop_assert_eq!(filt.order(&x.involution(), 4).unwrap(), ord);
    }

    #[test]
    fn powers_are_ideals((m, a, _b) in group_and_pair(), r in 1usize..4, shift in 0usize..12) {
        let g = galois_group(m).unwrap();
        let one = g.one();
        let gen = g.sigma(g.generator_residues()[0] as i64).unwrap();
        let mut x = GroupRingElement::from_i64(g.group(), &a);
        for _ in 0..r {
            x = &x * &(&gen - &one);
        }
        let mut filt = AugmentationFiltration::new(g.group(), OrderRing::Integers);
        prop_assert!(filt.contains(&x, r).unwrap());
        let h = shift % g.order();
        prop_assert!(filt.contains(&x.shift(h), r).unwrap());
    }
}
