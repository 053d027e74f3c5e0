use proptest::prelude::*;
use std::sync::OnceLock;
use stickel_core::arith;
use stickel_core::curve::{count_points_exhaustive, fixtures, CurveData};

#[test]
fn point_counts_match_exhaustive_enumeration() {
    for e in fixtures::battery().iter().chain([fixtures::e36()].iter()) {
        let c: Vec<i64> = e.coefficients().iter().map(|a| i64::try_from(a).unwrap()).collect();
        for p in arith::primes_up_to(200) {
            let red: [u64; 5] = core::array::from_fn(|i| c[i].rem_euclid(p as i64) as u64);
            assert_eq!(e.count_points(p), count_points_exhaustive(red, p), "{} p={p}", e.label());
        }
    }
}

#[test]
fn trace_of_frobenius_lies_in_hasse_interval() {
    let e = fixtures::e389();
    for (p, ap) in e.ap_table(3000).unwrap() {
        assert!((ap * ap) as u64 <= 4 * p, "p={p} a_p={ap}");
    }
}

static E37_AN: OnceLock<Vec<i64>> = OnceLock::new();
static E11_AN: OnceLock<Vec<i64>> = OnceLock::new();

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn an_is_multiplicative(m in 1usize..60, n in 1usize..60) {
        prop_assume!(arith::gcd(m as u64, n as u64) == 1);
        let an = E37_AN.get_or_init(|| fixtures::e37().an_table(3600).unwrap());
        prop_assert_eq!(an[m * n], an[m] * an[n]);
    }

    #[test]
    fn hecke_recursion_at_good_primes(idx in 0usize..4, k in 1u32..5) {
        let p = [2u64, 3, 5, 7][idx];
        let an = E11_AN.get_or_init(|| fixtures::e11().an_table(7usize.pow(5)).unwrap());
        let pk = p.pow(k) as usize;
        let expect = an[p as usize] * an[pk] - p as i64 * an[pk / p as usize];
        prop_assert_eq!(an[pk * p as usize], expect);
    }

    #[test]
    fn wrong_conductor_is_rejected(extra in prop::sample::select(vec![2u64, 3, 5, 7, 13])) {
        for e in fixtures::battery() {
            let n = e.conductor() * extra;
            prop_assert!(CurveData::new(e.coefficients().clone(), n, None, None).is_err());
        }
    }
}
