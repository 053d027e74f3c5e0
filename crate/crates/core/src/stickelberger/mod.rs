//! Modular elements `Theta_M` and the relations they satisfy.
//!
//! Conventions that differ between formulations (`sigma_l` against
//! `sigma_l^{-1}`, the sign in the tower relation) are not assumed: every
//! oriented check accepts an [`Orientation`], and [`pin_orientations`]
//! fixes them once on small cases where exactly one choice can hold.

mod relations;
mod theta;

pub use relations::{
    check_functional_equation, check_mazur_tate, check_norm_coprime, check_norm_dividing, check_parity, parity_sign,
    check_vanishing_bound, ring_name, Orientation, RelationReport, Verdict,
};
pub use theta::{s_m_set, theta, theta_element, ThetaElement};

use crate::curve::CurveData;
use crate::error::{Error, Result};
use crate::maninsym::RationalPeriodMap;

/// One orientation per oriented relation family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PinnedOrientations {
    /// Exponent `e` in `(a_l - sigma_l^e)` for `l | N`.
    pub bad_prime: Orientation,
    /// Sign of the lower term in the tower relation.
    pub dividing: Orientation,
    /// Exponent `e` in `Theta^∨ = -eps_N sigma_N^e Theta`.
    pub functional_equation: Orientation,
}

/// Pinning cases, all on the level-11 curve.
pub const PIN_BAD_PRIME: (u64, u64) = (7, 11);
pub const PIN_DIVIDING: (u64, u64) = (5, 3);
pub const PIN_FUNCTIONAL_EQUATION: u64 = 7;

fn pick(name: &str, direct: bool, inverse: bool) -> Result<Orientation> {
    match (direct, inverse) {
        (true, false) => Ok(Orientation::Direct),
        (false, true) => Ok(Orientation::Inverse),
        (true, true) => Err(Error::InconsistentInput(alloc::format!("{name}: pinning case is degenerate"))),
        (false, false) => Err(Error::InconsistentInput(alloc::format!("{name}: no orientation holds"))),
    }
}

/// Determines the orientations from the pinning cases, using a curve of
/// conductor 11 and its period map.
pub fn pin_orientations(curve: &CurveData, map: &RationalPeriodMap) -> Result<PinnedOrientations> {
    if curve.conductor() != 11 {
        return Err(Error::InconsistentInput("pinning uses the conductor-11 curve".into()));
    }
    let holds = |r: &RelationReport| r.verdict == Verdict::ExactEqual;

    let (m, l) = PIN_BAD_PRIME;
    let d = check_norm_coprime(curve, map, m, l, Orientation::Direct)?;
    let i = check_norm_coprime(curve, map, m, l, Orientation::Inverse)?;
    let bad_prime = pick("bad prime", holds(&d), holds(&i))?;

    let (m, l) = PIN_DIVIDING;
    let d = check_norm_dividing(curve, map, m, l, 1, Orientation::Direct)?;
    let i = check_norm_dividing(curve, map, m, l, 1, Orientation::Inverse)?;
    let dividing = pick("tower", holds(&d), holds(&i))?;

    let t = theta(curve, map, PIN_FUNCTIONAL_EQUATION)?;
    let eps = map.fricke_eigenvalue()?;
    let d = check_functional_equation(&t, 11, eps, Orientation::Direct)?;
    let i = check_functional_equation(&t, 11, eps, Orientation::Inverse)?;
    let functional_equation = pick("functional equation", holds(&d), holds(&i))?;

    Ok(PinnedOrientations { bad_prime, dividing, functional_equation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::fixtures;
    use crate::groupring::{augmentation_order, OrderRing, VanishingOrder};
    use crate::maninsym::{build_space, cut_eigenspace};

    fn e11() -> (CurveData, RationalPeriodMap) {
        let c = fixtures::e11();
        let m = cut_eigenspace(&build_space(11), &c).unwrap();
        (c, m)
    }

    #[test]
    fn theta_at_five() {
        let (c, map) = e11();
        let t = theta(&c, &map, 5).unwrap();
        assert_eq!(t.dump().lines().count(), 1);
        assert!(t.split_primes.is_empty());
        assert!(matches!(theta(&c, &map, 2), Err(Error::ModulusTooSmall(2))));
        assert_eq!(s_m_set(&c, 33).unwrap(), [11]);
    }

    #[test]
    fn pinned_orientations() {
        let (c, map) = e11();
        let p = pin_orientations(&c, &map).unwrap();
        assert_eq!(p.bad_prime, Orientation::Direct);
        assert_eq!(p.dividing, Orientation::Inverse);
        assert_eq!(p.functional_equation, Orientation::Direct);
    }

    #[test]
    fn split_prime_forces_vanishing() {
        let (c, map) = e11();
        for m in [22u64, 33, 44, 55, 77] {
            let t = theta(&c, &map, m).unwrap();
            let ord = augmentation_order(&t.element, OrderRing::Integers, 6).unwrap();
            assert_eq!(check_vanishing_bound(&t, ord).verdict, Verdict::Holds, "M={m} ord={ord}");
            assert_ne!(ord, VanishingOrder::Finite(0));
        }
    }
}
