//! Integral group rings of `G_M = (Z/M)^* / {±1}` and their augmentation
//! filtrations.

mod abelian;
mod characters;
mod element;
mod filtration;
mod galois;

pub use abelian::AbelianGroup;
pub use characters::{Character, CharacterValue};
pub use element::{project, CoefficientRing, GroupRingElement};
pub use filtration::{augmentation_order, AugmentationFiltration, OrderRing, VanishingOrder, DEFAULT_R_MAX};
pub use galois::GaloisGroup;

/// `G_M` for `M >= 3`.
pub fn galois_group(modulus: u64) -> crate::Result<GaloisGroup> {
    GaloisGroup::new(modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Rational;

    #[test]
    fn small_galois_groups() {
        assert_eq!(galois_group(3).unwrap().order(), 1);
        let g5 = galois_group(5).unwrap();
        assert_eq!(g5.invariants(), &[2]);
        assert_eq!(g5.generator_residues(), &[2]);
        let g16 = galois_group(16).unwrap();
        assert_eq!(g16.order(), 4);
        assert_eq!(g16.invariants(), &[4]);
        assert_eq!(galois_group(24).unwrap().invariants(), &[2, 2]);
        assert!(matches!(galois_group(2), Err(crate::Error::ModulusTooSmall(2))));
    }

    #[test]
    fn sigma_basics() {
        let g5 = galois_group(5).unwrap();
        assert_eq!(g5.sigma(4).unwrap(), g5.one());
        let s2 = g5.sigma(2).unwrap();
        assert_eq!(&s2 * &s2, g5.one());
        for m in 3..40 {
            let g = galois_group(m).unwrap();
            assert_eq!(g.sigma(m as i64 - 1).unwrap(), g.one());
        }
        assert!(matches!(g5.sigma(10), Err(crate::Error::NotAUnit { .. })));
        let x = &g5.one().scale(&Rational::from_integer(3.into())) + &s2.scale(&Rational::from_integer(5.into()));
        assert_eq!(x.involution(), x);
        assert_eq!(g5.dump(&x), "5; 1:3, 2:5");
        assert_eq!(GaloisGroup::parse_dump("5; 1:3, 2:5").unwrap().1, x);
    }

    #[test]
    fn projections() {
        let g15 = galois_group(15).unwrap();
        let g5 = galois_group(5).unwrap();
        let g3 = galois_group(3).unwrap();
        assert_eq!(project(&g15, &g5, &g15.sigma(2).unwrap()).unwrap(), g5.sigma(2).unwrap());
        let x = GroupRingElement::from_i64(g15.group(), &[1, -4, 7, 2]);
        let p = project(&g15, &g3, &x).unwrap();
        assert_eq!(p.coefficients(), &[Rational::from_integer(6.into())]);
        assert!(matches!(project(&g5, &g15, &g5.one()), Err(crate::Error::NotADivisor { .. })));
    }

    #[test]
    fn order_examples() {
        let g7 = galois_group(7).unwrap();
        let zero = g7.zero();
        assert_eq!(augmentation_order(&zero, OrderRing::Integers, 20).unwrap(), VanishingOrder::Zero);
        let gen = g7.sigma(g7.generator_residues()[0] as i64).unwrap();
        let x = &gen - &g7.one();
        assert_eq!(augmentation_order(&x, OrderRing::Integers, 20).unwrap(), VanishingOrder::Finite(1));
        assert_eq!(augmentation_order(&g7.one(), OrderRing::Integers, 20).unwrap(), VanishingOrder::Finite(0));
        let g5 = galois_group(5).unwrap();
        let y = (&g5.sigma(2).unwrap() - &g5.one()).scale(&Rational::from_integer(2.into()));
        assert_eq!(augmentation_order(&y, OrderRing::Integers, 20).unwrap(), VanishingOrder::Finite(2));
        assert_eq!(
            augmentation_order(&y, OrderRing::Rationals, 20).unwrap(),
            VanishingOrder::Stabilized { at: 1 }
        );
        let half = y.scale(&Rational::new(1.into(), 4.into()));
        assert_eq!(augmentation_order(&half, OrderRing::Integers, 20), Err(crate::Error::NotInRing));
    }

    #[test]
    fn character_counts() {
        let g5 = galois_group(5).unwrap();
        let chars = g5.characters();
        assert_eq!(chars.len(), 2);
        let x = GroupRingElement::from_i64(g5.group(), &[3, 5]);
        assert!((chars[0].evaluate(&x).re - 8.0).abs() < 1e-12);
        assert!((chars[1].evaluate(&x).re + 2.0).abs() < 1e-12);
    }
}
