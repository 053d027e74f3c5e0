use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt::Write;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::abelian::AbelianGroup;
use super::galois::GaloisGroup;
use crate::error::{Error, Result};
use crate::linalg::Rational;

/// Coefficient ring of a group-ring element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    Integers,
    Rationals,
}

/// An element `sum_g c_g g` of `R[G]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    group: Arc<AbelianGroup>,
    coeffs: Vec<Rational>,
    ring: CoefficientRing,
}

impl GroupRingElement {
    pub fn zero(group: &Arc<AbelianGroup>) -> Self {
        Self {
            group: group.clone(),
            coeffs: alloc::vec![Rational::zero(); group.order()],
            ring: CoefficientRing::Integers,
        }
    }

    pub fn one(group: &Arc<AbelianGroup>) -> Self {
        Self::basis(group, 0)
    }

    pub fn basis(group: &Arc<AbelianGroup>, g: usize) -> Self {
        let mut x = Self::zero(group);
        x.coeffs[g] = Rational::one();
        x
    }

    pub fn from_integers(group: &Arc<AbelianGroup>, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len(), group.order());
        Self {
            group: group.clone(),
            coeffs: coeffs.into_iter().map(Rational::from_integer).collect(),
            ring: CoefficientRing::Integers,
        }
    }

    pub fn from_i64(group: &Arc<AbelianGroup>, coeffs: &[i64]) -> Self {
        Self::from_integers(group, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_rationals(group: &Arc<AbelianGroup>, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), group.order());
        Self { group: group.clone(), coeffs, ring: CoefficientRing::Rationals }
    }

    pub fn group(&self) -> &Arc<AbelianGroup> {
        &self.group
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coefficient(&self, g: usize) -> &Rational {
        &self.coeffs[g]
    }

    /// Integer coefficients, if all are integral.
    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn augmentation(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |a, c| a + c)
    }

    /// Reinterprets the element over the rationals.
    pub fn over_rationals(mut self) -> Self {
        self.ring = CoefficientRing::Rationals;
        self
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let ring = if k.is_integer() { self.ring } else { CoefficientRing::Rationals };
        Self {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
            ring,
        }
    }

    /// Image under `g ↦ g^{-1}`.
    pub fn involution(&self) -> Self {
        let mut out = Self { coeffs: alloc::vec![Rational::zero(); self.coeffs.len()], ..self.clone() };
        for (g, c) in self.coeffs.iter().enumerate() {
            out.coeffs[self.group.inv(g)] = c.clone();
        }
        out
    }

    /// Multiplication by the group element `g`.
    pub fn shift(&self, g: usize) -> Self {
        let mut out = Self { coeffs: alloc::vec![Rational::zero(); self.coeffs.len()], ..self.clone() };
        for (h, c) in self.coeffs.iter().enumerate() {
            out.coeffs[self.group.mul(g, h)] = c.clone();
        }
        out
    }

    fn join(&self, other: &Self) -> CoefficientRing {
        assert_eq!(self.group, other.group, "elements of different group rings");
        if self.ring == CoefficientRing::Integers && other.ring == CoefficientRing::Integers {
            CoefficientRing::Integers
        } else {
            CoefficientRing::Rationals
        }
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: Self) -> GroupRingElement {
        let ring = self.join(rhs);
        GroupRingElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            ring,
        }
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: Self) -> GroupRingElement {
        let ring = self.join(rhs);
        GroupRingElement {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
            ring,
        }
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement { coeffs: self.coeffs.iter().map(|c| -c).collect(), ..self.clone() }
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: Self) -> GroupRingElement {
        let ring = self.join(rhs);
        let mut coeffs = alloc::vec![Rational::zero(); self.coeffs.len()];
        for (g, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (h, b) in rhs.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                coeffs[self.group.mul(g, h)] += a * b;
            }
        }
        GroupRingElement { group: self.group.clone(), coeffs, ring }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for GroupRingElement {
            type Output = GroupRingElement;
            fn $m(self, rhs: Self) -> GroupRingElement {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl GaloisGroup {
    /// The basis element `sigma_a`.
    pub fn sigma(&self, a: i64) -> Result<GroupRingElement> {
        Ok(GroupRingElement::basis(self.group(), self.element_of(a)?))
    }

    pub fn zero(&self) -> GroupRingElement {
        GroupRingElement::zero(self.group())
    }

    pub fn one(&self) -> GroupRingElement {
        GroupRingElement::one(self.group())
    }

    /// `M; a:coeff, ...` listing every element by its smallest representative.
    pub fn dump(&self, x: &GroupRingElement) -> String {
        let mut order: Vec<usize> = (0..self.order()).collect();
        order.sort_by_key(|&g| self.representative(g));
        let mut out = alloc::format!("{};", self.modulus());
        for (i, g) in order.into_iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            let _ = write!(out, "{sep}{}:{}", self.representative(g), x.coefficient(g));
        }
        out
    }

    /// Parses the output of [`GaloisGroup::dump`].
    pub fn parse_dump(text: &str) -> Result<(GaloisGroup, GroupRingElement)> {
        let bad = |m: &str| Error::Parse { line: 1, message: m.into() };
        let (m, rest) = text.trim().split_once(';').ok_or_else(|| bad("missing ';'"))?;
        let m: u64 = m.trim().parse().map_err(|_| bad("bad modulus"))?;
        let g = GaloisGroup::new(m)?;
        let mut coeffs = alloc::vec![Rational::zero(); g.order()];
        let mut integral = true;
        for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (a, c) = item.split_once(':').ok_or_else(|| bad("missing ':'"))?;
            let a: i64 = a.trim().parse().map_err(|_| bad("bad residue"))?;
            let c: Rational = c.trim().parse().map_err(|_| bad("bad coefficient"))?;
            integral &= c.is_integer();
            coeffs[g.element_of(a)?] += c;
        }
        let x = GroupRingElement::from_rationals(g.group(), coeffs);
        let x = if integral { GroupRingElement { ring: CoefficientRing::Integers, ..x } } else { x };
        Ok((g, x))
    }
}

/// The ring map `R[G_{M'}] -> R[G_M]` induced by reduction mod `M` for `M | M'`.
pub fn project(source: &GaloisGroup, target: &GaloisGroup, x: &GroupRingElement) -> Result<GroupRingElement> {
    if source.modulus() % target.modulus() != 0 {
        return Err(Error::NotADivisor { divisor: target.modulus(), modulus: source.modulus() });
    }
    assert_eq!(x.group(), source.group());
    let mut coeffs = alloc::vec![Rational::zero(); target.order()];
    for (g, c) in x.coefficients().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let h = target.element_of(source.representative(g) as i64)?;
        coeffs[h] += c;
    }
    Ok(GroupRingElement { group: target.group().clone(), coeffs, ring: x.ring })
}
