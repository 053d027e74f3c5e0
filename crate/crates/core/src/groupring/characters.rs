use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::abelian::AbelianGroup;
use super::element::GroupRingElement;
use super::galois::GaloisGroup;
use crate::arith;

/// A character of a finite abelian group. The value at `g` is
/// `exp(2 pi i angle(g) / L)` with `L` the group exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    group: Arc<AbelianGroup>,
    /// Image of the `i`-th standard generator is `exp(2 pi i k_i / d_i)`.
    images: Vec<u64>,
}

/// Name used across the crate for characters of `G_M`.
pub type CharacterValue = Character;

impl Character {
    pub fn new(group: &Arc<AbelianGroup>, images: Vec<u64>) -> Self {
        assert_eq!(images.len(), group.rank());
        let images = images.into_iter().zip(group.invariants()).map(|(k, &d)| k % d).collect();
        Self { group: group.clone(), images }
    }

    pub fn trivial(group: &Arc<AbelianGroup>) -> Self {
        Self::new(group, alloc::vec![0; group.rank()])
    }

    /// All characters, indexed like the group elements of the dual group.
    pub fn all(group: &Arc<AbelianGroup>) -> Vec<Character> {
        (0..group.order()).map(|i| Self::new(group, group.exponents(i))).collect()
    }

    pub fn group(&self) -> &Arc<AbelianGroup> {
        &self.group
    }

    pub fn images(&self) -> &[u64] {
        &self.images
    }

    /// Position of this character in [`Character::all`].
    pub fn index(&self) -> usize {
        self.group.element(&self.images)
    }

    pub fn id(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(|k| alloc::format!("{k}")).collect();
        alloc::format!("chi[{}]", parts.join(","))
    }

    pub fn is_trivial(&self) -> bool {
        self.images.iter().all(|&k| k == 0)
    }

    /// Exact value at `g` as a numerator over the group exponent.
    pub fn angle(&self, g: usize) -> u64 {
        let l = self.group.exponent();
        self.group
            .exponents(g)
            .into_iter()
            .zip(&self.images)
            .zip(self.group.invariants())
            .map(|((e, &k), &d)| e * k % d * (l / d))
            .sum::<u64>()
            % l
    }

    pub fn value(&self, g: usize) -> Complex64 {
        let l = self.group.exponent() as f64;
        Complex64::from_polar(1.0, TAU * self.angle(g) as f64 / l)
    }

    pub fn order(&self) -> u64 {
        self.images
            .iter()
            .zip(self.group.invariants())
            .fold(1, |acc, (&k, &d)| arith::lcm(acc, d / arith::gcd(k, d)))
    }

    pub fn inverse(&self) -> Self {
        let images = self
            .images
            .iter()
            .zip(self.group.invariants())
            .map(|(&k, &d)| (d - k) % d)
            .collect();
        Self { group: self.group.clone(), images }
    }

    pub fn is_real(&self) -> bool {
        self.order() <= 2
    }

    /// `sum_g c_g chi(g)`.
    pub fn evaluate(&self, x: &GroupRingElement) -> Complex64 {
        assert_eq!(x.group(), &self.group);
        x.coefficients()
            .iter()
            .enumerate()
            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
            .map(|(g, c)| self.value(g) * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }
}

impl GaloisGroup {
    pub fn characters(&self) -> Vec<Character> {
        Character::all(self.group())
    }

    /// `chi(sigma_a)`, or `None` when `gcd(a, M) > 1`.
    pub fn character_at(&self, chi: &Character, a: i64) -> Option<Complex64> {
        self.element_of(a).ok().map(|g| chi.value(g))
    }

    /// Conductor of `chi` viewed as a Dirichlet character modulo `M`: the
    /// least `f | M` such that `chi(sigma_a) = 1` whenever `a ≡ 1 mod f`.
    pub fn conductor(&self, chi: &Character) -> u64 {
        let m = self.modulus();
        for f in arith::divisors(m) {
            let trivial_on_kernel = (0..m / f).all(|t| {
                let a = 1 + t * f;
                arith::gcd(a, m) != 1 || chi.angle(self.element_of(a as i64).unwrap()) == 0
            });
            if trivial_on_kernel {
                return f;
            }
        }
        m
    }

    pub fn is_primitive(&self, chi: &Character) -> bool {
        self.conductor(chi) == self.modulus()
    }
}
