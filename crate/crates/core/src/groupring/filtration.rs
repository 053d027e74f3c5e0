//! Powers of the augmentation ideal `I(G)` of `R[G]`.
//!
//! An element of `I` is stored by its coefficients away from the identity,
//! `sum_{g != 1} c_g (g - 1)`, so each `I^r` is a full-rank lattice in
//! `Z^{|G| - 1}`. For `R = Z[1/S]` and `R = Q` the lattices are replaced
//! by their saturations `(I^r ⊗ R) ∩ Z^{|G| - 1}`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::abelian::AbelianGroup;
use super::element::GroupRingElement;
use crate::error::{Error, Result};
use crate::linalg::Lattice;

/// Default `r_max` for [`augmentation_order`].
pub const DEFAULT_R_MAX: u32 = 20;

/// Subring of `Q` over which the order of vanishing is measured.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrderRing {
    Integers,
    /// `Z[1/p : p in primes]`.
    Localized(Vec<u64>),
    Rationals,
}

impl OrderRing {
    /// `Z[1/2]`.
    pub fn half_integers() -> Self {
        OrderRing::Localized(alloc::vec![2])
    }

    fn inverted(&self) -> Option<Option<&[u64]>> {
        match self {
            OrderRing::Integers => None,
            OrderRing::Localized(ps) => Some(Some(ps)),
            OrderRing::Rationals => Some(None),
        }
    }

    fn is_unit(&self, d: &BigInt) -> bool {
        match self {
            OrderRing::Integers => d.is_one(),
            OrderRing::Rationals => true,
            OrderRing::Localized(ps) => {
                let mut d = d.clone();
                for &p in ps {
                    let p = BigInt::from(p);
                    while (&d % &p).is_zero() {
                        d /= &p;
                    }
                }
                d.is_one()
            }
        }
    }
}

/// Order of vanishing of an element along the augmentation filtration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VanishingOrder {
    /// In `I^r` but not `I^{r+1}`.
    Finite(u32),
    /// In `I^r` for every `r` tested; the filtration had not stabilized.
    AtLeast(u32),
    /// The filtration satisfies `I^at = I^{at+1}` and the element lies in it.
    Stabilized { at: u32 },
    /// The element is zero.
    Zero,
}

impl VanishingOrder {
    /// Whether the order is at least `r`; `None` if undecided.
    pub fn at_least(self, r: u32) -> Option<bool> {
        match self {
            VanishingOrder::Finite(k) => Some(k >= r),
            VanishingOrder::AtLeast(k) => (k >= r).then_some(true),
            VanishingOrder::Stabilized { .. } | VanishingOrder::Zero => Some(true),
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            VanishingOrder::Finite(k) => Some(k),
            _ => None,
        }
    }
}

impl core::fmt::Display for VanishingOrder {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            VanishingOrder::Finite(r) => write!(f, "{r}"),
            VanishingOrder::AtLeast(r) => write!(f, ">={r}"),
            VanishingOrder::Stabilized { at } => write!(f, "stabilized@{at}"),
            VanishingOrder::Zero => f.write_str("zero"),
        }
    }
}

/// Lazily extended chain `I ⊇ I^2 ⊇ ...` for one group and ring.
#[derive(Debug, Clone)]
pub struct AugmentationFiltration {
    group: Arc<AbelianGroup>,
    ring: OrderRing,
    /// `layers[r - 1]` is `I^r`.
    layers: Vec<Lattice>,
    stable: bool,
}

impl AugmentationFiltration {
    pub fn new(group: &Arc<AbelianGroup>, ring: OrderRing) -> Self {
        let dim = group.order() - 1;
        Self { group: group.clone(), ring, layers: alloc::vec![Lattice::standard(dim)], stable: false }
    }

    pub fn group(&self) -> &Arc<AbelianGroup> {
        &self.group
    }

    pub fn ring(&self) -> &OrderRing {
        &self.ring
    }

    /// `I^r` for `r >= 1`.
    pub fn layer(&mut self, r: usize) -> &Lattice {
        assert!(r >= 1);
        while self.layers.len() < r {
            if self.stable {
                let last = self.layers.last().unwrap().clone();
                self.layers.push(last);
                continue;
            }
            let next = self.next_layer();
            self.stable = &next == self.layers.last().unwrap();
            self.layers.push(next);
        }
        &self.layers[r - 1]
    }

    /// Smallest `r` with `I^r = I^{r+1}` among the layers built so far.
    pub fn stabilized_at(&self) -> Option<usize> {
        self.layers.windows(2).position(|w| w[0] == w[1]).map(|i| i + 1)
    }

    fn next_layer(&self) -> Lattice {
        let n = self.group.order();
        let dim = n - 1;
        let current = self.layers.last().unwrap();
        let gens = self.group.generators();
        let mut products = Vec::with_capacity(current.rank() * gens.len());
        for b in current.basis() {
            // Full coefficient vector of sum b_g (g - 1).
            let mut full = alloc::vec![BigInt::zero(); n];
            for (g, x) in b.iter().enumerate() {
                full[g + 1] = x.clone();
                full[0] -= x;
            }
            for &h in &gens {
                // beta * (h - 1)
                let mut out: Vec<BigInt> = full.iter().map(|x| -x).collect();
                for (g, x) in full.iter().enumerate() {
                    if !x.is_zero() {
                        out[self.group.mul(h, g)] += x;
                    }
                }
                products.push(out.split_off(1));
            }
        }
        let lattice = Lattice::from_generators(dim, products);
        match self.ring.inverted() {
            None => lattice,
            Some(inv) => lattice.saturate(inv),
        }
    }

    /// Integral coordinates of `x` in `I`, scaled by a unit of the ring;
    /// `None` if the augmentation is nonzero.
    fn coordinates(&self, x: &GroupRingElement) -> Result<Option<Vec<BigInt>>> {
        assert_eq!(x.group(), &self.group, "element of a different group ring");
        let den = x.coefficients().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        if !self.ring.is_unit(&den) {
            return Err(Error::NotInRing);
        }
        if !x.augmentation().is_zero() {
            return Ok(None);
        }
        Ok(Some(
            x.coefficients()[1..]
                .iter()
                .map(|c| (c * &den).to_integer())
                .collect(),
        ))
    }

    /// Whether `x` lies in `I^r` (`I^0` is the whole ring).
    pub fn contains(&mut self, x: &GroupRingElement, r: usize) -> Result<bool> {
        let Some(v) = self.coordinates(x)? else {
            return Ok(r == 0);
        };
        if r == 0 {
            return Ok(true);
        }
        Ok(self.layer(r).contains(&v))
    }

    pub fn order(&mut self, x: &GroupRingElement, r_max: u32) -> Result<VanishingOrder> {
        let Some(v) = self.coordinates(x)? else {
            return Ok(VanishingOrder::Finite(0));
        };
        if v.iter().all(Zero::is_zero) {
            return Ok(VanishingOrder::Zero);
        }
        for r in 1..=r_max as usize {
            if !self.layer(r + 1).contains(&v) {
                return Ok(VanishingOrder::Finite(r as u32));
            }
            if self.layers[r] == self.layers[r - 1] {
                let at = self.stabilized_at().unwrap_or(r);
                return Ok(VanishingOrder::Stabilized { at: at as u32 });
            }
        }
        Ok(VanishingOrder::AtLeast(r_max + 1))
    }
}

/// `ord_R(x)`, building a fresh filtration.
pub fn augmentation_order(x: &GroupRingElement, ring: OrderRing, r_max: u32) -> Result<VanishingOrder> {
    AugmentationFiltration::new(x.group(), ring).order(x, r_max)
}
