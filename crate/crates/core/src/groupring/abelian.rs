use alloc::vec::Vec;

/// A finite abelian group `Z/d_1 x ... x Z/d_k` with elements indexed by
/// mixed-radix exponent vectors; index 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    invariants: Vec<u64>,
    order: usize,
}

impl AbelianGroup {
    /// Factors equal to 1 are dropped.
    pub fn new(invariants: &[u64]) -> Self {
        let invariants: Vec<u64> = invariants.iter().copied().filter(|&d| d > 1).collect();
        let order = invariants.iter().product::<u64>() as usize;
        Self { invariants, order }
    }

    pub fn trivial() -> Self {
        Self::new(&[])
    }

    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn exponents(&self, mut g: usize) -> Vec<u64> {
        self.invariants
            .iter()
            .map(|&d| {
                let e = g as u64 % d;
                g /= d as usize;
                e
            })
            .collect()
    }

    pub fn element(&self, exps: &[u64]) -> usize {
        debug_assert_eq!(exps.len(), self.rank());
        let mut idx = 0usize;
        for (&e, &d) in exps.iter().zip(&self.invariants).rev() {
            idx = idx * d as usize + (e % d) as usize;
        }
        idx
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        let (mut g, mut h) = (g, h);
        let mut idx = 0usize;
        let mut stride = 1usize;
        for &d in &self.invariants {
            let d = d as usize;
            idx += ((g % d + h % d) % d) * stride;
            g /= d;
            h /= d;
            stride *= d;
        }
        idx
    }

    pub fn inv(&self, g: usize) -> usize {
        let e: Vec<u64> = self
            .exponents(g)
            .into_iter()
            .zip(&self.invariants)
            .map(|(e, &d)| (d - e) % d)
            .collect();
        self.element(&e)
    }

    pub fn pow(&self, g: usize, k: u64) -> usize {
        let e: Vec<u64> = self
            .exponents(g)
            .into_iter()
            .zip(&self.invariants)
            .map(|(e, &d)| e * (k % d) % d)
            .collect();
        self.element(&e)
    }

    /// The standard generators (unit exponent vectors).
    pub fn generators(&self) -> Vec<usize> {
        (0..self.rank())
            .map(|i| {
                let mut e = alloc::vec![0; self.rank()];
                e[i] = 1;
                self.element(&e)
            })
            .collect()
    }

    pub fn element_order(&self, g: usize) -> u64 {
        self.exponents(g)
            .into_iter()
            .zip(&self.invariants)
            .fold(1, |acc, (e, &d)| crate::arith::lcm(acc, d / crate::arith::gcd(e, d)))
    }

    /// Exponent of the group (lcm of the invariants).
    pub fn exponent(&self) -> u64 {
        self.invariants.iter().fold(1, |a, &d| crate::arith::lcm(a, d))
    }
}
