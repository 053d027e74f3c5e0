use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sublattice of `Z^dim` stored as a basis in Hermite normal form.
///
/// Rows are kept in echelon form with strictly increasing pivot columns.
/// After [`Lattice::normalize`] the pivots are positive and every entry
/// above a pivot lies in `[0, pivot)`, so two lattices are equal iff their
/// normalized bases are equal.
#[derive(Debug, Clone)]
pub struct Lattice {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    dirty: usize,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.pivots == other.pivots && self.rows == other.rows
    }
}

impl Eq for Lattice {}

const NORMALIZE_EVERY: usize = 8;

impl Lattice {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
            dirty: 0,
        }
    }

    /// The full lattice `Z^dim`.
    pub fn standard(dim: usize) -> Self {
        let mut l = Self::zero(dim);
        for i in 0..dim {
            let mut v = alloc::vec![BigInt::zero(); dim];
            v[i] = BigInt::one();
            l.rows.push(v);
            l.pivots.push(i);
        }
        l
    }

    pub fn from_generators<I: IntoIterator<Item = Vec<BigInt>>>(dim: usize, gens: I) -> Self {
        let mut l = Self::zero(dim);
        for g in gens {
            l.insert(g);
        }
        l.normalize();
        l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Index `[Z^dim : L]` for a full-rank lattice.
    pub fn determinant(&self) -> Option<BigInt> {
        (self.rank() == self.dim).then(|| {
            self.rows
                .iter()
                .zip(&self.pivots)
                .fold(BigInt::one(), |acc, (r, &p)| acc * r[p].abs())
        })
    }

    /// Adds a generator, keeping the basis in echelon form.
    pub fn insert(&mut self, mut v: Vec<BigInt>) {
        assert_eq!(v.len(), self.dim);
        if let Some(det) = self.determinant() {
            // det * Z^dim is contained in the lattice, so generators can be reduced mod det.
            for x in v.iter_mut() {
                *x = x.mod_floor(&det);
            }
        }
        let mut slot = 0;
        loop {
            let Some(c) = v.iter().position(|x| !x.is_zero()) else {
                return;
            };
            while slot < self.pivots.len() && self.pivots[slot] < c {
                slot += 1;
            }
            if slot < self.pivots.len() && self.pivots[slot] == c {
                let row = &mut self.rows[slot];
                let a = row[c].clone();
                let b = v[c].clone();
                if (&b % &a).is_zero() {
                    let q = &b / &a;
                    for (x, y) in v.iter_mut().zip(row.iter()) {
                        if !y.is_zero() {
                            *x -= &q * y;
                        }
                    }
                } else {
                    let e = a.extended_gcd(&b);
                    let (g, s, t) = (e.gcd, e.x, e.y);
                    let (a_g, b_g) = (&a / &g, &b / &g);
                    for (x, y) in row.iter_mut().zip(v.iter_mut()) {
                        let rx = &s * &*x + &t * &*y;
                        let vy = &b_g * &*x - &a_g * &*y;
                        *x = rx;
                        *y = vy;
                    }
                }
                slot += 1;
            } else {
                self.rows.insert(slot, v);
                self.pivots.insert(slot, c);
                break;
            }
        }
        self.dirty += 1;
        if self.dirty >= NORMALIZE_EVERY {
            self.normalize();
        }
    }

    /// Brings the basis to canonical Hermite normal form.
    pub fn normalize(&mut self) {
        self.dirty = 0;
        let det = self.determinant();
        for i in (0..self.rows.len()).rev() {
            let p = self.pivots[i];
            if self.rows[i][p].is_negative() {
                for x in self.rows[i].iter_mut() {
                    *x = -&*x;
                }
            }
            if let Some(det) = &det {
                // Entries to the right of the pivot only need to be known modulo
                // the rows below, which already span det * Z^(dim - p - 1).
                for x in self.rows[i][p + 1..].iter_mut() {
                    *x = x.mod_floor(det);
                }
            }
            for j in i + 1..self.rows.len() {
                let pj = self.pivots[j];
                let q = self.rows[i][pj].div_floor(&self.rows[j][pj]);
                if q.is_zero() {
                    continue;
                }
                let (upper, lower) = self.rows.split_at_mut(j);
                for (x, y) in upper[i].iter_mut().zip(lower[0].iter()) {
                    if !y.is_zero() {
                        *x -= &q * y;
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = w.iter().position(|x| !x.is_zero()) {
                if c < p {
                    return false;
                }
            } else {
                return true;
            }
            if w[p].is_zero() {
                continue;
            }
            let (q, r) = w[p].div_rem(&row[p]);
            if !r.is_zero() {
                return false;
            }
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &q * y;
                }
            }
        }
        w.iter().all(Zero::is_zero)
    }

    /// Saturates a full-rank lattice with respect to the primes in `inverted`:
    /// returns `L[1/S] ∩ Z^dim`. With `inverted = None` every prime is inverted.
    pub fn saturate(&self, inverted: Option<&[u64]>) -> Lattice {
        let det = self
            .determinant()
            .expect("saturation needs a full-rank lattice");
        let mut coprime = det;
        match inverted {
            None => coprime = BigInt::one(),
            Some(primes) => {
                for &p in primes {
                    let p = BigInt::from(p);
                    while (&coprime % &p).is_zero() {
                        coprime /= &p;
                    }
                }
            }
        }
        if coprime.is_one() {
            return Lattice::standard(self.dim);
        }
        // The S-part of Z^dim / L is killed by the S-free part of the index.
        let mut out = self.clone();
        for i in 0..self.dim {
            let mut v = alloc::vec![BigInt::zero(); self.dim];
            v[i] = coprime.clone();
            out.insert(v);
        }
        out.normalize();
        out
    }
}
