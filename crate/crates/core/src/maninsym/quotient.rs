use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::linalg::{Rational, SparseEchelon};

/// Union-find over generators tracking `x_i = sign * x_root`.
struct SignedUnionFind {
    parent: Vec<usize>,
    sign: Vec<i8>,
    zero: Vec<bool>,
}

impl SignedUnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), sign: alloc::vec![1; n], zero: alloc::vec![false; n] }
    }

    fn find(&mut self, i: usize) -> (usize, i8) {
        let p = self.parent[i];
        if p == i {
            return (i, 1);
        }
        let (r, s) = self.find(p);
        self.parent[i] = r;
        self.sign[i] *= s;
        (r, self.sign[i])
    }

    /// Imposes `x_i = s * x_j`.
    fn union(&mut self, i: usize, j: usize, s: i8) {
        let (ri, si) = self.find(i);
        let (rj, sj) = self.find(j);
        if ri == rj {
            // x_r = si*s*sj x_r
            if si * s * sj == -1 {
                self.zero[ri] = true;
            }
            return;
        }
        // Keep the smaller index as root.
        let (root, child, rel) = if ri < rj { (ri, rj, si * s * sj) } else { (rj, ri, si * s * sj) };
        self.parent[child] = root;
        self.sign[child] = rel;
        if self.zero[child] {
            self.zero[root] = true;
        }
    }
}

/// A quotient of the free `Q`-module on `n` generators, with the coordinates
/// of every generator in a chosen basis.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub dim: usize,
    /// Generator index represented by each basis vector.
    pub basis: Vec<usize>,
    pub coords: Vec<Vec<Rational>>,
}

impl Quotient {
    /// `pairs` are two-term relations `x_i = s x_j`; `triples` are three-term
    /// relations `x_i + x_j + x_k = 0`.
    pub fn build(n: usize, pairs: &[(usize, usize, i8)], triples: &[[usize; 3]]) -> Self {
        let mut uf = SignedUnionFind::new(n);
        for &(i, j, s) in pairs {
            uf.union(i, j, s);
        }
        let resolved: Vec<Option<(usize, i8)>> = (0..n)
            .map(|i| {
                let (r, s) = uf.find(i);
                (!uf.zero[r]).then_some((r, s))
            })
            .collect();
        let mut ech = SparseEchelon::new();
        for t in triples {
            let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
            for &g in t {
                if let Some((r, s)) = resolved[g] {
                    *row.entry(r).or_insert_with(Rational::zero) += Rational::from_integer(s.into());
                }
            }
            ech.insert(row);
        }
        let solved = ech.solve_pivots();
        let basis: Vec<usize> = (0..n)
            .filter(|&i| matches!(resolved[i], Some((r, _)) if r == i) && !ech.is_pivot(i))
            .collect();
        let pos: BTreeMap<usize, usize> = basis.iter().enumerate().map(|(k, &g)| (g, k)).collect();
        let dim = basis.len();
        let root_coords = |r: usize| -> Vec<Rational> {
            let mut v = alloc::vec![Rational::zero(); dim];
            if let Some(expr) = solved.get(&r) {
                for (j, w) in expr {
                    v[pos[j]] = w.clone();
                }
            } else {
                v[pos[&r]] = Rational::one();
            }
            v
        };
        let mut cache: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
        let coords = resolved
            .iter()
            .map(|res| match res {
                None => alloc::vec![Rational::zero(); dim],
                Some((r, s)) => {
                    let v = cache.entry(*r).or_insert_with(|| root_coords(*r));
                    if *s == 1 { v.clone() } else { v.iter().map(|x| -x).collect() }
                }
            })
            .collect();
        Self { dim, basis, coords }
    }

    /// Coordinates of `sum_k mult_k x_{g_k}`.
    pub fn combine<I: IntoIterator<Item = (usize, i64)>>(&self, terms: I) -> Vec<Rational> {
        let mut out = alloc::vec![Rational::zero(); self.dim];
        for (g, m) in terms {
            if m == 0 {
                continue;
            }
            let m = Rational::from_integer(m.into());
            for (o, x) in out.iter_mut().zip(&self.coords[g]) {
                if !x.is_zero() {
                    *o += &m * x;
                }
            }
        }
        out
    }
}
