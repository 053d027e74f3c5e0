use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn identity(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}

pub fn transpose(a: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    (0..ncols)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>], bcols: usize) -> Vec<Vec<Rational>> {
    a.iter()
        .map(|row| {
            let mut out = alloc::vec![Rational::zero(); bcols];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(&b[k]) {
                    if !y.is_zero() {
                        *o += x * y;
                    }
                }
            }
            out
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
        })
        .collect()
}

/// Reduced row echelon form in place. Zero rows are dropped; returns the
/// pivot column of each remaining row.
pub fn rref(rows: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of the right kernel `{v : A v = 0}` of an `A` with `ncols` columns.
pub fn kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let mut is_pivot = alloc::vec![None; ncols];
    for (i, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(i);
    }
    (0..ncols)
        .filter(|&c| is_pivot[c].is_none())
        .map(|free| {
            let mut v = alloc::vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -m[i][free].clone();
            }
            v
        })
        .collect()
}

/// Basis of the left kernel `{v : v A = 0}`.
pub fn left_kernel(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    kernel(&transpose(rows, ncols), rows.len())
}

/// Scales a nonzero rational vector to a primitive integer vector (gcd 1).
/// The sign is left untouched.
pub fn scale_to_primitive_integers(v: &[Rational]) -> Vec<BigInt> {
    let den = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Incremental sparse row echelon form over the rationals.
///
/// Rows are inserted one at a time and fully reduced against the stored
/// pivots; a row that survives contributes a new pivot at its first
/// nonzero column.
#[derive(Debug, Default, Clone)]
pub struct SparseEchelon {
    rows: BTreeMap<usize, BTreeMap<usize, Rational>>,
    order: Vec<usize>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts a relation row; returns `true` if it increased the rank.
    pub fn insert(&mut self, mut row: BTreeMap<usize, Rational>) -> bool {
        row.retain(|_, v| !v.is_zero());
        loop {
            let hit = row
                .iter()
                .find(|(c, _)| self.rows.contains_key(c))
                .map(|(c, v)| (*c, v.clone()));
            let Some((c, f)) = hit else { break };
            for (col, val) in &self.rows[&c] {
                let e = row.entry(*col).or_insert_with(Rational::zero);
                *e -= &f * val;
                if e.is_zero() {
                    row.remove(col);
                }
            }
        }
        let Some((&pivot, lead)) = row.iter().next() else {
            return false;
        };
        let inv = lead.recip();
        for v in row.values_mut() {
            *v *= &inv;
        }
        self.rows.insert(pivot, row);
        self.order.push(pivot);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    /// Expresses every pivot column as a combination of non-pivot columns:
    /// the returned map sends a pivot `p` to `{j: coeff}` with `x_p = sum coeff*x_j`.
    pub fn solve_pivots(&self) -> BTreeMap<usize, BTreeMap<usize, Rational>> {
        let mut solved: BTreeMap<usize, BTreeMap<usize, Rational>> = BTreeMap::new();
        // A row only contains pivots that were created after it, so reverse
        // insertion order resolves dependencies first.
        for &p in self.order.iter().rev() {
            let mut expr: BTreeMap<usize, Rational> = BTreeMap::new();
            for (col, val) in &self.rows[&p] {
                if *col == p {
                    continue;
                }
                if let Some(sub) = solved.get(col) {
                    for (j, w) in sub {
                        let e = expr.entry(*j).or_insert_with(Rational::zero);
                        *e -= val * w;
                    }
                } else {
                    let e = expr.entry(*col).or_insert_with(Rational::zero);
                    *e -= val;
                }
            }
            expr.retain(|_, v| !v.is_zero());
            solved.insert(p, expr);
        }
        solved
    }
}

#[allow(dead_code)]
pub(crate) fn is_integral(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

#[allow(dead_code)]
pub(crate) fn max_abs(v: &[Rational]) -> Rational {
    v.iter()
        .map(|x| x.abs())
        .fold(Rational::zero(), |a, b| if b > a { b } else { a })
}
