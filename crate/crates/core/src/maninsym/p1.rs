//! The projective line over `Z/N`.

use alloc::vec::Vec;

use crate::arith;
use crate::error::{Error, Result};

/// A point `(c:d)` of `P^1(Z/N)` in canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ManinSymbol {
    pub level: u64,
    pub c: u64,
    pub d: u64,
}

const NONE: u32 = u32::MAX;

/// Canonical orbit representative of `(c:d)`: the lexicographically least
/// pair among `(uc, ud)` for units `u mod N`.
pub fn p1_normalize(level: u64, c: i64, d: i64) -> Result<ManinSymbol> {
    let n = level;
    let (cm, dm) = (arith::modulo(c as i128, n), arith::modulo(d as i128, n));
    if arith::gcd(arith::gcd(cm, dm), n) != 1 {
        return Err(Error::NotProjectivePoint { level, c, d });
    }
    if n == 1 {
        return Ok(ManinSymbol { level, c: 0, d: 0 });
    }
    let mut best = (cm, dm);
    for u in 1..n {
        if arith::gcd(u, n) != 1 {
            continue;
        }
        let cand = (arith::mul_mod(u, cm, n), arith::mul_mod(u, dm, n));
        if cand < best {
            best = cand;
        }
    }
    Ok(ManinSymbol { level, c: best.0, d: best.1 })
}

/// Enumerated `P^1(Z/N)` with an `N x N` lookup table from raw pairs to
/// the index of their canonical representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P1List {
    level: u64,
    reps: Vec<(u64, u64)>,
    table: Vec<u32>,
}

impl P1List {
    pub fn new(level: u64) -> Self {
        assert!(level >= 1 && level < 1 << 16, "level out of range");
        let n = level as usize;
        if n == 1 {
            return Self { level, reps: alloc::vec![(0, 0)], table: alloc::vec![0] };
        }
        let units: Vec<u64> = (1..level).filter(|&u| arith::gcd(u, level) == 1).collect();
        let mut table = alloc::vec![NONE; n * n];
        let mut reps = Vec::new();
        // Scanning pairs in lexicographic order makes the first unseen pair of
        // each orbit its minimum.
        for c in 0..level {
            for d in 0..level {
                if table[c as usize * n + d as usize] != NONE
                    || arith::gcd(arith::gcd(c, d), level) != 1
                {
                    continue;
                }
                let idx = reps.len() as u32;
                reps.push((c, d));
                for &u in &units {
                    let (uc, ud) = (u * c % level, u * d % level);
                    table[uc as usize * n + ud as usize] = idx;
                }
            }
        }
        Self { level, reps, table }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn symbol(&self, i: usize) -> ManinSymbol {
        let (c, d) = self.reps[i];
        ManinSymbol { level: self.level, c, d }
    }

    pub fn pairs(&self) -> &[(u64, u64)] {
        &self.reps
    }

    /// Index of `(c:d)`, or `None` if `gcd(c, d, N) > 1`.
    pub fn index(&self, c: i64, d: i64) -> Option<usize> {
        let n = self.level;
        let (c, d) = (c.rem_euclid(n as i64) as usize, d.rem_euclid(n as i64) as usize);
        match self.table[c * n as usize + d] {
            NONE => None,
            i => Some(i as usize),
        }
    }

    pub fn index_of(&self, s: ManinSymbol) -> usize {
        self.index(s.c as i64, s.d as i64).expect("canonical symbol")
    }

    /// `(c:d) * S = (d : -c)`.
    pub fn apply_s(&self, i: usize) -> usize {
        let (c, d) = self.reps[i];
        self.index(d as i64, -(c as i64)).unwrap()
    }

    /// `(c:d) * T = (d : -c-d)`.
    pub fn apply_t(&self, i: usize) -> usize {
        let (c, d) = self.reps[i];
        self.index(d as i64, -(c as i64) - d as i64).unwrap()
    }

    /// `(c:d)^* = (-c : d)`.
    pub fn apply_star(&self, i: usize) -> usize {
        let (c, d) = self.reps[i];
        self.index(-(c as i64), d as i64).unwrap()
    }

    /// Right action `(c, d) [[x1, x2], [y1, y2]] = (c x1 + d y1, c x2 + d y2)`.
    pub fn apply_matrix(&self, i: usize, m: [i64; 4]) -> Option<usize> {
        let (c, d) = self.reps[i];
        let n = self.level as i128;
        let (c, d) = (c as i128, d as i128);
        let u = (c * m[0] as i128 + d * m[2] as i128).rem_euclid(n);
        let v = (c * m[1] as i128 + d * m[3] as i128).rem_euclid(n);
        self.index(u as i64, v as i64)
    }

    /// An `SL_2(Z)` matrix `[[a, b], [c', d']]` whose bottom row reduces to
    /// the `i`-th representative mod `N`.
    pub fn lift_to_sl2(&self, i: usize) -> [i64; 4] {
        let (c, d) = self.reps[i];
        let n = self.level as i64;
        let (c, mut d) = (c as i64, d as i64);
        let c = if c == 0 { n } else { c };
        while arith::gcd(c as u64, d.unsigned_abs()) != 1 {
            d += n;
        }
        let (_, x, y) = arith::xgcd(d as i128, c as i128);
        // x d + y c = 1, so [[x, -y], [c, d]] has determinant 1.
        [x as i64, -(y as i64), c, d]
    }
}

/// Size of `P^1(Z/N)`: `N * prod_{p | N} (1 + 1/p)`.
pub fn p1_size(level: u64) -> u64 {
    arith::factor(level)
        .into_iter()
        .fold(level, |acc, (p, _)| acc / p * (p + 1))
}
