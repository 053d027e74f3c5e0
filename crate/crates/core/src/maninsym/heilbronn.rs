//! Finite matrix families realizing Hecke operators on Manin symbols.
//!
//! Matrices are stored as `[x1, x2, y1, y2]` for `[[x1, x2], [y1, y2]]` and
//! act on the right: `(c, d) ↦ (c x1 + d y1, c x2 + d y2)`.
//!
//! * [`cremona`]: Cremona's Heilbronn matrices of determinant `p`, obtained
//!   from continued-fraction expansions of `p / r` for `|r| <= p/2`. They
//!   compute `T_p` for `p ∤ N` (and also for `p | N` up to the usual
//!   correction, which is why [`merel`] is used there instead).
//! * [`merel`]: Merel's set `{[[a, b], [c, d]] : a > b >= 0, d > c >= 0,
//!   ad - bc = n}`, valid for every `n` provided images with
//!   `gcd(c', d', N) > 1` are discarded.

use alloc::vec::Vec;

pub type Matrix = [i64; 4];

/// Nearest integer to `a / b`, ties rounded away from zero.
fn round_div(a: i64, b: i64) -> i64 {
    let q = a / b;
    let r = a - q * b;
    if 2 * r.abs() >= b.abs() {
        if (r < 0) == (b < 0) { q + 1 } else { q - 1 }
    } else {
        q
    }
}

pub fn cremona(p: u64) -> Vec<Matrix> {
    if p == 2 {
        return alloc::vec![[1, 0, 0, 2], [2, 0, 0, 1], [2, 1, 0, 1], [1, 0, 1, 2]];
    }
    let p = p as i64;
    let mut out = alloc::vec![[1, 0, 0, p]];
    let half = p / 2;
    for r in -half..=half {
        let (mut x1, mut x2, mut y1, mut y2) = (p, -r, 0i64, 1i64);
        let (mut a, mut b) = (-p, r);
        out.push([x1, x2, y1, y2]);
        while b != 0 {
            let q = round_div(a, b);
            let c = a - b * q;
            a = -b;
            b = c;
            let x3 = q * x2 - x1;
            x1 = x2;
            x2 = x3;
            let y3 = q * y2 - y1;
            y1 = y2;
            y2 = y3;
            out.push([x1, x2, y1, y2]);
        }
    }
    out
}

pub fn merel(n: u64) -> Vec<Matrix> {
    let n = n as i64;
    let mut out = Vec::new();
    for a in 1..=n {
        for d in 1..=n {
            // b c = a d - n must satisfy 0 <= bc < a d.
            let bc = a * d - n;
            if bc < 0 {
                continue;
            }
            if bc == 0 {
                // b = 0 (any c < d) or c = 0 (any b < a).
                for c in 0..d {
                    out.push([a, 0, c, d]);
                }
                for b in 1..a {
                    out.push([a, b, 0, d]);
                }
                continue;
            }
            for b in 1..a {
                if bc % b == 0 {
                    let c = bc / b;
                    if c < d {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}
