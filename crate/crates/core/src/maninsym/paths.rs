//! Decomposition of `{inf, r}` into unimodular segments.

use alloc::vec::Vec;

/// Unimodular matrices `g_j` with `g_j{0, inf}` running from `inf` to `num/den`
/// through the convergents of the fractional part of `num/den`.
pub fn segments_to_cusp(num: i64, den: i64) -> Vec<[i64; 4]> {
    assert!(den != 0, "cusp at infinity");
    let (mut num, mut den) = if den < 0 { (-num, -den) } else { (num, den) };
    let g = crate::arith::gcd(num.unsigned_abs(), den as u64) as i64;
    num /= g;
    den /= g;
    // Translation by integers fixes paths from infinity.
    let (mut a, mut b) = (num.rem_euclid(den), den);
    let (mut p_prev, mut q_prev) = (1i64, 0i64);
    let (mut p, mut q) = (0i64, 1i64);
    let mut out = Vec::new();
    let mut sign = -1i64;
    loop {
        out.push([sign * p, p_prev, sign * q, q_prev]);
        if a == 0 {
            break;
        }
        // Next partial quotient of b/a.
        let t = b / a;
        let r = b % a;
        let (pn, qn) = (t * p + p_prev, t * q + q_prev);
        p_prev = p;
        q_prev = q;
        p = pn;
        q = qn;
        b = a;
        a = r;
        sign = -sign;
    }
    out
}

/// Manin symbols `(c, d)` with multiplicities whose sum is `{inf, num/den}`.
pub fn symbols_to_cusp(num: i64, den: i64) -> Vec<(i64, i64, i64)> {
    segments_to_cusp(num, den)
        .into_iter()
        .map(|m| (m[2], m[3], 1))
        .collect()
}
