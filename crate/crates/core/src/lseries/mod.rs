//! Twisted central values `L(E, chi, 1)` and their comparison with the
//! character values of Stickelberger elements.
//!
//! Everything here is floating point (`f64`); exact data come from
//! [`crate::maninsym`] and [`crate::groupring`].

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;

use crate::arith;
use crate::curve::CurveData;
use crate::error::{Error, Result};
use crate::groupring::{Character, GaloisGroup};
use crate::maninsym::RationalPeriodMap;
use crate::stickelberger::theta_element;

pub const DEFAULT_DIGITS: u32 = 8;

/// A Dirichlet character with exact values: `chi(n) = exp(2 pi i angle / base)`,
/// or `0` when `gcd(n, modulus) > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    base: u64,
    angles: Vec<Option<u64>>,
}

impl DirichletCharacter {
    pub fn trivial() -> Self {
        Self { modulus: 1, base: 1, angles: alloc::vec![Some(0)] }
    }

    /// From a table of angles over `base`, one entry per residue.
    pub fn from_angles(modulus: u64, base: u64, angles: Vec<Option<u64>>) -> Result<Self> {
        if angles.len() as u64 != modulus || modulus == 0 || base == 0 {
            return Err(Error::InconsistentInput("character table has the wrong size".into()));
        }
        for (n, a) in angles.iter().enumerate() {
            if a.is_some() != (arith::gcd(n as u64, modulus) == 1) {
                return Err(Error::InconsistentInput(alloc::format!("bad support at {n}")));
            }
        }
        Ok(Self { modulus, base, angles: angles.into_iter().map(|a| a.map(|x| x % base)).collect() })
    }

    /// The primitive character inducing `chi`, a character of `G_M`.
    pub fn primitive_lift(group: &GaloisGroup, chi: &Character) -> Self {
        let m = group.modulus();
        let f = group.conductor(chi);
        let base = group.group().exponent();
        let angles = (0..f)
            .map(|n| {
                if arith::gcd(n, f) != 1 {
                    return None;
                }
                // Units modulo M surject onto units modulo f.
                let b = (0..m / f).map(|k| n + k * f).find(|&b| arith::gcd(b, m) == 1)?;
                Some(chi.angle(group.element_of(b as i64).ok()?))
            })
            .collect();
        Self { modulus: f, base, angles }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn angle(&self, n: i64) -> Option<u64> {
        self.angles[arith::modulo(n as i128, self.modulus) as usize]
    }

    pub fn value(&self, n: i64) -> Complex64 {
        match self.angle(n) {
            Some(a) => Complex64::from_polar(1.0, TAU * a as f64 / self.base as f64),
            None => Complex64::new(0.0, 0.0),
        }
    }

    pub fn inverse(&self) -> Self {
        let angles = self.angles.iter().map(|a| a.map(|x| (self.base - x) % self.base)).collect();
        Self { modulus: self.modulus, base: self.base, angles }
    }

    pub fn is_even(&self) -> bool {
        self.angle(-1) == Some(0)
    }

    /// Least `f | modulus` such that the character is trivial on units `≡ 1 mod f`.
    pub fn conductor(&self) -> u64 {
        let m = self.modulus;
        arith::divisors(m)
            .into_iter()
            .find(|&f| (0..m / f).all(|t| self.angle((1 + t * f) as i64).map_or(true, |a| a == 0)))
            .unwrap_or(m)
    }
}

/// `tau(chi) = sum_a chi(a) exp(2 pi i a / m)` for primitive `chi`.
pub fn gauss_sum(chi: &DirichletCharacter) -> Result<Complex64> {
    let f = chi.conductor();
    if f != chi.modulus {
        return Err(Error::NotPrimitive { conductor: f, modulus: chi.modulus });
    }
    let m = chi.modulus;
    Ok((0..m)
        .map(|a| chi.value(a as i64) * Complex64::from_polar(1.0, TAU * a as f64 / m as f64))
        .sum())
}

/// The Dirichlet coefficients of one curve, with its conductor and root number.
#[derive(Debug, Clone)]
pub struct LSeriesContext {
    conductor: u64,
    root_number: i64,
    an: Vec<f64>,
}

impl LSeriesContext {
    /// `fricke` is the eigenvalue of `W_N`; the root number is its negative.
    pub fn new(curve: &CurveData, fricke: i64, terms: usize) -> Result<Self> {
        let an = curve.an_table(terms)?.iter().map(|&a| a as f64).collect();
        Ok(Self { conductor: curve.conductor(), root_number: -fricke, an })
    }

    /// From precomputed coefficients `a_0 = 0, a_1, ..., a_n`.
    pub fn from_coefficients(conductor: u64, fricke: i64, an: &[i64]) -> Self {
        Self { conductor, root_number: -fricke, an: an.iter().map(|&a| a as f64).collect() }
    }

    /// A context with enough terms for every modulus up to `max_modulus`.
    pub fn for_moduli(curve: &CurveData, fricke: i64, max_modulus: u64, digits: u32) -> Result<Self> {
        Self::new(curve, fricke, terms_needed(curve.conductor(), max_modulus, digits))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn root_number(&self) -> i64 {
        self.root_number
    }

    pub fn terms(&self) -> usize {
        self.an.len().saturating_sub(1)
    }

    fn check_terms(&self, n: usize) -> Result<()> {
        if n > self.terms() {
            return Err(Error::InconsistentInput(alloc::format!(
                "{n} coefficients needed, {} available",
                self.terms()
            )));
        }
        Ok(())
    }

    /// Root number of the twist by a primitive `chi` of modulus prime to `N`.
    pub fn twisted_root_number(&self, chi: &DirichletCharacter) -> Result<Complex64> {
        let m = chi.modulus();
        let tau = gauss_sum(chi)?;
        Ok(tau * tau * chi.value(self.conductor as i64) * (self.root_number as f64 / m as f64))
    }

    fn smoothed_sum(&self, chi: &DirichletCharacter, w: Complex64, q: f64, t: f64, n_max: usize) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for n in 1..=n_max {
            let a = self.an[n];
            if a == 0.0 {
                continue;
            }
            let x = chi.value(n as i64);
            if x.norm_sqr() == 0.0 {
                continue;
            }
            let nf = n as f64;
            let direct = x * libm::exp(-TAU * nf * t / q);
            let dual = w * x.conj() * libm::exp(-TAU * nf / (t * q));
            acc += (direct + dual) * (a / nf);
        }
        acc
    }

    /// `L(E, chi, 1)` for a primitive `chi` of modulus prime to `N`, to
    /// `digits` significant digits relative to `max(1, |L|)`.
    pub fn l_value_twisted(&self, chi: &DirichletCharacter, digits: u32) -> Result<Complex64> {
        let m = chi.modulus();
        if arith::gcd(m, self.conductor) != 1 {
            return Err(Error::HypothesisViolated(alloc::format!(
                "twist modulus {m} is not prime to {}",
                self.conductor
            )));
        }
        let w = self.twisted_root_number(chi)?;
        let q = m as f64 * libm::sqrt(self.conductor as f64);
        let n_lo = truncation(self.conductor, m, digits);
        let n_hi = n_lo + n_lo / 4;
        self.check_terms(n_hi)?;
        let value = self.smoothed_sum(chi, w, q, 1.0, n_hi);
        let shorter = self.smoothed_sum(chi, w, q, 1.0, n_lo);
        let shifted = self.smoothed_sum(chi, w, q, 1.2, n_hi);
        let discrepancy = (value - shorter).norm().max((value - shifted).norm());
        if discrepancy > tolerance(digits) * value.norm().max(1.0) {
            return Err(Error::PrecisionNotReached { discrepancy });
        }
        Ok(value)
    }

    /// `L(E, 1)`.
    pub fn central_value(&self, digits: u32) -> Result<f64> {
        Ok(self.l_value_twisted(&DirichletCharacter::trivial(), digits)?.re)
    }

    /// `2 pi i int_{a/M}^{i oo} f(z) dz` for `gcd(M, N a) = 1`, computed by
    /// splitting the path at a point of height `1/(M sqrt N)` and moving the
    /// lower half to `i oo` with a matrix of determinant `N`.
    pub fn period_integral(&self, fricke: i64, a: i64, modulus: u64, digits: u32) -> Result<Complex64> {
        let n = self.conductor as i128;
        let (g, big_a, y) = arith::xgcd(modulus as i128, n * a as i128);
        if g != 1 {
            return Err(Error::HypothesisViolated(alloc::format!("gcd({modulus}, N*{a}) != 1")));
        }
        // g = [[B N, -A], [M N, -N a]] with A M - B N a = 1 sends a/M to oo.
        let big_b = -y;
        let (p, q, r, s) = (
            (big_b * n) as f64,
            -(big_a as f64),
            (modulus as i128 * n) as f64,
            -(n * a as i128) as f64,
        );
        let height = 1.0 / (modulus as f64 * libm::sqrt(self.conductor as f64));
        let z0 = Complex64::new(a as f64 / modulus as f64, height);
        let gz0 = (z0 * p + q) / (z0 * r + s);
        let n_max = truncation(self.conductor, modulus, digits);
        self.check_terms(n_max)?;
        let series = |z: Complex64| -> Complex64 {
            (1..=n_max)
                .filter(|&k| self.an[k] != 0.0)
                .map(|k| (Complex64::i() * TAU * k as f64 * z).exp() * (self.an[k] / k as f64))
                .sum()
        };
        Ok(series(gz0) * fricke as f64 - series(z0))
    }
}

fn tolerance(digits: u32) -> f64 {
    libm::pow(10.0, -(digits as f64))
}

/// Terms for `digits` digits at twist modulus `m`: `ceil(0.6 m sqrt(N) digits)`.
fn truncation(conductor: u64, m: u64, digits: u32) -> usize {
    let q = m as f64 * libm::sqrt(conductor as f64);
    (libm::ceil(0.6 * q * digits.max(1) as f64) as usize).max(32)
}

/// Coefficient count needed by [`LSeriesContext::l_value_twisted`] up to `max_modulus`.
pub fn terms_needed(conductor: u64, max_modulus: u64, digits: u32) -> usize {
    let n = truncation(conductor, max_modulus.max(1), digits);
    n + n / 4
}

/// How a character is applied to the Stickelberger element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pairing {
    /// `chi(Theta^∨) = sum chi(a)^{-1} [a/M]`: the exact identity.
    Bridged,
    /// `chi(Theta) = sum chi(a) [a/M]`.
    Direct,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpecialValueRow {
    pub modulus: u64,
    pub char_id: String,
    pub a_chi: Complex64,
    pub b_chi: Complex64,
    pub rel: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpecialValuesReport {
    pub pairing: Pairing,
    /// The globally fitted `c` with `A_chi = c B_chi`.
    pub c: Complex64,
    /// `c` refitted on each modulus alone.
    pub per_modulus: Vec<(u64, Complex64)>,
    pub rows: Vec<SpecialValueRow>,
    pub max_rel: f64,
    pub tolerance: f64,
}

impl SpecialValuesReport {
    pub fn passed(&self) -> bool {
        self.max_rel < self.tolerance
    }
}

fn fit(rows: &[(Complex64, Complex64)]) -> Option<Complex64> {
    let (a, b) = rows
        .iter()
        .max_by(|x, y| x.1.norm().total_cmp(&y.1.norm()))?;
    (b.norm() > 1e-8).then(|| a / b)
}

/// Compares `A_chi` with `c tau(chi^{-1}) L(E, chi, 1)` over all primitive
/// characters of `G_M`, `M` in `moduli`, with one `c` fitted on the row
/// of largest `|B_chi|`.
pub fn check_special_values(
    ctx: &LSeriesContext,
    map: &RationalPeriodMap,
    moduli: &[u64],
    digits: u32,
    pairing: Pairing,
) -> Result<SpecialValuesReport> {
    if map.level() != ctx.conductor() {
        return Err(Error::InconsistentInput("period map and L-series disagree on the level".into()));
    }
    let mut raw = Vec::new();
    for &m in moduli {
        let group = GaloisGroup::new(m)?;
        let theta = theta_element(map, &group);
        let theta = match pairing {
            Pairing::Bridged => theta.involution(),
            Pairing::Direct => theta,
        };
        for chi in group.characters() {
            if !group.is_primitive(&chi) {
                continue;
            }
            let dchi = DirichletCharacter::primitive_lift(&group, &chi);
            let b = gauss_sum(&dchi.inverse())? * ctx.l_value_twisted(&dchi, digits)?;
            raw.push((m, chi.id(), chi.evaluate(&theta), b));
        }
    }
    let pairs: Vec<(Complex64, Complex64)> = raw.iter().map(|r| (r.2, r.3)).collect();
    let c = fit(&pairs).ok_or_else(|| Error::InconsistentInput("every B_chi vanishes".into()))?;
    let per_modulus = moduli
        .iter()
        .filter_map(|&m| {
            let sub: Vec<_> = raw.iter().filter(|r| r.0 == m).map(|r| (r.2, r.3)).collect();
            fit(&sub).map(|c| (m, c))
        })
        .collect();
    let rows: Vec<SpecialValueRow> = raw
        .into_iter()
        .map(|(modulus, char_id, a_chi, b_chi)| SpecialValueRow {
            rel: (a_chi - c * b_chi).norm() / b_chi.norm().max(1.0),
            modulus,
            char_id,
            a_chi,
            b_chi,
        })
        .collect();
    let max_rel = rows.iter().map(|r| r.rel).fold(0.0, f64::max);
    Ok(SpecialValuesReport { pairing, c, per_modulus, rows, max_rel, tolerance: 1e-6 })
}
