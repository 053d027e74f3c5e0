use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

use super::heilbronn;
use super::p1::P1List;
use super::paths;
use super::space::{ModularSymbolSpace, Sign};
use crate::curve::CurveData;
use crate::error::{Error, Result};
use crate::linalg::{self, Rational};

/// Largest prime tried while cutting out the eigenline.
pub const CUT_PRIME_BOUND: u64 = 1000;

/// Identifier of the normalization applied to the dual vector.
pub const NORMALIZATION_ID: &str = "gcd1-first-positive";

/// The plus modular symbol `q ↦ [q]` of a curve, scaled to be integral
/// with coprime values on Manin generators.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalPeriodMap {
    curve_key: String,
    level: u64,
    p1: P1List,
    dual: Vec<Rational>,
    values: Vec<i64>,
    primes_used: Vec<u64>,
}

/// Intersects `ker(T_p - a_p)` on the plus quotient over good primes in
/// increasing order until a line remains.
pub fn cut_eigenspace(space: &ModularSymbolSpace, curve: &CurveData) -> Result<RationalPeriodMap> {
    let level = space.level();
    if curve.conductor() != level {
        return Err(Error::InconsistentInput(alloc::format!(
            "curve conductor {} does not match space level {level}",
            curve.conductor()
        )));
    }
    let dim = space.dimension(Sign::Plus);
    let mut constraints: Vec<Vec<Rational>> = Vec::new();
    let mut used = Vec::new();
    let mut kernel = linalg::identity(dim);
    for p in space.good_primes(CUT_PRIME_BOUND) {
        let ap = curve.reduce_mod_p(p)?.ap;
        let mut t = space.hecke_matrix(p, Sign::Plus);
        for (i, row) in t.iter_mut().enumerate() {
            row[i] -= Rational::from_integer(ap.into());
        }
        constraints.extend(t);
        linalg::rref(&mut constraints);
        used.push(p);
        kernel = linalg::kernel(&constraints, dim);
        match kernel.len() {
            0 => return Err(Error::EigenspaceEmpty { prime: p }),
            1 => break,
            _ => {}
        }
    }
    if kernel.len() != 1 {
        return Err(Error::EigenspaceNotRankOne { dim: kernel.len(), bound: CUT_PRIME_BOUND });
    }
    RationalPeriodMap::from_dual(space, curve, kernel.pop().unwrap(), used)
}

impl RationalPeriodMap {
    /// Normalizes an arbitrary nonzero functional on the plus quotient.
    pub fn from_dual(
        space: &ModularSymbolSpace,
        curve: &CurveData,
        dual: Vec<Rational>,
        primes_used: Vec<u64>,
    ) -> Result<Self> {
        let q = space.quotient(Sign::Plus);
        let raw: Vec<Rational> = q
            .coords
            .iter()
            .map(|c| c.iter().zip(&dual).fold(Rational::zero(), |acc, (x, y)| acc + x * y))
            .collect();
        let mut ints = linalg::scale_to_primitive_integers(&raw);
        let Some(first) = raw.iter().position(|x| !x.is_zero()) else {
            return Err(Error::InconsistentInput("zero functional".into()));
        };
        if ints[first].is_negative() {
            ints.iter_mut().for_each(|x| *x = -&*x);
        }
        let factor = Rational::from_integer(ints[first].clone()) / &raw[first];
        let values = ints
            .iter()
            .map(|x| x.to_i64().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            curve_key: curve.key(),
            level: space.level(),
            p1: space.p1().clone(),
            dual: dual.iter().map(|x| x * &factor).collect(),
            values,
            primes_used,
        })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn curve_key(&self) -> &str {
        &self.curve_key
    }

    pub fn normalization_id(&self) -> &'static str {
        NORMALIZATION_ID
    }

    /// The functional in plus-quotient coordinates.
    pub fn dual(&self) -> &[Rational] {
        &self.dual
    }

    /// Values on the Manin generators, in generator order.
    pub fn generator_values(&self) -> &[i64] {
        &self.values
    }

    pub fn primes_used(&self) -> &[u64] {
        &self.primes_used
    }

    /// gcd of the generator values; 1 for a normalized map.
    pub fn content(&self) -> u64 {
        self.values.iter().fold(0, |g, &v| crate::arith::gcd(g, v.unsigned_abs()))
    }

    /// `[num/den]`; depends only on `num/den mod 1` and is even.
    pub fn value_at(&self, num: i64, den: i64) -> i64 {
        if den == 0 {
            return 0;
        }
        paths::symbols_to_cusp(num, den)
            .into_iter()
            .map(|(c, d, m)| m * self.values[self.p1.index(c, d).expect("unimodular segment")])
            .sum()
    }

    pub fn symbol_value(&self, q: Ratio<i64>) -> i64 {
        self.value_at(*q.numer(), *q.denom())
    }

    /// `a` with `T(psi) = a * psi`, computed from the action on generators.
    pub fn hecke_eigenvalue(&self, p: u64) -> Result<i64> {
        let family = if self.level % p == 0 { heilbronn::merel(p) } else { heilbronn::cremona(p) };
        let image: Vec<i64> = (0..self.p1.len())
            .map(|g| {
                family
                    .iter()
                    .filter_map(|m| self.p1.apply_matrix(g, *m))
                    .map(|h| self.values[h])
                    .sum()
            })
            .collect();
        proportionality(&self.values, &image)
    }

    /// Eigenvalue of the Fricke involution on the eigenline.
    pub fn fricke_eigenvalue(&self) -> Result<i64> {
        let n = self.level as i64;
        let image: Vec<i64> = (0..self.p1.len())
            .map(|g| {
                let [a, b, c, d] = self.p1.lift_to_sl2(g);
                self.value_at(-c, n * a) - self.value_at(-d, n * b)
            })
            .collect();
        let eps = proportionality(&self.values, &image)?;
        if eps.abs() != 1 {
            return Err(Error::NotEigenvector);
        }
        Ok(eps)
    }

    /// `index;c;d;value` per generator.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, (&(c, d), v)) in self.p1.pairs().iter().zip(&self.values).enumerate() {
            let _ = writeln!(out, "{i};{c};{d};{v}");
        }
        out
    }

    /// Reassembles a map from its serialized parts; the dump format only
    /// carries generator values, so the dual is recomputed from them.
    pub fn from_parts(
        space: &ModularSymbolSpace,
        curve: &CurveData,
        values: Vec<i64>,
        primes_used: Vec<u64>,
    ) -> Result<Self> {
        let q = space.quotient(Sign::Plus);
        if values.len() != q.coords.len() {
            return Err(Error::InconsistentInput("generator count mismatch".into()));
        }
        let dual: Vec<Rational> = q
            .basis
            .iter()
            .map(|&g| Rational::from_integer(BigInt::from(values[g])))
            .collect();
        let map = Self::from_dual(space, curve, dual, primes_used)?;
        if map.values != values {
            return Err(Error::InconsistentInput("values are not a normalized functional".into()));
        }
        Ok(map)
    }
}

/// `lambda` with `image = lambda * values`, which must be an integer.
fn proportionality(values: &[i64], image: &[i64]) -> Result<i64> {
    let k = values.iter().position(|&v| v != 0).ok_or(Error::NotEigenvector)?;
    if image[k] % values[k] != 0 {
        return Err(Error::NotEigenvector);
    }
    let lambda = image[k] / values[k];
    if values.iter().zip(image).all(|(&v, &w)| w == lambda * v) {
        Ok(lambda)
    } else {
        Err(Error::NotEigenvector)
    }
}
