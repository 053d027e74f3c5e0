//! Elliptic curves over Q given by a minimal Weierstrass model, their
//! reductions modulo primes, and Fourier coefficient tables.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};

/// Primes above this bound are rejected by [`CurveData::reduce_mod_p`].
pub const DEFAULT_PRIME_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReductionKind {
    Good,
    SplitMultiplicative,
    NonsplitMultiplicative,
    Additive,
}

impl ReductionKind {
    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::Good => "good",
            ReductionKind::SplitMultiplicative => "split multiplicative",
            ReductionKind::NonsplitMultiplicative => "nonsplit multiplicative",
            ReductionKind::Additive => "additive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionInfo {
    pub prime: u64,
    pub kind: ReductionKind,
    pub ap: i64,
}

/// An elliptic curve `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` with
/// its (externally supplied) conductor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveData {
    coeffs: [BigInt; 5],
    conductor: u64,
    rank_hint: Option<u32>,
    label: Option<String>,
}

impl CurveData {
    /// Validates the model against the conductor: the discriminant must be
    /// nonzero, every prime of bad reduction must divide `N`, and the
    /// reduction type at each `p | N` must match `v_p(N)`.
    pub fn new(
        coeffs: [BigInt; 5],
        conductor: u64,
        rank_hint: Option<u32>,
        label: Option<String>,
    ) -> Result<Self> {
        let curve = Self {
            coeffs,
            conductor,
            rank_hint,
            label,
        };
        let disc = curve.discriminant();
        if disc.is_zero() {
            return Err(Error::DiscriminantZero);
        }
        if conductor < 11 {
            return Err(Error::ConductorTooSmall { conductor });
        }
        let mut rest = disc.abs();
        for (p, _) in arith::factor(conductor) {
            let p_big = BigInt::from(p);
            if !(&rest % &p_big).is_zero() {
                return Err(Error::InconsistentConductor {
                    prime: p,
                    valuation: arith::valuation(conductor, p),
                    found: ReductionKind::Good.name(),
                });
            }
            while (&rest % &p_big).is_zero() {
                rest /= &p_big;
            }
            curve.reduce_mod_p(p)?;
        }
        if !rest.is_one() {
            return Err(Error::InconsistentInput(alloc::format!(
                "discriminant {disc} has a prime factor not dividing the conductor {conductor}"
            )));
        }
        Ok(curve)
    }

    pub fn from_small(coeffs: [i64; 5], conductor: u64, rank: Option<u32>, label: &str) -> Result<Self> {
        Self::new(
            coeffs.map(BigInt::from),
            conductor,
            rank,
            Some(label.to_string()),
        )
    }

    pub fn coefficients(&self) -> &[BigInt; 5] {
        &self.coeffs
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn rank_hint(&self) -> Option<u32> {
        self.rank_hint
    }

    pub fn label(&self) -> &str {
        self.label.as_deref().unwrap_or("")
    }

    /// Stable identifier used for cache keys and reports.
    pub fn key(&self) -> String {
        let [a1, a2, a3, a4, a6] = &self.coeffs;
        alloc::format!("{a1},{a2},{a3},{a4},{a6};{}", self.conductor)
    }

    pub fn discriminant(&self) -> BigInt {
        let [a1, a2, a3, a4, a6] = &self.coeffs;
        let b2: BigInt = a1 * a1 + 4 * a2;
        let b4: BigInt = 2 * a4 + a1 * a3;
        let b6: BigInt = a3 * a3 + 4 * a6;
        let b8: BigInt = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        -(&b2 * &b2 * &b8) - 8 * &b4 * &b4 * &b4 - 27 * &b6 * &b6 + 9 * &b2 * &b4 * &b6
    }

    fn coeffs_mod(&self, p: u64) -> [u64; 5] {
        let m = BigInt::from(p);
        self.coeffs
            .clone()
            .map(|a| a.mod_floor(&m).to_u64().expect("residue fits"))
    }

    /// Number of projective points on the reduction mod `p` (including the
    /// singular point when the reduction is bad).
    pub fn count_points(&self, p: u64) -> u64 {
        let [a1, a2, a3, a4, a6] = self.coeffs_mod(p);
        if p == 2 {
            return count_points_exhaustive([a1, a2, a3, a4, a6], 2);
        }
        assert!(p < 1 << 31, "prime too large for word-size point counting");
        // Number of square roots of each residue, indexed by residue.
        let mut roots = alloc::vec![0u8; p as usize];
        let mut sq = 0u64;
        for y in 0..p {
            roots[sq as usize] += 1;
            sq = (sq + 2 * y + 1) % p;
        }
        let mut count = 1u64;
        for x in 0..p {
            let rhs = (((x + a2) * x % p + a4) * x + a6) % p;
            let lin = (a1 * x + a3) % p;
            let disc = (lin * lin + 4 * rhs) % p;
            count += roots[disc as usize] as u64;
        }
        count
    }

    pub fn reduce_mod_p(&self, p: u64) -> Result<ReductionInfo> {
        self.reduce_mod_p_bounded(p, DEFAULT_PRIME_BOUND)
    }

    pub fn reduce_mod_p_bounded(&self, p: u64, bound: u64) -> Result<ReductionInfo> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if p > bound {
            return Err(Error::PrimeTooLarge { prime: p, bound });
        }
        let ap = p as i64 + 1 - self.count_points(p) as i64;
        let singular = (self.discriminant() % BigInt::from(p)).is_zero();
        let kind = if !singular {
            ReductionKind::Good
        } else {
            match ap {
                1 => ReductionKind::SplitMultiplicative,
                -1 => ReductionKind::NonsplitMultiplicative,
                _ => ReductionKind::Additive,
            }
        };
        let v = arith::valuation(self.conductor, p);
        let consistent = match kind {
            ReductionKind::Good => v == 0,
            ReductionKind::SplitMultiplicative | ReductionKind::NonsplitMultiplicative => v == 1,
            ReductionKind::Additive => v >= 2 && ap == 0,
        };
        if !consistent {
            return Err(Error::InconsistentConductor {
                prime: p,
                valuation: v,
                found: kind.name(),
            });
        }
        Ok(ReductionInfo { prime: p, kind, ap })
    }

    /// Traces `a_p` for every prime `p <= p_max`.
    pub fn ap_table(&self, p_max: u64) -> Result<BTreeMap<u64, i64>> {
        arith::primes_up_to(p_max)
            .into_iter()
            .map(|p| self.reduce_mod_p(p).map(|r| (p, r.ap)))
            .collect()
    }

    /// Fourier coefficients `a_1..a_{n_max}`; index 0 of the result is unused and set to 0.
    pub fn an_table(&self, n_max: usize) -> Result<Vec<i64>> {
        let aps = self.ap_table(n_max as u64)?;
        Ok(an_from_ap(&aps, self.conductor, n_max))
    }

    /// Parses the fixture-line format `label;a1,a2,a3,a4,a6;N;rank` with `rank` possibly `?`.
    pub fn from_fixture_line(line: &str) -> core::result::Result<Self, FixtureError> {
        let fields: Vec<&str> = line.trim().split(';').map(str::trim).collect();
        let [label, coeffs, conductor, rank] = fields[..] else {
            return Err(FixtureError::Syntax(alloc::format!(
                "expected 4 ';'-separated fields, found {}",
                fields.len()
            )));
        };
        let coeffs: Vec<BigInt> = coeffs
            .split(',')
            .map(|c| c.trim().parse::<BigInt>())
            .collect::<core::result::Result<_, _>>()
            .map_err(|e| FixtureError::Syntax(alloc::format!("bad coefficient: {e}")))?;
        let coeffs: [BigInt; 5] = coeffs
            .try_into()
            .map_err(|_| FixtureError::Syntax("expected 5 coefficients".into()))?;
        let conductor = conductor
            .parse::<u64>()
            .map_err(|e| FixtureError::Syntax(alloc::format!("bad conductor: {e}")))?;
        let rank = match rank {
            "?" => None,
            r => Some(
                r.parse::<u32>()
                    .map_err(|e| FixtureError::Syntax(alloc::format!("bad rank: {e}")))?,
            ),
        };
        CurveData::new(coeffs, conductor, rank, Some(label.to_string())).map_err(FixtureError::Curve)
    }
}

/// Failure to read one fixture line.
#[derive(Debug, Clone, PartialEq)]
pub enum FixtureError {
    Syntax(String),
    Curve(Error),
}

impl fmt::Display for FixtureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureError::Syntax(m) => f.write_str(m),
            FixtureError::Curve(e) => write!(f, "{e}"),
        }
    }
}

/// Parses a whole fixture file; blank lines and `#` comments are skipped.
pub fn parse_fixtures(text: &str) -> Result<Vec<CurveData>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        match CurveData::from_fixture_line(t) {
            Ok(c) => out.push(c),
            Err(FixtureError::Curve(e @ Error::DiscriminantZero)) => return Err(e),
            Err(e) => {
                return Err(Error::Parse {
                    line: i + 1,
                    message: e.to_string(),
                })
            }
        }
    }
    Ok(out)
}

/// Builds `a_1..a_{n_max}` from prime traces via the Euler product.
pub fn an_from_ap(aps: &BTreeMap<u64, i64>, conductor: u64, n_max: usize) -> Vec<i64> {
    let spf = arith::smallest_prime_factors(n_max);
    let mut an = alloc::vec![0i64; n_max + 1];
    if n_max >= 1 {
        an[1] = 1;
    }
    for n in 2..=n_max {
        let p = spf[n] as usize;
        let mut m = n;
        let mut k = 0;
        while m % p == 0 {
            m /= p;
            k += 1;
        }
        let pk = n / m;
        if m > 1 {
            an[n] = an[pk] * an[m];
            continue;
        }
        let ap = aps[&(p as u64)];
        an[n] = if k == 1 {
            ap
        } else if conductor % p as u64 == 0 {
            ap * an[pk / p]
        } else {
            ap * an[pk / p] - p as i64 * an[pk / (p * p)]
        };
    }
    an
}

/// Counts projective points by enumerating every `(x, y)` in `F_p^2`.
pub fn count_points_exhaustive(coeffs: [u64; 5], p: u64) -> u64 {
    let [a1, a2, a3, a4, a6] = coeffs.map(|a| a % p);
    let mut count = 1;
    for x in 0..p {
        for y in 0..p {
            let lhs = (y * y + a1 * x % p * y + a3 * y) % p;
            let rhs = (x * x % p * x + a2 * x % p * x + a4 * x + a6) % p;
            if lhs == rhs {
                count += 1;
            }
        }
    }
    count
}

/// The curves used throughout the test battery.
pub mod fixtures {
    use super::CurveData;

    pub fn e11() -> CurveData {
        CurveData::from_small([0, -1, 1, -10, -20], 11, Some(0), "11a1").expect("valid fixture")
    }

    pub fn e37() -> CurveData {
        CurveData::from_small([0, 0, 1, -1, 0], 37, Some(1), "37a1").expect("valid fixture")
    }

    pub fn e389() -> CurveData {
        CurveData::from_small([0, 1, 1, -2, 0], 389, Some(2), "389a1").expect("valid fixture")
    }

    pub fn e36() -> CurveData {
        CurveData::from_small([0, 0, 0, 0, 1], 36, Some(0), "36a1").expect("valid fixture")
    }

    pub fn battery() -> [CurveData; 3] {
        [e11(), e37(), e389()]
    }

    pub const FIXTURE_FILE: &str = "\
# label;a1,a2,a3,a4,a6;N;rank
11a1;0,-1,1,-10,-20;11;0
37a1;0,0,1,-1,0;37;1
389a1;0,1,1,-2,0;389;2
";
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn e11_reductions() {
        let e = e11();
        assert_eq!(
            e.reduce_mod_p(11).unwrap(),
            ReductionInfo { prime: 11, kind: ReductionKind::SplitMultiplicative, ap: 1 }
        );
        assert_eq!(
            e.reduce_mod_p(2).unwrap(),
            ReductionInfo { prime: 2, kind: ReductionKind::Good, ap: -2 }
        );
        assert_eq!(e.count_points(2), 5);
        assert_eq!(e.reduce_mod_p(3).unwrap().ap, -1);
    }

    #[test]
    fn additive_and_split_examples() {
        let e = e36();
        let r = e.reduce_mod_p(3).unwrap();
        assert_eq!((r.kind, r.ap), (ReductionKind::Additive, 0));
        assert_eq!(e.reduce_mod_p(2).unwrap().kind, ReductionKind::Additive);
        let r = e37().reduce_mod_p(37).unwrap();
        assert_eq!((r.kind, r.ap), (ReductionKind::NonsplitMultiplicative, -1));
        assert_eq!(e389().reduce_mod_p(389).unwrap().kind, ReductionKind::SplitMultiplicative);
    }

    #[test]
    fn conductor_is_validated() {
        let bad = CurveData::from_small([0, -1, 1, -10, -20], 22, None, "x");
        assert!(matches!(bad, Err(Error::InconsistentConductor { prime: 2, .. })));
        let bad = CurveData::from_small([0, -1, 1, -10, -20], 121, None, "x");
        assert!(matches!(bad, Err(Error::InconsistentConductor { prime: 11, .. })));
        let bad = CurveData::from_small([0, 0, 1, -1, 0], 1, None, "x");
        assert!(matches!(bad, Err(Error::ConductorTooSmall { .. })));
        let bad = CurveData::from_small([0, 0, 0, 0, 0], 11, None, "x");
        assert_eq!(bad, Err(Error::DiscriminantZero));
    }

    #[test]
    fn ap_and_an_tables() {
        let e = e11();
        let t = e.ap_table(2).unwrap();
        assert_eq!(t.into_iter().collect::<Vec<_>>(), [(2, -2)]);
        let an = e.an_table(30).unwrap();
        assert_eq!(an[1], 1);
        assert_eq!(an[4], 2);
        assert_eq!(an[6], an[2] * an[3]);
        assert_eq!(an[11], 1);
        // q-expansion of the weight 2 newform of level 11.
        assert_eq!(&an[1..11], &[1, -2, -1, 2, 1, 2, -2, 0, -2, -2]);
        let an37 = e37().an_table(10).unwrap();
        assert_eq!(&an37[1..11], &[1, -2, -3, 2, -2, 6, -1, 0, 6, 4]);
    }

    #[test]
    fn fixture_lines() {
        let c = CurveData::from_fixture_line("11a1;0,-1,1,-10,-20;11;0").unwrap();
        assert_eq!(c, e11());
        let c = CurveData::from_fixture_line("37a1;0,0,1,-1,0;37;1").unwrap();
        assert_eq!(c, e37());
        assert!(matches!(
            CurveData::from_fixture_line("bad;0,0,0,0,0;1;0"),
            Err(FixtureError::Curve(Error::DiscriminantZero))
        ));
        let c = CurveData::from_fixture_line("x;0,0,1,-1,0;37;?").unwrap();
        assert_eq!(c.rank_hint(), None);
        assert_eq!(parse_fixtures(fixtures::FIXTURE_FILE).unwrap().len(), 3);
        let err = parse_fixtures("11a1;0,-1,1,-10,-20;11;0\n\nnope;1,2;3;4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }
}
