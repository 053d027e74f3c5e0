use alloc::string::String;

/// Errors raised by the core engine.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("discriminant of the Weierstrass model is zero")]
    DiscriminantZero,
    #[error("conductor {conductor} is too small (must be at least 11)")]
    ConductorTooSmall { conductor: u64 },
    #[error("reduction at p={prime} is {found} but v_p(N)={valuation}")]
    InconsistentConductor {
        prime: u64,
        valuation: u32,
        found: &'static str,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {prime} exceeds the point-counting bound {bound}")]
    PrimeTooLarge { prime: u64, bound: u64 },
    #[error("({c}:{d}) is not a point of P^1(Z/{level})")]
    NotProjectivePoint { level: u64, c: i64, d: i64 },
    #[error("eigenspace still has dimension {dim} after primes up to {bound}")]
    EigenspaceNotRankOne { dim: usize, bound: u64 },
    #[error("eigenspace became empty at p={prime}")]
    EigenspaceEmpty { prime: u64 },
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
    #[error("the eigenline is not stable under the Fricke involution")]
    NotEigenvector,
    #[error("modulus {0} is too small (must be at least 3)")]
    ModulusTooSmall(u64),
    #[error("{a} is not a unit modulo {modulus}")]
    NotAUnit { a: i64, modulus: u64 },
    #[error("{divisor} does not divide {modulus}")]
    NotADivisor { divisor: u64, modulus: u64 },
    #[error("character has conductor {conductor}, not {modulus}")]
    NotPrimitive { conductor: u64, modulus: u64 },
    #[error("L-value did not stabilise: truncations differ by {discrepancy:e}")]
    PrecisionNotReached { discrepancy: f64 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("element is not defined over the requested coefficient ring")]
    NotInRing,
    #[error("value does not fit in a machine integer")]
    Overflow,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = core::result::Result<T, Error>;
