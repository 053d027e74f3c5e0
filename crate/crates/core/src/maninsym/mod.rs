//! Weight two modular symbols for `Gamma_0(N)`.
//!
//! Manin symbols `(c:d)` correspond to `g{0, inf}` for `g = [[a, b], [c, d]]`
//! in `SL_2(Z)`, with `Gamma_0(N)` acting on the left and matrices acting
//! on symbols from the right.

pub mod heilbronn;
mod p1;
pub mod paths;
mod period;
mod quotient;
mod space;

pub use p1::{p1_normalize, p1_size, ManinSymbol, P1List};
pub use period::{cut_eigenspace, RationalPeriodMap, CUT_PRIME_BOUND, NORMALIZATION_ID};
pub use quotient::Quotient;
pub use space::{ModularSymbolSpace, Sign};

/// Builds the space of level `N`.
pub fn build_space(level: u64) -> ModularSymbolSpace {
    ModularSymbolSpace::new(level)
}
