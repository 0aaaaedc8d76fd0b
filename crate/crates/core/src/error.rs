//! Error type shared by every module of the crate.

use num::BigInt;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong, split into rejected inputs and broken
/// internal identities. The two kinds matter to callers: bad input is the
/// user's problem, a broken identity is a bug in this crate's formulas.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ruling index must be nonnegative, got {n}")]
    NegativeRulingIndex { n: BigInt },

    #[error("divisors live on different surfaces: F_{left} vs F_{right}")]
    SurfaceMismatch { left: BigInt, right: BigInt },

    #[error("scroll parameters must satisfy a >= b >= 1, got a = {a}, b = {b}")]
    InvalidScroll { a: BigInt, b: BigInt },

    #[error("interval bounds must satisfy 0 <= lo <= hi, got [{lo}, {hi}]")]
    EmptyInterval { lo: BigInt, hi: BigInt },

    #[error("no choice of dimensions inside the given ranges attains chi = {chi}")]
    ChiInfeasible { chi: BigInt },

    #[error(
        "Euler characteristics are not additive: chi(middle) = {middle} \
         but chi(left) + chi(right) = {sum}"
    )]
    ChiNotAdditive { middle: BigInt, sum: BigInt },

    #[error("dimension constraints are contradictory: {context}")]
    Contradiction { context: String },

    #[error("divisibility of the zero class is undefined")]
    ZeroClass,

    #[error("self-intersection {self_int} does not define a genus (must be even and >= 2)")]
    GenusUndefined { self_int: BigInt },

    #[error("genus must be at least 3, got {g}")]
    GenusTooSmall { g: BigInt },

    #[error("model {model} requires n >= {min}, got {n}")]
    ModelParameterTooSmall {
        model: &'static str,
        min: i64,
        n: BigInt,
    },

    #[error("bundle bidegrees must both be >= 1, got ({n0}, {n1})")]
    InvalidBundleDegrees { n0: BigInt, n1: BigInt },

    #[error("product of classes of codimension {left} and {right} overflows a threefold")]
    CodimensionOverflow { left: u32, right: u32 },

    #[error("internal invariant violation: {context}")]
    Internal { context: String },
}

impl Error {
    /// Shorthand for an internal-invariant failure.
    pub fn internal(context: impl Into<String>) -> Self {
        Error::Internal {
            context: context.into(),
        }
    }

    /// True when the error signals a broken identity inside this crate
    /// (as opposed to an input the caller should fix).
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Contradiction { .. } | Error::Internal { .. }
        )
    }
}
