//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// (p,q) = (0,0), a negative rank, or a main type with a zero rank.
    #[error("rank error: {0}")]
    Rank(String),

    /// A zero-rank summand carrying nonzero degree.
    #[error("degree error: {0}")]
    Degree(String),

    /// Curve data violating the canonical-twist constraint.
    #[error("curve error: {0}")]
    Curve(String),

    /// Wall/chamber enumeration needs a finite window.
    #[error("window is unbounded; supply a finite window")]
    WindowUnbounded,

    /// A window is required (p = q has an infinite admissible range).
    #[error("window required: the admissible range is infinite for p = q")]
    WindowRequired,

    /// Parameter outside the admissible range [alpha_m, alpha_M].
    #[error("alpha {alpha} outside the admissible range {range}")]
    OutOfRange { alpha: String, range: String },

    /// deg(L) < 2g-2 violates the vanishing-lemma hypothesis.
    #[error("hypothesis failure: deg(L) = {deg_l} < 2g-2 = {min}")]
    Hypothesis { deg_l: i64, min: i64 },

    /// Operations requiring deg(L) >= 1.
    #[error("deg(L) = {0} must be >= 1")]
    DegLNonpositive(i64),

    /// Brute-force degree radius below the analytic exhaustiveness bound.
    #[error("degree radius {radius} below required bound {required}")]
    RadiusTooSmall { radius: i64, required: i64 },

    /// Invalid user input (CLI parsing, malformed values).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
