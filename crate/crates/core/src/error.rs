use thiserror::Error;

/// Errors raised by the verification engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The sequences are only defined for `k >= 1`.
    #[error("parameter k must be at least 1")]
    ZeroK,

    #[error("parameter k = {0} is too large")]
    KTooLarge(u64),

    /// Two ring elements (or polynomials) built over different `t^2 = d`.
    #[error("ring mismatch: t^2 = {left} vs t^2 = {right}")]
    RingMismatch { left: u64, right: u64 },

    /// A scaling that must be exact left a remainder.
    #[error("inexact division: {0}")]
    Inexact(String),

    #[error("theorem {theorem} does not take parameter {param}")]
    InvalidParams { theorem: &'static str, param: &'static str },

    #[error("theorem {theorem} requires parameter {param}")]
    MissingParam { theorem: &'static str, param: &'static str },

    #[error("quadrature rule size must be in 1..=256, got {0}")]
    RuleSize(usize),

    #[error("Newton iteration did not converge for m = {m}, root {index}")]
    NoConvergence { m: usize, index: usize },

    #[error("malformed b-file line {line}: {text:?}")]
    BFileSyntax { line: usize, text: String },

    #[error("unknown OEIS id {0}")]
    UnknownOeisId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
