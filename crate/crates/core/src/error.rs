use thiserror::Error;

/// Errors raised by polynomial arithmetic, criteria, and the oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero polynomial has no content")]
    ZeroPolynomial,
    #[error("polynomial is not primitive: normalize first")]
    NotPrimitive,
    #[error("constant term is zero: normalize first")]
    ZeroConstantTerm,
    #[error("root at origin inside every disk")]
    RootAtOrigin,
    #[error("invalid divisor {divisor}: must be a positive divisor of the leading coefficient")]
    InvalidDivisor { divisor: String },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("factorization limit: {0} resists factorization under the configured bound")]
    FactorizationLimit(String),
    #[error("no prime divisor: |{0}| <= 1")]
    NoPrimeDivisor(String),
    #[error("invalid radius: disk radius must be positive")]
    InvalidRadius,
    #[error("root finder did not converge (best residual {best_residual:e})")]
    NonConvergence { best_residual: f64 },
    #[error("incomplete root partition: inner {inner} + outer {outer} != degree {degree}")]
    IncompletePartition {
        inner: usize,
        outer: usize,
        degree: usize,
    },
    #[error("oracle limit: {0}")]
    OracleLimit(String),
    #[error("side condition violated: {0}")]
    SideCondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
