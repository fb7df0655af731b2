use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mixed exact and floating-point operands")]
    BackendMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parameter degeneracy: {0}")]
    Degenerate(String),
    #[error("gamma function pole at {0}")]
    GammaPole(f64),
    #[error("result is not a polynomial: {0}")]
    NotPolynomial(String),
    #[error("iteration did not converge: {0}")]
    NoConvergence(String),
    #[error("ill-conditioned: {0}")]
    IllConditioned(String),
    #[error("this check requires exact rational parameters")]
    ExactRequired,
    #[error("{0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
