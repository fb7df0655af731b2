//! Exceptional X1-Jacobi and X1-Laguerre orthogonal polynomials.

pub mod classical;
pub mod error;
pub mod exec;
pub mod operators;
pub mod poly;
pub mod quadrature;
pub mod ratfun;
pub mod report;
pub mod roots;
pub mod rodrigues;
pub mod scalar;
pub mod suite;
pub mod x1;

pub use error::{Error, Result};
pub use exec::Exec;
pub use poly::Poly;
pub use ratfun::RatFun;
pub use scalar::{Field, Rational, Scalar};
