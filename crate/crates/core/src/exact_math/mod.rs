//! Exact scalars, sparse multivariate polynomials and dense matrices.

mod matrix;
mod poly;
mod rational;

pub use matrix::{ExactMatrix, Ring};
pub use poly::{Monomial, MultiPoly, PolyTerm};
pub use rational::{
    binomial, format_rational, gaussian, int, parse_rational, rat, rational_sign, to_decimal_string, to_f64,
    GaussianRational, Rational,
};
