//! Exact discrete Wigner matrices for the su(2) finite oscillator.
//!
//! The crate computes the pre-Wigner matrices `Z(n)` and Wigner matrices
//! `W(n) = V^{-T} Z(n) V^{-1}` of the (2j+1)-dimensional su(2) oscillator in
//! exact rational arithmetic. Two independent routes produce the even
//! position moments `<n|q^{2r}|n>`: sums over squared Krawtchouk polynomials,
//! and evaluation of Dyck polynomials (weighted sums over Dyck paths). A
//! brute-force Weyl symmetrization of the gauge-transformed operators serves
//! as the oracle for both.
//!
//! Modules:
//! - [`exact_math`]: big rationals, Gaussian rationals, sparse multivariate
//!   polynomials and dense exact matrices.
//! - [`dyck`]: Dyck path enumeration, weights, Dyck polynomials and related
//!   generating functions.
//! - [`oscillator`]: Krawtchouk polynomials, wavefunctions, gauge operators,
//!   the symbolic tridiagonal matrix and the moment routes.
//! - [`wigner`]: pre-Wigner assembly, Vandermonde systems, Wigner matrices and
//!   marginals.

pub mod dyck;
pub mod error;
pub mod exact_math;
pub mod guard;
pub mod oscillator;
pub mod wigner;

pub use error::{Error, Result};
pub use exact_math::{ExactMatrix, GaussianRational, Monomial, MultiPoly, Rational};
