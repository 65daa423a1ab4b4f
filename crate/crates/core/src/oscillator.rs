//! The su(2) finite oscillator in the `(2j+1)`-dimensional representation.
//!
//! States `|n>` (`n = 0..=N`, `N = 2j`) are the Hamiltonian eigenstates.
//! Position and momentum have the common spectrum `-j, -j+1, ..., j`.
//!
//! The ladder operators act with square roots `sqrt(u_k)`, `u_k = k(N+1-k)`.
//! Every operator here is stored after conjugation by
//! `D = diag(1, sqrt(u_1), sqrt(u_1 u_2), ...)`, which turns those entries
//! rational. Diagonal entries of any product of conjugated operators equal
//! the physical matrix elements `<n|...|n>`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::dyck::dyck_poly;
use crate::error::{Error, Result};
use crate::exact_math::{binomial, gaussian, int, rat, ExactMatrix, MultiPoly, Rational};
use crate::exact_math::{rational_sign, GaussianRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OscillatorModel {
    two_j: u32,
}

impl OscillatorModel {
    pub fn new(two_j: u32) -> Result<Self> {
        if two_j == 0 {
            return Err(Error::DomainError("2j must be a positive integer".into()));
        }
        Ok(Self { two_j })
    }

    pub fn two_j(&self) -> u32 {
        self.two_j
    }

    /// `N = 2j`; the representation has dimension `N + 1`.
    pub fn n(&self) -> usize {
        self.two_j as usize
    }

    pub fn dim(&self) -> usize {
        self.n() + 1
    }

    /// Node `q_k = p_k = -j + k`.
    pub fn node(&self, k: usize) -> Rational {
        rat(2 * k as i64 - self.two_j as i64, 2)
    }

    pub fn nodes(&self) -> Vec<Rational> {
        (0..self.dim()).map(|k| self.node(k)).collect()
    }

    /// `u_i = i (N + 1 - i)`, the squared ladder coefficients.
    pub fn ladder_weight(&self, i: usize) -> BigInt {
        BigInt::from(i) * BigInt::from(self.n() + 1 - i)
    }

    /// The map `u_i -> i (N + 1 - i)` for `i = 1..=N`.
    pub fn substitution(&self) -> BTreeMap<u32, Rational> {
        (1..=self.n())
            .map(|i| (i as u32, Rational::from_integer(self.ladder_weight(i))))
            .collect()
    }

    pub fn check_state(&self, n: usize) -> Result<()> {
        if n > self.n() {
            return Err(Error::DomainError(format!(
                "state index {n} outside 0..={}",
                self.n()
            )));
        }
        Ok(())
    }
}

/// Real number `sign * sqrt(square)`, kept without radicals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedSquare {
    pub sign: i8,
    pub square: Rational,
}

impl SignedSquare {
    pub fn mul(&self, other: &SignedSquare) -> SignedSquare {
        SignedSquare {
            sign: self.sign * other.sign,
            square: &self.square * &other.square,
        }
    }

    pub fn to_f64(&self) -> f64 {
        f64::from(self.sign) * crate::exact_math::to_f64(&self.square).sqrt()
    }
}

/// Krawtchouk polynomial `K_n(x; p, N)` as the terminating sum
/// `sum_i C(n,i) C(x,i) / C(N,i) * (-1/p)^i`, with `inv_p = 1/p`.
pub fn krawtchouk(n: usize, x: usize, inv_p: &Rational, big_n: usize) -> Result<Rational> {
    if n > big_n || x > big_n {
        return Err(Error::DomainError(format!(
            "Krawtchouk arguments n = {n}, x = {x} must lie in 0..={big_n}"
        )));
    }
    let step = -inv_p.clone();
    let mut power = Rational::one();
    let mut total = Rational::zero();
    for i in 0..=n.min(x) {
        let c = Rational::new(
            binomial(n as u64, i as u64) * binomial(x as u64, i as u64),
            binomial(big_n as u64, i as u64),
        );
        total += c * &power;
        power *= &step;
    }
    Ok(total)
}

/// `phi_n(q_k)` of the position eigenvector `|q_k>`, as sign and square.
pub fn phi_squared(n: usize, k: usize, model: &OscillatorModel) -> Result<SignedSquare> {
    model.check_state(n)?;
    model.check_state(k)?;
    let big_n = model.n();
    let kr = krawtchouk(n, k, &int(2), big_n)?;
    let parity = if n.is_multiple_of(2) { 1 } else { -1 };
    let sign = rational_sign(&kr) * parity;
    let weight = Rational::new(
        binomial(big_n as u64, n as u64) * binomial(big_n as u64, k as u64),
        BigInt::one() << big_n,
    );
    Ok(SignedSquare {
        sign,
        square: weight * &kr * &kr,
    })
}

/// Gauge-transformed position and momentum operators.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeOperators {
    /// `D q D^{-1}`: `1/2` above the diagonal, `u_k / 2` below.
    pub q_gauge: ExactMatrix<Rational>,
    /// `D p D^{-1}`: `-i/2` above the diagonal, `i u_k / 2` below.
    pub p_gauge: ExactMatrix<GaussianRational>,
}

impl GaugeOperators {
    pub fn new(model: &OscillatorModel) -> Self {
        let dim = model.dim();
        let half = rat(1, 2);
        let q_gauge = ExactMatrix::from_fn(dim, dim, |i, j| {
            if j == i + 1 {
                half.clone()
            } else if i == j + 1 {
                Rational::from_integer(model.ladder_weight(i)) * &half
            } else {
                Rational::zero()
            }
        });
        let p_gauge = ExactMatrix::from_fn(dim, dim, |i, j| {
            if j == i + 1 {
                gaussian(Rational::zero(), -half.clone())
            } else if i == j + 1 {
                gaussian(
                    Rational::zero(),
                    Rational::from_integer(model.ladder_weight(i)) * &half,
                )
            } else {
                GaussianRational::zero()
            }
        });
        Self { q_gauge, p_gauge }
    }

    /// `q_gauge` lifted to Gaussian rationals, for mixed products with `p_gauge`.
    pub fn q_complex(&self) -> ExactMatrix<GaussianRational> {
        self.q_gauge
            .map(|x| gaussian(x.clone(), Rational::zero()))
    }
}

/// The square-root-free tridiagonal matrix `Y'`: ones above the diagonal,
/// `u_1, ..., u_N` below it, zeros elsewhere.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolicY {
    matrix: ExactMatrix<MultiPoly>,
}

impl SymbolicY {
    pub fn new(big_n: usize) -> Self {
        let dim = big_n + 1;
        let matrix = ExactMatrix::from_fn(dim, dim, |i, j| {
            if j == i + 1 {
                MultiPoly::one()
            } else if i == j + 1 {
                MultiPoly::var(i as u32)
            } else {
                MultiPoly::zero()
            }
        });
        Self { matrix }
    }

    pub fn matrix(&self) -> &ExactMatrix<MultiPoly> {
        &self.matrix
    }

    pub fn power(&self, m: u32) -> ExactMatrix<MultiPoly> {
        self.matrix.pow(m).expect("Y' is square")
    }

    /// All powers `Y'^0 ..= Y'^max`.
    pub fn powers(&self, max: u32) -> Vec<ExactMatrix<MultiPoly>> {
        self.matrix.powers(max).expect("Y' is square")
    }
}

/// `Y'^m` by repeated squaring.
pub fn symbolic_power(y: &SymbolicY, m: u32) -> ExactMatrix<MultiPoly> {
    y.power(m)
}

/// `<n|q^{2r}|n> = sum_k q_k^{2r} |phi_n(q_k)|^2`.
pub fn q_moment_krawtchouk(n: usize, r: u32, model: &OscillatorModel) -> Result<Rational> {
    model.check_state(n)?;
    let mut total = Rational::zero();
    for k in 0..model.dim() {
        let node = model.node(k);
        if node.is_zero() && r > 0 {
            continue;
        }
        let phi = phi_squared(n, k, model)?;
        total += num_traits::pow(node, 2 * r as usize) * phi.square;
    }
    Ok(total)
}

/// `<n|q^{2r}|n> = 4^{-r} P_{r+n|N}^{(n,n)} / (u_1 ... u_n)` at `u_i = i(N+1-i)`.
pub fn q_moment_dyck(n: usize, r: u32, model: &OscillatorModel) -> Result<Rational> {
    model.check_state(n)?;
    let big_n = model.n();
    let poly = dyck_poly(r as usize + n, big_n, n, n);
    let subs = model.substitution();
    let value = poly.substitute(&subs)?;
    let norm: BigInt = (1..=n).map(|i| model.ladder_weight(i)).product();
    let four_r = BigInt::one() << (2 * r as usize);
    Ok(value / Rational::from_integer(norm * four_r))
}

/// Diagonal entry `(n, n)` of `q_gauge^{2r}` by exact matrix multiplication.
pub fn q_moment_matrix(n: usize, r: u32, model: &OscillatorModel) -> Result<Rational> {
    model.check_state(n)?;
    let q = GaugeOperators::new(model).q_gauge;
    let power = q.pow(2 * r)?;
    Ok(power[(n, n)].clone())
}

/// Diagonal of `q_gauge^{2r}` for `r = 0..=r_max`: row `r` holds `<n|q^{2r}|n>` for every `n`.
pub fn q_moment_table(r_max: u32, model: &OscillatorModel) -> Vec<Vec<Rational>> {
    let q = GaugeOperators::new(model).q_gauge;
    let q2 = q.mul(&q).expect("square");
    let mut out = Vec::with_capacity(r_max as usize + 1);
    let mut power = ExactMatrix::<Rational>::identity(model.dim());
    for r in 0..=r_max {
        if r > 0 {
            power = power.mul(&q2).expect("square");
        }
        out.push(power.diagonal());
    }
    out
}
