//! Pre-Wigner matrices `Z(n)`, Vandermonde systems and Wigner matrices `W(n)`.
//!
//! Index conventions: `Z(n)_{a,b}` is the Weyl-ordered average of `p^a q^b`;
//! `W(n)_{k,l}` is the weight of the phase-space point `(p_k, q_l)`. The
//! defining property is `V^T W V = Z` with `V[k][a] = x_k^a`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_math::{binomial, int, ExactMatrix, GaussianRational, Rational};
use crate::guard::CostGuard;
use crate::oscillator::{
    phi_squared, q_moment_dyck, q_moment_krawtchouk, GaugeOperators, OscillatorModel,
};

/// How the position moments behind `Z(n)` are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// Squared Krawtchouk wavefunctions.
    Krawtchouk,
    /// Dyck polynomials evaluated at `u_i = i(N+1-i)`.
    Dyck,
    /// Direct Weyl symmetrization of the gauge operators.
    Oracle,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Krawtchouk, Route::Dyck, Route::Oracle];

    pub fn name(&self) -> &'static str {
        match self {
            Route::Krawtchouk => "krawtchouk",
            Route::Dyck => "dyck",
            Route::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "krawtchouk" => Ok(Route::Krawtchouk),
            "dyck" => Ok(Route::Dyck),
            "oracle" => Ok(Route::Oracle),
            other => Err(Error::Parse(format!("unknown route {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PreWignerMatrix {
    pub n: usize,
    pub entries: ExactMatrix<Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WignerMatrix {
    pub n: usize,
    /// Row `k` is the momentum node `p_k`, column `l` the position node `q_l`.
    pub entries: ExactMatrix<Rational>,
}

impl WignerMatrix {
    pub fn total(&self) -> Rational {
        let mut sum = Rational::zero();
        for k in 0..self.entries.rows() {
            for x in self.entries.row(k) {
                sum += x;
            }
        }
        sum
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VandermondeSystem {
    pub nodes: Vec<Rational>,
    /// `v[k][a] = nodes[k]^a`.
    pub v: ExactMatrix<Rational>,
    pub v_inv: ExactMatrix<Rational>,
}

pub fn vandermonde_inverse(nodes: &[Rational]) -> Result<VandermondeSystem> {
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if nodes[i] == nodes[j] {
                return Err(Error::DuplicateNodes(i, j));
            }
        }
    }
    let m = nodes.len();
    let v = ExactMatrix::from_fn(m, m, |k, a| num_traits::pow(nodes[k].clone(), a));
    let v_inv = v.inverse()?;
    Ok(VandermondeSystem {
        nodes: nodes.to_vec(),
        v,
        v_inv,
    })
}

/// Sums over all orderings of `a` factors `p` and `b` factors `q`, for every
/// `a <= max_a`, `b <= max_b`. Entry `[a][b]` is the coefficient of
/// `lambda^a mu^b` in `(lambda p + mu q)^{a+b}`.
fn ordering_sums(
    p: &ExactMatrix<GaussianRational>,
    q: &ExactMatrix<GaussianRational>,
    max_a: usize,
    max_b: usize,
) -> Vec<Vec<ExactMatrix<GaussianRational>>> {
    let dim = p.rows();
    let mut table: Vec<Vec<ExactMatrix<GaussianRational>>> = Vec::with_capacity(max_a + 1);
    for a in 0..=max_a {
        let mut row = Vec::with_capacity(max_b + 1);
        for b in 0..=max_b {
            let entry = if a == 0 && b == 0 {
                ExactMatrix::identity(dim)
            } else {
                let mut acc = ExactMatrix::zeros(dim, dim);
                if a > 0 {
                    let t = p.mul(&table[a - 1][b]).expect("square");
                    acc = acc.add(&t).expect("square");
                }
                if b > 0 {
                    let t: &ExactMatrix<GaussianRational> = &row[b - 1];
                    acc = acc.add(&q.mul(t).expect("square")).expect("square");
                }
                acc
            };
            row.push(entry);
        }
        table.push(row);
    }
    table
}

fn average(sum: &ExactMatrix<GaussianRational>, a: usize, b: usize) -> ExactMatrix<GaussianRational> {
    let c = Rational::from_integer(binomial((a + b) as u64, a as u64));
    sum.map(|x| GaussianRational::new(&x.re / &c, &x.im / &c))
}

/// Weyl-ordered `p^a q^b` in gauge form: the average over all `C(a+b, a)`
/// orderings of `a` copies of `p_gauge` and `b` copies of `q_gauge`.
pub fn weyl_operator(
    a: usize,
    b: usize,
    model: &OscillatorModel,
    guard: &CostGuard,
) -> Result<ExactMatrix<GaussianRational>> {
    guard.check_two_j(model.two_j())?;
    guard.check_weyl(a as u32, b as u32)?;
    let ops = GaugeOperators::new(model);
    let table = ordering_sums(&ops.p_gauge, &ops.q_complex(), a, b);
    Ok(average(&table[a][b], a, b))
}

fn real_diagonal(m: &ExactMatrix<GaussianRational>, n: usize) -> Result<Rational> {
    let x = &m[(n, n)];
    if !x.im.is_zero() {
        return Err(Error::DomainError(format!(
            "diagonal entry ({n}, {n}) of a Weyl-ordered operator is not real"
        )));
    }
    Ok(x.re.clone())
}

/// `Z(n)` assembled from even moments: `Z_{2a,2b} = C(a+b,a)/C(2a+2b,2a) * m(a+b)`.
fn assemble_from_moments(n: usize, dim: usize, moments: &[Rational]) -> PreWignerMatrix {
    let entries = ExactMatrix::from_fn(dim, dim, |i, j| {
        if i % 2 == 1 || j % 2 == 1 {
            return Rational::zero();
        }
        let (a, b) = ((i / 2) as u64, (j / 2) as u64);
        let ratio = Rational::new(binomial(a + b, a), binomial(2 * (a + b), 2 * a));
        ratio * &moments[(a + b) as usize]
    });
    PreWignerMatrix { n, entries }
}

/// The pre-Wigner matrix `Z(n)` by the chosen route.
pub fn pre_wigner(
    n: usize,
    model: &OscillatorModel,
    route: Route,
    guard: &CostGuard,
) -> Result<PreWignerMatrix> {
    model.check_state(n)?;
    guard.check_two_j(model.two_j())?;
    let big_n = model.n();
    let dim = model.dim();
    let r_max = 2 * (big_n / 2);
    match route {
        Route::Krawtchouk | Route::Dyck => {
            guard.check_moment(r_max as u32)?;
            let moments = (0..=r_max as u32)
                .map(|r| match route {
                    Route::Krawtchouk => q_moment_krawtchouk(n, r, model),
                    _ => q_moment_dyck(n, r, model),
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(assemble_from_moments(n, dim, &moments))
        }
        Route::Oracle => {
            guard.check_weyl(big_n as u32, big_n as u32)?;
            let ops = GaugeOperators::new(model);
            let table = ordering_sums(&ops.p_gauge, &ops.q_complex(), big_n, big_n);
            let mut rows = Vec::with_capacity(dim);
            for (a, row) in table.iter().enumerate() {
                let mut out = Vec::with_capacity(dim);
                for (b, sum) in row.iter().enumerate() {
                    out.push(real_diagonal(&average(sum, a, b), n)?);
                }
                rows.push(out);
            }
            Ok(PreWignerMatrix {
                n,
                entries: ExactMatrix::from_rows(rows)?,
            })
        }
    }
}

/// Ground-state `Z(0)` from the closed binomial sum
/// `Z_{2a,2b} = 2^{-2j} C(a+b,a)/C(2a+2b,2a) sum_k C(2j,k) (-j+k)^{2a+2b}`.
pub fn pre_wigner_ground(model: &OscillatorModel) -> PreWignerMatrix {
    let big_n = model.n();
    let scale = Rational::new(BigInt::one(), BigInt::one() << big_n);
    let moments: Vec<Rational> = (0..=big_n)
        .map(|r| {
            let mut s = Rational::zero();
            for k in 0..=big_n {
                let c = Rational::from_integer(binomial(big_n as u64, k as u64));
                s += c * num_traits::pow(model.node(k), 2 * r);
            }
            s * &scale
        })
        .collect();
    assemble_from_moments(0, model.dim(), &moments)
}

/// `W = V^{-T} Z V^{-1}` for a given pre-Wigner matrix.
pub fn wigner_from_pre(z: &PreWignerMatrix, system: &VandermondeSystem) -> Result<WignerMatrix> {
    let left = system.v_inv.transpose();
    let entries = left.mul(&z.entries)?.mul(&system.v_inv)?;
    Ok(WignerMatrix { n: z.n, entries })
}

/// `V^T W V`; equals `Z(n)` for a correctly built `W(n)`.
pub fn moments_of(w: &WignerMatrix, system: &VandermondeSystem) -> Result<ExactMatrix<Rational>> {
    system.v.transpose().mul(&w.entries)?.mul(&system.v)
}

/// The Vandermonde system on the nodes `-j, ..., j`.
pub fn model_vandermonde(model: &OscillatorModel) -> VandermondeSystem {
    vandermonde_inverse(&model.nodes()).expect("oscillator nodes are distinct")
}

/// `W(n)` via the Krawtchouk route.
pub fn wigner_matrix(n: usize, model: &OscillatorModel) -> Result<WignerMatrix> {
    let z = pre_wigner(n, model, Route::Krawtchouk, &CostGuard::unbounded())?;
    wigner_from_pre(&z, &model_vandermonde(model))
}

#[derive(Debug, Clone, PartialEq)]
pub struct MarginalEntry {
    pub index: usize,
    pub sum: Rational,
    pub reference: Rational,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MarginalReport {
    pub n: usize,
    /// Column sums `sum_k W_{k,l}` against `|phi_n(q_l)|^2`.
    pub position: Vec<MarginalEntry>,
    /// Row sums `sum_l W_{k,l}` against `|phi_n(p_k)|^2`. Reported, not required.
    pub momentum: Vec<MarginalEntry>,
    pub total: Rational,
}

impl MarginalReport {
    pub fn position_ok(&self) -> bool {
        self.position.iter().all(|e| e.matches)
    }

    pub fn momentum_ok(&self) -> bool {
        self.momentum.iter().all(|e| e.matches)
    }

    pub fn total_ok(&self) -> bool {
        self.total == int(1)
    }
}

pub fn check_marginals(w: &WignerMatrix, model: &OscillatorModel) -> Result<MarginalReport> {
    let dim = model.dim();
    if w.entries.rows() != dim || w.entries.cols() != dim {
        return Err(Error::DomainError(format!(
            "Wigner matrix is {}x{}, model needs {dim}x{dim}",
            w.entries.rows(),
            w.entries.cols()
        )));
    }
    let entry = |index: usize, sum: Rational| -> Result<MarginalEntry> {
        let reference = phi_squared(w.n, index, model)?.square;
        Ok(MarginalEntry {
            index,
            matches: sum == reference,
            sum,
            reference,
        })
    };
    let mut position = Vec::with_capacity(dim);
    let mut momentum = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut col = Rational::zero();
        let mut row = Rational::zero();
        for j in 0..dim {
            col += &w.entries[(j, i)];
            row += &w.entries[(i, j)];
        }
        position.push(entry(i, col)?);
        momentum.push(entry(i, row)?);
    }
    Ok(MarginalReport {
        n: w.n,
        position,
        momentum,
        total: w.total(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::rat;

    fn model(two_j: u32) -> OscillatorModel {
        OscillatorModel::new(two_j).unwrap()
    }

    fn literal_orderings(a: usize, b: usize, m: &OscillatorModel) -> ExactMatrix<GaussianRational> {
        let ops = GaugeOperators::new(m);
        let q = ops.q_complex();
        let dim = m.dim();
        let len = a + b;
        let mut sum = ExactMatrix::<GaussianRational>::zeros(dim, dim);
        for mask in 0u32..(1 << len) {
            if mask.count_ones() as usize != a {
                continue;
            }
            let mut prod = ExactMatrix::identity(dim);
            for i in 0..len {
                let f = if mask >> i & 1 == 1 { &ops.p_gauge } else { &q };
                prod = prod.mul(f).unwrap();
            }
            sum = sum.add(&prod).unwrap();
        }
        average(&sum, a, b)
    }

    #[test]
    fn expansion_equals_ordering_average() {
        for two_j in 1..=4 {
            let m = model(two_j);
            for a in 0..=4 {
                for b in 0..=4 - a {
                    let got = weyl_operator(a, b, &m, &CostGuard::default()).unwrap();
                    assert_eq!(got, literal_orderings(a, b, &m), "2j={two_j} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn weyl_small_cases() {
        let m = model(3);
        let g = CostGuard::default();
        assert_eq!(weyl_operator(0, 0, &m, &g).unwrap(), ExactMatrix::identity(4));
        let ops = GaugeOperators::new(&m);
        let q = ops.q_complex();
        let pq = ops.p_gauge.mul(&q).unwrap();
        let qp = q.mul(&ops.p_gauge).unwrap();
        let half = GaussianRational::new(rat(1, 2), Rational::zero());
        assert_eq!(weyl_operator(1, 1, &m, &g).unwrap(), pq.add(&qp).unwrap().scale(&half));
        assert_eq!(weyl_operator(0, 4, &m, &g).unwrap(), q.pow(4).unwrap());
        assert!(matches!(weyl_operator(6, 6, &m, &g), Err(Error::CostGuard(_))));
    }

    #[test]
    fn vandermonde_examples() {
        let s = vandermonde_inverse(&[int(0), int(1)]).unwrap();
        assert_eq!(s.v.to_rows(), vec![vec![int(1), int(0)], vec![int(1), int(1)]]);
        assert_eq!(s.v_inv.to_rows(), vec![vec![int(1), int(0)], vec![int(-1), int(1)]]);
        let s = vandermonde_inverse(&[rat(-1, 2), rat(1, 2)]).unwrap();
        assert_eq!(
            s.v_inv.to_rows(),
            vec![vec![rat(1, 2), rat(1, 2)], vec![int(-1), int(1)]]
        );
        let s = vandermonde_inverse(&[int(-1), int(0), int(1)]).unwrap();
        assert_eq!(s.v.mul(&s.v_inv).unwrap(), ExactMatrix::identity(3));
        assert_eq!(
            vandermonde_inverse(&[int(2), int(3), int(2)]),
            Err(Error::DuplicateNodes(0, 2))
        );
    }

    #[test]
    fn ground_state_examples() {
        let z = pre_wigner_ground(&model(1));
        assert_eq!(z.entries.to_rows(), vec![vec![int(1), int(0)], vec![int(0), int(0)]]);
        let z = pre_wigner_ground(&model(2));
        assert_eq!(z.entries[(2, 2)], rat(1, 6));
        assert_eq!(z.entries[(0, 0)], int(1));
    }

    #[test]
    fn routes_agree_small() {
        for two_j in 1..=4 {
            let m = model(two_j);
            for n in 0..=m.n() {
                let g = CostGuard::default();
                let k = pre_wigner(n, &m, Route::Krawtchouk, &g).unwrap();
                assert_eq!(k, pre_wigner(n, &m, Route::Dyck, &g).unwrap());
                assert_eq!(k, pre_wigner(n, &m, Route::Oracle, &g).unwrap());
                assert_eq!(k.entries[(0, 0)], int(1));
            }
        }
    }

    #[test]
    fn spin_half_ground_state_is_flat() {
        let w = wigner_matrix(0, &model(1)).unwrap();
        assert_eq!(w.entries, ExactMatrix::from_fn(2, 2, |_, _| rat(1, 4)));
        let report = check_marginals(&w, &model(1)).unwrap();
        assert!(report.position_ok() && report.momentum_ok() && report.total_ok());
        assert_eq!(report.position[0].sum, rat(1, 2));
    }

    #[test]
    fn defining_property_and_marginals() {
        for two_j in 1..=5 {
            let m = model(two_j);
            let sys = model_vandermonde(&m);
            for n in 0..=m.n() {
                let z = pre_wigner(n, &m, Route::Krawtchouk, &CostGuard::default()).unwrap();
                let w = wigner_from_pre(&z, &sys).unwrap();
                assert_eq!(moments_of(&w, &sys).unwrap(), z.entries);
                let report = check_marginals(&w, &m).unwrap();
                assert!(report.total_ok());
                assert!(report.position_ok(), "2j={two_j} n={n}");
            }
        }
    }

    #[test]
    fn route_names_round_trip() {
        for r in Route::ALL {
            assert_eq!(r.name().parse::<Route>().unwrap(), r);
        }
        assert!("matrix".parse::<Route>().is_err());
    }
}
