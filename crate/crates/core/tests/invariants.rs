use std::collections::BTreeSet;

use dyckwig::dyck::{dyck_poly, enumerate, DyckPath, PathConstraint, Step};
use dyckwig::exact_math::{int, rat};
use dyckwig::guard::CostGuard;
use dyckwig::oscillator::{phi_squared, q_moment_krawtchouk, OscillatorModel};
use dyckwig::wigner::{
    check_marginals, moments_of, pre_wigner, vandermonde_inverse, wigner_from_pre, Route,
};
use dyckwig::{Error, ExactMatrix, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn arb_dyck_word(max_r: usize) -> impl Strategy<Value = DyckPath> {
    // random walk, clamped so it stays nonnegative and can close
    (0..=max_r).prop_flat_map(|r| {
        proptest::collection::vec(any::<bool>(), 2 * r).prop_map(move |coins| {
            let mut steps = Vec::with_capacity(2 * r);
            let (mut height, mut ups) = (0usize, 0usize);
            for (i, up) in coins.into_iter().enumerate() {
                let left = 2 * r - i;
                let go_up = ups < r && (height == 0 || (up && height < left));
                if go_up {
                    steps.push(Step::Up);
                    height += 1;
                    ups += 1;
                } else {
                    steps.push(Step::Down);
                    height -= 1;
                }
            }
            DyckPath::from_steps(steps).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_path_weight_appears_in_its_polynomial(p in arb_dyck_word(9)) {
        let (r, h) = (p.size(), p.height());
        let (a, b) = (p.leading_ups(), p.trailing_downs());
        let poly = dyck_poly(r, h, a, b);
        prop_assert!(poly.coefficient(&p.weight()) > BigInt::zero());
        prop_assert_eq!(p.word().parse::<DyckPath>().unwrap(), p.clone());
        let c = PathConstraint::new(r, h, a, b);
        prop_assert!(c.contains(&p));
        prop_assert!(enumerate(&c).contains(&p));
    }

    #[test]
    fn vandermonde_inverse_is_exact(raw in proptest::collection::btree_set((-30i64..=30, 1i64..=5), 1..7)) {
        let nodes: BTreeSet<Rational> = raw.into_iter().map(|(n, d)| rat(n, d)).collect();
        let nodes: Vec<Rational> = nodes.into_iter().collect();
        let sys = vandermonde_inverse(&nodes).unwrap();
        let dim = nodes.len();
        prop_assert_eq!(sys.v.mul(&sys.v_inv).unwrap(), ExactMatrix::identity(dim));
        prop_assert_eq!(sys.v_inv.mul(&sys.v).unwrap(), ExactMatrix::identity(dim));
    }

    #[test]
    fn wigner_reproduces_weyl_averages(two_j in 1u32..=7, pick in 0usize..=7) {
        let m = OscillatorModel::new(two_j).unwrap();
        let n = pick % m.dim();
        let sys = vandermonde_inverse(&m.nodes()).unwrap();
        let z = pre_wigner(n, &m, Route::Krawtchouk, &CostGuard::default()).unwrap();
        let w = wigner_from_pre(&z, &sys).unwrap();
        prop_assert_eq!(moments_of(&w, &sys).unwrap(), z.entries.clone());
        let report = check_marginals(&w, &m).unwrap();
        prop_assert!(report.total_ok());
        prop_assert!(report.position_ok());
        // Z is symmetric, so W is too and the momentum marginal follows
        prop_assert_eq!(w.entries.transpose(), w.entries.clone());
        prop_assert!(report.momentum_ok());
        // a Wigner matrix reproduces <q^{2r}> directly as sum_l q_l^{2r} sum_k W_{k,l}
        for r in 0..=m.n() as u32 / 2 {
            let direct: Rational = (0..m.dim())
                .map(|l| {
                    let col: Rational = (0..m.dim()).map(|k| w.entries[(k, l)].clone()).sum();
                    num_traits::pow(m.node(l), 2 * r as usize) * col
                })
                .sum();
            prop_assert_eq!(direct, q_moment_krawtchouk(n, r, &m).unwrap());
        }
    }
}

#[test]
fn wavefunction_squares_form_a_doubly_stochastic_matrix() {
    for two_j in 1..=10 {
        let m = OscillatorModel::new(two_j).unwrap();
        for i in 0..m.dim() {
            let row: Rational = (0..m.dim()).map(|k| phi_squared(i, k, &m).unwrap().square).sum();
            let col: Rational = (0..m.dim()).map(|k| phi_squared(k, i, &m).unwrap().square).sum();
            assert_eq!(row, int(1));
            assert_eq!(col, int(1));
        }
    }
}

#[test]
fn negative_wigner_values_are_kept() {
    let m = OscillatorModel::new(2).unwrap();
    let sys = vandermonde_inverse(&m.nodes()).unwrap();
    let z = pre_wigner(1, &m, Route::Krawtchouk, &CostGuard::default()).unwrap();
    let w = wigner_from_pre(&z, &sys).unwrap();
    assert!(w.entries.to_rows().iter().flatten().any(|x| x < &Rational::zero()));
}

#[test]
fn guards_and_domain_errors() {
    let m = OscillatorModel::new(6).unwrap();
    let tight = CostGuard { max_weyl_degree: 8, ..CostGuard::default() };
    assert!(matches!(pre_wigner(0, &m, Route::Oracle, &tight), Err(Error::CostGuard(_))));
    assert!(pre_wigner(0, &m, Route::Oracle, &CostGuard::unbounded()).is_ok());
    assert!(matches!(
        pre_wigner(7, &m, Route::Dyck, &CostGuard::default()),
        Err(Error::DomainError(_))
    ));
    let small = CostGuard { max_two_j: 4, ..CostGuard::default() };
    assert!(matches!(
        pre_wigner(0, &m, Route::Krawtchouk, &small),
        Err(Error::CostGuard(_))
    ));
}
