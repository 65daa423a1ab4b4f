//! Verification suites run by `dyckwig verify`.

use clap::ValueEnum;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use dyckwig::dyck::{
    catalan, count, dyck_poly_enum, gen_series, lemma_lhs_rhs, PathConstraint,
};
use dyckwig::guard::CostGuard;
use dyckwig::oscillator::{OscillatorModel, SymbolicY};
use dyckwig::wigner::{check_marginals, model_vandermonde, moments_of, pre_wigner, wigner_from_pre, Route};
use dyckwig::MultiPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Theorem1,
    Lemma1,
    Routes,
    Marginals,
    Catalan,
    Genseries,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Lemma1 => "lemma1",
            Suite::Routes => "routes",
            Suite::Marginals => "marginals",
            Suite::Catalan => "catalan",
            Suite::Genseries => "genseries",
        }
    }
}

#[derive(Debug, Clone)]
enum Case {
    Theorem { big_n: usize, r: usize },
    Lemma { r: i64 },
    Routes { two_j: u32, n: usize },
    Marginals { two_j: u32, n: usize },
    Catalan { r: usize },
    Genseries { h: usize, order: usize },
}

pub struct Outcome {
    pub suite: Suite,
    pub label: String,
    pub ok: bool,
    pub detail: String,
}

fn cases(suite: Suite, two_j_max: u32, r_max: usize) -> Vec<Case> {
    let mut out = Vec::new();
    match suite {
        Suite::Theorem1 => {
            for big_n in 1..=two_j_max as usize {
                for r in 0..=r_max {
                    out.push(Case::Theorem { big_n, r });
                }
            }
        }
        Suite::Lemma1 => out.extend((0..=r_max as i64).map(|r| Case::Lemma { r })),
        Suite::Routes | Suite::Marginals => {
            for two_j in 1..=two_j_max {
                for n in 0..=two_j as usize {
                    out.push(if suite == Suite::Routes {
                        Case::Routes { two_j, n }
                    } else {
                        Case::Marginals { two_j, n }
                    });
                }
            }
        }
        Suite::Catalan => out.extend((0..=r_max).map(|r| Case::Catalan { r })),
        Suite::Genseries => {
            out.extend((1..=two_j_max.max(1) as usize).map(|h| Case::Genseries { h, order: r_max }))
        }
    }
    out
}

fn u_product(b: usize) -> MultiPoly {
    (1..=b as u32).fold(MultiPoly::one(), |acc, k| acc * MultiPoly::var(k))
}

fn run(case: &Case, guard: &CostGuard) -> (String, bool, String) {
    match *case {
        Case::Theorem { big_n, r } => {
            let y = SymbolicY::new(big_n);
            let even = y.power(2 * r as u32);
            let odd = y.power(2 * r as u32 + 1);
            let mut bad = Vec::new();
            for a in 0..=big_n {
                for b in 0..=big_n {
                    let lhs = &even[(a, b)] * &u_product(b);
                    let ok = if (a + b) % 2 == 1 {
                        lhs.is_zero()
                    } else {
                        let rhs =
                            dyck_poly_enum(&PathConstraint::new(r + (a + b) / 2, big_n, a, b));
                        lhs == rhs && odd[(a, b)].is_zero()
                    };
                    if !ok {
                        bad.push(format!("({a},{b})"));
                    }
                }
            }
            (format!("N={big_n} r={r}"), bad.is_empty(), bad.join(" "))
        }
        Case::Lemma { r } => {
            let mut bad = Vec::new();
            for a in 0..=r + 1 {
                for b in 0..=r + 1 {
                    let (lhs, rhs) = lemma_lhs_rhs(r, a, b);
                    if lhs != rhs {
                        bad.push(format!("(a={a},b={b})"));
                    }
                }
            }
            (format!("r={r}"), bad.is_empty(), bad.join(" "))
        }
        Case::Routes { two_j, n } => {
            let label = format!("2j={two_j} n={n}");
            let m = OscillatorModel::new(two_j).expect("two_j >= 1");
            let z = |route| pre_wigner(n, &m, route, guard);
            let (k, d) = match (z(Route::Krawtchouk), z(Route::Dyck)) {
                (Ok(k), Ok(d)) => (k, d),
                (Err(e), _) | (_, Err(e)) => return (label, false, e.to_string()),
            };
            if k != d {
                return (label, false, "krawtchouk != dyck".into());
            }
            match z(Route::Oracle) {
                Ok(o) if o == k => (label, true, String::new()),
                Ok(_) => (label, false, "krawtchouk != oracle".into()),
                Err(dyckwig::Error::CostGuard(_)) => {
                    (label, true, "oracle skipped by cost guard".into())
                }
                Err(e) => (label, false, e.to_string()),
            }
        }
        Case::Marginals { two_j, n } => {
            let label = format!("2j={two_j} n={n}");
            let m = OscillatorModel::new(two_j).expect("two_j >= 1");
            let sys = model_vandermonde(&m);
            let result = pre_wigner(n, &m, Route::Krawtchouk, guard).and_then(|z| {
                let w = wigner_from_pre(&z, &sys)?;
                let report = check_marginals(&w, &m)?;
                Ok((moments_of(&w, &sys)? == z.entries, report))
            });
            match result {
                Ok((defining, report)) => {
                    let mut bad = Vec::new();
                    if !defining {
                        bad.push("V^T W V != Z");
                    }
                    if !report.total_ok() {
                        bad.push("sum != 1");
                    }
                    if !report.position_ok() {
                        bad.push("position marginal");
                    }
                    (label, bad.is_empty(), bad.join(", "))
                }
                Err(e) => (label, false, e.to_string()),
            }
        }
        Case::Catalan { r } => {
            let got = count(&PathConstraint::unrestricted(r));
            let expected = catalan(r as u64);
            let ok = BigUint::from(got) == expected;
            (format!("r={r} count={got}"), ok, if ok { String::new() } else { format!("expected {expected}") })
        }
        Case::Genseries { h, order } => {
            let series = gen_series(order, h);
            let bad: Vec<String> = series
                .iter()
                .enumerate()
                .filter(|(r, c)| **c != dyck_poly_enum(&PathConstraint::with_height(*r, h)))
                .map(|(r, _)| format!("t^{r}"))
                .collect();
            (format!("h={h} order={order}"), bad.is_empty(), bad.join(" "))
        }
    }
}

/// Runs the suites in parallel; results come back in case order.
pub fn run_suites(suites: &[Suite], two_j_max: u32, r_max: usize, guard: &CostGuard) -> Vec<Outcome> {
    let all: Vec<(Suite, Case)> = suites
        .iter()
        .flat_map(|&s| cases(s, two_j_max, r_max).into_iter().map(move |c| (s, c)))
        .collect();
    all.par_iter()
        .map(|(suite, case)| {
            let (label, ok, detail) = run(case, guard);
            Outcome { suite: *suite, label, ok, detail }
        })
        .collect()
}

pub fn report(outcomes: &[Outcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        let verdict = if o.ok { "PASS" } else { "FAIL" };
        out.push_str(&format!("[{verdict}] {} {}", o.suite.name(), o.label));
        if !o.detail.is_empty() {
            out.push_str(&format!(" ({})", o.detail));
        }
        out.push('\n');
    }
    let failed = outcomes.iter().filter(|o| !o.ok).count();
    out.push_str(&format!("summary: {} passed, {failed} failed\n", outcomes.len() - failed));
    out
}
