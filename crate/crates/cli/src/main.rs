//! `dyckwig`: exact Dyck polynomials, moments and discrete Wigner matrices
//! of the su(2) finite oscillator.
//!
//! Exit status: 0 success, 1 failed verification, 2 invalid arguments,
//! 3 route mismatch in `dyck-poly --verify`, 4 cost guard exceeded.

mod render;
mod verify;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dyckwig::dyck::{
    dyck_poly, dyck_poly_enum, enumerate, gen_series, u_segment_poly, PathConstraint,
};
use dyckwig::guard::CostGuard;
use dyckwig::oscillator::{q_moment_dyck, q_moment_krawtchouk, q_moment_matrix, OscillatorModel};
use dyckwig::wigner::{
    check_marginals, model_vandermonde, pre_wigner, wigner_from_pre, MarginalEntry, Route,
};
use dyckwig::{Error, MultiPoly};

use render::{csv_string, json_string, matrix_json, matrix_table, rational_json, table, Scalar};
use verify::Suite;

#[derive(Parser, Debug)]
#[command(name = "dyckwig", version, about = "Exact discrete Wigner matrices of the su(2) oscillator")]
struct Cli {
    /// Lift the size limits (2j <= 16, r <= 12, Weyl degree <= 10).
    #[arg(long, global = true)]
    unsafe_no_guard: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List Dyck paths of size r with height <= h, a leading ups and b trailing downs.
    DyckEnum {
        #[command(flatten)]
        path: PathArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Dyck polynomial P_{r|h}^{(a,b)}.
    DyckPoly {
        #[command(flatten)]
        path: PathArgs,
        /// Also enumerate the paths and compare; exit 3 on mismatch.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Coefficients of the continued-fraction generating function in t.
    Genseries {
        /// Highest power of t.
        #[arg(long, default_value_t = 6)]
        order: usize,
        /// Depth of the continued fraction (height bound); defaults to the order.
        #[arg(long)]
        h: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// u-segment polynomial Q_r in t_1, t_2, ...
    SegmentPoly {
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Even position moments <n|q^{2r}|n> for r = 0..=R.
    Moments {
        #[command(flatten)]
        model: ModelArgs,
        /// State index; all states when omitted.
        #[arg(long)]
        n: Option<usize>,
        /// Largest moment order.
        #[arg(long, default_value_t = 4)]
        r: u32,
        #[arg(long, value_enum, default_value_t = RouteArg::Krawtchouk)]
        route: RouteArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Pre-Wigner matrix Z(n).
    Prewigner {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = RouteArg::Krawtchouk)]
        route: RouteArg,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Wigner matrix W(n) with Z(n) and marginals. CSV output is the heatmap grid.
    Wigner {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = RouteArg::Krawtchouk)]
        route: RouteArg,
        /// Exact fractions in the CSV grid instead of decimals.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run verification suites and report pass/fail per case.
    Verify {
        /// Largest 2j (also the largest height for genseries).
        #[arg(long, default_value_t = 4)]
        two_j: u32,
        /// Largest r (path size, moment order or series order).
        #[arg(long, default_value_t = 4)]
        r: usize,
        /// Suites to run; all when omitted.
        #[arg(long = "suite", value_enum)]
        suites: Vec<Suite>,
        /// Report destination; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct PathArgs {
    #[arg(long)]
    r: usize,
    /// Height bound; unrestricted when omitted.
    #[arg(long)]
    h: Option<usize>,
    #[arg(long, default_value_t = 0)]
    a: usize,
    #[arg(long, default_value_t = 0)]
    b: usize,
}

impl PathArgs {
    fn constraint(&self) -> PathConstraint {
        PathConstraint::new(self.r, self.h.unwrap_or(self.r), self.a, self.b)
    }

    fn json_fields(&self) -> Value {
        json!({ "r": self.r, "h": self.h.unwrap_or(self.r), "a": self.a, "b": self.b })
    }
}

#[derive(Args, Debug)]
struct ModelArgs {
    /// Twice the spin j; the state space has dimension 2j + 1.
    #[arg(long = "two-j")]
    two_j: u32,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Render rationals as decimals with this many digits.
    #[arg(long)]
    precision: Option<usize>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Krawtchouk,
    Dyck,
    Oracle,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Krawtchouk => Route::Krawtchouk,
            RouteArg::Dyck => Route::Dyck,
            RouteArg::Oracle => Route::Oracle,
        }
    }
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::CostGuard(_)) { 4 } else { 2 };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

type CmdResult = Result<u8, Failure>;

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn model_of(args: &ModelArgs, guard: &CostGuard) -> Result<OscillatorModel, Failure> {
    let m = OscillatorModel::new(args.two_j)?;
    guard.check_two_j(args.two_j)?;
    Ok(m)
}

fn node_labels(m: &OscillatorModel) -> Vec<String> {
    m.nodes().iter().map(|x| x.to_string()).collect()
}

fn poly_json(p: &MultiPoly, prefix: &str) -> Value {
    json!({
        "text": p.display_with(prefix).to_string(),
        "terms": serde_json::to_value(p.to_json_terms()).expect("terms serialize"),
    })
}

fn poly_csv(p: &MultiPoly, prefix: &str) -> String {
    let rows: Vec<Vec<String>> = p
        .terms()
        .map(|(m, c)| {
            let single = MultiPoly::from_monomial(m.clone());
            let text = single.display_with(prefix).to_string();
            vec![c.to_string(), text]
        })
        .collect();
    csv_string(&["coeff".into(), "monomial".into()], &rows)
}

fn cmd_dyck_enum(path: &PathArgs, out: &OutputArgs, guard: &CostGuard) -> CmdResult {
    guard.check_moment(path.r as u32)?;
    let paths = enumerate(&path.constraint());
    let text = match out.format {
        Format::Table => {
            let mut s: String = paths
                .iter()
                .map(|p| {
                    let word = if p.size() == 0 { "(empty)".to_string() } else { p.word() };
                    format!("{word}  {}\n", p.weight())
                })
                .collect();
            s.push_str(&format!("count: {}\n", paths.len()));
            s
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> =
                paths.iter().map(|p| vec![p.word(), p.weight().to_string()]).collect();
            csv_string(&["word".into(), "weight".into()], &rows)
        }
        Format::Json => {
            let mut v = path.json_fields();
            v["paths"] = paths.iter().map(|p| json!({ "word": p.word(), "weight": p.weight().to_string() })).collect();
            v["count"] = json!(paths.len());
            json_string(&v)
        }
    };
    emit(&text, out.out.as_ref())?;
    Ok(0)
}

fn cmd_dyck_poly(path: &PathArgs, verify: bool, out: &OutputArgs, guard: &CostGuard) -> CmdResult {
    guard.check_moment(path.r as u32)?;
    let h = path.h.unwrap_or(path.r);
    let p = dyck_poly(path.r, h, path.a, path.b);
    if verify {
        let q = dyck_poly_enum(&path.constraint());
        if p != q {
            return Err(Failure {
                code: 3,
                message: format!("recurrence gives {p}, enumeration gives {q}"),
            });
        }
    }
    let text = match out.format {
        Format::Table => format!("{p}\n"),
        Format::Csv => poly_csv(&p, "u"),
        Format::Json => {
            let mut v = path.json_fields();
            v["poly"] = poly_json(&p, "u");
            json_string(&v)
        }
    };
    emit(&text, out.out.as_ref())?;
    Ok(0)
}

fn cmd_genseries(order: usize, h: Option<usize>, out: &OutputArgs, guard: &CostGuard) -> CmdResult {
    guard.check_moment(order as u32)?;
    let depth = h.unwrap_or(order);
    let series = gen_series(order, depth);
    let text = match out.format {
        Format::Table => series.iter().enumerate().map(|(r, c)| format!("t^{r}: {c}\n")).collect(),
        Format::Csv => {
            let rows: Vec<Vec<String>> =
                series.iter().enumerate().map(|(r, c)| vec![r.to_string(), c.to_string()]).collect();
            csv_string(&["power".into(), "coefficient".into()], &rows)
        }
        Format::Json => json_string(&json!({
            "order": order,
            "h": depth,
            "coefficients": series.iter().map(|c| poly_json(c, "u")).collect::<Vec<_>>(),
        })),
    };
    emit(&text, out.out.as_ref())?;
    Ok(0)
}

fn cmd_segment_poly(r: usize, out: &OutputArgs, guard: &CostGuard) -> CmdResult {
    guard.check_moment(r as u32)?;
    let q = u_segment_poly(r);
    let text = match out.format {
        Format::Table => format!("{}\n", q.display_with("t")),
        Format::Csv => poly_csv(&q, "t"),
        Format::Json => json_string(&json!({ "r": r, "poly": poly_json(&q, "t") })),
    };
    emit(&text, out.out.as_ref())?;
    Ok(0)
}

fn cmd_moments(
    model: &ModelArgs,
    n: Option<usize>,
    r_max: u32,
    route: RouteArg,
    out: &OutputArgs,
    guard: &CostGuard,
) -> CmdResult {
    let m = model_of(model, guard)?;
    guard.check_moment(r_max)?;
    let states: Vec<usize> = match n {
        Some(n) => {
            m.check_state(n)?;
            vec![n]
        }
        None => (0..m.dim()).collect(),
    };
    let moment = match route {
        RouteArg::Krawtchouk => q_moment_krawtchouk,
        RouteArg::Dyck => q_moment_dyck,
        RouteArg::Oracle => q_moment_matrix,
    };
    let mut values = Vec::new();
    for r in 0..=r_max {
        let row = states.iter().map(|&s| moment(s, r, &m)).collect::<Result<Vec<_>, _>>()?;
        values.push(row);
    }
    let scalar = Scalar::from_precision(out.precision);
    let mut header = vec!["r".to_string()];
    header.extend(states.iter().map(|s| format!("n={s}")));
    let rows: Vec<Vec<String>> = values
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut cells = vec![r.to_string()];
            cells.extend(row.iter().map(|x| scalar.show(x)));
            cells
        })
        .collect();
    let text = match out.format {
        Format::Table => table(Some(&header), &rows),
        Format::Csv => csv_string(&header, &rows),
        Format::Json => json_string(&json!({
            "two_j": m.two_j(),
            "route": Route::from(route).name(),
            "states": states,
            "moments": values
                .iter()
                .map(|row| row.iter().map(rational_json).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })),
    };
    emit(&text, out.out.as_ref())?;
    Ok(0)
}

fn cmd_prewigner(model: &ModelArgs, n: usize, route: RouteArg, out: &OutputArgs, guard: &CostGuard) -> CmdResult {
    let m = model_of(model, guard)?;
    let z = pre_wigner(n, &m, route.into(), guard)?;
    let scalar = Scalar::from_precision(out.precision);
    let labels: Vec<String> = (0..m.dim()).map(|i| i.to_string()).collect();
    let text = match out.format {
        Format::Table => matrix_table(&z.entries, scalar, &labels),
        Format::Csv => {
            let mut header = vec!["a\\b".to_string()];
            header.extend(labels.iter().cloned());
            let rows: Vec<Vec<String>> = (0..m.dim())
                .map(|a| {
                    let mut row = vec![a.to_string()];
                    row.extend(z.entries.row(a).iter().map(|x| scalar.show(x)));
                    row
                })
                .collect();
            csv_string(&header, &rows)
        }
        Format::Json => json_string(&json!({
            "two_j": m.two_j(),
            "n": n,
            "route": Route::from(route).name(),
            "Z": matrix_json(&z.entries),
        })),
    };
    emit(&text, out.out.as_ref())?;
    Ok(0)
}

fn marginal_json(entries: &[MarginalEntry], m: &OscillatorModel) -> Value {
    entries
        .iter()
        .map(|e| {
            json!({
                "node": m.node(e.index).to_string(),
                "sum": rational_json(&e.sum),
                "reference": rational_json(&e.reference),
                "match": e.matches,
            })
        })
        .collect()
}

fn cmd_wigner(
    model: &ModelArgs,
    n: usize,
    route: RouteArg,
    exact: bool,
    out: &OutputArgs,
    guard: &CostGuard,
) -> CmdResult {
    let m = model_of(model, guard)?;
    let z = pre_wigner(n, &m, route.into(), guard)?;
    let w = wigner_from_pre(&z, &model_vandermonde(&m))?;
    let report = check_marginals(&w, &m)?;
    let labels = node_labels(&m);
    let text = match out.format {
        Format::Csv => {
            let scalar = if exact { Scalar::Exact } else { Scalar::Decimal(out.precision.unwrap_or(6)) };
            let mut header = vec!["p\\q".to_string()];
            header.extend(labels.iter().cloned());
            let rows: Vec<Vec<String>> = (0..m.dim())
                .map(|k| {
                    let mut row = vec![labels[k].clone()];
                    row.extend(w.entries.row(k).iter().map(|x| scalar.show(x)));
                    row
                })
                .collect();
            format!(
                "# W(n={n}) for 2j={}: row = momentum node p_k from -j to +j, column = position node q_l from -j to +j\n{}",
                m.two_j(),
                csv_string(&header, &rows)
            )
        }
        Format::Table => {
            let scalar = Scalar::from_precision(out.precision);
            let idx: Vec<String> = (0..m.dim()).map(|i| i.to_string()).collect();
            let marg_rows: Vec<Vec<String>> = report
                .position
                .iter()
                .zip(&report.momentum)
                .map(|(pos, mom)| {
                    vec![
                        labels[pos.index].clone(),
                        scalar.show(&pos.sum),
                        scalar.show(&pos.reference),
                        if pos.matches { "yes" } else { "no" }.into(),
                        scalar.show(&mom.sum),
                        if mom.matches { "yes" } else { "no" }.into(),
                    ]
                })
                .collect();
            let marg_header: Vec<String> =
                ["node", "column sum", "|phi_n|^2", "match", "row sum", "match"].map(String::from).to_vec();
            format!(
                "Z(n={n}), rows a (power of p), columns b (power of q)\n{}\nW(n={n}), rows p_k, columns q_l\n{}\nmarginals\n{}\nsum: {}\n",
                matrix_table(&z.entries, scalar, &idx),
                matrix_table(&w.entries, scalar, &labels),
                table(Some(&marg_header), &marg_rows),
                scalar.show(&report.total),
            )
        }
        Format::Json => json_string(&json!({
            "two_j": m.two_j(),
            "n": n,
            "route": Route::from(route).name(),
            "Z": matrix_json(&z.entries),
            "W": matrix_json(&w.entries),
            "marginals": {
                "position": marginal_json(&report.position, &m),
                "momentum": marginal_json(&report.momentum, &m),
                "position_ok": report.position_ok(),
                "momentum_ok": report.momentum_ok(),
            },
            "sum": rational_json(&report.total),
        })),
    };
    emit(&text, out.out.as_ref())?;
    Ok(0)
}

fn cmd_verify(two_j: u32, r: usize, suites: &[Suite], out: Option<&PathBuf>, guard: &CostGuard) -> CmdResult {
    if two_j == 0 {
        return Err(Failure { code: 2, message: "--two-j must be positive".into() });
    }
    guard.check_two_j(two_j)?;
    guard.check_moment(r as u32)?;
    let mut suites = suites.to_vec();
    if suites.is_empty() {
        suites = Suite::value_variants().to_vec();
    }
    suites.sort();
    suites.dedup();
    let outcomes = verify::run_suites(&suites, two_j, r, guard);
    emit(&verify::report(&outcomes), out)?;
    Ok(if outcomes.iter().all(|o| o.ok) { 0 } else { 1 })
}

fn dispatch(cli: &Cli) -> CmdResult {
    let guard = if cli.unsafe_no_guard { CostGuard::unbounded() } else { CostGuard::default() };
    match &cli.command {
        Command::DyckEnum { path, out } => cmd_dyck_enum(path, out, &guard),
        Command::DyckPoly { path, verify, out } => cmd_dyck_poly(path, *verify, out, &guard),
        Command::Genseries { order, h, out } => cmd_genseries(*order, *h, out, &guard),
        Command::SegmentPoly { r, out } => cmd_segment_poly(*r, out, &guard),
        Command::Moments { model, n, r, route, out } => cmd_moments(model, *n, *r, *route, out, &guard),
        Command::Prewigner { model, n, route, out } => cmd_prewigner(model, *n, *route, out, &guard),
        Command::Wigner { model, n, route, exact, out } => cmd_wigner(model, *n, *route, *exact, out, &guard),
        Command::Verify { two_j, r, suites, out } => cmd_verify(*two_j, *r, suites, out.as_ref(), &guard),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
