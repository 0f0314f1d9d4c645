//! `toeplitz-minimax`: minimal sup-norm symbols of self-adjoint Toeplitz
//! matrices from the command line.
//!
//! Exit codes: 0 pass, 1 input error, 2 numerical acceptance failure.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use toeplitz_minimax::minimax::solve_min_unchecked;
use toeplitz_minimax::ratio::{bound_table, dilation_norms, BoundReport};
use toeplitz_minimax::stepfn::StepFunctionFile;
use toeplitz_minimax::{
    AlternatingStepFunction, Error, HermitianToeplitzSpec, MinimizerResult, SolverConfig, C64,
};

const DEFAULT_DEVIATION_TOL: f64 = 1e-9;

#[derive(Parser, Debug)]
#[command(name = "toeplitz-minimax", version, about)]
struct Cli {
    /// Acceptance tolerance: Fourier residual for `minimize`, deviation for `check`.
    #[arg(long, global = true, allow_negative_numbers = true)]
    tol: Option<f64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    output: Format,
    /// Phase grid size used to locate jumps.
    #[arg(long, global = true)]
    grid: Option<usize>,
    #[arg(long, global = true, default_value_t = 71)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve the minimum problem for a matrix file.
    Minimize { input: PathBuf },
    /// Inspect a step-function file.
    Stepfn {
        input: PathBuf,
        #[arg(value_enum)]
        action: StepAction,
        /// Matrix order for `coeffs` and `matrix`.
        #[arg(long, default_value_t = 1)]
        order: usize,
    },
    /// Lower bounds on the maximal ratio for a range of orders.
    Search {
        #[arg(long, default_value_t = 1)]
        from: usize,
        #[arg(long, default_value_t = 7)]
        to: usize,
        /// Local refinement; required beyond order 7.
        #[arg(long)]
        refine: bool,
    },
    /// Randomized property checks.
    Check {
        #[arg(value_enum)]
        property: Property,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 50)]
        cases: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum StepAction {
    Coeffs,
    Matrix,
    Blaschke,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    /// `‖A_{f,N}‖ = ‖A_{g,kN}‖` for `g(z) = f(z^k)`.
    #[value(alias = "prop71")]
    Dilation,
}

enum Failure {
    Input(String),
    Numeric(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonConvergence { .. }
            | Error::BracketFailure { .. }
            | Error::NormEquation { .. }
            | Error::FourierResidual { .. }
            | Error::NotUnimodular(_)
            | Error::WindingResidual(_)
            | Error::IllConditioned(_) => Failure::Numeric(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

/// Outcome of a command that ran: the report was written, `pass` picks 0 or 2.
type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors are input errors here, not clap's default 2.
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = validate(&cli).and_then(|()| run(&cli));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Numeric(msg)) => {
            eprintln!("numerical failure: {msg}");
            ExitCode::from(2)
        }
    }
}

fn validate(cli: &Cli) -> Result<(), Failure> {
    if let Some(t) = cli.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(Failure::Input(format!("--tol must be positive, got {t}")));
        }
    }
    if cli.grid == Some(0) {
        return Err(Failure::Input("--grid must be positive".into()));
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Minimize { input } => cmd_minimize(cli, input),
        Command::Stepfn {
            input,
            action,
            order,
        } => cmd_stepfn(cli, input, *action, *order),
        Command::Search { from, to, refine } => cmd_search(cli, *from, *to, *refine),
        Command::Check { property, k, cases } => match property {
            Property::Dilation => cmd_check_dilation(cli, *k, *cases),
        },
    }
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{}: invalid JSON: {e}", path.display())))
}

fn field_error(field: &str, msg: impl std::fmt::Display) -> Failure {
    Failure::Input(format!("field `{field}`: {msg}"))
}

fn parse_complex(v: &Value, field: &str) -> Result<C64, Failure> {
    match v.as_array().map(|a| a.as_slice()) {
        Some([re, im]) => match (re.as_f64(), im.as_f64()) {
            (Some(re), Some(im)) if re.is_finite() && im.is_finite() => Ok(C64::new(re, im)),
            _ => Err(field_error(field, "entries must be finite numbers")),
        },
        _ => Err(field_error(field, "expected [re, im]")),
    }
}

/// Reads `{"n": N, "coefficients": [[re, im], ...]}` listing `a0..aN`.
fn parse_matrix(v: &Value) -> Result<HermitianToeplitzSpec, Failure> {
    let obj = v
        .as_object()
        .ok_or_else(|| Failure::Input("matrix file must be a JSON object".into()))?;
    let n = obj
        .get("n")
        .ok_or_else(|| field_error("n", "missing"))?
        .as_u64()
        .ok_or_else(|| field_error("n", "expected a non-negative integer"))? as usize;
    let raw = obj
        .get("coefficients")
        .ok_or_else(|| field_error("coefficients", "missing"))?
        .as_array()
        .ok_or_else(|| field_error("coefficients", "expected an array"))?;
    if raw.len() != n + 1 {
        return Err(field_error(
            "coefficients",
            format!("expected {} entries for n = {n}, got {}", n + 1, raw.len()),
        ));
    }
    let a = raw
        .iter()
        .enumerate()
        .map(|(i, x)| parse_complex(x, &format!("coefficients[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    HermitianToeplitzSpec::new(a).map_err(|e| match e {
        Error::NonRealDiagonal(_) => field_error("coefficients[0]", e),
        e => Failure::Input(e.to_string()),
    })
}

fn parse_step(v: &Value) -> Result<AlternatingStepFunction, Failure> {
    let obj = v
        .as_object()
        .ok_or_else(|| Failure::Input("step-function file must be a JSON object".into()))?;
    for key in obj.keys() {
        match key.as_str() {
            "height" | "jumps_radians" | "first_sign" => {}
            "jumps_degrees" | "jumps" => {
                return Err(field_error(key, "angles must be given as `jumps_radians`"))
            }
            _ => return Err(field_error(key, "unknown field")),
        }
    }
    let file: StepFunctionFile =
        serde_json::from_value(v.clone()).map_err(|e| Failure::Input(e.to_string()))?;
    AlternatingStepFunction::try_from(file).map_err(Failure::from)
}

fn emit_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    writeln!(io::stdout(), "{text}").map_err(|e| Failure::Input(e.to_string()))
}

fn emit_csv(header: &[String], rows: &[Vec<String>]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(io::stdout());
    let io_err = |e: csv::Error| Failure::Input(e.to_string());
    w.write_record(header).map_err(io_err)?;
    for r in rows {
        w.write_record(r).map_err(io_err)?;
    }
    w.flush().map_err(|e| Failure::Input(e.to_string()))
}

fn strings(items: &[&str]) -> Vec<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn solver_config(cli: &Cli) -> SolverConfig {
    let mut cfg = SolverConfig {
        grid: cli.grid,
        ..SolverConfig::default()
    };
    if let Some(t) = cli.tol {
        cfg.residual_threshold = t;
    }
    cfg
}

fn minimize_report(res: &MinimizerResult) -> Value {
    json!({
        "c_min": res.c_min,
        "order": res.order,
        "ratio": res.norm_ratio,
        "omega": res.omega,
        "step": res.step,
        "residuals": {
            "fourier": res.fourier_residual,
            "norm_equation": res.norm_residual,
            "unimodularity": res.unimodularity_residual,
            "profile_monotone": res.profile_monotone,
        },
    })
}

fn cmd_minimize(cli: &Cli, input: &Path) -> Outcome {
    let spec = parse_matrix(&read_json(input)?)?;
    let cfg = solver_config(cli);
    let res = solve_min_unchecked(&spec, &cfg)?;
    let pass = res.fourier_residual <= cfg.residual_threshold;
    match cli.output {
        Format::Json => emit_json(&minimize_report(&res))?,
        Format::Csv => {
            let mut header = strings(&["c_min", "order", "ratio", "height", "first_sign"]);
            header.extend(strings(&[
                "fourier_residual",
                "norm_residual",
                "jumps_radians",
            ]));
            let jumps: Vec<String> = res.step.jumps().iter().map(f64::to_string).collect();
            let row = vec![
                res.c_min.to_string(),
                res.order.to_string(),
                res.norm_ratio.to_string(),
                res.step.height().to_string(),
                i8::from(res.step.first_sign()).to_string(),
                res.fourier_residual.to_string(),
                res.norm_residual.to_string(),
                jumps.join(" "),
            ];
            emit_csv(&header, &[row])?;
        }
    }
    if !pass {
        eprintln!(
            "Fourier residual {:e} exceeds {:e}",
            res.fourier_residual, cfg.residual_threshold
        );
    }
    Ok(pass)
}

fn complex_rows(label: &str, values: &[C64]) -> (Vec<String>, Vec<Vec<String>>) {
    let rows = values
        .iter()
        .enumerate()
        .map(|(i, z)| vec![i.to_string(), z.re.to_string(), z.im.to_string()])
        .collect();
    (strings(&[label, "re", "im"]), rows)
}

fn cmd_stepfn(cli: &Cli, input: &Path, action: StepAction, order: usize) -> Outcome {
    let psi = parse_step(&read_json(input)?)?;
    match action {
        StepAction::Coeffs => {
            let spec = psi.toeplitz_of(order);
            match cli.output {
                Format::Json => {
                    emit_json(&json!({ "n": order, "coefficients": spec.coefficients() }))?
                }
                Format::Csv => {
                    let (h, rows) = complex_rows("index", spec.coefficients());
                    emit_csv(&h, &rows)?;
                }
            }
        }
        StepAction::Matrix => {
            let m = psi.toeplitz_of(order).to_matrix();
            let rows: Vec<&[C64]> = m.data().chunks(m.cols()).collect();
            match cli.output {
                Format::Json => emit_json(&json!({ "n": order, "rows": rows }))?,
                Format::Csv => {
                    let mut out = Vec::new();
                    for (j, row) in rows.iter().enumerate() {
                        for (k, z) in row.iter().enumerate() {
                            out.push(vec![
                                j.to_string(),
                                k.to_string(),
                                z.re.to_string(),
                                z.im.to_string(),
                            ]);
                        }
                    }
                    emit_csv(&strings(&["row", "col", "re", "im"]), &out)?;
                }
            }
        }
        StepAction::Blaschke => {
            let w = psi.blaschke_from_arcs()?;
            let w0 = w.eval(C64::new(0.0, 0.0));
            let one = C64::new(1.0, 0.0);
            let normalization = ((one + w0) / (one - w0)).norm() - 1.0;
            match cli.output {
                Format::Json => emit_json(&json!({
                    "omega": w,
                    "normalization_residual": normalization,
                }))?,
                Format::Csv => {
                    let len = w.numerator.len().max(w.denominator.len());
                    let zero = C64::new(0.0, 0.0);
                    let rows = (0..len)
                        .map(|i| {
                            let p = w.numerator.get(i).copied().unwrap_or(zero);
                            let q = w.denominator.get(i).copied().unwrap_or(zero);
                            vec![
                                i.to_string(),
                                p.re.to_string(),
                                p.im.to_string(),
                                q.re.to_string(),
                                q.im.to_string(),
                            ]
                        })
                        .collect::<Vec<_>>();
                    emit_csv(
                        &strings(&["degree", "num_re", "num_im", "den_re", "den_im"]),
                        &rows,
                    )?;
                }
            }
        }
    }
    Ok(true)
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

const PARAM_COLUMNS: usize = 6;

fn search_row(r: &BoundReport) -> Vec<String> {
    let mut row = vec![r.n.to_string()];
    row.extend((0..PARAM_COLUMNS).map(|i| opt(r.params.get(i).copied())));
    row.extend([
        r.norm.to_string(),
        r.ratio.to_string(),
        opt(r.paper_lo),
        opt(r.paper_hi),
        r.pass.map(|p| p.to_string()).unwrap_or_default(),
    ]);
    row
}

fn cmd_search(cli: &Cli, from: usize, to: usize, refine: bool) -> Outcome {
    if from == 0 || from > to {
        return Err(Failure::Input(format!("invalid order range {from}..={to}")));
    }
    if to > 7 && !refine {
        return Err(Failure::Input(
            "orders beyond 7 are exploratory and need --refine".into(),
        ));
    }
    let table = bound_table(from..=to, refine)?;
    match cli.output {
        Format::Json => emit_json(&table)?,
        Format::Csv => {
            let mut header = vec!["n".to_string()];
            header.extend((1..=PARAM_COLUMNS).map(|i| format!("p{i}")));
            header.extend(strings(&["norm", "ratio", "paper_lo", "paper_hi", "pass"]));
            let rows: Vec<_> = table.iter().map(search_row).collect();
            emit_csv(&header, &rows)?;
        }
    }
    Ok(table.iter().all(|r| r.pass != Some(false)))
}

fn random_two_sided(rng: &mut ChaCha8Rng, n: usize) -> Vec<C64> {
    let mut a: Vec<C64> = (0..=n)
        .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    a[0].im = 0.0;
    let mut out: Vec<C64> = a[1..].iter().rev().map(|z| z.conj()).collect();
    out.extend(a);
    out
}

fn cmd_check_dilation(cli: &Cli, k: usize, cases: usize) -> Outcome {
    if k == 0 {
        return Err(Failure::Input("k must be at least 1".into()));
    }
    let tol = cli.tol.unwrap_or(DEFAULT_DEVIATION_TOL);
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    let mut worst = 0.0f64;
    let mut rows = Vec::with_capacity(cases);
    for case in 0..cases {
        let n = rng.gen_range(1..=4);
        let two_sided = random_two_sided(&mut rng, n);
        let (f, g) = dilation_norms(&two_sided, k)?;
        worst = worst.max((f - g).abs());
        rows.push(vec![
            case.to_string(),
            n.to_string(),
            f.to_string(),
            g.to_string(),
            (f - g).abs().to_string(),
        ]);
    }
    let pass = worst < tol;
    match cli.output {
        Format::Json => emit_json(&json!({
            "property": "dilation",
            "k": k,
            "seed": cli.seed,
            "cases": cases,
            "max_deviation": worst,
            "tolerance": tol,
            "pass": pass,
        }))?,
        Format::Csv => emit_csv(
            &strings(&["case", "n", "norm_f", "norm_g", "deviation"]),
            &rows,
        )?,
    }
    Ok(pass)
}
