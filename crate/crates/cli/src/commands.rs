use crate::args::{Cli, Command, Format, SolveMethod};
use crate::format::{csv, json, sig12, Plot};
use crate::report::{McCheck, MethodRun, RunReport};
use crate::{CliError, ExitCode, Outcome};
use goat_core::contour::{ullisch_k, CircleContour};
use goat_core::geometry::{grazed_fraction_mc, solve_k_oracle, MonteCarloConfig};
use goat_core::{FraserSolver, GoatSolution, QuadratureConfig};
use log::{debug, info};
use serde::Serialize;
use std::f64::consts::SQRT_2;
use std::path::Path;
use std::time::Instant;

/// Upper bound on rows for `table` and points for `plot`.
const MAX_ROWS: usize = 100_000;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn solver(cli: &Cli) -> Result<FraserSolver, CliError> {
    if !(cli.tol > 0.0) || !cli.tol.is_finite() {
        return Err(usage(format!("--tol must be > 0, got {}", cli.tol)));
    }
    Ok(FraserSolver::new(cli.tol, QuadratureConfig::default()))
}

fn contour(cli: &Cli) -> Result<CircleContour, CliError> {
    CircleContour::ullisch(cli.nodes).map_err(|e| usage(e.to_string()))
}

#[derive(Serialize)]
struct SolveOutput {
    command: &'static str,
    n: f64,
    beta: f64,
    k: f64,
    residual: f64,
    method: String,
    r: f64,
    #[serde(rename = "R")]
    tether_length: f64,
}

pub fn solve(cli: &Cli, n: f64, r: f64, method: SolveMethod, force_numeric: bool) -> Result<Outcome, CliError> {
    if !(n >= 0.0) || !n.is_finite() {
        return Err(usage(format!("--n must be a finite number >= 0, got {n}")));
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(usage(format!("--r must be > 0, got {r}")));
    }
    let mut fraser = solver(cli)?;
    fraser.force_numeric = force_numeric;
    let sol: GoatSolution = match method {
        SolveMethod::Fraser | SolveMethod::Auto => fraser.solve_k(n)?,
        SolveMethod::Contour => {
            if n != 2.0 {
                return Err(usage("the contour method only applies to n = 2"));
            }
            ullisch_k(r, &contour(cli)?)?.solution
        }
        SolveMethod::Oracle => {
            if n.fract() != 0.0 || n < 1.0 || n > u32::MAX as f64 {
                return Err(usage("the oracle method needs an integer n >= 1"));
            }
            solve_k_oracle(n as usize, cli.tol, &fraser.quad)?
        }
    };
    info!("solved n = {n}: k = {} via {}", sol.k, sol.method);
    let out = SolveOutput {
        command: "solve",
        n: sol.n,
        beta: sol.beta,
        k: sol.k,
        residual: sol.residual,
        method: sol.method.to_string(),
        r,
        tether_length: sol.tether_length(r),
    };
    let body = match cli.format.unwrap_or(Format::Json) {
        Format::Json => json(&out),
        Format::Csv => csv(
            &["n", "beta", "k", "r", "R", "residual", "method"],
            &[vec![
                sig12(out.n),
                sig12(out.beta),
                sig12(out.k),
                sig12(out.r),
                sig12(out.tether_length),
                format!("{:e}", out.residual),
                out.method.clone(),
            ]],
        ),
    };
    Ok(Outcome::ok(body))
}

fn grid(start: f64, stop: f64, step: f64) -> Result<Vec<f64>, CliError> {
    if !start.is_finite() || !stop.is_finite() || !step.is_finite() {
        return Err(usage("range bounds and step must be finite"));
    }
    if start < 0.0 || stop < start {
        return Err(usage(format!("need 0 <= n_min <= n_max, got [{start}, {stop}]")));
    }
    if !(step > 0.0) {
        return Err(usage(format!("--step must be > 0, got {step}")));
    }
    let count = ((stop - start) / step + 1e-9).floor() + 1.0;
    if count > MAX_ROWS as f64 {
        return Err(usage(format!("range would produce more than {MAX_ROWS} rows")));
    }
    Ok((0..count as usize).map(|i| start + step * i as f64).collect())
}

#[derive(Serialize)]
struct TableRow {
    n: f64,
    beta: f64,
    k: f64,
    sqrt2_gap: f64,
}

#[derive(Serialize)]
struct TableOutput {
    command: &'static str,
    rows: Vec<TableRow>,
}

fn sweep(fraser: &FraserSolver, ns: &[f64]) -> Result<Vec<TableRow>, CliError> {
    ns.iter()
        .map(|&n| {
            let s = fraser.solve_k(n)?;
            debug!("n = {n}: beta = {}, k = {}", s.beta, s.k);
            Ok(TableRow {
                n,
                beta: s.beta,
                k: s.k,
                sqrt2_gap: SQRT_2 - s.k,
            })
        })
        .collect()
}

pub fn table(cli: &Cli, n_min: f64, n_max: f64, step: f64) -> Result<Outcome, CliError> {
    let ns = grid(n_min, n_max, step)?;
    let rows = sweep(&solver(cli)?, &ns)?;
    let body = match cli.format.unwrap_or(Format::Csv) {
        Format::Csv => csv(
            &["n", "beta", "k", "sqrt2_gap"],
            &rows
                .iter()
                .map(|r| vec![sig12(r.n), sig12(r.beta), sig12(r.k), sig12(r.sqrt2_gap)])
                .collect::<Vec<_>>(),
        ),
        Format::Json => json(&TableOutput {
            command: "table",
            rows,
        }),
    };
    Ok(Outcome::ok(body))
}

fn timed<T>(f: impl FnOnce() -> Result<T, CliError>) -> Result<(T, f64), CliError> {
    let start = Instant::now();
    let v = f()?;
    Ok((v, start.elapsed().as_secs_f64() * 1e3))
}

pub fn verify(cli: &Cli, n: i64, tol_cross: f64, with_mc: bool, timings: bool) -> Result<Outcome, CliError> {
    if !(1..=6).contains(&n) {
        return Err(usage(format!("verify supports n = 1..6, got {n}")));
    }
    if !(tol_cross > 0.0) || !tol_cross.is_finite() {
        return Err(usage(format!("--tol-cross must be > 0, got {tol_cross}")));
    }
    if cli.format == Some(Format::Csv) {
        return Err(usage("verify reports are JSON only"));
    }
    let fraser = solver(cli)?;
    let dim = n as usize;
    let keep = |t: f64| timings.then_some(t);

    let mut methods = Vec::new();
    let (sol, t) = timed(|| Ok(fraser.solve_k(n as f64)?))?;
    methods.push(MethodRun {
        name: "fraser".into(),
        solution: sol,
        wall_time_ms: keep(t),
    });
    let (sol, t) = timed(|| Ok(solve_k_oracle(dim, cli.tol, &fraser.quad)?))?;
    methods.push(MethodRun {
        name: "oracle".into(),
        solution: sol,
        wall_time_ms: keep(t),
    });
    if n == 2 {
        let c = contour(cli)?;
        let (sol, t) = timed(|| Ok(ullisch_k(1.0, &c)?.solution))?;
        methods.push(MethodRun {
            name: "contour".into(),
            solution: sol,
            wall_time_ms: keep(t),
        });
    }

    let monte_carlo = if with_mc {
        let k = methods[0].solution.k;
        let mc = MonteCarloConfig {
            samples: cli.samples,
            seed: cli.seed,
        };
        if mc.samples < 1 {
            return Err(usage("--samples must be >= 1"));
        }
        let est = grazed_fraction_mc(dim, k, &mc)?;
        Some(McCheck::new(k, cli.seed, est))
    } else {
        None
    };

    let report = RunReport::new(n as u32, tol_cross, methods, monte_carlo);
    for d in report.deviations.iter().filter(|d| !d.pass) {
        log::warn!("{} vs {}: |dk| = {:e} exceeds {:e}", d.a, d.b, d.abs_diff, d.tolerance);
    }
    let code = match report.verdict {
        crate::report::Verdict::Pass => ExitCode::Success,
        crate::report::Verdict::Fail => ExitCode::VerificationFailed,
    };
    Ok(Outcome {
        body: json(&report),
        code,
    })
}

pub fn plot(cli: &Cli, n_max: f64, step: f64) -> Result<Outcome, CliError> {
    if cli.output.is_none() {
        return Err(usage("plot needs --output <file.svg>"));
    }
    if !(n_max > 0.0) || !n_max.is_finite() {
        return Err(usage(format!("--n-max must be > 0, got {n_max}")));
    }
    let ns = grid(0.0, n_max, step)?;
    let rows = sweep(&solver(cli)?, &ns)?;
    let points: Vec<(f64, f64)> = rows.iter().map(|r| (r.n, r.k)).collect();
    let svg = Plot {
        points: &points,
        asymptote: SQRT_2,
        x_max: n_max,
    }
    .to_svg();
    Ok(Outcome::ok(svg))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Solve {
            n,
            r,
            method,
            force_numeric,
        } => solve(cli, n, r, method, force_numeric),
        Command::Table { n_min, n_max, step } => table(cli, n_min, n_max, step),
        Command::Verify {
            n,
            tol_cross,
            with_mc,
            timings,
        } => verify(cli, n, tol_cross, with_mc, timings),
        Command::Plot { n_max, step } => plot(cli, n_max, step),
    }
}

/// Writes `body` to `path`, or stdout when there is none.
pub fn emit(body: &str, path: Option<&Path>) -> Result<(), CliError> {
    use std::io::Write;
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io(format!("stdout: {e}")))
        }
    }
}
