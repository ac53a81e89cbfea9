//! `zetalab` — evaluation, functional-equation verification, linear-relation
//! checks, and zero scanning for the composed zeta/L-function family.
//!
//! Exit codes: 0 success, 1 usage/domain/evaluation error, 2 a verification
//! suite exceeded its tolerance. Output is deterministic for a fixed
//! (config, seed): JSON as one object per line, or RFC-4180 CSV with a
//! header row and 17-significant-digit numbers. `ZETALAB_THREADS` caps the
//! worker pool.

mod handle_args;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zetalab_core::composed::{fe_residual, selberg_descriptor, verify_linear_relations};
use zetalab_core::zeros::{
    count_zeros, density_experiment, locate_zeros, scan_real_axis, Rectangle,
};
use zetalab_core::zeta::{hurwitz_route, periodic_route, KernelRoute};
use zetalab_core::EvalError;

use handle_args::HandleArgs;
use output::{fmt17, OutputFormat, Writer};

#[derive(Parser)]
#[command(name = "zetalab", version, about = "Zeta/L-function laboratory")]
struct Cli {
    /// Output format for machine-readable records.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    out: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a handle at one point.
    Eval {
        #[command(flatten)]
        handle: HandleArgs,
        /// Point s, e.g. "2+0i", "0.5-3.2i".
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Functional-equation residual suite over seeded random points.
    VerifyFe {
        #[command(flatten)]
        handle: HandleArgs,
        #[arg(long, default_value_t = 100)]
        points: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Acceptance tolerance on the normalized residual.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = -3.0)]
        sigma_min: f64,
        #[arg(long, default_value_t = 4.0)]
        sigma_max: f64,
        #[arg(long, default_value_t = 50.0)]
        t_max: f64,
    },
    /// Verify the eight linear-relation families at one point.
    Relations {
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Count zeros in a rectangle by the argument principle.
    ZerosCount {
        #[command(flatten)]
        handle: HandleArgs,
        /// Rectangle "sigma1,sigma2,t1,t2".
        #[arg(long, allow_hyphen_values = true)]
        rect: String,
    },
    /// Locate and refine every zero in a rectangle.
    ZerosLocate {
        #[command(flatten)]
        handle: HandleArgs,
        #[arg(long, allow_hyphen_values = true)]
        rect: String,
        #[arg(long, default_value_t = 1000)]
        max_zeros: usize,
    },
    /// Scan |F(σ)| on a real interval, refining local minima.
    ScanReal {
        #[command(flatten)]
        handle: HandleArgs,
        #[arg(long, allow_hyphen_values = true)]
        from: f64,
        #[arg(long, allow_hyphen_values = true)]
        to: f64,
        #[arg(long, default_value_t = 0.01)]
        step: f64,
    },
    /// Zero counts N(σ₁,σ₂,T) for increasing T, optional zero records.
    Density {
        #[command(flatten)]
        handle: HandleArgs,
        #[arg(long)]
        sigma1: f64,
        #[arg(long)]
        sigma2: f64,
        /// Comma-separated increasing heights, e.g. "100,200,400".
        #[arg(long)]
        t_values: String,
        /// Also locate the zeros behind the final count.
        #[arg(long, default_value_t = false)]
        locate: bool,
    },
    /// Degree/conductor descriptor of a Selberg-class member.
    Selberg {
        #[command(flatten)]
        handle: HandleArgs,
    },
}

fn parse_complex(text: &str) -> Result<Complex64, EvalError> {
    let t = text.trim().replace(' ', "");
    let bad = || EvalError::Domain(format!("cannot parse complex number {text:?}"));
    if let Some(rest) = t.strip_suffix('i') {
        // find the split between real and imaginary parts
        let body = rest;
        for (idx, ch) in body.char_indices().rev() {
            if (ch == '+' || ch == '-') && idx > 0 {
                let prev = body.as_bytes()[idx - 1];
                if prev == b'e' || prev == b'E' {
                    continue;
                }
                let re: f64 = body[..idx].parse().map_err(|_| bad())?;
                let im_text = &body[idx..];
                let im: f64 = if im_text == "+" {
                    1.0
                } else if im_text == "-" {
                    -1.0
                } else {
                    im_text.parse().map_err(|_| bad())?
                };
                return Ok(Complex64::new(re, im));
            }
        }
        // pure imaginary
        let im: f64 = if body.is_empty() {
            1.0
        } else if body == "-" {
            -1.0
        } else {
            body.parse().map_err(|_| bad())?
        };
        return Ok(Complex64::new(0.0, im));
    }
    let re: f64 = t.parse().map_err(|_| bad())?;
    Ok(Complex64::new(re, 0.0))
}

fn parse_rect(text: &str) -> Result<Rectangle, EvalError> {
    let parts: Vec<f64> = text
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| EvalError::Domain(format!("cannot parse rectangle {text:?}")))?;
    if parts.len() != 4 {
        return Err(EvalError::Domain(
            "rectangle needs sigma1,sigma2,t1,t2".into(),
        ));
    }
    Rectangle::new(parts[0], parts[1], parts[2], parts[3])
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("ZETALAB_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build_global();
        }
    }
    // usage errors exit 1 (code 2 is reserved for exceeded tolerances)
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
        Err(e) => {
            // --help / --version
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, EvalError> {
    let mut w = Writer::new(cli.out);
    match cli.command {
        Command::Eval { handle, s } => {
            let h = handle.build()?;
            let s = parse_complex(&s)?;
            let value = h.eval(s)?;
            let route = route_of(&h, s);
            w.record(
                &["s_re", "s_im", "value_re", "value_im", "route", "accuracy_target", "handle"],
                &[
                    fmt17(s.re),
                    fmt17(s.im),
                    fmt17(value.re),
                    fmt17(value.im),
                    serde_json::to_value(route).unwrap().as_str().unwrap().to_string(),
                    fmt17(1e-10),
                    serde_json::to_string(&h.to_spec()).unwrap(),
                ],
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyFe {
            handle,
            points,
            seed,
            tol,
            sigma_min,
            sigma_max,
            t_max,
        } => {
            let h = handle.build()?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut worst = 0.0f64;
            let mut worst_at = Complex64::new(0.0, 0.0);
            let mut emitted = 0u32;
            let mut attempts = 0u32;
            while emitted < points {
                attempts += 1;
                if attempts > 200 * points {
                    return Err(EvalError::Domain(
                        "could not find enough admissible sample points".into(),
                    ));
                }
                let s = Complex64::new(
                    rng.gen_range(sigma_min..sigma_max),
                    rng.gen_range(-t_max..t_max),
                );
                if !admissible_fe_point(&h, s) {
                    continue;
                }
                let r = match fe_residual(&h, s) {
                    Ok(r) => r,
                    Err(_) => continue,
                };
                emitted += 1;
                if r > worst {
                    worst = r;
                    worst_at = s;
                }
                w.record(
                    &["index", "s_re", "s_im", "residual", "tol"],
                    &[
                        emitted.to_string(),
                        fmt17(s.re),
                        fmt17(s.im),
                        fmt17(r),
                        fmt17(tol),
                    ],
                )?;
            }
            eprintln!(
                "max residual {:.3e} at s = {worst_at} over {points} points (tol {tol:.1e})",
                worst
            );
            Ok(if worst <= tol {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Relations { q, s, tol } => {
            let s = parse_complex(&s)?;
            let report = verify_linear_relations(q, s)?;
            for row in &report.rows {
                w.record(
                    &["relation", "max_mismatch", "instances", "tol"],
                    &[
                        row.name.to_string(),
                        fmt17(row.max_mismatch),
                        row.instances.to_string(),
                        fmt17(tol),
                    ],
                )?;
            }
            let worst = report.overall_max();
            eprintln!("worst relation mismatch {worst:.3e} (tol {tol:.1e})");
            Ok(if worst <= tol {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::ZerosCount { handle, rect } => {
            let h = handle.build()?;
            let r = parse_rect(&rect)?;
            let c = count_zeros(&h, &r)?;
            w.record(
                &[
                    "count",
                    "winding_integral",
                    "boundary_margin",
                    "sigma1",
                    "sigma2",
                    "t1",
                    "t2",
                    "integrality_tol",
                ],
                &[
                    c.count.to_string(),
                    fmt17(c.winding_integral),
                    fmt17(c.boundary_margin),
                    fmt17(r.sigma1),
                    fmt17(r.sigma2),
                    fmt17(r.t1),
                    fmt17(r.t2),
                    fmt17(0.1),
                ],
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::ZerosLocate {
            handle,
            rect,
            max_zeros,
        } => {
            let h = handle.build()?;
            let r = parse_rect(&rect)?;
            let out = locate_zeros(&h, &r, max_zeros)?;
            for z in &out.records {
                w.zero_record(z)?;
            }
            for f in &out.failures {
                eprintln!("warning: {f}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ScanReal {
            handle,
            from,
            to,
            step,
        } => {
            let h = handle.build()?;
            let report = scan_real_axis(&h, from, to, step)?;
            w.record(
                &[
                    "sigma_lo",
                    "sigma_hi",
                    "step",
                    "min_abs",
                    "argmin",
                    "certified_nonvanishing",
                    "threshold",
                ],
                &[
                    fmt17(report.sigma_lo),
                    fmt17(report.sigma_hi),
                    fmt17(report.step),
                    fmt17(report.min_abs),
                    fmt17(report.argmin),
                    report.certified_nonvanishing.to_string(),
                    fmt17(report.threshold),
                ],
            )?;
            for z in &report.zeros {
                w.zero_record(z)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Density {
            handle,
            sigma1,
            sigma2,
            t_values,
            locate,
        } => {
            let h = handle.build()?;
            let ts: Vec<f64> = t_values
                .split(',')
                .map(|p| p.trim().parse::<f64>())
                .collect::<Result<_, _>>()
                .map_err(|_| EvalError::Domain(format!("bad t list {t_values:?}")))?;
            let table = density_experiment(&h, sigma1, sigma2, &ts, locate)?;
            for row in &table.rows {
                w.record(
                    &["record", "t", "count", "ratio", "residual_tol"],
                    &[
                        "count".into(),
                        fmt17(row.t),
                        row.count.to_string(),
                        fmt17(row.ratio),
                        fmt17(1e-7),
                    ],
                )?;
            }
            for z in &table.zeros {
                w.zero_record(z)?;
            }
            for f in &table.failures {
                eprintln!("warning: {f}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Selberg { handle } => {
            let h = handle.build()?;
            let d = selberg_descriptor(&h)?;
            w.record(
                &[
                    "kind",
                    "degree",
                    "conductor",
                    "q_scale",
                    "factors",
                    "root_re",
                    "root_im",
                ],
                &[
                    h.kind_name().to_string(),
                    fmt17(d.degree),
                    fmt17(d.conductor),
                    fmt17(d.gamma.q_scale),
                    serde_json::to_string(&d.gamma.factors).unwrap(),
                    fmt17(d.root_number.re),
                    fmt17(d.root_number.im),
                ],
            )?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn route_of(handle: &zetalab_core::composed::FunctionHandle, s: Complex64) -> KernelRoute {
    use zetalab_core::composed::FunctionHandle as H;
    match handle {
        H::P(a) | H::O(a) => periodic_route_for(s, a.as_f64()),
        _ => hurwitz_route(s),
    }
}

fn periodic_route_for(s: Complex64, _a: f64) -> KernelRoute {
    periodic_route(s)
}

/// The residual suites stay off poles and off the real-axis integer lattice
/// where the gamma factors degenerate.
fn admissible_fe_point(handle: &zetalab_core::composed::FunctionHandle, s: Complex64) -> bool {
    let one_minus = Complex64::new(1.0, 0.0) - s;
    for p in [s, one_minus] {
        if handle.pole_distance(p) < 0.05 {
            return false;
        }
        if p.im.abs() < 0.05 && (p.re - p.re.round()).abs() < 0.05 {
            return false;
        }
    }
    true
}
