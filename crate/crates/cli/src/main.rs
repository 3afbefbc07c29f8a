// Copyright 2026 the geointerp Authors
// SPDX-License-Identifier: Apache-2.0

//! `geointerp` command-line tool.
//!
//! Results are printed as JSON on stdout with 12 significant digits. Exit
//! status is 0 on success, 1 when a computed check fails and 2 for bad input;
//! errors are reported as JSON on stderr.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use geointerp_core::io::CurveFile;
use geointerp_core::{
    compare_curves, generate, greens_check, is_simple, jordan_interpolate, p_variation_in, path_signature,
    simple_interpolate, svg, BivariatePoly, CurveSpec, Error, PiecewiseGeodesic, SampledCurve, Word,
};
use serde_json::{json, Value};

/// Residual above which the two sides of Green's theorem count as different.
const GREEN_TOL: f64 = 1e-9;
/// Moment vectors closer than this count as equal in `compare`.
const MOMENT_TOL: f64 = 1e-6;

#[derive(Parser)]
#[command(name = "geointerp", version, about = "Simple piecewise-geodesic interpolation and verification tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a curve from a generator spec (inline JSON or a file path).
    Generate {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        out: PathBuf,
        /// Overrides the seed of randomized generators.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Interpolate a curve; closed curves get the Jordan construction.
    Interpolate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        epsilon: f64,
        /// Times the partition must contain (closed curves only).
        #[arg(long, value_delimiter = ',')]
        required: Vec<f64>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Check that a polyline is simple; exits 1 with the violating pair if not.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// p-variation of a curve's samples.
    Pvar {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        p: f64,
    },
    /// Truncated signature of a Euclidean polyline, or one coefficient.
    Signature {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = geointerp_core::DEFAULT_LEVEL)]
        level: usize,
        /// Comma-separated letters, e.g. `1,2`.
        #[arg(long)]
        word: Option<String>,
    },
    /// Both sides of Green's theorem on Jordan interpolations of a closed curve.
    Green {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, value_delimiter = ',', default_value = "0.2,0.1,0.05")]
        epsilons: Vec<f64>,
    },
    /// Compare two closed curves by orientation, moments and recovered time change.
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long, default_value_t = 4)]
        moments: usize,
    },
}

enum Failure {
    Input(Error),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidPoint(_)
            | Error::OutOfRange(_)
            | Error::InvalidCurve(_)
            | Error::NotSimple(_)
            | Error::NotJordan(_)
            | Error::InfeasibleRequiredPoints(_)
            | Error::SpaceMismatch
            | Error::ShapeError(_)
            | Error::Unsupported(_)
            | Error::InvalidWord(_)
            | Error::TruncationTooSmall { .. }
            | Error::OrientationError { .. }
            | Error::GenerationFailed(_)
            | Error::Parse(_)
            | Error::Io(_)
            | Error::Json(_) => Failure::Input(e),
            _ => Failure::Compute(e),
        }
    }
}

/// Rounds every float in `v` to 12 significant digits.
fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap_or(f64::NAN);
            let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
            serde_json::Number::from_f64(r).map_or(Value::Null, Value::Number)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

fn print(v: Value) {
    let text = serde_json::to_string_pretty(&round_floats(v)).expect("JSON value");
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn read_curve(path: &Path) -> Result<SampledCurve, Error> {
    let curve = CurveFile::read(path)?.to_curve()?;
    Ok(curve)
}

fn read_polyline(path: &Path) -> Result<PiecewiseGeodesic, Error> {
    CurveFile::read(path)?.to_polyline()
}

fn parse_spec(spec: &str, seed: Option<u64>) -> Result<CurveSpec, Error> {
    let text = if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else {
        fs::read_to_string(spec)?
    };
    let mut spec: CurveSpec = serde_json::from_str(&text)?;
    if let (Some(s), CurveSpec::PerturbedCircle { seed, .. }) = (seed, &mut spec) {
        *seed = s;
    }
    Ok(spec)
}

/// Returns `Ok(true)` when every asserted check passed.
fn run(cmd: Command) -> Result<bool, Failure> {
    match cmd {
        Command::Generate { spec, out, seed } => {
            let spec = parse_spec(&spec, seed)?;
            let curve = generate(&spec)?;
            let meta = serde_json::to_value(&spec).map_err(Error::from)?;
            CurveFile::from_curve(&curve).with_meta(json!({ "spec": meta })).write(&out)?;
            print(json!({ "samples": curve.len(), "closed": curve.is_closed(), "out": out }));
            Ok(true)
        }
        Command::Interpolate {
            input,
            epsilon,
            required,
            out,
            svg: svg_path,
        } => {
            let curve = read_curve(&input)?;
            let (polyline, report) = if curve.is_closed() {
                let j = jordan_interpolate(&curve, epsilon, &required)?;
                let r = &j.report;
                let report = json!({
                    "construction": "jordan",
                    "epsilon_used": r.epsilon,
                    "ball_radius": r.ball_radius,
                    "stage_radii": r.stage_radii,
                    "retries": r.retries,
                });
                (j.polyline, report)
            } else {
                if !required.is_empty() {
                    return Err(Failure::Input(Error::OutOfRange(
                        "required times are only supported for closed curves".into(),
                    )));
                }
                let s = simple_interpolate(&curve, epsilon)?;
                let report = json!({
                    "construction": "simple",
                    "delta_epsilon": s.report.delta_epsilon,
                    "eta_epsilon": s.report.eta_epsilon,
                });
                (s.polyline, report)
            };
            let meta = json!({ "epsilon": epsilon, "required": required, "report": report });
            CurveFile::from_polyline(&polyline).with_meta(meta).write(&out)?;
            if let Some(p) = svg_path {
                fs::write(&p, svg::render(Some(&curve), Some(&polyline))).map_err(Error::from)?;
            }
            print(json!({
                "nodes": polyline.nodes().len(),
                "mesh": polyline.partition().mesh(),
                "simple": true,
                "report": report,
            }));
            Ok(true)
        }
        Command::Verify { input } => {
            let polyline = read_polyline(&input)?;
            let verdict = is_simple(&polyline);
            match &verdict.violation {
                None => print(json!({ "simple": true })),
                Some(v) => print(json!({
                    "simple": false,
                    "violation": {
                        "first": v.first,
                        "second": v.second,
                        "kind": format!("{:?}", v.kind),
                        "witness": v.witness.coords(),
                    }
                })),
            }
            Ok(verdict.ok)
        }
        Command::Pvar { input, p } => {
            let path = CurveFile::read(&input)?.to_path()?;
            let r = p_variation_in(path.space(), path.points(), p)?;
            print(json!({ "p": r.p, "value": r.value, "optimal_partition": r.optimal_partition }));
            Ok(true)
        }
        Command::Signature { input, level, word } => {
            let polyline = read_polyline(&input)?;
            let sig = path_signature(&polyline, level)?;
            match word {
                Some(w) => {
                    let w: Word = w.parse()?;
                    print(json!({ "word": w.0, "value": sig.coeff(&w)? }));
                }
                None => print(json!({ "dim": sig.dim(), "level": sig.level(), "levels": sig.levels() })),
            }
            Ok(true)
        }
        Command::Green { input, f, g, epsilons } => {
            let curve = read_curve(&input)?;
            let (f, g): (BivariatePoly, BivariatePoly) = (f.parse()?, g.parse()?);
            let reports = greens_check(&f, &g, &curve, &epsilons)?;
            let ok = reports.iter().all(|r| r.residual <= GREEN_TOL);
            print(json!({ "reports": reports, "tolerance": GREEN_TOL, "passed": ok }));
            Ok(ok)
        }
        Command::Compare { a, b, moments } => {
            let (ca, cb) = (read_curve(&a)?, read_curve(&b)?);
            let rep = compare_curves(&ca, &cb, moments)?;
            let equal = rep.max_moment_difference <= MOMENT_TOL;
            // equal moments must come with a recovered increasing time change
            let consistent = !equal || rep.reparam.as_ref().is_some_and(|r| r.matched);
            let value = serde_json::to_value(&rep).map_err(Error::from)?;
            print(json!({
                "moments_equal": equal,
                "consistent": consistent,
                "report": value,
            }));
            Ok(consistent)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(failure) => {
            let (code, e) = match failure {
                Failure::Input(e) => (2, e),
                Failure::Compute(e) => (1, e),
            };
            let body = json!({ "error": e.kind(), "message": e.to_string() });
            eprintln!("{body}");
            ExitCode::from(code)
        }
    }
}
