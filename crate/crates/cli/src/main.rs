//! `octoeig`: eigensystems and six-way projections of 3×3 octonionic
//! Hermitian matrices from JSON files, plus the randomized verification and
//! fuzzing harnesses.
//!
//! Exit codes: 0 pass, 1 failure or bad input, 2 when the matrix has a
//! single eigenvector family (real or complex entries).

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;
use serde::Serialize;

use octoeig::projection::decompose_with;
use octoeig::spectral::eigensystem;
use octoeig::verify::{self, CheckSet, FuzzClass, FuzzOptions, VerifyOptions};
use octoeig::{EigenSystem, Hermitian3, OctVector3, SpectralPath, DEFAULT_TOLERANCE};

#[derive(Parser, Debug)]
#[command(name = "octoeig", version, about = "Eigenvalues and six-way projections for 3×3 octonionic Hermitian matrices")]
struct Cli {
    /// Residual tolerance for every check
    #[arg(long, global = true, env = "OCTO_TOLERANCE", default_value_t = DEFAULT_TOLERANCE, value_parser = parse_tolerance)]
    tolerance: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalues and eigenvectors of a matrix, family by family
    Eigen {
        /// Matrix JSON: {"d", "e", "f", "a", "b", "c"}
        matrix: PathBuf,
        /// Write the eigensystem JSON here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose a vector into eigenvectors of a matrix
    Project {
        matrix: PathBuf,
        /// Vector JSON: three arrays of eight coordinates
        vector: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every identity suite on random instances
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        samples: u64,
        /// Write the JSON report here
        #[arg(long)]
        out: Option<PathBuf>,
        /// Added to det A in the matrix form of K (negative-control hook)
        #[arg(long, default_value_t = 0.0, hide = true, allow_hyphen_values = true)]
        det_offset: f64,
    },
    /// Eigensystem and decomposition end to end on random matrices of a class
    Fuzz {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: u64,
        /// REAL, COMPLEX, QUATERNIONIC, OCTONIONIC or BOUNDARY
        #[arg(long, default_value = "OCTONIONIC")]
        class: FuzzClass,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    match s.trim().parse::<f64>() {
        Ok(t) if t.is_finite() && t > 0.0 => Ok(t),
        Ok(_) => Err(format!("tolerance must be positive and finite, got {s}")),
        Err(e) => Err(format!("invalid tolerance '{s}': {e}")),
    }
}

/// An error to report before exiting with status 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn read_json<T: DeserializeOwned>(path: &Path, what: &str) -> Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("cannot read {what} {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure(format!("invalid {what} {}: {e}", path.display())))
}

fn write_json<T: Serialize>(out: Option<&Path>, value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("cannot write {}: {e}", path.display()))),
        None => Ok(std::io::stdout().write_all(text.as_bytes())?),
    }
}

fn read_matrix(path: &Path) -> Result<Hermitian3, Failure> {
    let a: Hermitian3 = read_json(path, "matrix")?;
    if !a.is_finite() {
        return Err(Failure(format!("invalid matrix {}: entries must be finite", path.display())));
    }
    Ok(a)
}

fn class_name(sys: &EigenSystem) -> String {
    serde_json::to_value(sys.class.tag).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
}

fn routing_note(sys: &EigenSystem) -> Option<String> {
    match sys.path {
        SpectralPath::Octonionic => None,
        SpectralPath::Quaternionic => Some(format!(
            "note: {} matrix routed to the quaternionic path (eigenvectors of A and ℓ·eigenvectors of Ā)",
            class_name(sys)
        )),
        SpectralPath::Complex => Some(format!(
            "note: {} matrix routed to the complex path: a single family of three eigenvectors",
            class_name(sys)
        )),
    }
}

/// Status for a finished command: check failures beat the degenerate notice.
fn status(set: &CheckSet, sys: &EigenSystem) -> ExitCode {
    if !set.pass() {
        ExitCode::from(1)
    } else if sys.is_degenerate() {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}

fn solve(a: &Hermitian3) -> Result<EigenSystem, Failure> {
    eigensystem(a).map_err(|e| Failure(format!("eigensystem failed: {e}")))
}

fn cmd_eigen(matrix: &Path, out: Option<&Path>, tolerance: f64) -> Result<ExitCode, Failure> {
    let a = read_matrix(matrix)?;
    let sys = solve(&a)?;
    let mut set = CheckSet::new();
    verify::decomposition_checks(&mut set, &a, &sys, tolerance);
    write_json(out, &sys)?;
    eprint!("{}", set.table());
    if let Some(note) = routing_note(&sys) {
        eprintln!("{note}");
    }
    Ok(status(&set, &sys))
}

fn cmd_project(matrix: &Path, vector: &Path, out: Option<&Path>, tolerance: f64) -> Result<ExitCode, Failure> {
    let a = read_matrix(matrix)?;
    let x: OctVector3 = read_json(vector, "vector")?;
    if !x.is_finite() {
        return Err(Failure(format!("invalid vector {}: coordinates must be finite", vector.display())));
    }
    let sys = solve(&a)?;
    let d = decompose_with(&a, &sys, &x);
    let mut set = CheckSet::new();
    verify::decomposition_checks(&mut set, &a, &sys, tolerance);
    verify::decomposition_result_checks(&mut set, &a, &d, tolerance, "");
    write_json(out, &d)?;
    eprint!("{}", set.table());
    if let Some(note) = routing_note(&sys) {
        eprintln!("{note}");
    }
    Ok(status(&set, &sys))
}

fn finish_report(report: &verify::RunReport, out: Option<&Path>) -> Result<ExitCode, Failure> {
    print!("{}", report.table());
    println!("{}: {}", report.command, if report.pass { "PASS" } else { "FAIL" });
    if let Some(path) = out {
        write_json(Some(path), report)?;
    }
    Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let tolerance = cli.tolerance;
    match cli.command {
        Command::Eigen { matrix, out } => cmd_eigen(&matrix, out.as_deref(), tolerance),
        Command::Project { matrix, vector, out } => cmd_project(&matrix, &vector, out.as_deref(), tolerance),
        Command::Verify { seed, samples, out, det_offset } => {
            let opts = VerifyOptions { seed, samples: samples as usize, tolerance, det_offset };
            finish_report(&verify::verify(&opts), out.as_deref())
        }
        Command::Fuzz { seed, samples, class, out } => {
            let opts = FuzzOptions { seed, samples: samples as usize, class, tolerance };
            finish_report(&verify::fuzz(&opts), out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // clap uses 2 for usage errors; 2 is reserved for the routing notice
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
