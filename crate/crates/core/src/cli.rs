//! The `bloch` command-line front end.
//!
//! Every subcommand is a thin adapter over the library. Numbers are printed
//! with 17 significant digits; complex entries are `[re, im]` pairs and
//! matrices are nested row-major arrays. Exit codes follow sysexits:
//! 64 usage, 65 data/domain error, 74 I/O error. `check` and `ppt` use
//! 0..=3 to report their verdicts.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::error::Error;
use crate::generators::{build_generator_basis, compute_structure_constants};
use crate::linalg::CMatrix;
use crate::membership::{coefficient_verdict, eigenvalue_oracle, Decision, MembershipVerdict, DEFAULT_TOL};
use crate::sampling::{sample_states, SampleKind};
use crate::sections3::{boundary_curves, sample_section, SectionSpec, DEFAULT_RESOLUTION};
use crate::separability::{ppt_verdict, CompositeDims, SeparabilityDecision};
use crate::statemap::{bloch_to_matrix, matrix_to_bloch, BlochVector, DensityCandidate};

pub const EX_OK: i32 = 0;
pub const EX_USAGE: i32 = 64;
pub const EX_DATAERR: i32 = 65;
pub const EX_IOERR: i32 = 74;

/// Exit code for `check --method both` when the two methods disagree.
pub const EX_DISAGREE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bloch", version, about = "Bloch-vector geometry for N-level quantum systems")]
pub struct Cli {
    /// Half-width of the boundary band on coefficients and eigenvalues.
    #[arg(long, global = true, env = "BLOCH_TOL", default_value_t = DEFAULT_TOL)]
    pub tol: f64,

    /// Seed for sampling commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Coeff,
    Eigen,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Pure,
    Mixed,
    BallUniform,
}

impl From<Kind> for SampleKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Pure => SampleKind::Pure,
            Kind::Mixed => SampleKind::Mixed,
            Kind::BallUniform => SampleKind::BallUniform,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dump the canonical generator basis.
    Generators {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Dump sorted canonical (i, j, k, f, g) rows as CSV.
    StructureConstants {
        #[arg(long)]
        n: usize,
    },
    /// Bloch vector (JSON array) to density matrix (JSON [re, im] rows).
    ToRho {
        #[arg(long)]
        n: usize,
        /// Path to a JSON file, or an inline JSON array.
        #[arg(long)]
        vector: String,
    },
    /// Density matrix (JSON [re, im] rows) to Bloch vector.
    ToBloch {
        /// Path to a JSON file, or an inline JSON array.
        #[arg(long)]
        matrix: String,
    },
    /// Decide whether a Bloch vector is a physical state.
    Check {
        #[arg(long)]
        n: usize,
        /// Path to a JSON file, or an inline JSON array.
        #[arg(long)]
        vector: String,
        #[arg(long, value_enum, default_value_t = Method::Coeff)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Classify a grid over a qutrit section Σ(i, j).
    Section {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        res: usize,
        /// Grid half-width (defaults to the ball radius 2/√3).
        #[arg(long)]
        range: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the closed-form boundary polylines to this CSV.
        #[arg(long)]
        emit_boundary: Option<PathBuf>,
    },
    /// Positive-partial-transpose test on a bipartite state.
    Ppt {
        /// Subsystem dimensions, e.g. 2x3.
        #[arg(long)]
        dims: String,
        /// Path to a JSON file, or an inline JSON array.
        #[arg(long)]
        matrix: String,
    },
    /// Emit random Bloch vectors, one JSON array per line.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long, value_enum)]
        kind: Kind,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Domain(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EX_USAGE,
            CliError::Io(_) => EX_IOERR,
            CliError::Domain(_) => EX_DATAERR,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EX_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EX_USAGE
                }
            };
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "bloch: {}", f.message());
            f.code()
        }
    }
}

/// Runs an already-parsed command.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    if cli.tol.is_nan() || cli.tol <= 0.0 || cli.tol.is_infinite() {
        return Err(CliError::Usage(format!("--tol must be positive (got {})", cli.tol)));
    }
    let tol = cli.tol;
    match &cli.command {
        Command::Generators { n, json, csv } => {
            let basis = build_generator_basis(*n)?;
            let text = if *json {
                let mats: Vec<String> = basis.iter().map(matrix_json).collect();
                format!("[\n{}\n]\n", mats.join(",\n"))
            } else if *csv {
                let mut s = String::from("index,row,col,re,im\n");
                for (idx, m) in basis.iter().enumerate() {
                    for r in 0..m.nrows() {
                        for c in 0..m.ncols() {
                            let z = m[(r, c)];
                            let _ = writeln!(s, "{},{},{},{},{}", idx + 1, r + 1, c + 1, fmt17(z.re), fmt17(z.im));
                        }
                    }
                }
                s
            } else {
                let mut s = String::new();
                for (idx, m) in basis.iter().enumerate() {
                    let _ = writeln!(s, "lambda_{}:", idx + 1);
                    for r in 0..m.nrows() {
                        let row: Vec<String> = (0..m.ncols())
                            .map(|c| format!("{:>22}", format_complex(m[(r, c)])))
                            .collect();
                        let _ = writeln!(s, "  {}", row.join(" "));
                    }
                }
                s
            };
            out.write_all(text.as_bytes())?;
            Ok(EX_OK)
        }
        Command::StructureConstants { n } => {
            let sc = compute_structure_constants(&build_generator_basis(*n)?)?;
            let mut s = String::from("i,j,k,f,g\n");
            for ([i, j, k], f, g) in sc.canonical_rows() {
                let _ = writeln!(s, "{},{},{},{},{}", i + 1, j + 1, k + 1, fmt17(f), fmt17(g));
            }
            out.write_all(s.as_bytes())?;
            Ok(EX_OK)
        }
        Command::ToRho { n, vector } => {
            let basis = build_generator_basis(*n)?;
            let v = BlochVector::new(*n, read_vector(vector)?)?;
            let rho = bloch_to_matrix(&v, &basis)?;
            writeln!(out, "{}", matrix_json(rho.matrix()))?;
            Ok(EX_OK)
        }
        Command::ToBloch { matrix } => {
            let rho = DensityCandidate::new(read_matrix(matrix)?)?;
            let basis = build_generator_basis(rho.n())?;
            let v = matrix_to_bloch(&rho, &basis)?;
            writeln!(out, "{}", vector_json(v.components()))?;
            Ok(EX_OK)
        }
        Command::Check { n, vector, method, json } => {
            let basis = build_generator_basis(*n)?;
            let v = BlochVector::new(*n, read_vector(vector)?)?;
            let rho = bloch_to_matrix(&v, &basis)?;
            let mut verdicts: Vec<(&str, MembershipVerdict)> = Vec::new();
            if matches!(method, Method::Coeff | Method::Both) {
                verdicts.push(("coeff", coefficient_verdict(&rho, tol)));
            }
            if matches!(method, Method::Eigen | Method::Both) {
                verdicts.push(("eigen", eigenvalue_oracle(&rho, tol)?));
            }
            let (label, code) = combine(&verdicts);
            let text = if *json {
                check_json(label, &verdicts)
            } else {
                check_table(label, &verdicts)
            };
            out.write_all(text.as_bytes())?;
            Ok(code)
        }
        Command::Section { i, j, res, range, out: path, emit_boundary } => {
            let spec = match range {
                Some(r) => SectionSpec::new(*i, *j, *res, *r)?,
                None => SectionSpec::new(*i, *j, *res, crate::sections3::qutrit_ball_radius())?,
            };
            let basis = build_generator_basis(3)?;
            let grid = sample_section(&spec, &basis, tol)?;
            let mut s = String::with_capacity(grid.len() * 56);
            s.push_str("lambda_i,lambda_j,class\n");
            for cell in &grid {
                let _ = writeln!(s, "{},{},{}", fmt17(cell.li), fmt17(cell.lj), cell.cell.as_str());
            }
            write_to(path.as_deref(), &s, out)?;
            if let Some(bpath) = emit_boundary {
                let mut b = String::from("curve,lambda_i,lambda_j\n");
                for curve in boundary_curves(&spec, 720)? {
                    for (x, y) in curve.points {
                        let _ = writeln!(b, "{},{},{}", curve.name, fmt17(x), fmt17(y));
                    }
                }
                fs::write(bpath, b).map_err(|e| CliError::Io(format!("{}: {e}", bpath.display())))?;
            }
            Ok(EX_OK)
        }
        Command::Ppt { dims, matrix } => {
            let dims = parse_dims(dims)?;
            let rho = DensityCandidate::new(read_matrix(matrix)?)?;
            let verdict = ppt_verdict(&rho, dims, tol)?;
            writeln!(out, "{} min_margin={}", verdict.decision, fmt17(verdict.min_margin))?;
            Ok(match verdict.decision {
                SeparabilityDecision::Separable => 0,
                SeparabilityDecision::Entangled => 1,
                SeparabilityDecision::PptInconclusive => 2,
            })
        }
        Command::Sample { n, count, kind } => {
            if *count == 0 {
                return Err(CliError::Usage("--count must be at least 1".into()));
            }
            let basis = build_generator_basis(*n)?;
            let mut s = String::new();
            for v in sample_states(&basis, *count, (*kind).into(), cli.seed)? {
                let _ = writeln!(s, "{}", vector_json(v.components()));
            }
            out.write_all(s.as_bytes())?;
            Ok(EX_OK)
        }
    }
}

/// Overall decision label and exit code for one or two verdicts.
///
/// With two methods, a strict INSIDE/OUTSIDE split is a disagreement; any
/// BOUNDARY answer makes the result BOUNDARY.
fn combine(verdicts: &[(&str, MembershipVerdict)]) -> (&'static str, i32) {
    let code = |d: Decision| match d {
        Decision::Inside => 0,
        Decision::Outside => 1,
        Decision::Boundary => 2,
    };
    match verdicts {
        [(_, v)] => (v.decision.as_str(), code(v.decision)),
        [(_, a), (_, b)] => {
            if a.decision == b.decision {
                (a.decision.as_str(), code(a.decision))
            } else if a.decision == Decision::Boundary || b.decision == Decision::Boundary {
                ("BOUNDARY", 2)
            } else {
                ("DISAGREE", EX_DISAGREE)
            }
        }
        _ => unreachable!("one or two methods"),
    }
}

fn check_table(label: &str, verdicts: &[(&str, MembershipVerdict)]) -> String {
    let mut s = format!("decision: {label}\n");
    for (name, v) in verdicts {
        let kind = if *name == "coeff" { "a" } else { "eig" };
        let failing = v.failing_index.map_or("-".to_string(), |i| i.to_string());
        let _ = writeln!(s, "\n{name}: {} (failing index {failing})", v.decision);
        let _ = writeln!(s, "  {:<6} {:>25}", "index", "margin");
        for (i, m) in v.margins.iter().enumerate() {
            let _ = writeln!(s, "  {:<6} {:>25}", format!("{kind}{}", i + 1), fmt17(*m));
        }
    }
    s
}

fn check_json(label: &str, verdicts: &[(&str, MembershipVerdict)]) -> String {
    let methods: Vec<String> = verdicts
        .iter()
        .map(|(name, v)| {
            let failing = v.failing_index.map_or("null".to_string(), |i| i.to_string());
            format!(
                "\"{name}\":{{\"decision\":\"{}\",\"failing_index\":{failing},\"margins\":{}}}",
                v.decision,
                vector_json(&v.margins)
            )
        })
        .collect();
    format!("{{\"decision\":\"{label}\",\"methods\":{{{}}}}}\n", methods.join(","))
}

fn parse_dims(text: &str) -> Result<CompositeDims, CliError> {
    let bad = || CliError::Usage(format!("--dims must look like 2x3 (got '{text}')"));
    let (a, b) = text.split_once(['x', 'X']).ok_or_else(bad)?;
    let na: usize = a.trim().parse().map_err(|_| bad())?;
    let nb: usize = b.trim().parse().map_err(|_| bad())?;
    Ok(CompositeDims::new(na, nb)?)
}

fn write_to(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

/// Reads inline JSON (starting with `[`) or the contents of a file.
fn load_json(arg: &str) -> Result<serde_json::Value, CliError> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| CliError::Io(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Domain(format!("invalid JSON: {e}")))
}

fn as_f64(v: &serde_json::Value) -> Result<f64, CliError> {
    v.as_f64()
        .ok_or_else(|| CliError::Domain(format!("expected a number, found {v}")))
}

fn as_array(v: &serde_json::Value) -> Result<&Vec<serde_json::Value>, CliError> {
    v.as_array()
        .ok_or_else(|| CliError::Domain(format!("expected an array, found {v}")))
}

/// Flat JSON array of reals.
pub fn parse_vector_json(text: &str) -> Result<Vec<f64>, String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    vector_from_value(&value).map_err(|f| f.message().to_string())
}

fn vector_from_value(value: &serde_json::Value) -> Result<Vec<f64>, CliError> {
    as_array(value)?.iter().map(as_f64).collect()
}

fn read_vector(arg: &str) -> Result<Vec<f64>, CliError> {
    vector_from_value(&load_json(arg)?)
}

/// N×N nested array of [re, im] pairs.
pub fn parse_matrix_json(text: &str) -> Result<CMatrix, String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    matrix_from_value(&value).map_err(|f| f.message().to_string())
}

fn matrix_from_value(value: &serde_json::Value) -> Result<CMatrix, CliError> {
    let rows = as_array(value)?;
    let n = rows.len();
    let mut m = CMatrix::zeros(n, n);
    for (r, row) in rows.iter().enumerate() {
        let cols = as_array(row)?;
        if cols.len() != n {
            return Err(Error::NotSquare(n, cols.len()).into());
        }
        for (c, entry) in cols.iter().enumerate() {
            let pair = as_array(entry)?;
            if pair.len() != 2 {
                return Err(CliError::Domain(format!("complex entry must be [re, im], found {entry}")));
            }
            m[(r, c)] = Complex64::new(as_f64(&pair[0])?, as_f64(&pair[1])?);
        }
    }
    Ok(m)
}

fn read_matrix(arg: &str) -> Result<CMatrix, CliError> {
    matrix_from_value(&load_json(arg)?)
}

/// 17 significant digits; round-trips every binary64 value.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.6}", z.re)
    } else {
        format!("{:.6}{:+.6}i", z.re, z.im)
    }
}

pub fn vector_json(v: &[f64]) -> String {
    let items: Vec<String> = v.iter().map(|x| fmt17(*x)).collect();
    format!("[{}]", items.join(","))
}

pub fn matrix_json(m: &CMatrix) -> String {
    let rows: Vec<String> = (0..m.nrows())
        .map(|r| {
            let entries: Vec<String> = (0..m.ncols())
                .map(|c| format!("[{},{}]", fmt17(m[(r, c)].re), fmt17(m[(r, c)].im)))
                .collect();
            format!("[{}]", entries.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["bloch"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn fmt17_round_trips() {
        for x in [0.1, 1.0 / 3.0, -2.0 / 3f64.sqrt(), 1e-300, 6.02214076e23] {
            assert_eq!(fmt17(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn matrix_json_round_trips() {
        let m = crate::separability::werner(0.3).into_matrix();
        assert_eq!(parse_matrix_json(&matrix_json(&m)).unwrap(), m);
    }

    #[test]
    fn bad_tolerance_is_usage_error() {
        let (code, _, err) = call(&["--tol", "0", "check", "--n", "2", "--vector", "[0,0,0]"]);
        assert_eq!(code, EX_USAGE);
        assert!(err.contains("--tol"));
    }

    #[test]
    fn dims_parsing() {
        assert_eq!(parse_dims("2x3").unwrap(), CompositeDims::new(2, 3).unwrap());
        assert!(matches!(parse_dims("2by3"), Err(CliError::Usage(_))));
        assert!(matches!(parse_dims("1x3"), Err(CliError::Domain(_))));
    }

    #[test]
    fn combine_rules() {
        let v = |d| MembershipVerdict { decision: d, margins: vec![], failing_index: None };
        assert_eq!(combine(&[("coeff", v(Decision::Inside))]), ("INSIDE", 0));
        assert_eq!(combine(&[("coeff", v(Decision::Outside)), ("eigen", v(Decision::Outside))]), ("OUTSIDE", 1));
        assert_eq!(combine(&[("coeff", v(Decision::Inside)), ("eigen", v(Decision::Boundary))]), ("BOUNDARY", 2));
        assert_eq!(combine(&[("coeff", v(Decision::Inside)), ("eigen", v(Decision::Outside))]), ("DISAGREE", 3));
    }
}
