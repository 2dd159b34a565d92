//! The `garnir` command line.
//!
//! Exit codes: 0 success, 2 usage, 3 size bound exceeded, 4 a mathematical
//! check failed.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::combinat::Partition;
use crate::eigen::{
    condition_equivalence_report, scan_zero_tuples, trace_identity_check, ExchangeRange, OmegaTable,
};
use crate::error::GarnirError;
use crate::garnir::eta_matrix_closed_form;
use crate::verify::{verify_presentation, verify_two_column, Bounds};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BOUND: u8 = 3;
pub const EXIT_INVARIANT: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "garnir",
    version,
    about = "Symmetrized dual Garnir operators and their eigenvalues"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Plain,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues ω(ℓ,i) for one (n, m, ℓ), or a single i.
    Omega(OmegaArgs),
    /// All (n, m, ℓ, i) with i < m and ω(ℓ,i) = 0.
    Scan(ScanArgs),
    /// Trace identity Σ_i ω(ℓ,i)·dim_i = C(m,ℓ)·C(n+m,n) for every n <= n_max.
    Trace(RangeArgs),
    /// Nonvanishing of ω against the alternating binomial sums, for every n <= n_max.
    Equiv(RangeArgs),
    /// Exact-rank verdict for a presentation of a Specht module.
    Verify(VerifyArgs),
    /// Export the matrix of η_ℓ.
    Matrix(MatrixArgs),
}

#[derive(Debug, Args)]
pub struct OmegaArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub l: usize,
    #[arg(long)]
    pub i: Option<usize>,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long)]
    pub n_max: usize,
    /// Only 1 <= ℓ < m (the default).
    #[arg(long, conflicts_with = "l_le_m")]
    pub l_lt_m: bool,
    /// Include ℓ = m.
    #[arg(long)]
    pub l_le_m: bool,
    /// Print counts instead of tuples.
    #[arg(long)]
    pub summary: bool,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RangeArgs {
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["two_col", "shape"])))]
pub struct VerifyArgs {
    /// Column lengths n m of a two-column shape.
    #[arg(long, num_args = 2, value_names = ["N", "M"])]
    pub two_col: Option<Vec<usize>>,
    /// Exchange size for --two-col.
    #[arg(long, requires = "two_col")]
    pub l: Option<usize>,
    /// Parts of a partition, e.g. 2,2,1.
    #[arg(long, value_delimiter = ',')]
    pub shape: Option<Vec<usize>>,
    /// One exchange size per adjacent column pair, e.g. 1,1.
    #[arg(long, value_delimiter = ',', requires = "shape")]
    pub lhat: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub l: usize,
    /// Also list the basis tabloids in index order.
    #[arg(long)]
    pub basis: bool,
    /// plain: `row col value` lines; csv: `row,col,value`; json: one object.
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
}

/// Text destined for stdout (or `--out`), diagnostics for stderr, and an exit code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: u8, stdout: String, stderr: String) -> Self {
        Outcome {
            stdout,
            stderr,
            code,
        }
    }
}

fn exit_code(e: &GarnirError) -> u8 {
    match e {
        GarnirError::SizeBound { .. } => EXIT_BOUND,
        GarnirError::Invariant(_) => EXIT_INVARIANT,
        _ => EXIT_USAGE,
    }
}

fn from_error(e: GarnirError) -> Outcome {
    Outcome::fail(exit_code(&e), String::new(), format!("error: {e}\n"))
}

fn usage(msg: impl Into<String>) -> Outcome {
    Outcome::fail(
        EXIT_USAGE,
        String::new(),
        format!("error: {}\n", msg.into()),
    )
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

/// Runs a parsed command. Nothing is printed; see [`main_with_args`].
pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Omega(a) => cmd_omega(a),
        Command::Scan(a) => cmd_scan(a),
        Command::Trace(a) => cmd_trace(a),
        Command::Equiv(a) => cmd_equiv(a),
        Command::Verify(a) => match Bounds::from_env() {
            Ok(bounds) => cmd_verify(a, &bounds),
            Err(e) => from_error(e),
        },
        Command::Matrix(a) => match Bounds::from_env() {
            Ok(bounds) => cmd_matrix(a, &bounds),
            Err(e) => from_error(e),
        },
    }
}

fn cmd_omega(a: &OmegaArgs) -> Outcome {
    let table = match OmegaTable::new(a.n, a.m) {
        Ok(t) => t,
        Err(e) => return from_error(e),
    };
    if !(1..=a.m).contains(&a.l) {
        return usage(format!("need 1 <= l <= m, got l={} m={}", a.l, a.m));
    }
    let indices: Vec<usize> = match a.i {
        Some(i) if i > a.m => return usage(format!("need i <= m, got i={i} m={}", a.m)),
        Some(i) => vec![i],
        None => (0..=a.m).collect(),
    };
    let mut out = String::new();
    match (a.format, a.i) {
        (Format::Plain, Some(i)) => writeln!(out, "{}", table.get(a.l, i)).unwrap(),
        (Format::Plain, None) => {
            for &i in &indices {
                writeln!(out, "{i} {}", table.get(a.l, i)).unwrap();
            }
        }
        (Format::Csv, _) => {
            out.push_str("n,m,l,i,omega\n");
            for &i in &indices {
                writeln!(out, "{},{},{},{i},{}", a.n, a.m, a.l, table.get(a.l, i)).unwrap();
            }
        }
        (Format::Json, _) => {
            let values: Vec<_> = indices
                .iter()
                .map(|&i| json!({"i": i, "omega": table.get(a.l, i).to_string()}))
                .collect();
            out = pretty(&json!({"n": a.n, "m": a.m, "l": a.l, "values": values}));
        }
    }
    Outcome::ok(out)
}

fn cmd_scan(a: &ScanArgs) -> Outcome {
    if a.n_max == 0 {
        return usage("--n-max must be at least 1");
    }
    let range = if a.l_le_m {
        ExchangeRange::UpToM
    } else {
        ExchangeRange::BelowM
    };
    let report = scan_zero_tuples(a.n_max, range);
    let stdout = match (a.summary, a.format) {
        (_, Format::Json) => pretty(&report.to_json()),
        (true, _) => format!("{}\n", report.summary()),
        (false, Format::Csv) => report.to_csv(),
        (false, Format::Plain) => {
            let mut s = String::new();
            for t in &report.tuples {
                writeln!(s, "{} {} {} {}", t.n, t.m, t.l, t.i).unwrap();
            }
            s
        }
    };
    Outcome::ok(stdout)
}

fn cmd_trace(a: &RangeArgs) -> Outcome {
    if a.n_max == 0 {
        return usage("--n-max must be at least 1");
    }
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for n in 1..=a.n_max {
        for m in 1..=n {
            for l in 1..=m {
                checked += 1;
                match trace_identity_check(n, m, l) {
                    Ok(true) => {}
                    Ok(false) => failures.push((n, m, l)),
                    Err(e) => return from_error(e),
                }
            }
        }
    }
    summarize("trace identity", a, checked, &failures)
}

fn cmd_equiv(a: &RangeArgs) -> Outcome {
    if a.n_max == 0 {
        return usage("--n-max must be at least 1");
    }
    let report = condition_equivalence_report(a.n_max);
    summarize(
        "condition equivalence",
        a,
        report.checked,
        &report.mismatches,
    )
}

fn summarize(
    name: &str,
    a: &RangeArgs,
    checked: usize,
    failures: &[(usize, usize, usize)],
) -> Outcome {
    let holds = failures.is_empty();
    let stdout = match a.format {
        Format::Json => pretty(&json!({
            "check": name,
            "n_max": a.n_max,
            "checked": checked,
            "pass": holds,
            "failures": failures,
        })),
        Format::Csv => {
            let mut s = String::from("n,m,l\n");
            for (n, m, l) in failures {
                writeln!(s, "{n},{m},{l}").unwrap();
            }
            s
        }
        Format::Plain => {
            let verdict = if holds { "pass" } else { "FAIL" };
            let mut s = format!("{name}: {verdict} ({checked} triples, n <= {})\n", a.n_max);
            for (n, m, l) in failures {
                writeln!(s, "failed at n={n} m={m} l={l}").unwrap();
            }
            s
        }
    };
    if holds {
        Outcome::ok(stdout)
    } else {
        Outcome::fail(
            EXIT_INVARIANT,
            stdout,
            format!("{name} failed on {} triples\n", failures.len()),
        )
    }
}

fn cmd_verify(a: &VerifyArgs, bounds: &Bounds) -> Outcome {
    let verdict = if let Some(nm) = &a.two_col {
        let Some(l) = a.l else {
            return usage("--two-col needs --l");
        };
        verify_two_column(nm[0], nm[1], l, bounds)
    } else {
        let parts = a.shape.clone().unwrap_or_default();
        let shape = match Partition::new(parts) {
            Ok(p) => p,
            Err(e) => return from_error(e),
        };
        verify_presentation(&shape, a.lhat.as_deref().unwrap_or(&[]), bounds)
    };
    match verdict {
        Ok(v) => {
            let stdout = pretty(&serde_json::to_value(&v).expect("verdict serializes"));
            if v.consistent() {
                Outcome::ok(stdout)
            } else {
                Outcome::fail(
                    EXIT_INVARIANT,
                    stdout,
                    format!("predicted {} but observed {}\n", v.predicted, v.observed),
                )
            }
        }
        Err(e) => from_error(e),
    }
}

fn cmd_matrix(a: &MatrixArgs, bounds: &Bounds) -> Outcome {
    if !(1 <= a.l && a.l <= a.m && a.m <= a.n) {
        return usage(format!(
            "need 1 <= l <= m <= n, got n={} m={} l={}",
            a.n, a.m, a.l
        ));
    }
    if a.n + a.m > bounds.kernel {
        return from_error(GarnirError::SizeBound {
            what: "n + m",
            value: a.n + a.m,
            bound: bounds.kernel,
        });
    }
    let h = match eta_matrix_closed_form(a.n, a.m, a.l) {
        Ok(h) => h,
        Err(e) => return from_error(e),
    };
    let stdout = match a.format {
        Format::Json => {
            let mut v = h.to_json();
            if a.basis {
                v["basis"] = h.basis().iter().map(|t| json!(t)).collect();
            }
            pretty(&v)
        }
        Format::Plain | Format::Csv => {
            let mut s = String::new();
            if a.basis {
                for (k, t) in h.basis().iter().enumerate() {
                    writeln!(s, "# {k} {t}").unwrap();
                }
            }
            if a.format == Format::Plain {
                s.push_str(&h.to_triplet_text());
            } else {
                s.push_str("row,col,value\n");
                for (r, c, v) in h.triplets() {
                    writeln!(s, "{r},{c},{v}").unwrap();
                }
            }
            s
        }
    };
    Outcome::ok(stdout)
}

/// Parses `args`, runs the command, writes output and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = run(&cli);
    eprint!("{}", outcome.stderr);
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.stdout) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{}", outcome.stdout),
    }
    outcome.code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let cli =
            Cli::try_parse_from(std::iter::once("garnir").chain(args.iter().copied())).unwrap();
        run(&cli)
    }

    #[test]
    fn omega_column_and_single_value() {
        let o = run_args(&["omega", "--n", "3", "--m", "2", "--l", "1"]);
        assert_eq!(o.stdout, "0 8\n1 3\n2 0\n");
        let o = run_args(&["omega", "--n", "5", "--m", "4", "--l", "2", "--i", "4"]);
        assert_eq!(o.stdout, "0\n");
        let o = run_args(&[
            "omega", "--n", "5", "--m", "4", "--l", "2", "--format", "csv",
        ]);
        assert!(o.stdout.contains("5,4,2,1,0\n"));
    }

    #[test]
    fn omega_bad_parameters_are_usage_errors() {
        assert_eq!(
            run_args(&["omega", "--n", "3", "--m", "4", "--l", "1"]).code,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["omega", "--n", "3", "--m", "2", "--l", "3"]).code,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["omega", "--n", "3", "--m", "2", "--l", "1", "--i", "3"]).code,
            EXIT_USAGE
        );
    }

    #[test]
    fn scan_flags_conflict() {
        assert!(
            Cli::try_parse_from(["garnir", "scan", "--n-max", "4", "--l-lt-m", "--l-le-m"])
                .is_err()
        );
        assert_eq!(
            run_args(&["scan", "--n-max", "4", "--l-lt-m"]).stdout,
            "n,m,l,i\n"
        );
        assert_eq!(run_args(&["scan", "--n-max", "0"]).code, EXIT_USAGE);
    }

    #[test]
    fn verify_needs_a_target() {
        assert!(Cli::try_parse_from(["garnir", "verify"]).is_err());
        assert!(Cli::try_parse_from(["garnir", "verify", "--two-col", "5"]).is_err());
        let cli =
            Cli::try_parse_from(["garnir", "verify", "--shape", "2,2,1", "--lhat", "1"]).unwrap();
        match cli.command {
            Command::Verify(a) => {
                assert_eq!(a.shape, Some(vec![2, 2, 1]));
                assert_eq!(a.lhat, Some(vec![1]));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn verify_exit_codes() {
        let b = Bounds::default();
        let cli =
            Cli::try_parse_from(["garnir", "verify", "--two-col", "5", "4", "--l", "2"]).unwrap();
        let Command::Verify(a) = &cli.command else {
            unreachable!()
        };
        let o = cmd_verify(a, &b);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("\"predicted\": false"));
        assert_eq!(cmd_verify(a, &Bounds::uniform(8)).code, EXIT_BOUND);
    }

    #[test]
    fn matrix_export() {
        let o = run_args(&["matrix", "--n", "1", "--m", "1", "--l", "1"]);
        assert_eq!(o.stdout, "0 0 1\n1 0 -1\n0 1 -1\n1 1 1\n");
        let o = run_args(&[
            "matrix", "--n", "1", "--m", "1", "--l", "1", "--basis", "--format", "json",
        ]);
        assert!(o.stdout.contains("\"basis\""));
    }

    #[test]
    fn trace_and_equiv_small() {
        assert_eq!(run_args(&["trace", "--n-max", "1"]).code, EXIT_OK);
        let o = run_args(&["equiv", "--n-max", "6"]);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.starts_with("condition equivalence: pass"));
    }
}
