//! Batch commands behind the `ice-colors` binary.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
//! or domain errors. Reports go to the output writer, diagnostics to the
//! error writer.

use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::lattice::{check_state, count_table, enumerate_states, for_each_state, render_state};
use crate::pn::{pn_consistent, PnError};
use crate::theta::{filali_suite, identity_suite, specialization_check, CheckResult, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable that overrides the thread count.
pub const THREADS_ENV: &str = "ICE_COLORS_THREADS";

#[derive(Debug, Clone, PartialEq, Parser)]
#[command(
    name = "ice-colors",
    version,
    about = "Three-color counts and p_n polynomials of the reflecting-end 8VSOS model"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Worker threads; `ICE_COLORS_THREADS` takes precedence.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Fail with exit code 1 if the command takes longer than this many seconds.
    #[arg(long, global = true)]
    pub budget_secs: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Count states, optionally dumping the first few as ASCII pictures.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        dump: usize,
    },
    /// Table of N_{m,l}(k0, k1, k2).
    Counts {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// p_{n-1}(z) from every count formula, cross-checked against T.
    Pn {
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest lattice for the lattice suite.
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Time enumeration, counting and the p_{n-1} computation.
    Bench {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lattice,
    Theta,
    Filali,
    Specialization,
    All,
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            code
        }
    }
}

fn thread_count(config: &RunConfig, err: &mut dyn Write) -> Result<Option<usize>, i32> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(Some(t)),
            _ => {
                let _ = writeln!(err, "{THREADS_ENV} must be a positive integer, got {v:?}");
                Err(EXIT_USAGE)
            }
        },
        Err(_) => match config.threads {
            Some(0) => {
                let _ = writeln!(err, "--threads must be at least 1");
                Err(EXIT_USAGE)
            }
            t => Ok(t),
        },
    }
}

/// Runs a parsed command inside a rayon pool of the configured size.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let threads = match thread_count(config, err) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "cannot start thread pool: {e}");
            return EXIT_USAGE;
        }
    };
    let start = Instant::now();
    let mut buf_out = Vec::new();
    let mut buf_err = Vec::new();
    let code = pool.install(|| dispatch(&config.command, &mut buf_out, &mut buf_err));
    if out.write_all(&buf_out).is_err() {
        return EXIT_USAGE;
    }
    let _ = err.write_all(&buf_err);
    if let Some(budget) = config.budget_secs {
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs_f64(budget.max(0.0)) {
            let _ = writeln!(
                err,
                "time budget of {budget} s exceeded ({:.3} s)",
                elapsed.as_secs_f64()
            );
            return code.max(EXIT_CHECK_FAILED);
        }
    }
    code
}

fn emit(out: &mut dyn Write, text: &str) -> i32 {
    match writeln!(out, "{text}") {
        Ok(()) => EXIT_OK,
        Err(_) => EXIT_USAGE,
    }
}

fn dispatch(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match command {
        Command::Enumerate { n, dump } => enumerate_cmd(*n, *dump, out, err),
        Command::Counts { n, format, output } => counts_cmd(*n, *format, output.as_ref(), out, err),
        Command::Pn { n } => pn_cmd(*n, out, err),
        Command::Verify {
            suite,
            trials,
            seed,
            n,
        } => verify_cmd(*suite, *trials as usize, *seed, *n, out),
        Command::Bench { n } => bench_cmd(*n, out, err),
    }
}

#[derive(Serialize)]
struct EnumerateReport {
    n: usize,
    states: usize,
    states_by_m: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    dumps: Vec<String>,
}

fn enumerate_cmd(n: usize, dump: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let states = enumerate_states(n);
    let mut by_m = vec![0; n + 1];
    for s in &states {
        by_m[s.positive_turns()] += 1;
    }
    let mut dumps = Vec::new();
    for s in states.iter().take(dump) {
        match render_state(s) {
            Ok(d) => dumps.push(d),
            Err(e) => {
                let _ = writeln!(err, "cannot render state: {e}");
                return EXIT_CHECK_FAILED;
            }
        }
    }
    let report = EnumerateReport {
        n,
        states: states.len(),
        states_by_m: by_m,
        dumps,
    };
    emit(
        out,
        &serde_json::to_string_pretty(&report).expect("report serializes"),
    )
}

fn counts_cmd(
    n: usize,
    format: Format,
    output: Option<&PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let table = match count_table(n) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "enumeration failed: {e}");
            return EXIT_CHECK_FAILED;
        }
    };
    let text = match format {
        Format::Json => table.to_json() + "\n",
        Format::Csv => table.to_csv(),
    };
    match output {
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "cannot write {}: {e}", path.display());
                EXIT_USAGE
            }
        },
        None => match write!(out, "{text}") {
            Ok(()) => EXIT_OK,
            Err(_) => EXIT_USAGE,
        },
    }
}

fn pn_cmd(n: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match pn_consistent(n) {
        Ok(report) => {
            let code = emit(out, &report.to_json());
            if !report.all_ok() {
                let _ = writeln!(err, "symmetry or positivity check failed");
                return EXIT_CHECK_FAILED;
            }
            code
        }
        Err(PnError::EmptyLattice) => {
            let _ = writeln!(err, "pn requires n >= 1");
            EXIT_USAGE
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            EXIT_CHECK_FAILED
        }
    }
}

/// Checks every state for `n = 1..=max_n` against the structural
/// invariants; the residual is the fraction of states with a violation.
pub fn lattice_suite(max_n: usize) -> SuiteReport {
    let checks = (1..=max_n)
        .map(|n| {
            let mut states = 0usize;
            let mut bad = 0usize;
            for_each_state(n, |s| {
                states += 1;
                if !check_state(s).is_ok() {
                    bad += 1;
                }
            });
            let frac = if states == 0 {
                1.0
            } else {
                bad as f64 / states as f64
            };
            CheckResult {
                name: format!("lattice-invariants-n{n}"),
                trials: states,
                max_rel_residual: Some(frac),
                pass: states > 0 && bad == 0,
            }
        })
        .collect();
    SuiteReport::new("lattice", 0, checks)
}

fn verify_cmd(suite: Suite, trials: usize, seed: u64, n: usize, out: &mut dyn Write) -> i32 {
    let reports: Vec<SuiteReport> = match suite {
        Suite::Lattice => vec![lattice_suite(n)],
        Suite::Theta => vec![identity_suite(trials, seed)],
        Suite::Filali => vec![filali_suite(&[1, 2, 3], trials, seed)],
        Suite::Specialization => vec![specialization_check(&[1, 2], trials, seed)],
        Suite::All => vec![
            lattice_suite(n),
            identity_suite(trials, seed),
            filali_suite(&[1, 2, 3], trials, seed),
            specialization_check(&[1, 2], trials, seed),
        ],
    };
    let pass = reports.iter().all(|r| r.pass);
    let text = if reports.len() == 1 {
        reports[0].to_json()
    } else {
        serde_json::to_string_pretty(&reports).expect("reports serialize")
    };
    let code = emit(out, &text);
    if pass {
        code
    } else {
        EXIT_CHECK_FAILED
    }
}

#[derive(Serialize)]
struct BenchReport {
    n: usize,
    threads: usize,
    states: u64,
    count_table_secs: f64,
    pn_secs: Option<f64>,
}

fn bench_cmd(n: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let start = Instant::now();
    let table = match count_table(n) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "enumeration failed: {e}");
            return EXIT_CHECK_FAILED;
        }
    };
    let count_secs = start.elapsed().as_secs_f64();
    let pn_secs = if n >= 1 {
        let start = Instant::now();
        if let Err(e) = crate::pn::pn_consistent_with(&table) {
            let _ = writeln!(err, "{e}");
            return EXIT_CHECK_FAILED;
        }
        Some(start.elapsed().as_secs_f64())
    } else {
        None
    };
    let report = BenchReport {
        n,
        threads: rayon::current_num_threads(),
        states: table.total(),
        count_table_secs: count_secs,
        pn_secs,
    };
    emit(
        out,
        &serde_json::to_string_pretty(&report).expect("report serializes"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with_args(
            std::iter::once("ice-colors").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["pn"]).0, EXIT_USAGE);
        assert_eq!(
            run_args(&["verify", "--suite", "theta", "--trials", "0"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            run_args(&["counts", "--n", "1", "--format", "xml"]).0,
            EXIT_USAGE
        );
        let (code, _, err) = run_args(&["pn", "--n", "0"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("n >= 1"));
    }

    #[test]
    fn enumerate_reports_counts_and_dumps() {
        let (code, out, _) = run_args(&["enumerate", "--n", "2", "--dump", "1"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["states"], 12);
        assert_eq!(v["states_by_m"][0], 3);
        assert_eq!(v["dumps"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn lattice_suite_passes() {
        let (code, out, _) = run_args(&["verify", "--suite", "lattice", "--n", "2"]);
        assert_eq!(code, EXIT_OK, "{out}");
    }
}
