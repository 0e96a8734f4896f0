//! Command-line front end. Every command reads one input file, writes one
//! report, and maps failures onto exit codes: 1 for I/O or parse failures
//! (anything that goes wrong while loading the input), 2 for semantic
//! failures (invalid channel, non-unital where unitality is required, no
//! perfect matching, dimension cap).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::birkhoff::{birkhoff_decompose, is_doubly_stochastic, DoublyStochasticMatrix};
use crate::catlaws::{self, LawReport};
use crate::channels::{self, io, validate_kraus, KrausChannel, DEFAULT_DIM_CAP};
use crate::error::Error;
use crate::extremality::tensor_power_extremal;
use crate::matcore::{format_real, ComplexMatrix, DEFAULT_TOL};
use crate::mixapprox::{fit_unitary_mixture, tensor_power_experiment, FitOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_SEMANTIC: i32 = 2;

/// Cap on the default number of mixture terms per tensor-power level.
pub const DEFAULT_M_CAP: usize = 16;
const LAW_SAMPLES: usize = 8;
const LAW_CASES: usize = 200;

#[derive(Debug, Parser)]
#[command(name = "qbirkhoff", version, about = "Unital quantum channel toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Check a channel (.json) for trace preservation and unitality, or a
    /// matrix (.csv) for double stochasticity.
    Validate,
    /// Birkhoff decomposition of a doubly stochastic matrix (.csv).
    Decompose,
    /// Extremality test of a unital channel or of its tensor power.
    Extremal,
    /// Best m-term unitary mixture approximating a unital channel.
    Fit,
    /// Fits to tensor powers 1..=n-max of a unital channel.
    Experiment,
    /// Category-law checks on a channel, or on random channels without input.
    Laws,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, Args)]
pub struct Options {
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Mixture size; for `experiment`, a comma-separated schedule per power.
    #[arg(long, global = true, value_delimiter = ',')]
    pub m: Vec<usize>,
    #[arg(long = "n-max", global = true, default_value_t = 2)]
    pub n_max: usize,
    #[arg(long, global = true)]
    pub restarts: Option<usize>,
    #[arg(long, global = true, default_value_t = 1)]
    pub power: usize,
    #[arg(long = "max-iter", global = true)]
    pub max_iter: Option<usize>,
}

/// A failed command: the message goes to stderr, the code to the process.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn io(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_IO,
            message: message.into(),
        }
    }

    fn semantic(e: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_SEMANTIC,
            message: e.to_string(),
        }
    }
}

/// Rendered report plus whether the verdict it carries is a success.
pub struct Outcome {
    pub report: String,
    pub ok: bool,
}

/// Parses `args` (including the program name), runs, writes the report and
/// returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_IO } else { EXIT_OK };
        }
    };
    match execute(&cli).and_then(|out| emit(&cli.opts, out)) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn emit(opts: &Options, out: Outcome) -> Result<i32, Failure> {
    match &opts.output {
        Some(path) => fs::write(path, &out.report)
            .map_err(|e| Failure::io(format!("{}: {e}", path.display())))?,
        None => print!("{}", out.report),
    }
    Ok(if out.ok { EXIT_OK } else { EXIT_SEMANTIC })
}

pub fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let opts = &cli.opts;
    match cli.command {
        Command::Validate => cmd_validate(opts),
        Command::Decompose => cmd_decompose(opts),
        Command::Extremal => cmd_extremal(opts),
        Command::Fit => cmd_fit(opts),
        Command::Experiment => cmd_experiment(opts),
        Command::Laws => cmd_laws(opts),
    }
}

enum Input {
    Channel(Vec<ComplexMatrix>),
    Matrix(ComplexMatrix),
}

fn require_input(opts: &Options) -> Result<&Path, Failure> {
    opts.input
        .as_deref()
        .ok_or_else(|| Failure::io("missing --input"))
}

fn load(path: &Path) -> Result<Input, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let located = |e: Error| Failure::io(format!("{}: {e}", path.display()));
    match ext.to_ascii_lowercase().as_str() {
        "json" => io::parse_kraus_json(&text)
            .map(Input::Channel)
            .map_err(located),
        "csv" => io::parse_matrix_csv(&text)
            .map(Input::Matrix)
            .map_err(located),
        _ => Err(Failure::io(format!(
            "{}: expected a .json channel or .csv matrix",
            path.display()
        ))),
    }
}

fn load_channel(opts: &Options) -> Result<KrausChannel, Failure> {
    match load(require_input(opts)?)? {
        Input::Channel(ops) => KrausChannel::new(ops).map_err(Failure::semantic),
        Input::Matrix(_) => Err(Failure::io("this command needs a .json channel")),
    }
}

fn load_matrix(opts: &Options) -> Result<ComplexMatrix, Failure> {
    match load(require_input(opts)?)? {
        Input::Matrix(m) => Ok(m),
        Input::Channel(_) => Err(Failure::io("this command needs a .csv matrix")),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn key_values(pairs: &[(&str, String)], sep: &str) -> String {
    let mut out = String::new();
    if sep == "," {
        out.push_str("field,value\n");
    }
    for (k, v) in pairs {
        let _ = writeln!(out, "{k}{sep}{v}");
    }
    out
}

fn render_pairs(format: Format, pairs: &[(&str, String)], as_json: String) -> String {
    match format {
        Format::Json => as_json,
        Format::Csv => key_values(pairs, ","),
        Format::Text => key_values(pairs, ": "),
    }
}

#[derive(Serialize)]
struct MatrixReport {
    n: usize,
    min_entry: f64,
    max_imaginary: f64,
    max_row_deviation: f64,
    max_col_deviation: f64,
    doubly_stochastic: bool,
}

fn matrix_report(m: &ComplexMatrix, tol: f64) -> Result<MatrixReport, Failure> {
    let doubly_stochastic = is_doubly_stochastic(m, tol).map_err(Failure::semantic)?;
    let n = m.rows();
    let dev = |sum: f64| (sum - 1.0).abs();
    let max_row_deviation = (0..n)
        .map(|i| dev((0..n).map(|j| m[(i, j)].re).sum()))
        .fold(0.0, f64::max);
    let max_col_deviation = (0..n)
        .map(|j| dev((0..n).map(|i| m[(i, j)].re).sum()))
        .fold(0.0, f64::max);
    Ok(MatrixReport {
        n,
        min_entry: m.iter().map(|z| z.re).fold(f64::INFINITY, f64::min),
        max_imaginary: m.iter().map(|z| z.im.abs()).fold(0.0, f64::max),
        max_row_deviation,
        max_col_deviation,
        doubly_stochastic,
    })
}

fn cmd_validate(opts: &Options) -> Result<Outcome, Failure> {
    match load(require_input(opts)?)? {
        Input::Channel(ops) => {
            let mut r = validate_kraus(&ops).map_err(Failure::semantic)?;
            r.trace_preserving = r.trace_deviation <= opts.tol;
            r.unital = r.unital_deviation <= opts.tol;
            let pairs = [
                ("dim", r.dim.to_string()),
                ("kraus_count", r.kraus_count.to_string()),
                ("trace_deviation", format_real(r.trace_deviation)),
                ("unital_deviation", format_real(r.unital_deviation)),
                ("trace_preserving", r.trace_preserving.to_string()),
                ("unital", r.unital.to_string()),
            ];
            Ok(Outcome {
                report: render_pairs(opts.format, &pairs, json(&r)),
                ok: r.trace_preserving,
            })
        }
        Input::Matrix(m) => {
            let r = matrix_report(&m, opts.tol)?;
            let pairs = [
                ("n", r.n.to_string()),
                ("min_entry", format_real(r.min_entry)),
                ("max_imaginary", format_real(r.max_imaginary)),
                ("max_row_deviation", format_real(r.max_row_deviation)),
                ("max_col_deviation", format_real(r.max_col_deviation)),
                ("doubly_stochastic", r.doubly_stochastic.to_string()),
            ];
            Ok(Outcome {
                report: render_pairs(opts.format, &pairs, json(&r)),
                ok: r.doubly_stochastic,
            })
        }
    }
}

fn perm_string(p: &[usize]) -> String {
    p.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_decompose(opts: &Options) -> Result<Outcome, Failure> {
    let m = load_matrix(opts)?;
    let ds = DoublyStochasticMatrix::new(m).map_err(Failure::semantic)?;
    let dec = birkhoff_decompose(&ds, opts.tol).map_err(Failure::semantic)?;
    let report = match opts.format {
        Format::Json => {
            let mut s = dec.to_json();
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("weight,permutation\n");
            for t in &dec.terms {
                let _ = writeln!(
                    s,
                    "{},{}",
                    format_real(t.weight),
                    perm_string(t.perm.as_slice())
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for t in &dec.terms {
                let _ = writeln!(s, "{:.12}  [{}]", t.weight, perm_string(t.perm.as_slice()));
            }
            let _ = writeln!(
                s,
                "terms: {}  weight sum: {}",
                dec.terms.len(),
                dec.weight_sum()
            );
            s
        }
    };
    Ok(Outcome { report, ok: true })
}

fn cmd_extremal(opts: &Options) -> Result<Outcome, Failure> {
    let t = load_channel(opts)?;
    let r = tensor_power_extremal(&t, opts.power, opts.tol).map_err(Failure::semantic)?;
    let pairs = [
        ("power", opts.power.to_string()),
        ("kraus_count", r.kraus_count.to_string()),
        ("test_vector_count", r.test_vector_count.to_string()),
        ("ambient_dim", r.ambient_dim.to_string()),
        ("rank", r.rank.to_string()),
        ("extremal", r.extremal.to_string()),
    ];
    Ok(Outcome {
        report: render_pairs(opts.format, &pairs, json(&r)),
        ok: true,
    })
}

fn fit_options(opts: &Options) -> FitOptions {
    let defaults = FitOptions::default();
    FitOptions {
        restarts: opts.restarts.unwrap_or(defaults.restarts),
        seed: opts.seed,
        max_iter: opts.max_iter.unwrap_or(defaults.max_iter),
        ..defaults
    }
}

fn history_csv(history: &[f64]) -> String {
    let mut s = String::from("iteration,distance\n");
    for (i, d) in history.iter().enumerate() {
        let _ = writeln!(s, "{i},{}", format_real(*d));
    }
    s
}

fn cmd_fit(opts: &Options) -> Result<Outcome, Failure> {
    let t = load_channel(opts)?;
    let m = match opts.m.as_slice() {
        [] => t.dim() * t.dim(),
        [m] => *m,
        _ => return Err(Failure::semantic("fit takes a single --m")),
    };
    let fit = fit_unitary_mixture(&t, m, &fit_options(opts)).map_err(Failure::semantic)?;
    let report = match opts.format {
        Format::Json => json(&fit),
        Format::Csv => history_csv(&fit.history),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "m: {m}");
            let _ = writeln!(s, "best_distance: {}", format_real(fit.best_distance));
            let _ = writeln!(s, "iterations: {}", fit.iterations);
            let _ = writeln!(s, "restarts_used: {}", fit.restarts_used);
            let _ = writeln!(s, "converged: {}", fit.converged);
            let weights = fit.mixture.weights();
            let _ = writeln!(s, "weights: {weights:?}");
            s
        }
    };
    Ok(Outcome { report, ok: true })
}

/// `min(d^(2k), DEFAULT_M_CAP)` for `k = 1..=n_max`.
pub fn default_schedule(dim: usize, n_max: usize) -> Vec<usize> {
    (1..=n_max)
        .map(|k| {
            let exp = u32::try_from(2 * k).unwrap_or(u32::MAX);
            dim.checked_pow(exp)
                .map_or(DEFAULT_M_CAP, |x| x.min(DEFAULT_M_CAP))
        })
        .collect()
}

fn cmd_experiment(opts: &Options) -> Result<Outcome, Failure> {
    let t = load_channel(opts)?;
    channels::power_dim(t.dim(), opts.n_max, DEFAULT_DIM_CAP).map_err(Failure::semantic)?;
    let schedule = if opts.m.is_empty() {
        default_schedule(t.dim(), opts.n_max)
    } else {
        opts.m.clone()
    };
    let exp = tensor_power_experiment(&t, opts.n_max, &schedule, &fit_options(opts))
        .map_err(Failure::semantic)?;
    let report = match opts.format {
        Format::Json => {
            let mut s = exp.table.to_json();
            s.push('\n');
            s
        }
        Format::Csv => exp.table.to_csv(),
        Format::Text => {
            let mut s = format!("metric: {}\n", exp.table.metric);
            let _ = writeln!(
                s,
                "{:>3} {:>4} {:>24} {:>7} {:>6} converged",
                "k", "m", "best_distance", "copies", "iters"
            );
            for r in &exp.table.rows {
                let _ = writeln!(
                    s,
                    "{:>3} {:>4} {:>24e} {:>7} {:>6} {}",
                    r.k, r.m, r.best_distance, r.chain_copies, r.iterations, r.converged
                );
            }
            s
        }
    };
    Ok(Outcome { report, ok: true })
}

#[derive(Serialize)]
struct LawSummary<'a> {
    all_passed: bool,
    reports: &'a [LawReport],
}

fn cmd_laws(opts: &Options) -> Result<Outcome, Failure> {
    let reports = match &opts.input {
        Some(_) => {
            let t = load_channel(opts)?;
            catlaws::channel_suite(&t, LAW_SAMPLES, opts.seed)
        }
        None => catlaws::randomized_suite(LAW_CASES, LAW_SAMPLES, opts.seed),
    }
    .map_err(Failure::semantic)?;
    let all_passed = reports.iter().all(|r| r.passed);
    let report = match opts.format {
        Format::Json => json(&LawSummary {
            all_passed,
            reports: &reports,
        }),
        Format::Csv => {
            let mut s = String::from("law_name,max_deviation,samples,tolerance,passed\n");
            for r in &reports {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    r.law_name,
                    format_real(r.max_deviation),
                    r.samples,
                    format_real(r.tolerance),
                    r.passed
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let verdict = if r.passed { "pass" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{verdict}  {:<30} max_deviation {:e} over {} samples",
                    r.law_name, r.max_deviation, r.samples
                );
            }
            s
        }
    };
    Ok(Outcome {
        report,
        ok: all_passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedule_defaults() {
        assert_eq!(default_schedule(2, 2), vec![4, 16]);
        assert_eq!(default_schedule(3, 2), vec![9, 16]);
        assert_eq!(default_schedule(1, 3), vec![1, 1, 1]);
    }

    #[test]
    fn flags_parse_anywhere() {
        let cli = Cli::try_parse_from([
            "qbirkhoff",
            "--seed",
            "3",
            "experiment",
            "--m",
            "4,16",
            "--n-max",
            "2",
        ])
        .unwrap();
        assert_eq!(cli.command, Command::Experiment);
        assert_eq!(cli.opts.seed, 3);
        assert_eq!(cli.opts.m, vec![4, 16]);
        assert_eq!(cli.opts.tol, DEFAULT_TOL);
    }
}
