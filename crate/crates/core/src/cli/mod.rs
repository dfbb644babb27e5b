//! Command-line front end.
//!
//! Exit codes: `0` success, `1` closed-form/oracle comparison failed,
//! `2` invalid input, `3` I/O failure.

pub mod format;
pub mod sweep;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classifier::{classify, CLASSIFY_EPSILON};
use crate::error::Error;
use crate::model::{
    simulate, validate_params, ModelParams, State, Trajectory, DEFAULT_DIVERGENCE_THRESHOLD,
};
use crate::spectral::{matrix_power_closed, matrix_power_iterative, state_at};

pub use sweep::SweepSpec;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPARE_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "powerdyn",
    version,
    about = "Analyze the two-player affinity/power system"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stability class, archetype and (with --a0/--b0) asymptotic fate as JSON.
    #[command(allow_negative_numbers = true)]
    Classify(ClassifyArgs),
    /// Iterate the recurrence and write the trajectory.
    #[command(allow_negative_numbers = true)]
    Simulate(SimulateArgs),
    /// Closed-form state after t steps as JSON.
    #[command(allow_negative_numbers = true)]
    Predict(PredictArgs),
    /// Compare closed-form matrix powers against repeated multiplication.
    #[command(allow_negative_numbers = true)]
    Compare(CompareArgs),
    /// Classify every cell of an (alpha, beta) grid and write CSV.
    #[command(allow_negative_numbers = true)]
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub beta: f64,
    #[arg(long)]
    pub gamma: f64,
}

impl ParamArgs {
    fn validate(&self) -> Result<ModelParams, CliError> {
        Ok(validate_params(self.alpha, self.beta, self.gamma)?)
    }
}

#[derive(Debug, Clone, Args)]
pub struct InitialArgs {
    #[arg(long)]
    pub a0: f64,
    #[arg(long)]
    pub b0: f64,
}

impl InitialArgs {
    fn state(&self) -> Result<State, CliError> {
        finite_state(self.a0, self.b0)
    }
}

#[derive(Debug, Clone, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, requires = "b0")]
    pub a0: Option<f64>,
    #[arg(long, requires = "a0")]
    pub b0: Option<f64>,
    #[arg(long, default_value_t = CLASSIFY_EPSILON)]
    pub epsilon: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub initial: InitialArgs,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub steps: u64,
    #[arg(long, default_value_t = DEFAULT_DIVERGENCE_THRESHOLD)]
    pub threshold: f64,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Args)]
pub struct PredictArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[command(flatten)]
    pub initial: InitialArgs,
    #[arg(long)]
    pub t: u64,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub steps: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub gamma: f64,
    #[arg(long)]
    pub alpha_min: f64,
    #[arg(long)]
    pub alpha_max: f64,
    #[arg(long)]
    pub alpha_steps: usize,
    #[arg(long)]
    pub beta_min: f64,
    #[arg(long)]
    pub beta_max: f64,
    #[arg(long)]
    pub beta_steps: usize,
    #[arg(long, default_value_t = CLASSIFY_EPSILON)]
    pub epsilon: f64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl From<&SweepArgs> for SweepSpec {
    fn from(a: &SweepArgs) -> Self {
        SweepSpec {
            gamma: a.gamma,
            alpha_min: a.alpha_min,
            alpha_max: a.alpha_max,
            beta_min: a.beta_min,
            beta_max: a.beta_max,
            alpha_steps: a.alpha_steps,
            beta_steps: a.beta_steps,
            epsilon: a.epsilon,
        }
    }
}

/// Validated inputs of a simulation run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: ModelParams,
    pub initial: Option<State>,
    pub steps: u64,
    pub divergence_threshold: f64,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
}

impl RunConfig {
    fn from_simulate(args: &SimulateArgs) -> Result<Self, CliError> {
        let params = args.params.validate()?;
        let initial = args.initial.state()?;
        if args.threshold.is_nan() || args.threshold <= 0.0 {
            return Err(CliError::Input(format!(
                "threshold must be positive (got {})",
                args.threshold
            )));
        }
        Ok(RunConfig {
            params,
            initial: Some(initial),
            steps: args.steps,
            divergence_threshold: args.threshold,
            output: args.output.clone(),
            format: args.format,
        })
    }
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Io(String),
    CompareFailed,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Io(_) => EXIT_IO,
            CliError::CompareFailed => EXIT_COMPARE_FAILED,
        }
    }
}

fn finite_state(a: f64, b: f64) -> Result<State, CliError> {
    if !a.is_finite() || !b.is_finite() {
        return Err(CliError::Input(format!(
            "initial state must be finite (got a0 = {a}, b0 = {b})"
        )));
    }
    Ok(State::new(a, b))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}

fn emit(text: &str, path: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}"))),
    }
}

#[derive(Debug, Serialize)]
struct TrajectoryJson {
    alpha: f64,
    beta: f64,
    gamma: f64,
    states: Vec<[f64; 3]>,
    truncated_at: Option<usize>,
}

impl From<&Trajectory> for TrajectoryJson {
    fn from(tr: &Trajectory) -> Self {
        TrajectoryJson {
            alpha: tr.params.alpha(),
            beta: tr.params.beta(),
            gamma: tr.params.gamma(),
            states: tr
                .states
                .iter()
                .enumerate()
                .map(|(t, s)| [t as f64, s.a, s.b])
                .collect(),
            truncated_at: tr.truncated_at,
        }
    }
}

#[derive(Debug, Serialize)]
struct Prediction {
    t: u64,
    a: f64,
    b: f64,
}

/// Outcome of comparing the closed-form and iterative matrix powers.
///
/// `max_scaled_entry_diff` measures each entry difference relative to the
/// iterative entry when its magnitude exceeds one and absolutely otherwise;
/// it is the quantity tested against the tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareReport {
    pub max_abs_entry_diff: f64,
    pub at_t: u64,
    pub max_scaled_entry_diff: f64,
    pub tol: f64,
    pub within_tol: bool,
}

pub fn compare_powers(params: &ModelParams, steps: u64, tol: f64) -> CompareReport {
    let mut max_abs = 0.0_f64;
    let mut at_t = 0;
    let mut max_scaled = 0.0_f64;
    for t in 0..=steps {
        let closed = matrix_power_closed(params, t);
        let iter = matrix_power_iterative(params, t);
        for (c, i) in closed.entries().into_iter().zip(iter.entries()) {
            let diff = (c - i).abs();
            if diff > max_abs || diff.is_nan() {
                max_abs = diff;
                at_t = t;
            }
            max_scaled = max_scaled.max(diff / i.abs().max(1.0));
        }
    }
    CompareReport {
        max_abs_entry_diff: max_abs,
        at_t,
        max_scaled_entry_diff: max_scaled,
        tol,
        within_tol: max_scaled <= tol,
    }
}

fn cmd_classify(args: &ClassifyArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let params = args.params.validate()?;
    let initial = match (args.a0, args.b0) {
        (Some(a), Some(b)) => Some(finite_state(a, b)?),
        (None, None) => None,
        _ => {
            return Err(CliError::Input(
                "--a0 and --b0 must be supplied together".into(),
            ))
        }
    };
    if args.epsilon.is_nan() || args.epsilon <= 0.0 {
        return Err(CliError::Input("epsilon must be positive".into()));
    }
    let report = classify(&params, initial, args.epsilon);
    emit(&to_json(&report), None, stdout)
}

fn cmd_simulate(args: &SimulateArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let cfg = RunConfig::from_simulate(args)?;
    let initial = cfg.initial.expect("simulate always has an initial state");
    let steps = usize::try_from(cfg.steps)
        .map_err(|_| CliError::Input(format!("steps too large: {}", cfg.steps)))?;
    let tr = simulate(&cfg.params, initial, steps, cfg.divergence_threshold);
    let text = match cfg.format {
        OutputFormat::Csv => format::trajectory_csv(&tr),
        OutputFormat::Json => to_json(&TrajectoryJson::from(&tr)),
    };
    emit(&text, cfg.output.as_ref(), stdout)
}

fn cmd_predict(args: &PredictArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let params = args.params.validate()?;
    let initial = args.initial.state()?;
    let s = state_at(&params, initial, args.t);
    emit(
        &to_json(&Prediction {
            t: args.t,
            a: s.a,
            b: s.b,
        }),
        None,
        stdout,
    )
}

fn cmd_compare(args: &CompareArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let params = args.params.validate()?;
    if args.tol.is_nan() || args.tol < 0.0 {
        return Err(CliError::Input("tol must be non-negative".into()));
    }
    let report = compare_powers(&params, args.steps, args.tol);
    emit(&to_json(&report), None, stdout)?;
    if report.within_tol {
        Ok(())
    } else {
        Err(CliError::CompareFailed)
    }
}

fn cmd_sweep(args: &SweepArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let spec = SweepSpec::from(args);
    spec.validate().map_err(CliError::Input)?;
    emit(&spec.to_csv(), args.output.as_ref(), stdout)
}

pub fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Classify(a) => cmd_classify(a, stdout),
        Command::Simulate(a) => cmd_simulate(a, stdout),
        Command::Predict(a) => cmd_predict(a, stdout),
        Command::Compare(a) => cmd_compare(a, stdout),
        Command::Sweep(a) => cmd_sweep(a, stdout),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        // --help and --version arrive here too, with exit code 0.
        Err(e) if e.exit_code() == 0 => {
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return EXIT_INPUT;
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(err) => {
            match &err {
                CliError::Input(msg) | CliError::Io(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                }
                CliError::CompareFailed => {
                    let _ = writeln!(
                        stderr,
                        "error: closed form and iterative powers disagree beyond tolerance"
                    );
                }
            }
            err.exit_code()
        }
    }
}
