//! Command-line surface of the `phase-stopping` binary.
//!
//! Verbs: `sweep`, `fig1`, `diagnose`, `phase-shifts`. Exit codes: 0 on
//! success, 2 for usage errors, 3 when the physics cannot be evaluated
//! (every sweep row failed, or a single-point command hit a regime or
//! convergence error), 4 for I/O and input-file errors.

mod diagnose;
mod dump;
mod fig1;
mod format;
mod sweep;

pub use diagnose::{
    run_diagnostics, BornSeriesStopping, Check, DiagnosticsReport, TruncatedSumEntry,
};
pub use dump::{dump_phase_shifts, DumpPotential, DumpSource, PhaseShiftDump};
pub use fig1::{
    fig1_data, Curve, CurvePoint, Fig1Data, Fig1Meta, OverlayComparison, OverlayReport,
    ReferenceOverlay, FIG1_DEFAULT_RS, FIG1_DEFAULT_STEPS, FIG1_DEFAULT_VMAX, FIG1_DEFAULT_VMIN,
};
pub use format::{format_number, quantize, SIGNIFICANT_DIGITS};
pub use sweep::{
    run_sweep, velocity_grid, Spacing, SweepMeta, SweepMethod, SweepRow, SweepSpec, SweepTable,
    SWEEP_COLUMNS,
};

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::special::SumControl;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("regime error: {0}")]
    Regime(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("parse error{}: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Parse {
        line: Option<usize>,
        message: String,
    },

    #[error(transparent)]
    Physics(#[from] crate::Error),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        Self::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub(crate) fn in_file(self, path: &Path) -> Self {
        match self {
            Self::Parse { line, message } => Self::Parse {
                line,
                message: format!("{}: {message}", path.display()),
            },
            other => other,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) | Self::Physics(crate::Error::Domain(_)) => 2,
            Self::Regime(_) | Self::Physics(_) => 3,
            Self::Io { .. } | Self::Parse { .. } => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "phase-stopping",
    version,
    about = "Stopping power of a degenerate electron gas from scattering phase shifts (Hartree atomic units)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stopping tables over a velocity grid for one or more charges.
    Sweep(SweepArgs),
    /// Proton and antiproton asymptotic curves, optionally against reference points.
    Fig1(Fig1Args),
    /// Identity, inequality and cross-method checks at one point.
    Diagnose(DiagnoseArgs),
    /// Dump a phase-shift series.
    PhaseShifts(PhaseShiftArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Density parameter r_s (Bohr).
    #[arg(long = "rs", default_value_t = 2.07)]
    pub r_s: f64,
    /// Projectile charge; repeat for several.
    #[arg(long = "z1", allow_negative_numbers = true, default_values_t = [1.0, -1.0])]
    pub z1: Vec<f64>,
    #[arg(long, default_value_t = 3.0)]
    pub vmin: f64,
    #[arg(long, default_value_t = 9.0)]
    pub vmax: f64,
    #[arg(long, default_value_t = 13)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = Spacing::Linear)]
    pub spacing: Spacing,
    /// Stopping method; repeat for several.
    #[arg(long = "method", value_enum, default_values_t = [SweepMethod::Asymptotic])]
    pub methods: Vec<SweepMethod>,
    /// Partial-wave cutoff for the numeric and transport methods.
    #[arg(long)]
    pub lmax: Option<usize>,
    /// Absolute tolerance for infinite series.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Areal density for the 2d method (Bohr⁻²).
    #[arg(long)]
    pub n2d: Option<f64>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct Fig1Args {
    #[arg(long = "rs", default_value_t = FIG1_DEFAULT_RS)]
    pub r_s: f64,
    #[arg(long, default_value_t = FIG1_DEFAULT_VMIN)]
    pub vmin: f64,
    #[arg(long, default_value_t = FIG1_DEFAULT_VMAX)]
    pub vmax: f64,
    #[arg(long, default_value_t = FIG1_DEFAULT_STEPS)]
    pub steps: usize,
    /// Two-column CSV (v, stopping) of reference points.
    #[arg(long)]
    pub overlay: Option<PathBuf>,
    /// Curve the overlay points are compared with.
    #[arg(long, value_enum, default_value_t = Curve::Proton)]
    pub overlay_curve: Curve,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DiagnoseArgs {
    #[arg(long = "rs", default_value_t = 2.07)]
    pub r_s: f64,
    #[arg(long = "z1", allow_negative_numbers = true, default_value_t = 1.0)]
    pub z1: f64,
    #[arg(long, default_value_t = 6.0)]
    pub v: f64,
    #[arg(long)]
    pub lmax: Option<usize>,
    #[arg(long)]
    pub tol: Option<f64>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PhaseShiftArgs {
    #[arg(long = "rs", default_value_t = 2.07)]
    pub r_s: f64,
    #[arg(long = "z1", allow_negative_numbers = true, default_value_t = 1.0)]
    pub z1: f64,
    #[arg(long, default_value_t = 6.0)]
    pub v: f64,
    #[arg(long)]
    pub lmax: Option<usize>,
    #[arg(long, value_enum, default_value_t = DumpSource::Numerov)]
    pub source: DumpSource,
    #[arg(long, value_enum, default_value_t = DumpPotential::Hulthen)]
    pub potential: DumpPotential,
    #[command(flatten)]
    pub out: OutputArgs,
}

fn sum_control(tol: Option<f64>) -> Result<SumControl, CliError> {
    let mut ctrl = SumControl::default();
    if let Some(t) = tol {
        ctrl.abs_tol = t;
    }
    ctrl.validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(ctrl)
}

fn emit(text: &str, output: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => stdout
            .write_all(text.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| CliError::io(Path::new("<stdout>"), e)),
    }
}

/// Executes a parsed command, writing results to `--output` or `stdout`.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Sweep(a) => {
            let spec = SweepSpec {
                r_s: a.r_s,
                z1_list: a.z1,
                v_min: a.vmin,
                v_max: a.vmax,
                steps: a.steps,
                spacing: a.spacing,
                methods: {
                    let mut m = a.methods;
                    m.sort();
                    m.dedup();
                    m
                },
                l_max: a.lmax,
                tolerances: a.tol.map(|t| sum_control(Some(t))).transpose()?,
                n0_2d: a.n2d,
            };
            let table = run_sweep(&spec)?;
            let text = match a.out.format {
                Format::Csv => table.to_csv_string(),
                Format::Json => table.to_json_string(),
            };
            emit(&text, a.out.output.as_deref(), stdout)?;
            if table.all_failed() {
                return Err(CliError::Regime(format!(
                    "all {} rows failed; first: {}",
                    table.rows.len(),
                    table.rows[0].error.as_deref().unwrap_or("")
                )));
            }
            Ok(())
        }
        Command::Fig1(a) => {
            let overlay = a
                .overlay
                .as_deref()
                .map(ReferenceOverlay::load)
                .transpose()?;
            let data = fig1_data(
                a.r_s,
                a.vmin,
                a.vmax,
                a.steps,
                overlay.as_ref().map(|o| (o, a.overlay_curve)),
            )?;
            let text = match a.out.format {
                Format::Csv => data.to_csv_string(),
                Format::Json => data.to_json_string(),
            };
            emit(&text, a.out.output.as_deref(), stdout)
        }
        Command::Diagnose(a) => {
            let report = run_diagnostics(a.r_s, a.z1, a.v, a.lmax, &sum_control(a.tol)?)?;
            let text = match a.format {
                Format::Csv => report.to_csv_string(),
                Format::Json => report.to_json_string(),
            };
            emit(&text, a.output.as_deref(), stdout)?;
            if let DiagnosticsReport::RegimeError { message, .. } = report {
                return Err(CliError::Regime(message));
            }
            Ok(())
        }
        Command::PhaseShifts(a) => {
            let dump = dump_phase_shifts(a.r_s, a.z1, a.v, a.lmax, a.potential, a.source)?;
            let text = match a.out.format {
                Format::Csv => dump.to_csv_string(),
                Format::Json => dump.to_json_string(),
            };
            emit(&text, a.out.output.as_deref(), stdout)
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("phase-stopping: {e}");
            e.exit_code()
        }
    }
}
