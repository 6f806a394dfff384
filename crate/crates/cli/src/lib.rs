//! Command implementations for the `cpgraph` binary.
//!
//! Exit codes: 0 on success, 2 for bad input (unreadable or invalid spec,
//! invalid flags), 3 when the closed-form and simulated entanglement disagree
//! by more than [`ROUTE_GAP_LIMIT`].

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cpgraph::sweep::{run_sweep, SweepKind, SweepSpec, DEFAULT_PHI_POINTS, DEFAULT_THETA_POINTS};
use cpgraph::{circuit_description, parse_spec, EntanglementReport, ShotSettings};
use thiserror::Error;

/// Largest tolerated |closed form − simulation| before a run is treated as a bug.
pub const ROUTE_GAP_LIMIT: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Input(#[from] cpgraph::Error),
    #[error("closed form and simulation disagree by {gap:e} (limit {ROUTE_GAP_LIMIT:e})")]
    RouteDisagreement { gap: f64 },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::RouteDisagreement { .. } => 3,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cpgraph",
    version,
    about = "Graph-state entanglement from controlled-phase gates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-qubit entanglement of the graph state described by a spec file.
    Report {
        spec: PathBuf,
        #[command(flatten)]
        shots: ShotArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two qubits in |+>, controlled-phase angle swept over [0, 2pi].
    SweepPhi {
        #[arg(long, default_value_t = DEFAULT_PHI_POINTS)]
        points: usize,
        #[command(flatten)]
        shots: ShotArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CZ-joined qubits with (theta0, theta1) swept over [0, pi]^2.
    SweepTheta {
        #[arg(long, default_value_t = DEFAULT_THETA_POINTS)]
        points: usize,
        #[command(flatten)]
        shots: ShotArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gate list preparing the graph state, as JSON.
    EmitCircuit {
        spec: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ShotArgs {
    /// Enable the shot route with N shots per basis (bare flag: 8192).
    #[arg(long, num_args = 0..=1, default_missing_value = "8192")]
    pub shots: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Symmetric readout flip probability in [0, 0.5].
    #[arg(long, default_value_t = 0.0)]
    pub flip: f64,
}

impl ShotArgs {
    fn settings(&self) -> Option<ShotSettings> {
        self.shots
            .map(|n| ShotSettings::new(n, self.seed, self.flip))
    }

    fn apply(&self, sweep: SweepSpec) -> SweepSpec {
        match self.shots {
            Some(n) => sweep.with_shots(n, self.seed, self.flip),
            None => SweepSpec {
                readout_flip: self.flip,
                seed: self.seed,
                ..sweep
            },
        }
    }
}

/// Rendered command output and where it goes.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    pub path: Option<PathBuf>,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.clone(),
        source,
    })
}

pub fn check_gap(gap: f64) -> Result<(), CliError> {
    if gap.is_nan() || gap > ROUTE_GAP_LIMIT {
        Err(CliError::RouteDisagreement { gap })
    } else {
        Ok(())
    }
}

/// Run a parsed command and produce its output text.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Report {
            spec,
            shots,
            format,
            out,
        } => {
            let spec = parse_spec(&read(spec)?)?;
            if let Some(s) = shots.settings() {
                // validate before building a possibly large state
                if s.shots == 0 {
                    return Err(cpgraph::Error::ZeroShots.into());
                }
                if !(0.0..=0.5).contains(&s.readout_flip) {
                    return Err(cpgraph::Error::FlipOutOfRange(s.readout_flip).into());
                }
            }
            let report = EntanglementReport::compute(&spec, shots.settings())?;
            check_gap(report.max_route_gap())?;
            let text = match format {
                Format::Csv => report.to_csv(),
                Format::Json => report.to_json() + "\n",
            };
            Ok(Output {
                text,
                path: out.clone(),
            })
        }
        Command::SweepPhi { points, shots, out } => sweep(SweepKind::PhiLine, *points, shots, out),
        Command::SweepTheta { points, shots, out } => {
            sweep(SweepKind::ThetaGrid, *points, shots, out)
        }
        Command::EmitCircuit { spec, out } => {
            let spec = parse_spec(&read(spec)?)?;
            Ok(Output {
                text: circuit_description(&spec).to_json() + "\n",
                path: out.clone(),
            })
        }
    }
}

fn sweep(
    kind: SweepKind,
    points: usize,
    shots: &ShotArgs,
    out: &Option<PathBuf>,
) -> Result<Output, CliError> {
    let table = run_sweep(&shots.apply(SweepSpec::new(kind, points)))?;
    check_gap(table.max_route_gap())?;
    Ok(Output {
        text: table.to_csv(),
        path: out.clone(),
    })
}

/// Write to `--out` if given, otherwise return the text for stdout.
pub fn emit(output: &Output) -> Result<Option<&str>, CliError> {
    match &output.path {
        Some(path) => {
            fs::write(path, &output.text).map_err(|source| CliError::Write {
                path: path.clone(),
                source,
            })?;
            Ok(None)
        }
        None => Ok(Some(&output.text)),
    }
}
