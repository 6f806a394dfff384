//! Two-qubit sweep experiments.
//!
//! * `phi_line`: both qubits start in `|+⟩`, and the controlled-phase angle runs
//!   over `[0, 2π]` with both endpoints included.
//! * `theta_grid`: the edge is a CZ, and `(θ₀, θ₁)` runs over `[0, π]²`, row-major
//!   with θ₀ as the outer index.
//!
//! Every point reports qubit 0's closed-form and simulated entanglement, plus a
//! shot estimate when `shots` is set. Points are evaluated in parallel but rows
//! always come back in grid order. Point `k` samples with seed `seed + k`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use rayon::prelude::*;

use crate::entanglement::{entanglement_closed_form, entanglement_from_bloch};
use crate::error::{Error, Result};
use crate::graph::GraphStateSpec;
use crate::graphstate::build_graph_state;
use crate::measurement::{estimate_on_state, MeasurementEstimate, ShotSettings};
use crate::output::{csv_float, MEASUREMENT_COLUMNS};

pub const DEFAULT_PHI_POINTS: usize = 21;
pub const DEFAULT_THETA_POINTS: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepKind {
    PhiLine,
    ThetaGrid,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub kind: SweepKind,
    /// Samples per axis.
    pub points: usize,
    pub shots: Option<u64>,
    pub seed: u64,
    pub readout_flip: f64,
}

impl SweepSpec {
    pub fn new(kind: SweepKind, points: usize) -> Self {
        Self {
            kind,
            points,
            shots: None,
            seed: 0,
            readout_flip: 0.0,
        }
    }

    pub fn with_shots(mut self, shots: u64, seed: u64, readout_flip: f64) -> Self {
        self.shots = Some(shots);
        self.seed = seed;
        self.readout_flip = readout_flip;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    /// `[phi]` or `[theta0, theta1]`.
    pub coords: Vec<f64>,
    pub e_closed: f64,
    pub e_exact: f64,
    pub measurement: Option<MeasurementEstimate>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub kind: SweepKind,
    pub rows: Vec<SweepRow>,
}

/// `points` evenly spaced samples of `[start, end]`; both endpoints exact.
pub fn linspace(start: f64, end: f64, points: usize) -> Vec<f64> {
    let last = points.saturating_sub(1).max(1) as f64;
    (0..points)
        .map(|k| {
            if k + 1 == points {
                end
            } else {
                start + (end - start) * (k as f64 / last)
            }
        })
        .collect()
}

fn evaluate(
    spec: &GraphStateSpec,
    coords: Vec<f64>,
    shots: Option<ShotSettings>,
) -> Result<SweepRow> {
    let state = build_graph_state(spec)?;
    let measurement = shots.map(|s| estimate_on_state(&state, 0, s)).transpose()?;
    Ok(SweepRow {
        coords,
        e_closed: entanglement_closed_form(spec, 0)?,
        e_exact: entanglement_from_bloch(&state.bloch_vector(0)?),
        measurement,
    })
}

pub fn run_sweep(sweep: &SweepSpec) -> Result<SweepTable> {
    if sweep.points < 2 {
        return Err(Error::TooFewPoints(sweep.points));
    }
    if let Some(0) = sweep.shots {
        return Err(Error::ZeroShots);
    }
    if !(0.0..=0.5).contains(&sweep.readout_flip) {
        return Err(Error::FlipOutOfRange(sweep.readout_flip));
    }
    let grid: Vec<Vec<f64>> = match sweep.kind {
        SweepKind::PhiLine => linspace(0.0, TAU, sweep.points)
            .into_iter()
            .map(|phi| vec![phi])
            .collect(),
        SweepKind::ThetaGrid => {
            let axis = linspace(0.0, PI, sweep.points);
            axis.iter()
                .flat_map(|&t0| axis.iter().map(move |&t1| vec![t0, t1]))
                .collect()
        }
    };
    let rows = grid
        .into_par_iter()
        .enumerate()
        .map(|(k, coords)| {
            let spec = match sweep.kind {
                SweepKind::PhiLine => GraphStateSpec::two_qubit(FRAC_PI_2, FRAC_PI_2, coords[0])?,
                SweepKind::ThetaGrid => GraphStateSpec::two_qubit(coords[0], coords[1], PI)?,
            };
            let shots = sweep.shots.map(|n| {
                ShotSettings::new(n, sweep.seed.wrapping_add(k as u64), sweep.readout_flip)
            });
            evaluate(&spec, coords, shots)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable {
        kind: sweep.kind,
        rows,
    })
}

impl SweepTable {
    pub fn max_route_gap(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| (r.e_closed - r.e_exact).abs())
            .fold(0.0, f64::max)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(match self.kind {
            SweepKind::PhiLine => "phi,e_closed,e_exact",
            SweepKind::ThetaGrid => "theta0,theta1,e_closed,e_exact",
        });
        let with_shots = self.rows.iter().any(|r| r.measurement.is_some());
        if with_shots {
            out.push(',');
            out.push_str(MEASUREMENT_COLUMNS);
        }
        out.push('\n');
        for row in &self.rows {
            let values: Vec<String> = row
                .coords
                .iter()
                .chain([&row.e_closed, &row.e_exact])
                .map(|&v| csv_float(v))
                .collect();
            out.push_str(&values.join(","));
            if let Some(m) = &row.measurement {
                out.push(',');
                out.push_str(&m.csv_fields());
            }
            out.push('\n');
        }
        out
    }
}
