//! Shot-based mean-spin estimation.
//!
//! Each Pauli component of qubit `l` is read from a fresh copy of the state:
//!
//! * ⟨σˣ⟩: rotate with `RY(−π/2)` then read out in the computational basis;
//! * ⟨σʸ⟩: rotate with `RX(π/2)` then read out;
//! * ⟨σᶻ⟩: read out directly.
//!
//! Every basis gets its own `shots` draws, and the component estimate is
//! `(n₀ − n₁) / shots`.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::entanglement::entanglement_from_bloch;
use crate::error::Result;
use crate::graph::GraphStateSpec;
use crate::graphstate::build_graph_state;
use crate::output::csv_float;
use crate::statevector::{BlochVector, StateVector};

/// Sub-seed offsets XORed into the user seed for the y and z bases; x uses the seed as is.
pub const SEED_SALT_Y: u64 = 0x9E37_79B9_7F4A_7C15;
pub const SEED_SALT_Z: u64 = 0xBF58_476D_1CE4_E5B9;

/// Conventional hardware shot count, used when the CLI gets `--shots` without a value.
pub const DEFAULT_SHOTS: u64 = 8192;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShotSettings {
    /// Shots per measurement basis.
    pub shots: u64,
    pub seed: u64,
    pub readout_flip: f64,
}

impl ShotSettings {
    pub fn new(shots: u64, seed: u64, readout_flip: f64) -> Self {
        Self {
            shots,
            seed,
            readout_flip,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasurementEstimate {
    pub qubit: usize,
    pub bloch_estimate: BlochVector,
    pub e_estimate: f64,
    pub stderr_e: f64,
    pub shots_per_basis: u64,
    pub seed: u64,
    pub readout_flip: f64,
}

impl MeasurementEstimate {
    fn from_components(qubit: usize, b: BlochVector, settings: ShotSettings) -> Self {
        Self {
            qubit,
            bloch_estimate: b,
            e_estimate: entanglement_from_bloch(&b),
            stderr_e: stderr_of_e(&b, settings.shots),
            shots_per_basis: settings.shots,
            seed: settings.seed,
            readout_flip: settings.readout_flip,
        }
    }

    /// `e_shots,stderr,shots,seed,flip` without a trailing newline.
    pub fn csv_fields(&self) -> String {
        format!(
            "{},{},{},{},{}",
            csv_float(self.e_estimate),
            csv_float(self.stderr_e),
            self.shots_per_basis,
            self.seed,
            csv_float(self.readout_flip)
        )
    }
}

/// Delta-method standard error of `½(1 − |b|)`.
///
/// Each component is a mean of ±1 outcomes with variance `(1 − b_c²)/shots`.
/// At `|b| = 0` the gradient of the norm is undefined; there the norm's
/// RMS under the component noise, `sqrt(Σ σ_c²)`, is used instead.
fn stderr_of_e(b: &BlochVector, shots: u64) -> f64 {
    let n = shots as f64;
    let comps = [b.x, b.y, b.z];
    let vars = comps.map(|c| (1.0 - c * c).max(0.0) / n);
    let norm = b.norm();
    let var_norm = if norm > 0.0 {
        comps
            .iter()
            .zip(vars)
            .map(|(c, v)| (c / norm).powi(2) * v)
            .sum::<f64>()
    } else {
        vars.iter().sum()
    };
    0.5 * var_norm.sqrt()
}

fn basis_mean(
    state: &StateVector,
    l: usize,
    seed: u64,
    settings: ShotSettings,
    rotate: impl Fn(&mut StateVector) -> Result<()>,
) -> Result<f64> {
    let mut copy = state.clone();
    rotate(&mut copy)?;
    let counts = copy.sample_qubit(l, settings.shots, seed, settings.readout_flip)?;
    Ok(counts.z_mean())
}

/// Sampled mean spin and entanglement estimate of qubit `l` of an already-built state.
pub fn estimate_on_state(
    state: &StateVector,
    l: usize,
    settings: ShotSettings,
) -> Result<MeasurementEstimate> {
    let seed = settings.seed;
    let (x, (y, z)) = rayon::join(
        || {
            basis_mean(state, l, seed, settings, |s| {
                s.apply_ry(l, -FRAC_PI_2).map(drop)
            })
        },
        || {
            rayon::join(
                || {
                    basis_mean(state, l, seed ^ SEED_SALT_Y, settings, |s| {
                        s.apply_rx(l, FRAC_PI_2).map(drop)
                    })
                },
                || basis_mean(state, l, seed ^ SEED_SALT_Z, settings, |_| Ok(())),
            )
        },
    );
    let b = BlochVector::new(x?, y?, z?);
    Ok(MeasurementEstimate::from_components(l, b, settings))
}

/// Build the graph state and estimate the mean spin of qubit `l` from shots.
pub fn estimate_bloch(
    spec: &GraphStateSpec,
    l: usize,
    shots: u64,
    seed: u64,
    readout_flip: f64,
) -> Result<MeasurementEstimate> {
    let state = build_graph_state(spec)?;
    estimate_on_state(&state, l, ShotSettings::new(shots, seed, readout_flip))
}

/// Shot-based entanglement estimate `½(1 − min(1, |b̂|))` with its delta-method error.
///
/// Same computation as [`estimate_bloch`]; the entanglement fields of the
/// returned estimate are the quantities of interest here.
pub fn estimate_entanglement(
    spec: &GraphStateSpec,
    l: usize,
    shots: u64,
    seed: u64,
    readout_flip: f64,
) -> Result<MeasurementEstimate> {
    estimate_bloch(spec, l, shots, seed, readout_flip)
}
