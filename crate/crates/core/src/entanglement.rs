//! Geometric measure of entanglement of one qubit with the rest of a graph state.
//!
//! Three independent routes are provided:
//!
//! * closed form in the initial-state angles and incident edge weights
//!   ([`entanglement_closed_form`]), along with the per-component mean-spin
//!   formulas built on the complex factor [`z_factor`];
//! * mean spin of the simulated state, `E = ½(1 − |⟨σ⟩|)`
//!   ([`entanglement_from_bloch`]);
//! * `1 − λ_max(ρ_l)` of the single-qubit reduced density matrix
//!   ([`entanglement_oracle_schmidt`]), which equals the minimal squared
//!   Fubini–Study distance to product states for a pure bipartite state.
//!
//! For a qubit `l` with neighbors `N(l)` the closed form reads
//!
//! ```text
//! E_l = ½ (1 − [ sin²θ_l Π_{k∈N(l)} (cos²(φ_kl/2) + sin²(φ_kl/2) cos²θ_k) + cos²θ_l ]^{1/2})
//! ```
//!
//! It does not depend on any α, nor on anything outside the closed neighborhood of `l`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::GraphStateSpec;
use crate::graphstate::build_graph_state;
use crate::measurement::{estimate_on_state, MeasurementEstimate, ShotSettings};
use crate::output::{csv_float, MEASUREMENT_COLUMNS};
use crate::statevector::{BlochVector, StateVector};

/// The complex factor whose real and imaginary parts give ⟨σˣ⟩ and ⟨σʸ⟩.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZFactor(pub Complex64);

impl ZFactor {
    pub fn value(&self) -> Complex64 {
        self.0
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }
}

/// `z = e^{−i(α_l + ½ Σ φ_kl)} Π_{k∈N(l)} (cos(φ_kl/2) + i sin(φ_kl/2) cos θ_k)`.
pub fn z_factor(spec: &GraphStateSpec, l: usize) -> Result<ZFactor> {
    let graph = spec.graph();
    let alpha = spec.init(l)?.alpha();
    let phase = Complex64::from_polar(1.0, -(alpha + 0.5 * graph.weighted_degree(l)?));
    let product = graph
        .incident(l)?
        .iter()
        .map(|&(k, phi)| {
            let (s, c) = (0.5 * phi).sin_cos();
            Complex64::new(c, s * spec.inits()[k].theta().cos())
        })
        .fold(Complex64::new(1.0, 0.0), |acc, f| acc * f);
    Ok(ZFactor(phase * product))
}

pub fn mean_sigma_x(spec: &GraphStateSpec, l: usize) -> Result<f64> {
    let z = z_factor(spec, l)?;
    Ok(spec.init(l)?.theta().sin() * z.0.re)
}

pub fn mean_sigma_y(spec: &GraphStateSpec, l: usize) -> Result<f64> {
    let z = z_factor(spec, l)?;
    Ok(-spec.init(l)?.theta().sin() * z.0.im)
}

/// Independent of every edge.
pub fn mean_sigma_z(spec: &GraphStateSpec, l: usize) -> Result<f64> {
    Ok(spec.init(l)?.theta().cos())
}

/// Mean spin of qubit `l` from the closed-form component formulas.
pub fn closed_form_bloch(spec: &GraphStateSpec, l: usize) -> Result<BlochVector> {
    Ok(BlochVector::new(
        mean_sigma_x(spec, l)?,
        mean_sigma_y(spec, l)?,
        mean_sigma_z(spec, l)?,
    ))
}

fn from_squared_norm(norm_sqr: f64) -> f64 {
    0.5 * (1.0 - norm_sqr.clamp(0.0, 1.0).sqrt())
}

/// Closed-form entanglement of qubit `l` with the rest of the graph state.
pub fn entanglement_closed_form(spec: &GraphStateSpec, l: usize) -> Result<f64> {
    let theta_l = spec.init(l)?.theta();
    let product: f64 = spec
        .graph()
        .incident(l)?
        .iter()
        .map(|&(k, phi)| edge_factor(phi, spec.inits()[k].theta()))
        .product();
    let (sin2, cos2) = sin_cos_squared(theta_l);
    Ok(from_squared_norm(sin2 * product + cos2))
}

/// `(sin²x, cos²x)` via `(1 ∓ cos 2x)/2`, exact at multiples of π/2.
fn sin_cos_squared(x: f64) -> (f64, f64) {
    let c = (2.0 * x).cos();
    (0.5 * (1.0 - c), 0.5 * (1.0 + c))
}

/// `cos²(φ/2) + sin²(φ/2) cos²θ_k`.
fn edge_factor(phi: f64, theta_k: f64) -> f64 {
    let (sin2, cos2) = sin_cos_squared(0.5 * phi);
    cos2 + sin2 * sin_cos_squared(theta_k).1
}

/// Closed form when every qubit in the closed neighborhood shares `theta` and
/// every incident edge shares `phi`; only the vertex degree remains.
pub fn entanglement_uniform(theta: f64, phi: f64, degree: u32) -> Result<f64> {
    check_theta(theta)?;
    if !phi.is_finite() {
        return Err(Error::NonFinite {
            name: "phi",
            value: phi,
        });
    }
    let (sin2, cos2) = sin_cos_squared(theta);
    let factor = edge_factor(phi, theta);
    Ok(from_squared_norm(sin2 * factor.powi(degree as i32) + cos2))
}

/// Two qubits prepared in `|+⟩` and joined by `CP(φ)`: `½(1 − |cos(φ/2)|)`.
pub fn two_qubit_e_phi(phi01: f64) -> f64 {
    0.5 * (1.0 - (0.5 * phi01).cos().abs())
}

/// Two qubits `RY(θ₀)|0⟩ ⊗ RY(θ₁)|0⟩` joined by CZ.
pub fn two_qubit_e_theta(theta0: f64, theta1: f64) -> Result<f64> {
    check_theta(theta0)?;
    check_theta(theta1)?;
    let c0 = sin_cos_squared(theta0).1;
    let c1 = sin_cos_squared(theta1).1;
    Ok(from_squared_norm(c0 + c1 - c0 * c1))
}

fn check_theta(theta: f64) -> Result<()> {
    if theta.is_finite() && (0.0..=PI).contains(&theta) {
        Ok(())
    } else {
        Err(Error::ThetaOutOfRange(theta))
    }
}

/// `½(1 − |b|)`, with `|b|` clamped to 1 against rounding.
pub fn entanglement_from_bloch(b: &BlochVector) -> f64 {
    0.5 * (1.0 - b.norm().min(1.0))
}

/// `1 − λ_max` of the reduced density matrix of qubit `l`.
pub fn entanglement_oracle_schmidt(state: &StateVector, l: usize) -> Result<f64> {
    let lambda = state.reduced_density(l)?.lambda_max();
    Ok((1.0 - lambda).clamp(0.0, 0.5))
}

/// Per-qubit entanglement values from every route.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QubitRecord {
    pub qubit: usize,
    pub e_closed_form: f64,
    pub e_exact_meanspin: f64,
    pub e_oracle_schmidt: f64,
    /// Mean spin of the simulated state.
    pub bloch: BlochVector,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measurement: Option<MeasurementEstimate>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntanglementReport {
    pub n_qubits: usize,
    pub records: Vec<QubitRecord>,
}

impl EntanglementReport {
    /// Build the graph state once and evaluate every qubit.
    ///
    /// With `shots`, each qubit also gets a sampled estimate; qubit `q` uses
    /// seed `shots.seed + q` so the qubits draw independent streams.
    pub fn compute(spec: &GraphStateSpec, shots: Option<ShotSettings>) -> Result<Self> {
        let state = build_graph_state(spec)?;
        let records = (0..spec.n_qubits())
            .map(|q| {
                let bloch = state.bloch_vector(q)?;
                let measurement = match shots {
                    Some(settings) => Some(estimate_on_state(
                        &state,
                        q,
                        ShotSettings {
                            seed: settings.seed.wrapping_add(q as u64),
                            ..settings
                        },
                    )?),
                    None => None,
                };
                Ok(QubitRecord {
                    qubit: q,
                    e_closed_form: entanglement_closed_form(spec, q)?,
                    e_exact_meanspin: entanglement_from_bloch(&bloch),
                    e_oracle_schmidt: entanglement_oracle_schmidt(&state, q)?,
                    bloch,
                    measurement,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n_qubits: spec.n_qubits(),
            records,
        })
    }

    /// Largest disagreement between the closed form and either simulated route.
    pub fn max_route_gap(&self) -> f64 {
        self.records
            .iter()
            .map(|r| {
                (r.e_closed_form - r.e_exact_meanspin)
                    .abs()
                    .max((r.e_closed_form - r.e_oracle_schmidt).abs())
            })
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report always serializes")
    }

    /// CSV with a header row; shot columns are appended when any record has them.
    pub fn to_csv(&self) -> String {
        let with_shots = self.records.iter().any(|r| r.measurement.is_some());
        let mut out = String::from("qubit,e_closed,e_exact,e_oracle,bx,by,bz");
        if with_shots {
            out.push(',');
            out.push_str(MEASUREMENT_COLUMNS);
        }
        out.push('\n');
        for r in &self.records {
            let fields = [
                r.e_closed_form,
                r.e_exact_meanspin,
                r.e_oracle_schmidt,
                r.bloch.x,
                r.bloch.y,
                r.bloch.z,
            ];
            out.push_str(&r.qubit.to_string());
            for v in fields {
                out.push(',');
                out.push_str(&csv_float(v));
            }
            if let Some(m) = &r.measurement {
                out.push(',');
                out.push_str(&m.csv_fields());
            } else if with_shots {
                out.push_str(",,,,,");
            }
            out.push('\n');
        }
        out
    }
}
