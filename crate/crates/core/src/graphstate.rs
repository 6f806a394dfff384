//! Graph-state preparation: rotate every qubit into its initial state, then
//! apply one controlled-phase gate per edge.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::GraphStateSpec;
use crate::statevector::StateVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GateKind {
    RY,
    RZ,
    CP,
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GateKind::RY => "RY",
            GateKind::RZ => "RZ",
            GateKind::CP => "CP",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateRecord {
    pub kind: GateKind,
    #[serde(rename = "q")]
    pub qubits: Vec<usize>,
    pub angle: f64,
}

/// Ordered gate list that prepares a graph state from `|0…0⟩`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitDescription {
    pub n: usize,
    pub gates: Vec<GateRecord>,
}

impl CircuitDescription {
    /// Execute the gate list on `|0…0⟩`.
    pub fn replay(&self) -> Result<StateVector> {
        let mut state = StateVector::zero(self.n)?;
        for gate in &self.gates {
            match (gate.kind, gate.qubits.as_slice()) {
                (GateKind::RY, &[q]) => state.apply_ry(q, gate.angle)?,
                (GateKind::RZ, &[q]) => state.apply_rz(q, gate.angle)?,
                (GateKind::CP, &[i, j]) => state.apply_cp(i, j, gate.angle)?,
                (kind, qubits) => {
                    return Err(Error::Malformed(format!(
                        "{kind} gate on {} qubits",
                        qubits.len()
                    )))
                }
            };
        }
        Ok(state)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("circuit always serializes")
    }
}

/// Product state `⊗ₖ RZ(αₖ) RY(θₖ)|0⟩`, without the `e^{−iαₖ/2}` phase.
pub fn prepare_initial(spec: &GraphStateSpec) -> Result<StateVector> {
    let mut state = StateVector::zero(spec.n_qubits())?;
    for (k, init) in spec.inits().iter().enumerate() {
        state.apply_ry(k, init.theta())?;
        state.apply_rz(k, init.alpha())?;
    }
    Ok(state)
}

/// Initial product state followed by `CP(φᵢⱼ)` on every edge, in canonical order.
pub fn build_graph_state(spec: &GraphStateSpec) -> Result<StateVector> {
    let mut state = prepare_initial(spec)?;
    for e in spec.graph().edges() {
        state.apply_cp(e.i, e.j, e.phi)?;
    }
    Ok(state)
}

/// Gate list for [`build_graph_state`], eliding zero-angle gates.
pub fn circuit_description(spec: &GraphStateSpec) -> CircuitDescription {
    let mut gates = Vec::new();
    for (k, init) in spec.inits().iter().enumerate() {
        if init.theta() != 0.0 {
            gates.push(GateRecord {
                kind: GateKind::RY,
                qubits: vec![k],
                angle: init.theta(),
            });
        }
        if init.alpha() != 0.0 {
            gates.push(GateRecord {
                kind: GateKind::RZ,
                qubits: vec![k],
                angle: init.alpha(),
            });
        }
    }
    for e in spec.graph().edges().iter().filter(|e| e.phi != 0.0) {
        gates.push(GateRecord {
            kind: GateKind::CP,
            qubits: vec![e.i, e.j],
            angle: e.phi,
        });
    }
    CircuitDescription {
        n: spec.n_qubits(),
        gates,
    }
}
