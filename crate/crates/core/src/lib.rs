//! Weighted graph states prepared with controlled-phase gates, and the
//! geometric measure of entanglement of each qubit with the rest.
//!
//! The crate is organized bottom-up:
//!
//! * [`graph`]: weighted graphs, initial-state parameters and the JSON spec format;
//! * [`statevector`]: dense simulator with rotation, Hadamard and controlled-phase kernels;
//! * [`graphstate`]: builds a graph state (and its gate list) from a spec;
//! * [`entanglement`]: closed-form, mean-spin and reduced-density entanglement routes;
//! * [`measurement`]: shot-based mean-spin estimation with readout noise;
//! * [`sweep`]: the two-qubit φ line and (θ₀, θ₁) grid experiments.
//!
//! ```
//! use cpgraph::{entanglement, graph::GraphStateSpec, graphstate};
//! use std::f64::consts::{FRAC_PI_2, PI};
//!
//! let spec = GraphStateSpec::two_qubit(FRAC_PI_2, FRAC_PI_2, PI).unwrap();
//! let state = graphstate::build_graph_state(&spec).unwrap();
//! let exact = entanglement::entanglement_from_bloch(&state.bloch_vector(0).unwrap());
//! let closed = entanglement::entanglement_closed_form(&spec, 0).unwrap();
//! assert!((exact - 0.5).abs() < 1e-12 && (closed - 0.5).abs() < 1e-12);
//! ```

pub mod entanglement;
pub mod error;
pub mod graph;
pub mod graphstate;
pub mod measurement;
pub mod output;
pub mod statevector;
pub mod sweep;

pub use entanglement::{EntanglementReport, QubitRecord, ZFactor};
pub use error::{Error, Result};
pub use graph::{parse_spec, GraphStateSpec, QubitInit, WeightedGraph};
pub use graphstate::{build_graph_state, circuit_description, prepare_initial, CircuitDescription};
pub use measurement::{MeasurementEstimate, ShotSettings};
pub use statevector::{Axis, BlochVector, ReducedDensity, ShotCounts, StateVector};
pub use sweep::{SweepKind, SweepSpec, SweepTable};
