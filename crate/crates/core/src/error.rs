use thiserror::Error;

/// Errors raised while validating graph-state specifications or driving the simulator.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed spec document: {0}")]
    Malformed(String),

    #[error("spec declares n = {declared} but lists {found} qubit entries")]
    QubitCountMismatch { declared: usize, found: usize },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex index {index} out of range for {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("theta = {0} outside [0, pi]")]
    ThetaOutOfRange(f64),

    #[error("{n} qubits outside the supported range 1..={max}")]
    UnsupportedQubitCount { n: usize, max: usize },

    #[error("qubit index {index} out of range for {n} qubits")]
    QubitOutOfRange { index: usize, n: usize },

    #[error("controlled-phase gate needs two distinct qubits, got ({0}, {0})")]
    SameQubit(usize),

    #[error("shot count must be at least 1")]
    ZeroShots,

    #[error("readout flip probability {0} outside [0, 0.5]")]
    FlipOutOfRange(f64),

    #[error("sweep needs at least 2 points per axis, got {0}")]
    TooFewPoints(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
