//! Weighted graphs and the graph-state specification they belong to.
//!
//! Vertices are qubits, labelled `0..n`. Each undirected edge carries the
//! angle of the controlled-phase gate applied between its endpoints. Edges
//! are stored canonically with `i < j`; weights are wrapped into `[0, 2π)`.
//!
//! Specs are read from and written to a small JSON document:
//!
//! ```json
//! { "n": 2,
//!   "qubits": [ { "alpha": 0, "theta": 1.5707963 }, { "alpha": 0, "theta": 1.5707963 } ],
//!   "edges":  [ { "i": 0, "j": 1, "phi": 3.1415927 } ] }
//! ```

use std::collections::BTreeSet;
use std::f64::consts::{PI, TAU};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Wrap an angle into `[0, 2π)`.
pub fn wrap_angle(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    // rem_euclid rounds tiny negative inputs up to exactly 2π
    if r >= TAU {
        0.0
    } else {
        r
    }
}

fn finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { name, value })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub phi: f64,
}

impl Edge {
    /// The endpoint opposite to `v`, if `v` is on this edge.
    pub fn other(&self, v: usize) -> Option<usize> {
        if self.i == v {
            Some(self.j)
        } else if self.j == v {
            Some(self.i)
        } else {
            None
        }
    }
}

/// Undirected simple graph with one controlled-phase angle per edge.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    // adjacency[v] = (neighbor, phi), sorted by neighbor
    adjacency: Vec<Vec<(usize, f64)>>,
}

impl WeightedGraph {
    /// Validate and canonicalize an edge list.
    ///
    /// Endpoints may be given in either order; they are stored as `i < j` and
    /// the edge list is sorted. Weights are wrapped modulo 2π.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = BTreeSet::new();
        let mut canonical = Vec::new();
        for (a, b, phi) in edges {
            for index in [a, b] {
                if index >= n {
                    return Err(Error::VertexOutOfRange { index, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if !seen.insert((i, j)) {
                return Err(Error::DuplicateEdge(i, j));
            }
            let phi = wrap_angle(finite("phi", phi)?);
            canonical.push(Edge { i, j, phi });
        }
        canonical.sort_by_key(|e| (e.i, e.j));

        let mut adjacency = vec![Vec::new(); n];
        for e in &canonical {
            adjacency[e.i].push((e.j, e.phi));
            adjacency[e.j].push((e.i, e.phi));
        }
        for list in &mut adjacency {
            list.sort_by_key(|&(v, _)| v);
        }
        Ok(Self {
            n,
            edges: canonical,
            adjacency,
        })
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    /// Path `0 - 1 - ... - (n-1)` with a common weight.
    pub fn path(n: usize, phi: f64) -> Result<Self> {
        Self::new(n, (1..n).map(|v| (v - 1, v, phi)))
    }

    /// Cycle on `n >= 3` vertices with a common weight.
    pub fn cycle(n: usize, phi: f64) -> Result<Self> {
        if n < 3 {
            return Self::path(n, phi);
        }
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n, phi)))
    }

    /// Star with center 0 and leaves `1..n`.
    pub fn star(n: usize, phi: f64) -> Result<Self> {
        Self::new(n, (1..n).map(|v| (0, v, phi)))
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Edges in canonical ascending `(i, j)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                n: self.n,
            })
        }
    }

    /// Incident `(neighbor, phi)` pairs of `v`, ordered by neighbor.
    pub fn incident(&self, v: usize) -> Result<&[(usize, f64)]> {
        self.check(v)?;
        Ok(&self.adjacency[v])
    }

    /// Open neighborhood N(v).
    pub fn neighborhood(&self, v: usize) -> Result<BTreeSet<usize>> {
        Ok(self.incident(v)?.iter().map(|&(u, _)| u).collect())
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.incident(v)?.len())
    }

    /// Sum of the weights of edges incident to `v`.
    pub fn weighted_degree(&self, v: usize) -> Result<f64> {
        Ok(self.incident(v)?.iter().map(|&(_, phi)| phi).sum())
    }
}

/// Initial single-qubit state `cos(θ/2)|0⟩ + e^{iα} sin(θ/2)|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitInit {
    alpha: f64,
    theta: f64,
}

impl QubitInit {
    /// `alpha` is wrapped into `[0, 2π)`; `theta` must already lie in `[0, π]`.
    pub fn new(alpha: f64, theta: f64) -> Result<Self> {
        let alpha = wrap_angle(finite("alpha", alpha)?);
        let theta = finite("theta", theta)?;
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::ThetaOutOfRange(theta));
        }
        Ok(Self { alpha, theta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// A weighted graph together with the initial state of every qubit.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphStateSpec {
    graph: WeightedGraph,
    inits: Vec<QubitInit>,
}

impl GraphStateSpec {
    pub fn new(graph: WeightedGraph, inits: Vec<QubitInit>) -> Result<Self> {
        if inits.len() != graph.n_vertices() {
            return Err(Error::QubitCountMismatch {
                declared: graph.n_vertices(),
                found: inits.len(),
            });
        }
        Ok(Self { graph, inits })
    }

    /// Every qubit starts in the same `(alpha, theta)` state.
    pub fn uniform(graph: WeightedGraph, alpha: f64, theta: f64) -> Result<Self> {
        let init = QubitInit::new(alpha, theta)?;
        let n = graph.n_vertices();
        Self::new(graph, vec![init; n])
    }

    /// `CP_01(φ) RY_1(θ₁) RY_0(θ₀) |00⟩`, the two-qubit family used by the sweeps.
    pub fn two_qubit(theta0: f64, theta1: f64, phi01: f64) -> Result<Self> {
        let graph = WeightedGraph::new(2, [(0, 1, phi01)])?;
        Self::new(
            graph,
            vec![QubitInit::new(0.0, theta0)?, QubitInit::new(0.0, theta1)?],
        )
    }

    /// Random spec: each pair joined with probability `edge_probability`,
    /// α, φ uniform on `[0, 2π)` and θ uniform on `[0, π]`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, edge_probability: f64) -> Result<Self> {
        let inits = (0..n)
            .map(|_| QubitInit::new(rng.gen_range(0.0..TAU), rng.gen_range(0.0..=PI)))
            .collect::<Result<Vec<_>>>()?;
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(edge_probability) {
                    edges.push((i, j, rng.gen_range(0.0..TAU)));
                }
            }
        }
        Self::new(WeightedGraph::new(n, edges)?, inits)
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn inits(&self) -> &[QubitInit] {
        &self.inits
    }

    pub fn n_qubits(&self) -> usize {
        self.graph.n_vertices()
    }

    pub fn init(&self, k: usize) -> Result<QubitInit> {
        self.inits.get(k).copied().ok_or(Error::VertexOutOfRange {
            index: k,
            n: self.inits.len(),
        })
    }

    /// Serialize to the JSON document format accepted by [`parse_spec`].
    pub fn to_json(&self) -> String {
        let doc = SpecDocument {
            n: self.n_qubits(),
            qubits: self
                .inits
                .iter()
                .map(|q| QubitDocument {
                    alpha: q.alpha,
                    theta: q.theta,
                })
                .collect(),
            edges: self
                .graph
                .edges
                .iter()
                .map(|e| EdgeDocument {
                    i: e.i,
                    j: e.j,
                    phi: e.phi,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("spec document always serializes")
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecDocument {
    n: usize,
    qubits: Vec<QubitDocument>,
    edges: Vec<EdgeDocument>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QubitDocument {
    alpha: f64,
    theta: f64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDocument {
    i: usize,
    j: usize,
    phi: f64,
}

/// Parse and validate a JSON spec document.
pub fn parse_spec(text: &str) -> Result<GraphStateSpec> {
    let doc: SpecDocument =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    if doc.qubits.len() != doc.n {
        return Err(Error::QubitCountMismatch {
            declared: doc.n,
            found: doc.qubits.len(),
        });
    }
    let graph = WeightedGraph::new(doc.n, doc.edges.iter().map(|e| (e.i, e.j, e.phi)))?;
    let inits = doc
        .qubits
        .iter()
        .map(|q| QubitInit::new(q.alpha, q.theta))
        .collect::<Result<Vec<_>>>()?;
    GraphStateSpec::new(graph, inits)
}
