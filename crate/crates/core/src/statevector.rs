//! Dense statevector simulator.
//!
//! Qubit `q` is bit `q` of the amplitude index, so qubit 0 is the least
//! significant bit. Gates act in place through strided loops over the
//! amplitude pairs that differ only in the target bit; large registers are
//! split across the rayon pool.

use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_QUBITS: usize = 24;

// below this many amplitudes the serial loops win
const PARALLEL_THRESHOLD: usize = 1 << 14;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Pauli axis for single-qubit expectations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

/// Single-qubit mean spin `(⟨σˣ⟩, ⟨σʸ⟩, ⟨σᶻ⟩)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn component(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
            Axis::Z => self.z,
        }
    }
}

/// 2x2 single-qubit reduced density matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedDensity(pub [[Complex64; 2]; 2]);

impl ReducedDensity {
    pub fn trace(&self) -> f64 {
        self.0[0][0].re + self.0[1][1].re
    }

    /// Largest eigenvalue, closed form for a 2x2 Hermitian matrix.
    pub fn lambda_max(&self) -> f64 {
        let a = self.0[0][0].re;
        let d = self.0[1][1].re;
        let off = self.0[0][1];
        0.5 * (a + d) + ((0.5 * (a - d)).powi(2) + off.norm_sqr()).sqrt()
    }

    pub fn lambda_min(&self) -> f64 {
        self.trace() - self.lambda_max()
    }
}

/// Measurement counts for one qubit in the computational basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShotCounts {
    /// `counts[b]` is the number of shots that read out `b`.
    pub counts: [u64; 2],
    pub shots: u64,
    pub seed: u64,
}

impl ShotCounts {
    /// `(n₀ − n₁) / shots`, the sampled estimate of ⟨σᶻ⟩.
    pub fn z_mean(&self) -> f64 {
        (self.counts[0] as f64 - self.counts[1] as f64) / self.shots as f64
    }

    pub fn p1(&self) -> f64 {
        self.counts[1] as f64 / self.shots as f64
    }
}

#[derive(Clone, PartialEq)]
pub struct StateVector {
    n: usize,
    amps: Vec<Complex64>,
}

impl fmt::Debug for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StateVector")
            .field("n_qubits", &self.n)
            .field("len", &self.amps.len())
            .finish()
    }
}

/// Visit every amplitude pair `(|..0_q..⟩, |..1_q..⟩)`.
fn for_each_pair<F>(amps: &mut [Complex64], q: usize, f: F)
where
    F: Fn(&mut Complex64, &mut Complex64) + Sync,
{
    let stride = 1usize << q;
    let block = |chunk: &mut [Complex64]| {
        let (lo, hi) = chunk.split_at_mut(stride);
        for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
            f(a, b);
        }
    };
    if amps.len() >= PARALLEL_THRESHOLD {
        amps.par_chunks_mut(2 * stride).for_each(block);
    } else {
        amps.chunks_mut(2 * stride).for_each(block);
    }
}

impl StateVector {
    /// `|0…0⟩` on `n` qubits.
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::UnsupportedQubitCount { n, max: MAX_QUBITS });
        }
        let mut amps = vec![ZERO; 1 << n];
        amps[0] = ONE;
        Ok(Self { n, amps })
    }

    /// Wrap raw amplitudes. The caller is responsible for normalization.
    pub fn from_amplitudes(amps: Vec<Complex64>) -> Result<Self> {
        let len = amps.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::Malformed(format!(
                "amplitude count {len} is not a power of two >= 2"
            )));
        }
        let n = len.trailing_zeros() as usize;
        if n > MAX_QUBITS {
            return Err(Error::UnsupportedQubitCount { n, max: MAX_QUBITS });
        }
        Ok(Self { n, amps })
    }

    pub fn n_qubits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    fn check(&self, q: usize) -> Result<()> {
        if q < self.n {
            Ok(())
        } else {
            Err(Error::QubitOutOfRange {
                index: q,
                n: self.n,
            })
        }
    }

    /// Apply an arbitrary 2x2 matrix `[[m00, m01], [m10, m11]]` to qubit `q`.
    pub fn apply_single(&mut self, q: usize, m: [[Complex64; 2]; 2]) -> Result<&mut Self> {
        self.check(q)?;
        for_each_pair(&mut self.amps, q, |a, b| {
            let (x, y) = (*a, *b);
            *a = m[0][0] * x + m[0][1] * y;
            *b = m[1][0] * x + m[1][1] * y;
        });
        Ok(self)
    }

    /// `exp(−iθσʸ/2)`.
    pub fn apply_ry(&mut self, q: usize, theta: f64) -> Result<&mut Self> {
        self.check(q)?;
        let (s, c) = (0.5 * theta).sin_cos();
        for_each_pair(&mut self.amps, q, |a, b| {
            let (x, y) = (*a, *b);
            *a = x * c - y * s;
            *b = x * s + y * c;
        });
        Ok(self)
    }

    /// `exp(−iασᶻ/2) = diag(e^{−iα/2}, e^{iα/2})`.
    pub fn apply_rz(&mut self, q: usize, alpha: f64) -> Result<&mut Self> {
        self.check(q)?;
        let lo = Complex64::from_polar(1.0, -0.5 * alpha);
        let hi = lo.conj();
        for_each_pair(&mut self.amps, q, |a, b| {
            *a *= lo;
            *b *= hi;
        });
        Ok(self)
    }

    /// `exp(−iβσˣ/2)`.
    pub fn apply_rx(&mut self, q: usize, beta: f64) -> Result<&mut Self> {
        self.check(q)?;
        let (s, c) = (0.5 * beta).sin_cos();
        let mis = Complex64::new(0.0, -s);
        for_each_pair(&mut self.amps, q, |a, b| {
            let (x, y) = (*a, *b);
            *a = x * c + y * mis;
            *b = x * mis + y * c;
        });
        Ok(self)
    }

    pub fn apply_h(&mut self, q: usize) -> Result<&mut Self> {
        self.check(q)?;
        let r = std::f64::consts::FRAC_1_SQRT_2;
        for_each_pair(&mut self.amps, q, |a, b| {
            let (x, y) = (*a, *b);
            *a = (x + y) * r;
            *b = (x - y) * r;
        });
        Ok(self)
    }

    /// Controlled phase: multiply every amplitude with bits `i` and `j` set by `e^{iφ}`.
    ///
    /// The gate is diagonal and symmetric in its two qubits.
    pub fn apply_cp(&mut self, i: usize, j: usize, phi: f64) -> Result<&mut Self> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            return Err(Error::SameQubit(i));
        }
        let mask = (1usize << i) | (1usize << j);
        let phase = Complex64::from_polar(1.0, phi);
        let kernel = |(idx, a): (usize, &mut Complex64)| {
            if idx & mask == mask {
                *a *= phase;
            }
        };
        if self.amps.len() >= PARALLEL_THRESHOLD {
            self.amps.par_iter_mut().enumerate().for_each(kernel);
        } else {
            self.amps.iter_mut().enumerate().for_each(kernel);
        }
        Ok(self)
    }

    /// Exact `⟨ψ|σ^axis_q|ψ⟩`.
    pub fn expectation_pauli(&self, q: usize, axis: Axis) -> Result<f64> {
        self.check(q)?;
        let bit = 1usize << q;
        let value = match axis {
            Axis::Z => self
                .amps
                .iter()
                .enumerate()
                .map(|(idx, a)| {
                    if idx & bit == 0 {
                        a.norm_sqr()
                    } else {
                        -a.norm_sqr()
                    }
                })
                .sum(),
            Axis::X | Axis::Y => {
                // Σ conj(a₀) a₁ over pairs; ⟨σˣ⟩ = 2 Re, ⟨σʸ⟩ = 2 Im
                let overlap: Complex64 = self
                    .amps
                    .chunks(2 * bit)
                    .flat_map(|c| c[..bit].iter().zip(&c[bit..]))
                    .map(|(a0, a1)| a0.conj() * a1)
                    .sum();
                if axis == Axis::X {
                    2.0 * overlap.re
                } else {
                    2.0 * overlap.im
                }
            }
        };
        Ok(value)
    }

    pub fn bloch_vector(&self, q: usize) -> Result<BlochVector> {
        Ok(BlochVector {
            x: self.expectation_pauli(q, Axis::X)?,
            y: self.expectation_pauli(q, Axis::Y)?,
            z: self.expectation_pauli(q, Axis::Z)?,
        })
    }

    /// Partial trace over every qubit except `q`.
    pub fn reduced_density(&self, q: usize) -> Result<ReducedDensity> {
        self.check(q)?;
        let bit = 1usize << q;
        let mut rho00 = 0.0;
        let mut rho11 = 0.0;
        let mut rho01 = ZERO;
        for idx in (0..self.amps.len()).filter(|idx| idx & bit == 0) {
            let a0 = self.amps[idx];
            let a1 = self.amps[idx | bit];
            rho00 += a0.norm_sqr();
            rho11 += a1.norm_sqr();
            rho01 += a0 * a1.conj();
        }
        Ok(ReducedDensity([
            [Complex64::new(rho00, 0.0), rho01],
            [rho01.conj(), Complex64::new(rho11, 0.0)],
        ]))
    }

    /// Probability of reading qubit `q` as 1.
    pub fn marginal_p1(&self, q: usize) -> Result<f64> {
        self.check(q)?;
        let bit = 1usize << q;
        Ok(self
            .amps
            .iter()
            .enumerate()
            .filter(|(idx, _)| idx & bit != 0)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }

    /// Draw `shots` computational-basis readouts of qubit `q`.
    ///
    /// Each recorded bit is flipped independently with probability
    /// `readout_flip`. The draw sequence is fixed by `seed` (ChaCha8).
    pub fn sample_qubit(
        &self,
        q: usize,
        shots: u64,
        seed: u64,
        readout_flip: f64,
    ) -> Result<ShotCounts> {
        if shots == 0 {
            return Err(Error::ZeroShots);
        }
        if !(0.0..=0.5).contains(&readout_flip) {
            return Err(Error::FlipOutOfRange(readout_flip));
        }
        let p1 = self.marginal_p1(q)?.clamp(0.0, 1.0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut counts = [0u64; 2];
        for _ in 0..shots {
            let mut bit = rng.gen::<f64>() < p1;
            if readout_flip > 0.0 && rng.gen::<f64>() < readout_flip {
                bit = !bit;
            }
            counts[bit as usize] += 1;
        }
        Ok(ShotCounts {
            counts,
            shots,
            seed,
        })
    }
}
