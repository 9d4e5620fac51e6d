// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

//! Dense state vectors and operators on `m`-qubit Hilbert spaces.

mod evolve;
mod operator;

use num_complex::Complex64;

use crate::error::{domain, Result};

pub use evolve::{hermitian_evolve, Propagator};
pub use operator::{embed_single_qubit, kron, DenseOperator, OpFlags, HERMITIAN_TOL, UNITARY_TOL};

/// Tolerance on `|Σ|a_x|² − 1|` for a state vector.
pub const NORM_TOL: f64 = 1e-10;

/// Normalized pure state of `num_qubits` qubits in the computational basis.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// Validates length `2^num_qubits` and unit norm.
    pub fn new(num_qubits: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if num_qubits == 0 || num_qubits >= usize::BITS as usize {
            return domain(format!("invalid qubit count {num_qubits}"));
        }
        if amplitudes.len() != 1 << num_qubits {
            return domain(format!(
                "{} amplitudes given for {num_qubits} qubits (need {})",
                amplitudes.len(),
                1usize << num_qubits
            ));
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return domain(format!("state norm² is {norm_sqr}, expected 1"));
        }
        Ok(Self { num_qubits, amplitudes })
    }

    /// Infers the qubit count from the number of amplitudes.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let n = amplitudes.len();
        if n < 2 || !n.is_power_of_two() {
            return domain(format!("{n} amplitudes is not a power of two ≥ 2"));
        }
        Self::new(n.trailing_zeros() as usize, amplitudes)
    }

    pub fn from_real(amplitudes: &[f64]) -> Result<Self> {
        Self::from_amplitudes(amplitudes.iter().map(|&a| Complex64::new(a, 0.0)).collect())
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, x: usize) -> Complex64 {
        self.amplitudes[x]
    }

    pub fn probability(&self, x: usize) -> f64 {
        self.amplitudes[x].norm_sqr()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Real parts of the amplitudes.
    pub fn real_parts(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.re).collect()
    }

    /// Indices with a nonzero amplitude.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.amplitudes
            .iter()
            .enumerate()
            .filter(|(_, a)| **a != Complex64::ZERO)
            .map(|(i, _)| i)
    }

    /// Euclidean distance `‖self − other‖₂`.
    pub fn distance(&self, other: &StateVector) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

/// The computational basis state `|x⟩` on `m` qubits.
pub fn basis_state(m: usize, x: usize) -> Result<StateVector> {
    if m == 0 || m >= usize::BITS as usize {
        return domain(format!("invalid qubit count {m}"));
    }
    if x >= 1 << m {
        return domain(format!("basis index {x} out of range for {m} qubits"));
    }
    let mut amps = vec![Complex64::ZERO; 1 << m];
    amps[x] = Complex64::ONE;
    StateVector::new(m, amps)
}

/// Applies `op` to `psi`. The result must stay normalized, which holds for
/// every unitary operator.
pub fn apply(op: &DenseOperator, psi: &StateVector) -> Result<StateVector> {
    if op.dim() != psi.dim() {
        return domain(format!("{}-dim operator applied to {}-dim state", op.dim(), psi.dim()));
    }
    StateVector::new(psi.num_qubits, op.mul_vec(&psi.amplitudes))
}

/// `⟨a|b⟩ = Σ_x conj(a_x)·b_x`.
pub fn inner_product(a: &StateVector, b: &StateVector) -> Result<Complex64> {
    if a.dim() != b.dim() {
        return domain(format!("inner product of {}-dim and {}-dim states", a.dim(), b.dim()));
    }
    Ok(a.amplitudes.iter().zip(&b.amplitudes).map(|(x, y)| x.conj() * y).sum())
}
