// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

//! Balanced-weight error-avoiding code.
//!
//! Computational basis states with equally many zeros and ones are
//! annihilated by the collective detuning `H_e = ω·Σ_i σ_z^(i)`, so they span
//! a subspace on which equal detunings act trivially. This module enumerates
//! that subspace, builds the encoding isometry, certifies the error-free
//! condition `E|ψ_i⟩ = c|ψ_i⟩` for a given error operator, and compares the
//! code size against the quantum Hamming bound.

use std::f64::consts::PI;

use faer::Mat;
use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::gates::{cnot, h_tilde};
use crate::statevec::{kron, DenseOperator, OpFlags, StateVector};

/// Largest register size the code machinery accepts.
pub const MAX_CODE_QUBITS: usize = 24;

/// Tolerance below which an [`ErrorFreeCertificate`] is valid.
pub const CERTIFICATE_TOL: f64 = 1e-10;

/// Binomial coefficient `D(m, q) = m!/(q!(m−q)!)` in exact integer arithmetic.
pub fn code_dimension(m: usize, q: usize) -> Result<u128> {
    if q > m {
        return domain(format!("weight {q} exceeds qubit count {m}"));
    }
    let k = q.min(m - q) as u128;
    let n = m as u128;
    let mut acc: u128 = 1;
    for i in 1..=k {
        // acc·(n−k+i) is divisible by i at every step
        acc = acc
            .checked_mul(n - k + i)
            .ok_or_else(|| crate::Error::Domain(format!("D({m}, {q}) overflows 128 bits")))?
            / i;
    }
    Ok(acc)
}

fn check_even(m: usize) -> Result<()> {
    if m < 2 || !m.is_multiple_of(2) {
        return domain(format!("balanced code needs an even qubit count ≥ 2, got {m}"));
    }
    Ok(())
}

/// `⌊log₂ d⌋` for `d ≥ 1`.
fn floor_log2(d: u128) -> usize {
    (127 - d.leading_zeros()) as usize
}

/// Logical qubits carried by the balanced code on `m` physical qubits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogicalQubits {
    /// `log₂ D(m, m/2)`.
    pub exact: f64,
    /// Qubits actually encoded: `⌊log₂ D(m, m/2)⌋`.
    pub floor: usize,
    /// `m − (log₂ m)/2 + log₂√(2/π)`, from `D(m, m/2) → 2^m·√(2/(mπ))`.
    pub asymptotic: f64,
}

pub fn logical_qubit_count(m: usize) -> Result<LogicalQubits> {
    check_even(m)?;
    let d = code_dimension(m, m / 2)?;
    let mf = m as f64;
    Ok(LogicalQubits {
        exact: (d as f64).log2(),
        floor: floor_log2(d),
        asymptotic: mf - mf.log2() / 2.0 + (2.0 / PI).sqrt().log2(),
    })
}

/// Largest real `l` with `2^l·Σ_{r=0}^{t} 3^r·C(m, r) ≤ 2^m`.
///
/// For `t = 1` this is `m − log₂(3m + 1)`.
pub fn hamming_bound_logical(m: usize, t: usize) -> Result<f64> {
    if m == 0 {
        return domain("Hamming bound needs at least one qubit");
    }
    let mut volume = 0.0f64;
    for r in 0..=t.min(m) {
        volume += 3f64.powi(r as i32) * code_dimension(m, r)? as f64;
    }
    Ok(m as f64 - volume.log2())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RedundancyGap {
    /// `log₂ D(m, m/2) − (m − log₂(3m + 1))`.
    pub exact: f64,
    /// `(1/2)·log₂ m + log₂(3√2/√π)`.
    pub asymptotic: f64,
}

/// Logical-qubit advantage of the balanced code over a code saturating the
/// single-error quantum Hamming bound.
pub fn redundancy_gap(m: usize) -> Result<RedundancyGap> {
    let l = logical_qubit_count(m)?;
    let bound = hamming_bound_logical(m, 1)?;
    let asymptotic = (m as f64).log2() / 2.0 + (3.0 * 2f64.sqrt() / PI.sqrt()).log2();
    Ok(RedundancyGap {
        exact: l.exact - bound,
        asymptotic,
    })
}

/// Balanced-weight code on an even number of physical qubits.
///
/// The code words are the first `2^l` balanced basis states in ascending
/// index order; logical basis state `k` maps to code word `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct BalancedCode {
    m: usize,
    basis_states: Vec<usize>,
    logical_qubits: usize,
}

impl BalancedCode {
    pub fn new(m: usize) -> Result<Self> {
        check_even(m)?;
        if m > MAX_CODE_QUBITS {
            return domain(format!("balanced code limited to {MAX_CODE_QUBITS} qubits, got {m}"));
        }
        let q = m / 2;
        let basis_states: Vec<usize> = (0..1usize << m).filter(|x| x.count_ones() as usize == q).collect();
        let logical_qubits = floor_log2(basis_states.len() as u128);
        Ok(Self {
            m,
            basis_states,
            logical_qubits,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Weight of every code state, `m/2`.
    pub fn q(&self) -> usize {
        self.m / 2
    }

    /// All balanced basis indices, ascending.
    pub fn basis_states(&self) -> &[usize] {
        &self.basis_states
    }

    pub fn dimension(&self) -> usize {
        self.basis_states.len()
    }

    pub fn logical_qubits(&self) -> usize {
        self.logical_qubits
    }

    /// The `2^l` basis states used as code words.
    pub fn codewords(&self) -> &[usize] {
        &self.basis_states[..1 << self.logical_qubits]
    }

    /// `V`: the `2^m × 2^l` matrix whose column `k` is `|codewords[k]⟩`.
    pub fn isometry(&self) -> Mat<Complex64> {
        let words = self.codewords();
        Mat::from_fn(1 << self.m, words.len(), |i, k| {
            if words[k] == i {
                Complex64::ONE
            } else {
                Complex64::ZERO
            }
        })
    }

    fn check_logical(&self, dim: usize) -> Result<()> {
        if dim != 1 << self.logical_qubits {
            return domain(format!(
                "{dim}-dim logical object for a code with {} logical qubits",
                self.logical_qubits
            ));
        }
        Ok(())
    }

    /// `V·|ψ_L⟩`.
    pub fn encode(&self, psi_logical: &StateVector) -> Result<StateVector> {
        self.check_logical(psi_logical.dim())?;
        let mut amps = vec![Complex64::ZERO; 1 << self.m];
        for (&word, &a) in self.codewords().iter().zip(psi_logical.amplitudes()) {
            amps[word] = a;
        }
        StateVector::new(self.m, amps)
    }

    /// `V·A·V†` for a logical operator `A`. Hermiticity carries over; the
    /// lift is zero outside the code words, so unitarity does not.
    pub fn lift(&self, op: &DenseOperator) -> Result<DenseOperator> {
        self.check_logical(op.dim())?;
        let words = self.codewords();
        let mut mat = Mat::<Complex64>::zeros(1 << self.m, 1 << self.m);
        for (j, &wj) in words.iter().enumerate() {
            for (i, &wi) in words.iter().enumerate() {
                mat[(wi, wj)] = op.entry(i, j);
            }
        }
        let flags = OpFlags {
            hermitian: op.flags().hermitian,
            ..OpFlags::NONE
        };
        Ok(DenseOperator::trusted(mat, flags))
    }
}

/// Outcome of checking `E|ψ_k⟩ = c|ψ_k⟩` on the code words.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ErrorFreeCertificate {
    /// Rayleigh quotient `⟨ψ_0|E|ψ_0⟩` of the first code word.
    pub eigenvalue: Complex64,
    /// `‖E·V − c·V‖_max`.
    pub residual_norm: f64,
}

impl ErrorFreeCertificate {
    pub fn is_valid(&self) -> bool {
        self.residual_norm <= CERTIFICATE_TOL
    }
}

/// Checks whether every code word is an eigenvector of `e` with one common
/// eigenvalue. A failed check is reported through the certificate.
pub fn verify_error_free(code: &BalancedCode, e: &DenseOperator) -> Result<ErrorFreeCertificate> {
    if e.dim() != 1 << code.m {
        return domain(format!("{}-dim error operator for {} qubits", e.dim(), code.m));
    }
    let words = code.codewords();
    let eigenvalue = e.entry(words[0], words[0]);
    let mut residual_norm = 0.0f64;
    let mut column = vec![Complex64::ZERO; e.dim()];
    for &w in words {
        column[w] = Complex64::ONE;
        for (i, z) in e.mul_vec(&column).into_iter().enumerate() {
            let target = if i == w { eigenvalue } else { Complex64::ZERO };
            residual_norm = residual_norm.max((z - target).norm());
        }
        column[w] = Complex64::ZERO;
    }
    Ok(ErrorFreeCertificate {
        eigenvalue,
        residual_norm,
    })
}

/// `1 ⊗ H̃` on two physical qubits.
pub fn logical_hadamard_middle_factor() -> DenseOperator {
    kron(&DenseOperator::identity(2).expect("2x2"), &h_tilde())
}

/// `CNOT₂₁`: control on qubit 2, target qubit 1.
pub fn cnot21() -> DenseOperator {
    cnot(2, 2, 1).expect("two qubits")
}

/// Hadamard on the two-qubit code `{|01⟩, |10⟩}`: `CNOT₂₁·(1 ⊗ H̃)·CNOT₂₁`.
pub fn logical_hadamard_2phys() -> DenseOperator {
    let c = cnot21();
    c.compose(&logical_hadamard_middle_factor())
        .and_then(|p| p.compose(&c))
        .expect("4x4 operators")
}

/// Frobenius norm of the two blocks of `op` that couple the balanced states
/// of `code` with their complement.
pub fn code_block_leakage(code: &BalancedCode, op: &DenseOperator) -> Result<f64> {
    if op.dim() != 1 << code.m {
        return domain(format!("{}-dim operator for {} qubits", op.dim(), code.m));
    }
    let mut inside = vec![false; op.dim()];
    for &x in code.basis_states() {
        inside[x] = true;
    }
    let mut sum = 0.0;
    for i in 0..op.dim() {
        for j in 0..op.dim() {
            if inside[i] != inside[j] {
                sum += op.entry(i, j).norm_sqr();
            }
        }
    }
    Ok(sum.sqrt())
}
