// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

//! Continuous-time picture of Grover search: the effective two-level
//! Hamiltonian `H_G`, detuning errors `H_d = Σ ω_i σ_z^(i)`, and the
//! discrepancy between `Qⁿ` and `exp(−i·H_G·n)`.

use faer::Mat;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::gates::overlap;
use crate::grover::{grover_step, GroverInstance};
use crate::statevec::{apply, DenseOperator, OpFlags, Propagator, StateVector};

/// `H_G = 2iε(|v⟩⟨s| − |s⟩⟨v|)` for one search instance (ħ = τ = 1).
#[derive(Clone, Debug)]
pub struct GroverHamiltonian {
    instance: GroverInstance,
    operator: DenseOperator,
}

impl GroverHamiltonian {
    pub fn instance(&self) -> &GroverInstance {
        &self.instance
    }

    pub fn operator(&self) -> &DenseOperator {
        &self.operator
    }

    /// `Ω = 2ε/τ`.
    pub fn rabi_frequency(&self) -> f64 {
        2.0 * self.instance.epsilon()
    }
}

pub fn grover_hamiltonian(inst: &GroverInstance) -> Result<GroverHamiltonian> {
    let v = inst.target_state()?;
    let s = inst.start_state();
    let coupling = Complex64::new(0.0, 2.0 * inst.epsilon());
    let amp = |x: &StateVector, i: usize| x.amplitude(i);
    let n = v.dim();
    let mat = Mat::from_fn(n, n, |i, j| {
        let outer = amp(&v, i) * amp(&s, j).conj() - amp(&s, i) * amp(&v, j).conj();
        coupling * outer
    });
    let operator = DenseOperator::from_matrix(mat, OpFlags::HERMITIAN)?;
    Ok(GroverHamiltonian {
        instance: *inst,
        operator,
    })
}

/// Per-qubit detunings `ω_i`, stored in units of `scale` (absolute, in 1/τ).
///
/// The scenarios quote detunings in units of the overlap `⟨s|v⟩/τ` of the
/// register the detunings act on; [`DetuningProfile::in_overlap_units`]
/// builds that case.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetuningProfile {
    omegas: Vec<f64>,
    scale: f64,
}

impl DetuningProfile {
    pub fn new(omegas: Vec<f64>, scale: f64) -> Result<Self> {
        if omegas.is_empty() {
            return domain("detuning profile needs at least one qubit");
        }
        if !(scale.is_finite() && scale > 0.0) || omegas.iter().any(|w| !w.is_finite()) {
            return domain("detunings and their scale must be finite, with a positive scale");
        }
        Ok(Self { omegas, scale })
    }

    /// Detunings given in units of `2^{-m/2}/τ` for an `m = omegas.len()`
    /// qubit register.
    pub fn in_overlap_units(omegas: Vec<f64>) -> Result<Self> {
        let m = omegas.len();
        Self::new(omegas, overlap(m))
    }

    /// All qubits detuned by the same `omega` (in units of `scale`).
    pub fn uniform(m: usize, omega: f64, scale: f64) -> Result<Self> {
        Self::new(vec![omega; m], scale)
    }

    pub fn zero(m: usize) -> Result<Self> {
        Self::uniform(m, 0.0, 1.0)
    }

    pub fn len(&self) -> usize {
        self.omegas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.omegas.is_empty()
    }

    /// Detunings in units of `scale`.
    pub fn omegas(&self) -> &[f64] {
        &self.omegas
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// Detunings in units of 1/τ.
    pub fn absolute(&self) -> Vec<f64> {
        self.omegas.iter().map(|w| w * self.scale).collect()
    }

    /// Diagonal of `H_d`: for basis index `x`, `Σ_{bit i = 0} ω_i − Σ_{bit i = 1} ω_i`.
    ///
    /// The two partial sums are accumulated separately so that equal
    /// detunings on a balanced state cancel exactly.
    pub fn energies(&self) -> Vec<f64> {
        let m = self.omegas.len();
        let abs = self.absolute();
        (0..1usize << m)
            .map(|x| {
                let (mut up, mut down) = (0.0, 0.0);
                for (i, w) in abs.iter().enumerate() {
                    if (x >> (m - 1 - i)) & 1 == 0 {
                        up += w;
                    } else {
                        down += w;
                    }
                }
                up - down
            })
            .collect()
    }

    /// Same detunings with qubits reordered: qubit `i` of the result carries
    /// the detuning of qubit `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.len() {
            return domain("permutation length differs from profile length");
        }
        Self::new(perm.iter().map(|&p| self.omegas[p]).collect(), self.scale)
    }
}

/// `H_d = Σ_i ω_i σ_z^(i)` as a diagonal operator on `m` qubits.
pub fn detuning_hamiltonian(profile: &DetuningProfile, m: usize) -> Result<DenseOperator> {
    if profile.len() != m {
        return domain(format!("{} detunings given for {m} qubits", profile.len()));
    }
    DenseOperator::real_diagonal(&profile.energies())
}

/// Evenly spaced times `0, …, t_max` (`points ≥ 2`).
pub fn time_grid(t_max: f64, points: usize) -> Result<Vec<f64>> {
    if points < 2 || !(t_max.is_finite() && t_max > 0.0) {
        return domain(format!(
            "time grid needs ≥ 2 points and positive t_max (got {points}, {t_max})"
        ));
    }
    Ok((0..points).map(|k| t_max * k as f64 / (points - 1) as f64).collect())
}

/// Default grid: 400 points over `[0, 4·n_opt·τ]`.
pub fn default_time_grid(m: usize) -> Result<Vec<f64>> {
    let n_opt = crate::grover::optimal_iterations(m).rounded.max(1);
    time_grid(4.0 * n_opt as f64, 400)
}

pub(crate) fn check_time_grid(t_grid: &[f64]) -> Result<()> {
    if t_grid.iter().any(|t| !(t.is_finite() && *t >= 0.0)) {
        return domain("time grid must be finite and non-negative");
    }
    if t_grid.windows(2).any(|w| w[1] < w[0]) {
        return domain("time grid must be ascending");
    }
    Ok(())
}

/// Evolves `|s⟩` under `H_G + H_d` and reports `(t, |⟨v|ψ(t)⟩|²)`.
///
/// Measuring against `|v⟩ = H|x0⟩` is the same as applying the final
/// Hadamard and projecting on `|x0⟩`.
pub fn evolve_with_errors(inst: &GroverInstance, profile: &DetuningProfile, t_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    check_time_grid(t_grid)?;
    let hg = grover_hamiltonian(inst)?;
    let hd = detuning_hamiltonian(profile, inst.m())?;
    let total = hg.operator().add(&hd)?;
    let propagator = Propagator::new(&total, &inst.start_state())?;
    let probs = propagator.overlap_probabilities(&inst.target_state()?, t_grid)?;
    Ok(t_grid.iter().copied().zip(probs).collect())
}

/// `‖Qⁿ|s⟩ − exp(−i·H_G·nτ)|s⟩‖₂`.
pub fn trotter_error(inst: &GroverInstance, n: usize) -> Result<f64> {
    if n == 0 {
        return Ok(0.0);
    }
    let q = grover_step(inst)?;
    let mut gate = inst.start_state();
    for _ in 0..n {
        gate = apply(&q, &gate)?;
    }
    let hg = grover_hamiltonian(inst)?;
    let continuous = Propagator::new(hg.operator(), &inst.start_state())?.state_at(n as f64)?;
    Ok(gate.distance(&continuous))
}
