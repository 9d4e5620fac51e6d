// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

//! Gate-level Grover search: the elementary rotation `Q`, full runs
//! `H·Qⁿ|s⟩`, and the closed forms for success amplitude and optimal
//! iteration count.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::gates::{hadamard, overlap, phase_inversion, phase_inversion_via_oracle};
use crate::statevec::{apply, basis_state, inner_product, DenseOperator, StateVector};

/// A single-item search over `N = 2^m` entries with marked item `x0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroverInstance {
    m: usize,
    x0: usize,
    epsilon: f64,
}

impl GroverInstance {
    pub fn new(m: usize, x0: usize) -> Result<Self> {
        if m == 0 || m > 16 {
            return domain(format!("qubit count {m} outside 1..=16"));
        }
        if x0 >= 1 << m {
            return domain(format!("marked item {x0} out of range for {m} qubits"));
        }
        Ok(Self {
            m,
            x0,
            epsilon: overlap(m),
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn x0(&self) -> usize {
        self.x0
    }

    /// `ε = ⟨s|v⟩ = 2^{-m/2}`.
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Elementary step time; fixed to 1.
    pub fn tau(&self) -> f64 {
        1.0
    }

    pub fn n_optimal(&self) -> usize {
        optimal_iterations(self.m).rounded
    }

    /// `|s⟩ = |0…0⟩`.
    pub fn start_state(&self) -> StateVector {
        basis_state(self.m, 0).expect("validated instance")
    }

    /// `|v⟩ = H^(2^m)|x0⟩`.
    pub fn target_state(&self) -> Result<StateVector> {
        apply(&hadamard(self.m)?, &basis_state(self.m, self.x0)?)
    }
}

/// How the marked-item phase inversion is realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MarkedInversion {
    /// Through the oracle with an `|a0⟩` ancilla.
    #[default]
    Oracle,
    /// Directly as `diag(…, −1, …)`.
    Direct,
}

/// `Q = −I_s·H·I_{x0}·H`, with `I_{x0}` realized through the oracle.
pub fn grover_step(inst: &GroverInstance) -> Result<DenseOperator> {
    grover_step_with(inst, MarkedInversion::Oracle)
}

pub fn grover_step_with(inst: &GroverInstance, inversion: MarkedInversion) -> Result<DenseOperator> {
    let h = hadamard(inst.m)?;
    let i_s = phase_inversion(inst.m, 0)?;
    let i_x0 = match inversion {
        MarkedInversion::Oracle => phase_inversion_via_oracle(inst.m, inst.x0)?,
        MarkedInversion::Direct => phase_inversion(inst.m, inst.x0)?,
    };
    let inner = h.compose(&i_x0)?.compose(&h)?;
    Ok(i_s.compose(&inner)?.scale(-Complex64::ONE))
}

/// `|f⟩ = H·Qⁿ·|0…0⟩`.
pub fn run_grover(inst: &GroverInstance, n: usize) -> Result<StateVector> {
    run_grover_with(inst, n, MarkedInversion::Oracle)
}

pub fn run_grover_with(inst: &GroverInstance, n: usize, inversion: MarkedInversion) -> Result<StateVector> {
    let q = grover_step_with(inst, inversion)?;
    let mut psi = inst.start_state();
    for _ in 0..n {
        psi = apply(&q, &psi)?;
    }
    apply(&hadamard(inst.m)?, &psi)
}

/// `|⟨x0|H·Qⁿ|s⟩|²` for every `n` in `0..=n_max`, reusing one `Q`.
pub fn success_probabilities(inst: &GroverInstance, n_max: usize) -> Result<Vec<f64>> {
    let q = grover_step(inst)?;
    let v = inst.target_state()?;
    let mut psi = inst.start_state();
    let mut out = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n > 0 {
            psi = apply(&q, &psi)?;
        }
        out.push(inner_product(&v, &psi)?.norm_sqr());
    }
    Ok(out)
}

/// Amplitude of `|v⟩` after `j` iterations: `sin((2j+1)·arcsin ε)`.
///
/// The small-angle form `sin((2j+1)·ε)` is [`success_amplitude_small_angle`];
/// only the arcsine form agrees with gate-level simulation at small `m`.
pub fn success_amplitude(j: usize, epsilon: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return domain(format!("overlap ε = {epsilon} outside (0, 1]"));
    }
    Ok(((2 * j + 1) as f64 * epsilon.asin()).sin())
}

pub fn success_amplitude_small_angle(j: usize, epsilon: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return domain(format!("overlap ε = {epsilon} outside (0, 1]"));
    }
    Ok(((2 * j + 1) as f64 * epsilon).sin())
}

/// Rotation angle of `Q` in the `{|s⟩, |v⟩}` plane: `arcsin(2ε√(1−ε²))`.
pub fn rotation_angle(epsilon: f64) -> f64 {
    (2.0 * epsilon * (1.0 - epsilon * epsilon).sqrt()).asin()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OptimalIterations {
    /// `π/(4·arcsin 2^{-m/2}) − 1/2`.
    pub exact: f64,
    pub rounded: usize,
    /// `(π/4)·2^{m/2}`.
    pub asymptotic: f64,
}

/// Optimal number of Grover iterations for `m` qubits.
///
/// Rounds to the nearest integer; an exact half is resolved toward the
/// neighbour with the larger success probability.
pub fn optimal_iterations(m: usize) -> OptimalIterations {
    let eps = overlap(m);
    let exact = PI / (4.0 * eps.asin()) - 0.5;
    let asymptotic = PI / 4.0 * 2f64.powf(m as f64 / 2.0);
    let floor = exact.floor().max(0.0);
    let frac = exact - floor;
    let rounded = if (frac - 0.5).abs() < 1e-12 {
        let lo = floor as usize;
        let p = |j: usize| success_amplitude(j, eps).map(|a| a * a).unwrap_or(0.0);
        if p(lo + 1) > p(lo) {
            lo + 1
        } else {
            lo
        }
    } else {
        exact.round().max(0.0) as usize
    };
    OptimalIterations {
        exact,
        rounded,
        asymptotic,
    }
}

/// Action of `Q` on `|s⟩` and `|v⟩` written in the non-orthogonal pair
/// `(|s⟩, |v⟩)`: `Q|s⟩ = a|s⟩ + b|v⟩ + r_s`, `Q|v⟩ = c|s⟩ + d|v⟩ + r_v`.
#[derive(Clone, Copy, Debug)]
pub struct TwoLevelAction {
    /// Rows `[a, b]` and `[c, d]`.
    pub matrix: [[Complex64; 2]; 2],
    /// `max(‖r_s‖, ‖r_v‖)`.
    pub residual_norm: f64,
}

/// Solves the 2×2 Gram system for the coefficients instead of projecting,
/// since `⟨s|v⟩ = ε ≠ 0`.
pub fn two_level_action(inst: &GroverInstance) -> Result<TwoLevelAction> {
    let q = grover_step(inst)?;
    let s = inst.start_state();
    let v = inst.target_state()?;
    let eps = inner_product(&s, &v)?;
    let det = Complex64::ONE - eps * eps.conj();
    let mut matrix = [[Complex64::ZERO; 2]; 2];
    let mut residual_norm = 0.0f64;
    for (row, input) in [&s, &v].into_iter().enumerate() {
        let image = q.mul_vec(input.amplitudes());
        let ps: Complex64 = s.amplitudes().iter().zip(&image).map(|(a, b)| a.conj() * b).sum();
        let pv: Complex64 = v.amplitudes().iter().zip(&image).map(|(a, b)| a.conj() * b).sum();
        // [[1, ε], [ε*, 1]]·[a, b]ᵀ = [⟨s|·⟩, ⟨v|·⟩]ᵀ
        let a = (ps - eps * pv) / det;
        let b = (pv - eps.conj() * ps) / det;
        matrix[row] = [a, b];
        let r: f64 = image
            .iter()
            .zip(s.amplitudes().iter().zip(v.amplitudes()))
            .map(|(x, (sx, vx))| (x - a * sx - b * vx).norm_sqr())
            .sum::<f64>()
            .sqrt();
        residual_norm = residual_norm.max(r);
    }
    Ok(TwoLevelAction { matrix, residual_norm })
}
