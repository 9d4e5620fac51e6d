// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

//! Numerical scenarios: ideal and detuned Grover dynamics, the encoded search,
//! code-size tables, and Monte Carlo sweeps over random detunings.
//!
//! Detunings are quoted in units of `⟨v|s⟩/τ = 2^{-m/2}/τ` of the register
//! they act on; the same absolute detunings drive encoded and unencoded runs.

pub mod cli;
mod config;
mod output;
mod scenarios;

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dfs::{hamming_bound_logical, logical_qubit_count, BalancedCode};
use crate::error::{domain, Result};
use crate::gates::{hadamard, phase_inversion};
use crate::grover::GroverInstance;
use crate::hamiltonian::{
    check_time_grid, detuning_hamiltonian, evolve_with_errors, grover_hamiltonian, time_grid, DetuningProfile,
};
use crate::statevec::{apply, DenseOperator, Propagator, StateVector};

pub use config::{parse_sigma_grid, OutputFormat, Overrides, Scenario, ScenarioConfig};
pub use output::{Cell, Table};
pub use scenarios::{run_scenario, Peak, RunResult, Series, Summary, TrialMaxima};

/// `(π/4)·2^{l/2}·τ`, the ideal search time for `l` qubits.
pub fn t_ideal(l: usize) -> f64 {
    PI / 4.0 * 2f64.powf(l as f64 / 2.0)
}

/// Success probability sampled on a time grid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Trace {
    pub times: Vec<f64>,
    pub probabilities: Vec<f64>,
}

impl Trace {
    fn from_pairs(pairs: Vec<(f64, f64)>) -> Self {
        let (times, probabilities) = pairs.into_iter().unzip();
        Self { times, probabilities }
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// `(t, P)` of the largest probability; the earliest time wins ties.
    pub fn peak(&self) -> Option<(f64, f64)> {
        self.peak_until(f64::INFINITY)
    }

    /// Like [`Trace::peak`], restricted to `t ≤ t_end`.
    pub fn peak_until(&self, t_end: f64) -> Option<(f64, f64)> {
        self.times
            .iter()
            .zip(&self.probabilities)
            .filter(|(t, _)| **t <= t_end)
            .fold(None, |best, (&t, &p)| match best {
                Some((_, bp)) if bp >= p => best,
                _ => Some((t, p)),
            })
    }
}

/// A search problem embedded in `2^m` dimensions, waiting for a detuning
/// profile: `H = H_0 + H_d`, start state, and target state.
#[derive(Clone, Debug)]
struct DetunedSystem {
    m: usize,
    base: DenseOperator,
    start: StateVector,
    target: StateVector,
}

impl DetunedSystem {
    /// Logical `H_G` lifted into the balanced code on `m_phys` qubits.
    fn encoded(m_phys: usize, x0_logical: usize) -> Result<Self> {
        let code = BalancedCode::new(m_phys)?;
        let l = code.logical_qubits();
        if x0_logical >= 1 << l {
            return domain(format!(
                "logical marked item {x0_logical} out of range for {l} logical qubits"
            ));
        }
        let inst = GroverInstance::new(l, x0_logical)?;
        let hg = grover_hamiltonian(&inst)?;
        Ok(Self {
            m: m_phys,
            base: code.lift(hg.operator())?,
            start: code.encode(&inst.start_state())?,
            target: code.encode(&inst.target_state()?)?,
        })
    }

    fn unencoded(m: usize, x0: usize) -> Result<Self> {
        let inst = GroverInstance::new(m, x0)?;
        let hg = grover_hamiltonian(&inst)?;
        Ok(Self {
            m,
            base: hg.operator().clone(),
            start: inst.start_state(),
            target: inst.target_state()?,
        })
    }

    fn probabilities(&self, profile: &DetuningProfile, t_grid: &[f64]) -> Result<Vec<f64>> {
        let hd = detuning_hamiltonian(profile, self.m)?;
        let total = self.base.add(&hd)?;
        Propagator::new(&total, &self.start)?.overlap_probabilities(&self.target, t_grid)
    }
}

/// Search on `l = ⌊log₂ D(m, m/2)⌋` logical qubits encoded in the balanced
/// code, evolving under `V·H_G^(L)·V† + H_d`.
pub fn encoded_grover_evolution(
    m_phys: usize,
    profile: &DetuningProfile,
    x0_logical: usize,
    t_grid: &[f64],
) -> Result<Trace> {
    check_time_grid(t_grid)?;
    let system = DetunedSystem::encoded(m_phys, x0_logical)?;
    let probs = system.probabilities(profile, t_grid)?;
    Ok(Trace {
        times: t_grid.to_vec(),
        probabilities: probs,
    })
}

/// Unprotected search on `m` qubits under `H_G + H_d`.
pub fn unencoded_detuned_evolution(m: usize, profile: &DetuningProfile, x0: usize, t_grid: &[f64]) -> Result<Trace> {
    let inst = GroverInstance::new(m, x0)?;
    Ok(Trace::from_pairs(evolve_with_errors(&inst, profile, t_grid)?))
}

/// Parameters of a Monte Carlo sweep over normally distributed detunings.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepConfig {
    pub m_phys: usize,
    pub trials: usize,
    /// Mean detuning `ω̄` in units of `⟨v|s⟩/τ`.
    pub omega_mean: f64,
    /// Standard deviations in units of `ω̄`.
    pub sigmas: Vec<f64>,
    pub seed: u64,
    pub x0_logical: usize,
    pub x0_unencoded: usize,
    /// Time points per max-P window.
    pub grid_points: usize,
}

impl SweepConfig {
    /// 200 trials, `ω̄ = 0.5`, `σ ∈ {0, 0.1, …, 1}`, seed 42, all-ones marked items.
    pub fn new(m_phys: usize) -> Result<Self> {
        let l = logical_qubit_count(m_phys)?.floor;
        Ok(Self {
            m_phys,
            trials: 200,
            omega_mean: 0.5,
            sigmas: (0..=10).map(|k| k as f64 / 10.0).collect(),
            seed: 42,
            x0_logical: (1 << l) - 1,
            x0_unencoded: (1 << m_phys) - 1,
            grid_points: 401,
        })
    }

    fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return domain("Monte Carlo sweep needs at least one trial");
        }
        if self.sigmas.iter().any(|s| !(s.is_finite() && *s >= 0.0)) {
            return domain("σ grid must be finite and non-negative");
        }
        if !self.omega_mean.is_finite() {
            return domain("mean detuning must be finite");
        }
        if self.grid_points < 2 {
            return domain("max-P window needs at least two time points");
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepPoint {
    pub sigma: f64,
    pub mean: f64,
    pub std_error: f64,
    /// `max_t P(t)` of every trial, in trial order.
    pub maxima: Vec<f64>,
}

/// Max-P window for `qubits` search qubits: `[0, 2·t_ideal]`.
pub fn max_p_window(qubits: usize) -> f64 {
    2.0 * t_ideal(qubits)
}

/// Standard normal variate via Box–Muller (cosine branch).
fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    let u1 = 1.0 - rng.random::<f64>();
    let u2 = rng.random::<f64>();
    (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
}

/// Detuning profile of one trial. Every `(σ index, trial)` pair reads its own
/// ChaCha8 stream, so draws do not depend on evaluation order.
fn draw_profile(cfg: &SweepConfig, sigma_index: usize, trial: usize) -> Result<DetuningProfile> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(((sigma_index as u64) << 32) | trial as u64);
    let sigma = cfg.sigmas[sigma_index];
    let omegas = (0..cfg.m_phys)
        .map(|_| cfg.omega_mean + sigma * cfg.omega_mean * standard_normal(&mut rng))
        .collect();
    DetuningProfile::in_overlap_units(omegas)
}

/// Mean over trials of `max_t P(t)` for every σ, with or without encoding.
///
/// Profiles are drawn as `ω_i ~ N(ω̄, (σ·ω̄)²)` without truncation. The max is
/// taken over `[0, 2·t_ideal]` of the searched register: `l` logical qubits
/// when encoded, `m` physical qubits otherwise.
pub fn monte_carlo_sweep(cfg: &SweepConfig, with_encoding: bool) -> Result<Vec<SweepPoint>> {
    cfg.validate()?;
    let (system, window) = if with_encoding {
        let l = logical_qubit_count(cfg.m_phys)?.floor;
        (DetunedSystem::encoded(cfg.m_phys, cfg.x0_logical)?, max_p_window(l))
    } else {
        (
            DetunedSystem::unencoded(cfg.m_phys, cfg.x0_unencoded)?,
            max_p_window(cfg.m_phys),
        )
    };
    let grid = time_grid(window, cfg.grid_points)?;
    let mut points = Vec::with_capacity(cfg.sigmas.len());
    for (k, &sigma) in cfg.sigmas.iter().enumerate() {
        let mut maxima = Vec::with_capacity(cfg.trials);
        for trial in 0..cfg.trials {
            let profile = draw_profile(cfg, k, trial)?;
            let probs = system.probabilities(&profile, &grid)?;
            maxima.push(probs.into_iter().fold(0.0, f64::max));
        }
        let (mean, std_error) = mean_and_std_error(&maxima);
        points.push(SweepPoint {
            sigma,
            mean,
            std_error,
            maxima,
        });
    }
    Ok(points)
}

fn mean_and_std_error(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    // deviations from the first sample, so identical samples give exactly 0
    let shift = xs[0];
    let (s1, s2) = xs
        .iter()
        .fold((0.0, 0.0), |(a, b), x| (a + (x - shift), b + (x - shift).powi(2)));
    let var = ((s2 - s1 * s1 / n) / (n - 1.0)).max(0.0);
    (mean, (var / n).sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CodeSizeRow {
    pub m: usize,
    pub exact_l: f64,
    pub floor_l: usize,
    pub hamming_l: f64,
}

/// Logical qubits of the balanced code next to the single-error Hamming
/// bound, one row per even `m`.
pub fn code_size_table(ms: impl IntoIterator<Item = usize>) -> Result<Vec<CodeSizeRow>> {
    ms.into_iter()
        .map(|m| {
            let l = logical_qubit_count(m)?;
            Ok(CodeSizeRow {
                m,
                exact_l: l.exact,
                floor_l: l.floor,
                hamming_l: hamming_bound_logical(m, 1)?,
            })
        })
        .collect()
}

/// Real amplitudes after each gate of one Grover step followed by the final
/// Hadamard: `|s⟩`, `H|s⟩`, `I_{x0}H|s⟩`, `H I_{x0} H|s⟩`,
/// `−I_s H I_{x0} H|s⟩`, `−H I_s H I_{x0} H|s⟩`.
pub fn gate_sequence_amplitudes(m: usize, x0: usize) -> Result<[Vec<f64>; 6]> {
    let inst = GroverInstance::new(m, x0)?;
    let h = hadamard(m)?;
    let a = inst.start_state();
    let b = apply(&h, &a)?;
    let c = apply(&phase_inversion(m, x0)?, &b)?;
    let d = apply(&h, &c)?;
    let e = apply(&phase_inversion(m, 0)?.scale(-num_complex::Complex64::ONE), &d)?;
    let f = apply(&h, &e)?;
    Ok([a, b, c, d, e, f].map(|s| s.real_parts()))
}

/// The six amplitude vectors for three qubits searching `|111⟩`.
pub fn fig2_amplitudes() -> [Vec<f64>; 6] {
    gate_sequence_amplitudes(3, 7).expect("fixed valid instance")
}
