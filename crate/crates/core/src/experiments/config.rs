// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use super::t_ideal;
use crate::dfs::logical_qubit_count;
use crate::error::{Error, Result};

/// Default detunings of the 3-qubit detuned run, in units of `⟨v|s⟩/τ`.
pub const FIG4_DETUNINGS: [f64; 3] = [0.5, 0.3, 0.2];
/// Default detunings of the 8-qubit encoded comparison, in units of `⟨v|s⟩/τ`.
pub const FIG6_DETUNINGS: [f64; 8] = [0.92065, 1.1436, 0.71449, 1.39566, 1.29707, 0.70149, 1.19195, 1.00343];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Scenario {
    /// Amplitudes after each gate of one three-qubit Grover step.
    Fig2,
    /// Ideal vs detuned continuous-time search.
    Fig4,
    /// Logical qubits of the balanced code vs the quantum Hamming bound.
    Fig5,
    /// Ideal, detuned, and encoded-detuned search traces.
    Fig6,
    /// Monte Carlo sweep of mean max success over detuning spread.
    Fig7,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

/// Optional user settings; anything left `None` takes the scenario default.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Overrides {
    pub m: Option<usize>,
    pub x0: Option<usize>,
    pub detunings: Option<Vec<f64>>,
    pub trials: Option<usize>,
    pub sigma_grid: Option<Vec<f64>>,
    pub omega_mean: Option<f64>,
    pub seed: Option<u64>,
    pub t_max: Option<f64>,
    pub grid_points: Option<usize>,
    pub m_max: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Option<OutputFormat>,
}

/// Fully resolved scenario parameters, echoed in every JSON summary.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    /// Physical qubit count of the searched (or encoding) register.
    pub m: usize,
    /// Logical qubits when the scenario encodes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub logical_qubits: Option<usize>,
    /// Marked item: logical when the scenario encodes, physical otherwise.
    pub x0: usize,
    /// Marked item of the unencoded comparison run, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x0_unencoded: Option<usize>,
    /// Detunings in units of `⟨v|s⟩/τ`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub detunings: Vec<f64>,
    /// `⟨v|s⟩ = 2^{-m/2}` of the detuned register.
    pub detuning_unit: f64,
    pub trials: usize,
    pub sigma_grid: Vec<f64>,
    pub omega_mean: f64,
    pub seed: u64,
    /// End of the sampled time window, in units of τ.
    pub t_max: f64,
    pub grid_points: usize,
    pub m_max: usize,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
}

fn config_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Config(msg.into()))
}

impl ScenarioConfig {
    /// Fills in scenario defaults and checks that the result is runnable.
    pub fn resolve(scenario: Scenario, o: Overrides) -> Result<Self> {
        let default_m = match scenario {
            Scenario::Fig2 | Scenario::Fig4 => 3,
            Scenario::Fig5 | Scenario::Fig6 | Scenario::Fig7 => 8,
        };
        let m = o.m.unwrap_or(default_m);
        if m == 0 || m > 16 {
            return config_err(format!("--m {m} outside 1..=16"));
        }
        let encodes = matches!(scenario, Scenario::Fig6 | Scenario::Fig7);
        let logical_qubits = if encodes {
            Some(logical_qubit_count(m).map_err(|e| Error::Config(e.to_string()))?.floor)
        } else {
            None
        };
        let search_qubits = logical_qubits.unwrap_or(m);
        let x0 = o.x0.unwrap_or((1 << search_qubits) - 1);
        if x0 >= 1 << search_qubits {
            return config_err(format!("--x0 {x0} out of range for {search_qubits} qubits"));
        }
        let detunings = match (scenario, o.detunings) {
            (Scenario::Fig4 | Scenario::Fig6, Some(d)) => d,
            (Scenario::Fig4, None) if m == 3 => FIG4_DETUNINGS.to_vec(),
            (Scenario::Fig6, None) if m == 8 => FIG6_DETUNINGS.to_vec(),
            (Scenario::Fig4 | Scenario::Fig6, None) => {
                return config_err(format!("no default detunings for --m {m}; pass --detunings"))
            }
            (_, Some(_)) => return config_err("--detunings only applies to fig4 and fig6"),
            (_, None) => Vec::new(),
        };
        if matches!(scenario, Scenario::Fig4 | Scenario::Fig6) && detunings.len() != m {
            return config_err(format!("{} detunings given for {m} qubits", detunings.len()));
        }
        if detunings.iter().any(|w| !w.is_finite()) {
            return config_err("detunings must be finite");
        }
        let t_max = o.t_max.unwrap_or(match scenario {
            Scenario::Fig4 => 40.0,
            // covers two ideal periods of the logical search and the window of the physical one
            Scenario::Fig6 => 2.0 * t_ideal(m).max(t_ideal(search_qubits)),
            _ => 0.0,
        });
        if matches!(scenario, Scenario::Fig4 | Scenario::Fig6) && !(t_max.is_finite() && t_max > 0.0) {
            return config_err(format!("--t-max must be positive, got {t_max}"));
        }
        let grid_points = o.grid_points.unwrap_or(match scenario {
            Scenario::Fig7 => 401,
            _ => 1001,
        });
        if grid_points < 2 {
            return config_err("--grid-points must be at least 2");
        }
        let trials = o.trials.unwrap_or(200);
        if trials == 0 {
            return config_err("--trials must be at least 1");
        }
        let sigma_grid = o
            .sigma_grid
            .unwrap_or_else(|| (0..=10).map(|k| k as f64 / 10.0).collect());
        if sigma_grid.is_empty() || sigma_grid.iter().any(|s| !(s.is_finite() && *s >= 0.0)) {
            return config_err("--sigma-grid must list non-negative values");
        }
        let omega_mean = o.omega_mean.unwrap_or(0.5);
        if !omega_mean.is_finite() {
            return config_err("--omega-mean must be finite");
        }
        let m_max = o.m_max.unwrap_or(20);
        if scenario == Scenario::Fig5 && !(2..=100).contains(&m_max) {
            return config_err(format!("--m-max {m_max} outside 2..=100"));
        }
        Ok(Self {
            scenario,
            m,
            logical_qubits,
            x0,
            x0_unencoded: encodes.then(|| (1 << m) - 1),
            detunings,
            detuning_unit: crate::gates::overlap(m),
            trials,
            sigma_grid,
            omega_mean,
            seed: o.seed.unwrap_or(42),
            t_max,
            grid_points,
            m_max,
            out: o.out,
            format: o.format.unwrap_or_default(),
        })
    }
}

/// Parses `a:b:step` into `a, a + step, …` up to and including `b` (within
/// a relative 1e-9 of a step).
pub fn parse_sigma_grid(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return config_err(format!("σ grid '{spec}' is not of the form a:b:step"));
    }
    let nums: Vec<f64> = parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| Error::Config(format!("'{p}' in σ grid is not a number")))
        })
        .collect::<Result<_>>()?;
    let (a, b, step) = (nums[0], nums[1], nums[2]);
    if !(a.is_finite() && b.is_finite() && step.is_finite()) || step <= 0.0 || b < a || a < 0.0 {
        return config_err(format!("σ grid '{spec}' needs 0 ≤ a ≤ b and step > 0"));
    }
    let count = ((b - a) / step + 1e-9).floor() as usize + 1;
    if count > 100_000 {
        return config_err(format!("σ grid '{spec}' has {count} points"));
    }
    Ok((0..count).map(|k| a + k as f64 * step).collect())
}
