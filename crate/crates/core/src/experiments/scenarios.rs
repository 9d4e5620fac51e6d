// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use serde::Serialize;

use super::config::{Scenario, ScenarioConfig};
use super::output::{Cell, Table};
use super::{
    code_size_table, encoded_grover_evolution, gate_sequence_amplitudes, max_p_window, monte_carlo_sweep,
    unencoded_detuned_evolution, SweepConfig, Trace,
};
use crate::error::{Error, Result};
use crate::hamiltonian::{time_grid, DetuningProfile};

/// Everything a scenario produced, serialized as the JSON summary.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunResult {
    pub config: ScenarioConfig,
    pub series: Vec<Series>,
    pub summary: Summary,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Series {
    pub name: String,
    pub x_label: String,
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y_error: Option<Vec<f64>>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Summary {
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub peaks: Vec<Peak>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub per_trial_maxima: Vec<TrialMaxima>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, f64>,
}

/// Largest probability of a series within `[0, window_end]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Peak {
    pub series: String,
    pub window_end: f64,
    pub max_probability: f64,
    pub argmax_time: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialMaxima {
    pub series: String,
    pub sigma: f64,
    pub maxima: Vec<f64>,
}

fn trace_series(name: &str, trace: &Trace) -> Series {
    Series {
        name: name.to_string(),
        x_label: "t".to_string(),
        x: trace.times.clone(),
        y: trace.probabilities.clone(),
        y_error: None,
    }
}

fn peak(name: &str, trace: &Trace, window_end: f64) -> Result<Peak> {
    let (t, p) = trace
        .peak_until(window_end)
        .ok_or_else(|| Error::Config(format!("no time point of '{name}' inside [0, {window_end}]")))?;
    Ok(Peak {
        series: name.to_string(),
        window_end,
        max_probability: p,
        argmax_time: t,
    })
}

fn traces_table(traces: &[(&str, &Trace)]) -> Table {
    let mut header = vec!["t"];
    header.extend(traces.iter().map(|(n, _)| *n));
    let mut table = Table::new(&header);
    for (k, &t) in traces[0].1.times.iter().enumerate() {
        let mut row = vec![Cell::Float(t)];
        row.extend(traces.iter().map(|(_, tr)| Cell::Float(tr.probabilities[k])));
        table.push(row);
    }
    table
}

/// Runs one scenario and returns the JSON summary and the CSV table.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<(RunResult, Table)> {
    match cfg.scenario {
        Scenario::Fig2 => fig2(cfg),
        Scenario::Fig4 => fig4(cfg),
        Scenario::Fig5 => fig5(cfg),
        Scenario::Fig6 => fig6(cfg),
        Scenario::Fig7 => fig7(cfg),
    }
}

fn fig2(cfg: &ScenarioConfig) -> Result<(RunResult, Table)> {
    const LABELS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];
    let states = gate_sequence_amplitudes(cfg.m, cfg.x0)?;
    let dim = 1usize << cfg.m;
    let mut header = vec!["index"];
    header.extend(LABELS);
    let mut table = Table::new(&header);
    for x in 0..dim {
        let mut row = vec![Cell::Int(x as u64)];
        row.extend(states.iter().map(|s| Cell::Float(s[x])));
        table.push(row);
    }
    let series = LABELS
        .iter()
        .zip(&states)
        .map(|(name, s)| Series {
            name: name.to_string(),
            x_label: "index".to_string(),
            x: (0..dim).map(|x| x as f64).collect(),
            y: s.clone(),
            y_error: None,
        })
        .collect();
    let amp = states[5][cfg.x0];
    let mut values = BTreeMap::new();
    values.insert("final_amplitude_x0".to_string(), amp);
    values.insert("final_probability_x0".to_string(), amp * amp);
    let summary = Summary {
        values,
        ..Summary::default()
    };
    Ok((
        RunResult {
            config: cfg.clone(),
            series,
            summary,
        },
        table,
    ))
}

fn fig4(cfg: &ScenarioConfig) -> Result<(RunResult, Table)> {
    let m = cfg.m;
    let grid = time_grid(cfg.t_max, cfg.grid_points)?;
    let profile = DetuningProfile::in_overlap_units(cfg.detunings.clone())?;
    let ideal = unencoded_detuned_evolution(m, &DetuningProfile::zero(m)?, cfg.x0, &grid)?;
    let detuned = unencoded_detuned_evolution(m, &profile, cfg.x0, &grid)?;
    let (n_ideal, n_det) = (format!("ideal-{m}q"), format!("detuned-{m}q"));
    let table = traces_table(&[(&n_ideal, &ideal), (&n_det, &detuned)]);
    let summary = Summary {
        peaks: vec![peak(&n_ideal, &ideal, cfg.t_max)?, peak(&n_det, &detuned, cfg.t_max)?],
        ..Summary::default()
    };
    let series = vec![trace_series(&n_ideal, &ideal), trace_series(&n_det, &detuned)];
    Ok((
        RunResult {
            config: cfg.clone(),
            series,
            summary,
        },
        table,
    ))
}

fn fig5(cfg: &ScenarioConfig) -> Result<(RunResult, Table)> {
    let rows = code_size_table((2..=cfg.m_max).step_by(2))?;
    let mut table = Table::new(&["m", "exact_l", "floor_l", "hamming_l"]);
    for r in &rows {
        table.push(vec![
            Cell::Int(r.m as u64),
            Cell::Float(r.exact_l),
            Cell::Int(r.floor_l as u64),
            Cell::Float(r.hamming_l),
        ]);
    }
    let xs: Vec<f64> = rows.iter().map(|r| r.m as f64).collect();
    let column = |name: &str, f: &dyn Fn(&super::CodeSizeRow) -> f64| Series {
        name: name.to_string(),
        x_label: "m".to_string(),
        x: xs.clone(),
        y: rows.iter().map(f).collect(),
        y_error: None,
    };
    let series = vec![
        column("exact_l", &|r| r.exact_l),
        column("floor_l", &|r| r.floor_l as f64),
        column("hamming_l", &|r| r.hamming_l),
    ];
    Ok((
        RunResult {
            config: cfg.clone(),
            series,
            summary: Summary::default(),
        },
        table,
    ))
}

fn fig6(cfg: &ScenarioConfig) -> Result<(RunResult, Table)> {
    let m = cfg.m;
    let l = cfg
        .logical_qubits
        .ok_or_else(|| Error::Config("encoded scenario without logical qubits".into()))?;
    let x0_unencoded = cfg.x0_unencoded.unwrap_or((1 << m) - 1);
    let grid = time_grid(cfg.t_max, cfg.grid_points)?;
    let profile = DetuningProfile::in_overlap_units(cfg.detunings.clone())?;
    let ideal = unencoded_detuned_evolution(l, &DetuningProfile::zero(l)?, cfg.x0, &grid)?;
    let detuned = unencoded_detuned_evolution(m, &profile, x0_unencoded, &grid)?;
    let encoded = encoded_grover_evolution(m, &profile, cfg.x0, &grid)?;
    let names = [format!("ideal-{l}q"), format!("detuned-{m}q"), format!("encoded-{m}q")];
    let table = traces_table(&[(&names[0], &ideal), (&names[1], &detuned), (&names[2], &encoded)]);
    let summary = Summary {
        peaks: vec![
            peak(&names[0], &ideal, max_p_window(l).min(cfg.t_max))?,
            peak(&names[1], &detuned, max_p_window(m).min(cfg.t_max))?,
            peak(&names[2], &encoded, max_p_window(l).min(cfg.t_max))?,
        ],
        ..Summary::default()
    };
    let series = vec![
        trace_series(&names[0], &ideal),
        trace_series(&names[1], &detuned),
        trace_series(&names[2], &encoded),
    ];
    Ok((
        RunResult {
            config: cfg.clone(),
            series,
            summary,
        },
        table,
    ))
}

fn fig7(cfg: &ScenarioConfig) -> Result<(RunResult, Table)> {
    let mut sweep = SweepConfig::new(cfg.m)?;
    sweep.trials = cfg.trials;
    sweep.omega_mean = cfg.omega_mean;
    sweep.sigmas = cfg.sigma_grid.clone();
    sweep.seed = cfg.seed;
    sweep.x0_logical = cfg.x0;
    sweep.x0_unencoded = cfg.x0_unencoded.unwrap_or((1 << cfg.m) - 1);
    sweep.grid_points = cfg.grid_points;
    let encoded = monte_carlo_sweep(&sweep, true)?;
    let unencoded = monte_carlo_sweep(&sweep, false)?;

    let mut table = Table::new(&[
        "sigma",
        "encoded_mean",
        "encoded_se",
        "unencoded_mean",
        "unencoded_se",
        "trials",
        "seed",
    ]);
    for (e, u) in encoded.iter().zip(&unencoded) {
        table.push(vec![
            Cell::Float(e.sigma),
            Cell::Float(e.mean),
            Cell::Float(e.std_error),
            Cell::Float(u.mean),
            Cell::Float(u.std_error),
            Cell::Int(cfg.trials as u64),
            Cell::Int(cfg.seed),
        ]);
    }
    let mut series = Vec::new();
    let mut per_trial_maxima = Vec::new();
    for (name, points) in [("encoded", &encoded), ("unencoded", &unencoded)] {
        series.push(Series {
            name: name.to_string(),
            x_label: "sigma".to_string(),
            x: points.iter().map(|p| p.sigma).collect(),
            y: points.iter().map(|p| p.mean).collect(),
            y_error: Some(points.iter().map(|p| p.std_error).collect()),
        });
        per_trial_maxima.extend(points.iter().map(|p| TrialMaxima {
            series: name.to_string(),
            sigma: p.sigma,
            maxima: p.maxima.clone(),
        }));
    }
    let summary = Summary {
        per_trial_maxima,
        ..Summary::default()
    };
    Ok((
        RunResult {
            config: cfg.clone(),
            series,
            summary,
        },
        table,
    ))
}
