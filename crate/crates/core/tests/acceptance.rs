// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite. Every criterion runs, prints one PASS/FAIL line, and the
//! process exits nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{exit, Command};
use std::time::Instant;

use grover_dfs::dfs::{
    code_block_leakage, code_dimension, hamming_bound_logical, logical_hadamard_2phys, logical_hadamard_middle_factor,
    logical_qubit_count, redundancy_gap, verify_error_free, BalancedCode,
};
use grover_dfs::experiments::{
    encoded_grover_evolution, max_p_window, monte_carlo_sweep, t_ideal, unencoded_detuned_evolution, SweepConfig,
};
use grover_dfs::grover::{optimal_iterations, run_grover, success_probabilities, GroverInstance};
use grover_dfs::hamiltonian::{detuning_hamiltonian, time_grid, trotter_error, DetuningProfile};
use grover_dfs::statevec::{apply, basis_state};
use grover_dfs::StateVector;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// `2^{-m/2}` evaluated independently of the library.
fn eps(m: usize) -> f64 {
    1.0 / ((1u64 << m) as f64).sqrt()
}

fn c1_small_instances() -> Outcome {
    let mut worst2 = 0.0f64;
    for x0 in 0..4 {
        let f = run_grover(&GroverInstance::new(2, x0).unwrap(), 1).unwrap();
        worst2 = worst2.max((f.probability(x0) - 1.0).abs());
    }
    let f3 = run_grover(&GroverInstance::new(3, 7).unwrap(), 1).unwrap();
    let p3 = f3.probability(7);
    let a3 = f3.amplitude(7).re;
    let ok = worst2 <= 1e-12 && (p3 - 0.78125).abs() <= 1e-12 && (a3 - 0.88388).abs() <= 1e-5;
    check(
        ok,
        format!("m=2 max |P-1| = {worst2:.1e}; m=3 P = {p3:.15}, amplitude = {a3:.6}"),
    )
}

fn c2_closed_form() -> Outcome {
    let mut worst = 0.0f64;
    let mut cases = 0usize;
    for m in 2..=8usize {
        let n_max = 4 * optimal_iterations(m).rounded;
        let theta = eps(m).asin();
        for x0 in 0..1usize << m {
            let probs = success_probabilities(&GroverInstance::new(m, x0).unwrap(), n_max).unwrap();
            for (j, p) in probs.iter().enumerate() {
                let want = ((2 * j + 1) as f64 * theta).sin().powi(2);
                worst = worst.max((p - want).abs());
                cases += 1;
            }
        }
    }
    check(
        worst <= 1e-10,
        format!("{cases} (m, x0, j) cases, max deviation {worst:.2e}"),
    )
}

fn c3_optimal_iterations() -> Outcome {
    let o2 = optimal_iterations(2);
    let o3 = optimal_iterations(3);
    let counts_ok =
        (o2.exact - 1.0).abs() < 1e-12 && (o3.exact - 1.673).abs() < 5e-4 && o2.rounded == 1 && o3.rounded == 2;
    let mut worst = (0usize, 0.0f64);
    for m in 10..=20 {
        let o = optimal_iterations(m);
        let rel = (o.asymptotic - o.exact).abs() / o.exact;
        if rel > worst.1 {
            worst = (m, rel);
        }
    }
    let asym_ok = worst.1 <= 0.01;
    check(
        counts_ok && asym_ok,
        format!(
            "exact {:.4}, {:.4}; rounded {}, {}; asymptotic vs exact for m in [10, 20]: worst {:.3}% at m={}",
            o2.exact,
            o3.exact,
            o2.rounded,
            o3.rounded,
            100.0 * worst.1,
            worst.0
        ),
    )
}

fn c4_trotter() -> Outcome {
    let e6 = trotter_error(&GroverInstance::new(6, 63).unwrap(), 5).unwrap();
    let e8 = trotter_error(&GroverInstance::new(8, 255).unwrap(), 5).unwrap();
    let e10 = trotter_error(&GroverInstance::new(10, 1023).unwrap(), 25).unwrap();
    let ratio = e6 / e8;
    check(
        (2.0..=8.0).contains(&ratio) && e10 < 0.2,
        format!(
            "n=5 error m=6 {e6:.4e}, m=8 {e8:.4e}, ratio {ratio:.4} (required in [2, 8]); m=10 n=25 error {e10:.4e}"
        ),
    )
}

fn c5_dfs_exactness() -> Outcome {
    let mut worst_residual = 0.0f64;
    let mut worst_trace = 0.0f64;
    for m in [2usize, 4, 6, 8] {
        let code = BalancedCode::new(m).unwrap();
        let l = code.logical_qubits();
        let x0 = (1 << l) - 1;
        let grid = time_grid(2.0 * max_p_window(l), 300).unwrap();
        let ideal = encoded_grover_evolution(m, &DetuningProfile::zero(m).unwrap(), x0, &grid).unwrap();
        for omega in [0.1, 1.0, 10.0] {
            let profile = DetuningProfile::in_overlap_units(vec![omega; m]).unwrap();
            let he = detuning_hamiltonian(&profile, m).unwrap();
            // H_e·V column by column
            for &w in code.codewords() {
                let image = he.mul_vec(basis_state(m, w).unwrap().amplitudes());
                worst_residual = image.iter().map(|z| z.norm()).fold(worst_residual, f64::max);
            }
            let cert = verify_error_free(&code, &he).unwrap();
            worst_residual = worst_residual.max(cert.residual_norm).max(cert.eigenvalue.norm());
            let tr = encoded_grover_evolution(m, &profile, x0, &grid).unwrap();
            for (p, q) in tr.probabilities.iter().zip(&ideal.probabilities) {
                worst_trace = worst_trace.max((p - q).abs());
            }
        }
    }
    check(
        worst_residual < 1e-12 && worst_trace <= 1e-10,
        format!("max |H_e V| = {worst_residual:.1e}, max trace deviation = {worst_trace:.1e}"),
    )
}

fn c6_code_size() -> Outcome {
    let d42 = code_dimension(4, 2).unwrap();
    let d84 = code_dimension(8, 4).unwrap();
    let l4 = logical_qubit_count(4).unwrap().floor;
    let l8 = logical_qubit_count(8).unwrap().floor;
    let h51 = hamming_bound_logical(5, 1).unwrap();
    let h81 = hamming_bound_logical(8, 1).unwrap();
    let min_gap = (4..=64)
        .step_by(2)
        .map(|m| redundancy_gap(m).unwrap().exact)
        .fold(f64::INFINITY, f64::min);
    let ok = d42 == 6 && d84 == 70 && l4 == 2 && l8 == 6 && h51 == 1.0 && (h81 - 3.356).abs() < 1e-3 && min_gap > 0.0;
    check(
        ok,
        format!(
            "D(4,2)={d42}, D(8,4)={d84}, l(4)={l4}, l(8)={l8}, l_>(5)={h51}, l_>(8)={h81:.4}, min gap {min_gap:.4}"
        ),
    )
}

fn c7_logical_hadamard() -> Outcome {
    let h = logical_hadamard_2phys();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let unitary = h.unitarity_defect();
    let img01 = apply(&h, &basis_state(2, 0b01).unwrap()).unwrap();
    let img10 = apply(&h, &basis_state(2, 0b10).unwrap()).unwrap();
    let d01 = img01.distance(&StateVector::from_real(&[0.0, r, r, 0.0]).unwrap());
    let d10 = img10.distance(&StateVector::from_real(&[0.0, r, -r, 0.0]).unwrap());
    let code = BalancedCode::new(2).unwrap();
    let leak_full = code_block_leakage(&code, &h).unwrap();
    let leak_mid = code_block_leakage(&code, &logical_hadamard_middle_factor()).unwrap();
    let ok = unitary <= 1e-12 && d01 <= 1e-12 && d10 <= 1e-12 && leak_full == 0.0 && leak_mid > 0.1;
    check(
        ok,
        format!(
            "unitarity defect {unitary:.1e}, |01> error {d01:.1e}, |10> error {d10:.1e}, leakage product {leak_full}, middle factor {leak_mid:.4}"
        ),
    )
}

const FIG6: [f64; 8] = [0.92065, 1.1436, 0.71449, 1.39566, 1.29707, 0.70149, 1.19195, 1.00343];

fn c8_fig6() -> Outcome {
    let l = logical_qubit_count(8).unwrap().floor;
    let profile = DetuningProfile::in_overlap_units(FIG6.to_vec()).unwrap();
    let enc_grid = time_grid(max_p_window(l), 2001).unwrap();
    let unenc_grid = time_grid(max_p_window(8), 2001).unwrap();
    let enc = encoded_grover_evolution(8, &profile, (1 << l) - 1, &enc_grid).unwrap();
    let unenc = unencoded_detuned_evolution(8, &profile, 255, &unenc_grid).unwrap();
    let (t_enc, p_enc) = enc.peak().unwrap();
    let (_, p_unenc) = unenc.peak().unwrap();
    let t_id = t_ideal(l);
    let offset = (t_enc - t_id).abs() / t_id;
    check(
        p_enc >= 0.8 && p_unenc <= 0.5 * p_enc && offset <= 0.25,
        format!(
            "encoded max {p_enc:.4} at t={t_enc:.3} ({:.1}% from {t_id:.3}), unencoded max {p_unenc:.4}",
            100.0 * offset
        ),
    )
}

fn c9_fig7() -> Outcome {
    let cfg = SweepConfig::new(8).unwrap();
    let enc = monte_carlo_sweep(&cfg, true).unwrap();
    let unenc = monte_carlo_sweep(&cfg, false).unwrap();
    let mut min_z = f64::INFINITY;
    for (e, u) in enc.iter().zip(&unenc) {
        let se = (e.std_error.powi(2) + u.std_error.powi(2)).sqrt();
        let margin = e.mean - u.mean;
        let z = if se > 0.0 {
            margin / se
        } else if margin > 0.0 {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        };
        min_z = min_z.min(z);
    }
    let dominance = min_z > 3.0;
    let start_ok = enc[0].mean >= 0.99;
    let inversions: Vec<(f64, f64)> = enc
        .windows(2)
        .filter(|w| w[1].mean > w[0].mean)
        .map(|w| {
            (
                w[1].mean - w[0].mean,
                (w[0].std_error.powi(2) + w[1].std_error.powi(2)).sqrt(),
            )
        })
        .collect();
    let monotone = inversions.len() <= 1 && inversions.iter().all(|(rise, se)| rise <= se);
    check(
        dominance && start_ok && monotone,
        format!(
            "{} trials x {} sigmas; encoded {:.4} -> {:.4}, unencoded {:.4} -> {:.4}; min separation {min_z:.1} SE; {} inversion(s)",
            cfg.trials,
            cfg.sigmas.len(),
            enc[0].mean,
            enc.last().unwrap().mean,
            unenc[0].mean,
            unenc.last().unwrap().mean,
            inversions.len()
        ),
    )
}

fn c10_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_grover-dfs"))
            .args(["run", "fig7", "--trials", "20", "--seed", "42", "--out"])
            .arg(&path)
            .status()
            .unwrap();
        assert!(status.success(), "fig7 run exited with {status}");
        std::fs::read(&path).unwrap()
    };
    let a = run("first.csv");
    let b = run("second.csv");
    check(
        a == b && !a.is_empty(),
        format!(
            "two seeded fig7 runs, {} and {} bytes, identical: {}",
            a.len(),
            b.len(),
            a == b
        ),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("exact small-instance Grover", c1_small_instances),
        ("closed-form equivalence", c2_closed_form),
        ("optimal iteration count", c3_optimal_iterations),
        ("Trotter correspondence", c4_trotter),
        ("error-avoiding code exactness", c5_dfs_exactness),
        ("code-size table", c6_code_size),
        ("logical Hadamard", c7_logical_hadamard),
        ("encoded search under fixed detunings", c8_fig6),
        ("Monte Carlo sweep over detuning spread", c9_fig7),
        ("determinism", c10_determinism),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let id = k + 1;
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail} [{secs:.1}s]"),
            Err(detail) => {
                println!("criterion {id:>2} FAIL  {name}: {detail} [{secs:.1}s]");
                failed.push(id);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
    } else {
        println!(
            "acceptance: {} of {} criteria failed: {failed:?}",
            failed.len(),
            criteria.len()
        );
        exit(1);
    }
}
