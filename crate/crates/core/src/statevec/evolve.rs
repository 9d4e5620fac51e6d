// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

use faer::{Mat, Side};
use num_complex::Complex64;

use super::operator::{DenseOperator, HERMITIAN_TOL};
use super::StateVector;
use crate::error::{domain, Error, Result};

/// Spectral propagator `ψ(t) = exp(−iHt)·ψ0` for a time-independent
/// hermitian `H` (ħ = 1).
///
/// Only the block of basis states coupled to the support of `ψ0` is
/// diagonalized: that block is invariant under `H`, so the evolution outside
/// it is identically zero. The eigendecomposition is done once and reused for
/// every time.
#[derive(Clone, Debug)]
pub struct Propagator {
    num_qubits: usize,
    dim: usize,
    block: Vec<usize>,
    energies: Vec<f64>,
    modes: Mat<Complex64>,
    weights: Vec<Complex64>,
}

impl Propagator {
    pub fn new(h: &DenseOperator, psi0: &StateVector) -> Result<Self> {
        if h.dim() != psi0.dim() {
            return domain(format!(
                "{}-dim Hamiltonian with {}-dim initial state",
                h.dim(),
                psi0.dim()
            ));
        }
        if !h.flags().hermitian {
            let defect = h.hermiticity_defect();
            if defect > HERMITIAN_TOL {
                return domain(format!("Hamiltonian is not hermitian (‖H − H†‖_max = {defect:e})"));
            }
        }
        let block = h.coupled_block(psi0.support());
        let k = block.len();
        let sub = Mat::from_fn(k, k, |i, j| h.entry(block[i], block[j]));
        let (energies, modes) = match real_gauge(&sub) {
            Some(gauge) => real_eigen(&sub, &gauge)?,
            None => complex_eigen(&sub)?,
        };
        let local: Vec<Complex64> = block.iter().map(|&x| psi0.amplitude(x)).collect();
        let weights = project(&modes, &local);
        Ok(Self {
            num_qubits: psi0.num_qubits(),
            dim: psi0.dim(),
            block,
            energies,
            modes,
            weights,
        })
    }

    /// Basis indices of the invariant block the dynamics live in, ascending.
    pub fn block(&self) -> &[usize] {
        &self.block
    }

    /// Eigenvalues of `H` restricted to the block, ascending.
    pub fn energies(&self) -> &[f64] {
        &self.energies
    }

    fn phased(&self, t: f64) -> impl Iterator<Item = Complex64> + '_ {
        self.energies
            .iter()
            .zip(&self.weights)
            .map(move |(&e, &w)| Complex64::from_polar(1.0, -e * t) * w)
    }

    pub fn state_at(&self, t: f64) -> Result<StateVector> {
        let phased: Vec<Complex64> = self.phased(t).collect();
        let mut amps = vec![Complex64::ZERO; self.dim];
        for (col, &p) in phased.iter().enumerate() {
            for (row, &u) in self.modes.col(col).iter().enumerate() {
                amps[self.block[row]] += u * p;
            }
        }
        StateVector::new(self.num_qubits, amps)
    }

    /// `|⟨target|ψ(t)⟩|²` for every time in `times`.
    pub fn overlap_probabilities(&self, target: &StateVector, times: &[f64]) -> Result<Vec<f64>> {
        if target.dim() != self.dim {
            return domain(format!("{}-dim target for {}-dim propagator", target.dim(), self.dim));
        }
        let local: Vec<Complex64> = self.block.iter().map(|&x| target.amplitude(x)).collect();
        let target_weights = project(&self.modes, &local);
        Ok(times
            .iter()
            .map(|&t| {
                self.phased(t)
                    .zip(&target_weights)
                    .map(|(p, w)| w.conj() * p)
                    .sum::<Complex64>()
                    .norm_sqr()
            })
            .collect())
    }
}

fn complex_eigen(sub: &Mat<Complex64>) -> Result<(Vec<f64>, Mat<Complex64>)> {
    let evd = sub
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::Eigen(format!("{e:?}")))?;
    let spectrum = evd.S().column_vector();
    let energies = (0..sub.nrows()).map(|i| spectrum[i].re).collect();
    Ok((energies, evd.U().to_owned()))
}

/// Relative size of imaginary parts dropped by [`real_gauge`].
const GAUGE_TOL: f64 = 1e-14;

/// Phases `g` such that `conj(g_i)·A_ij·g_j` is real for every entry of the
/// hermitian `A`, when they exist (always, for instance, if the coupling
/// graph is a forest). Phases are fixed along a spanning forest and then
/// checked on every entry.
fn real_gauge(a: &Mat<Complex64>) -> Option<Vec<Complex64>> {
    let k = a.nrows();
    let scale = (0..k)
        .flat_map(|j| a.col(j).iter().map(|z| z.norm()).collect::<Vec<_>>())
        .fold(0.0, f64::max);
    let mut phase: Vec<Option<Complex64>> = vec![None; k];
    let mut stack = Vec::new();
    for root in 0..k {
        if phase[root].is_some() {
            continue;
        }
        phase[root] = Some(Complex64::ONE);
        stack.push(root);
        while let Some(j) = stack.pop() {
            let gj = phase[j].expect("visited");
            for (i, &z) in a.col(j).iter().enumerate() {
                if phase[i].is_none() && z != Complex64::ZERO {
                    phase[i] = Some(z * gj / z.norm());
                    stack.push(i);
                }
            }
        }
    }
    let phase: Vec<Complex64> = phase.into_iter().map(|g| g.expect("every node visited")).collect();
    for j in 0..k {
        for (i, &z) in a.col(j).iter().enumerate() {
            if (phase[i].conj() * z * phase[j]).im.abs() > GAUGE_TOL * scale {
                return None;
            }
        }
    }
    Some(phase)
}

/// Diagonalizes `G·R·G†` through the real symmetric `R = G†·A·G`.
fn real_eigen(a: &Mat<Complex64>, gauge: &[Complex64]) -> Result<(Vec<f64>, Mat<Complex64>)> {
    let k = a.nrows();
    let real = Mat::from_fn(k, k, |i, j| (gauge[i].conj() * a[(i, j)] * gauge[j]).re);
    let evd = real
        .self_adjoint_eigen(Side::Lower)
        .map_err(|e| Error::Eigen(format!("{e:?}")))?;
    let spectrum = evd.S().column_vector();
    let energies = (0..k).map(|i| spectrum[i]).collect();
    let u = evd.U();
    Ok((energies, Mat::from_fn(k, k, |i, c| gauge[i] * u[(i, c)])))
}

/// `U† v` for eigenvector matrix `U`.
fn project(modes: &Mat<Complex64>, v: &[Complex64]) -> Vec<Complex64> {
    (0..modes.ncols())
        .map(|k| modes.col(k).iter().zip(v).map(|(u, x)| u.conj() * x).sum())
        .collect()
}

/// `exp(−iHt)·ψ0` with ħ = 1, `t` in units of τ, via eigendecomposition of `H`.
pub fn hermitian_evolve(h: &DenseOperator, t: f64, psi0: &StateVector) -> Result<StateVector> {
    Propagator::new(h, psi0)?.state_at(t)
}
