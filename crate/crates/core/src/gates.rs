// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

//! Gates of the Grover circuit, materialized as dense matrices.

use std::f64::consts::FRAC_1_SQRT_2;

use faer::Mat;
use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::statevec::{DenseOperator, OpFlags};

const ZERO: Complex64 = Complex64::ZERO;
const ONE: Complex64 = Complex64::ONE;

/// `2^{-m/2}`, the Hadamard normalization and the Grover overlap `⟨s|v⟩`.
pub fn overlap(m: usize) -> f64 {
    2f64.powf(-(m as f64) / 2.0)
}

fn check_qubits(m: usize) -> Result<()> {
    if m == 0 || m > 24 {
        return domain(format!("qubit count {m} outside 1..=24"));
    }
    Ok(())
}

fn check_index(m: usize, x: usize) -> Result<()> {
    check_qubits(m)?;
    if x >= 1 << m {
        return domain(format!("basis index {x} out of range for {m} qubits"));
    }
    Ok(())
}

/// A gate request; [`GateSpec::build`] validates the parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GateSpec {
    Hadamard { m: usize },
    PhaseInversion { m: usize, x: usize },
    Oracle { m: usize, x0: usize },
    Cnot { m: usize, control: usize, target: usize },
    Pauli(Pauli),
    HTilde,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl GateSpec {
    pub fn build(&self) -> Result<DenseOperator> {
        match *self {
            GateSpec::Hadamard { m } => hadamard(m),
            GateSpec::PhaseInversion { m, x } => phase_inversion(m, x),
            GateSpec::Oracle { m, x0 } => oracle(m, x0),
            GateSpec::Cnot { m, control, target } => cnot(m, control, target),
            GateSpec::Pauli(Pauli::X) => Ok(pauli_x()),
            GateSpec::Pauli(Pauli::Y) => Ok(pauli_y()),
            GateSpec::Pauli(Pauli::Z) => Ok(pauli_z()),
            GateSpec::HTilde => Ok(h_tilde()),
        }
    }
}

/// `H^(2^m)` with entries `2^{-m/2}·(−1)^{popcount(i AND j)}`.
pub fn hadamard(m: usize) -> Result<DenseOperator> {
    check_qubits(m)?;
    let n = 1usize << m;
    let norm = overlap(m);
    let mat = Mat::from_fn(n, n, |i, j| {
        let sign = if (i & j).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
        Complex64::new(sign * norm, 0.0)
    });
    Ok(DenseOperator::trusted(mat, OpFlags::INVOLUTION))
}

/// `I_x`: negates `|x⟩` and leaves every other basis state alone.
pub fn phase_inversion(m: usize, x: usize) -> Result<DenseOperator> {
    check_index(m, x)?;
    let mut diag = vec![ONE; 1 << m];
    diag[x] = -ONE;
    Ok(DenseOperator::trusted_diagonal(diag, OpFlags::INVOLUTION))
}

/// `U_f: |x, a⟩ → |x, f(x) ⊕ a⟩` with `f(x) = δ_{x,x0}` on `m + 1` qubits;
/// the ancilla is the least significant qubit.
pub fn oracle(m: usize, x0: usize) -> Result<DenseOperator> {
    check_index(m, x0)?;
    let n = 1usize << (m + 1);
    let image = |col: usize| if col >> 1 == x0 { col ^ 1 } else { col };
    let mat = Mat::from_fn(n, n, |row, col| if image(col) == row { ONE } else { ZERO });
    Ok(DenseOperator::trusted(mat, OpFlags::INVOLUTION))
}

/// `I_{x0}` realized through the oracle: the ancilla is prepared in
/// `|a0⟩ = (|0⟩ − |1⟩)/√2`, the oracle is applied, and the ancilla is
/// projected back on `⟨a0|` and discarded.
pub fn phase_inversion_via_oracle(m: usize, x0: usize) -> Result<DenseOperator> {
    let uf = oracle(m, x0)?;
    let n = 1usize << m;
    let a0 = [Complex64::new(FRAC_1_SQRT_2, 0.0), Complex64::new(-FRAC_1_SQRT_2, 0.0)];
    let mut reduced = Mat::<Complex64>::zeros(n, n);
    for x in 0..n {
        let mut input = vec![ZERO; 2 * n];
        input[2 * x] = a0[0];
        input[2 * x + 1] = a0[1];
        let out = uf.mul_vec(&input);
        for y in 0..n {
            reduced[(y, x)] = a0[0].conj() * out[2 * y] + a0[1].conj() * out[2 * y + 1];
        }
    }
    DenseOperator::from_matrix(reduced, OpFlags::INVOLUTION.with_diagonal())
}

/// CNOT on `m` qubits: flips `target` where `control` is 1 (positions are
/// 1-based, position 1 = most significant bit).
pub fn cnot(m: usize, control: usize, target: usize) -> Result<DenseOperator> {
    check_qubits(m)?;
    if control == target {
        return domain(format!("control and target are both qubit {control}"));
    }
    for q in [control, target] {
        if q == 0 || q > m {
            return domain(format!("qubit position {q} out of range 1..={m}"));
        }
    }
    let n = 1usize << m;
    let cbit = 1usize << (m - control);
    let tbit = 1usize << (m - target);
    let image = |col: usize| if col & cbit != 0 { col ^ tbit } else { col };
    let mat = Mat::from_fn(n, n, |row, col| if image(col) == row { ONE } else { ZERO });
    Ok(DenseOperator::trusted(mat, OpFlags::INVOLUTION))
}

pub fn pauli_x() -> DenseOperator {
    let mat = Mat::from_fn(2, 2, |i, j| if i != j { ONE } else { ZERO });
    DenseOperator::trusted(mat, OpFlags::INVOLUTION)
}

pub fn pauli_y() -> DenseOperator {
    let i = Complex64::I;
    let mat = Mat::from_fn(2, 2, |r, c| match (r, c) {
        (0, 1) => -i,
        (1, 0) => i,
        _ => ZERO,
    });
    DenseOperator::trusted(mat, OpFlags::INVOLUTION)
}

pub fn pauli_z() -> DenseOperator {
    DenseOperator::trusted_diagonal(vec![ONE, -ONE], OpFlags::INVOLUTION)
}

/// `H̃ = −iσ_y·H = (1/√2)[[−1, 1], [1, 1]]`.
pub fn h_tilde() -> DenseOperator {
    let h = hadamard(1).expect("one qubit");
    let minus_i_sigma_y = pauli_y().scale(-Complex64::I);
    let mut product = minus_i_sigma_y.compose(&h).expect("2x2");
    // −iσ_y·H happens to be real symmetric, hence hermitian.
    product = DenseOperator::from_matrix(product.to_matrix(), OpFlags::INVOLUTION).expect("hermitian unitary");
    product
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statevec::{apply, basis_state, kron, StateVector};
    use proptest::prelude::*;

    fn real(op: &DenseOperator) -> Vec<Vec<f64>> {
        (0..op.dim())
            .map(|i| (0..op.dim()).map(|j| op.entry(i, j).re).collect())
            .collect()
    }

    fn assert_close(op: &DenseOperator, expected: &[&[f64]], tol: f64) {
        for (i, row) in expected.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                let z = op.entry(i, j);
                assert!((z.re - e).abs() <= tol && z.im.abs() <= tol, "({i},{j}): {z} vs {e}");
            }
        }
    }

    #[test]
    fn hadamard_one_and_two_qubits() {
        let r = FRAC_1_SQRT_2;
        assert_close(&hadamard(1).unwrap(), &[&[r, r], &[r, -r]], 1e-16);
        let h2 = hadamard(2).unwrap();
        assert_close(
            &h2,
            &[
                &[0.5, 0.5, 0.5, 0.5],
                &[0.5, -0.5, 0.5, -0.5],
                &[0.5, 0.5, -0.5, -0.5],
                &[0.5, -0.5, -0.5, 0.5],
            ],
            0.0,
        );
        assert_eq!(h2.entry(1, 3).re, -0.5);
        assert!(hadamard(0).is_err());
    }

    #[test]
    fn hadamard_is_self_inverse() {
        for m in 1..=10 {
            let h = hadamard(m).unwrap();
            let hh = h.compose(&h).unwrap();
            let id = DenseOperator::identity(1 << m).unwrap();
            assert!(hh.max_abs_diff(&id) <= 1e-10, "m={m}");
            assert!(h.hermiticity_defect() == 0.0);
        }
    }

    #[test]
    fn phase_inversion_examples() {
        let is = phase_inversion(2, 0).unwrap();
        assert_eq!(
            real(&is),
            vec![
                vec![-1.0, 0.0, 0.0, 0.0],
                vec![0.0, 1.0, 0.0, 0.0],
                vec![0.0, 0.0, 1.0, 0.0],
                vec![0.0, 0.0, 0.0, 1.0],
            ]
        );
        let sq = is.compose(&is).unwrap();
        assert_eq!(sq.max_abs_diff(&DenseOperator::identity(4).unwrap()), 0.0);
        assert!(phase_inversion(2, 4).is_err());

        // amplitude pattern after I_{111}·H|000⟩
        let b = apply(&hadamard(3).unwrap(), &basis_state(3, 0).unwrap()).unwrap();
        let c = apply(&phase_inversion(3, 7).unwrap(), &b).unwrap();
        let a = 1.0 / 8f64.sqrt();
        for x in 0..8 {
            let expect = if x == 7 { -a } else { a };
            assert!((c.amplitude(x).re - expect).abs() < 1e-15);
        }
    }

    #[test]
    fn oracle_reduces_to_cnot_truth_table() {
        let u = oracle(1, 1).unwrap();
        // (x, y) -> (x, x ⊕ y)
        for (input, output) in [(0b00, 0b00), (0b01, 0b01), (0b10, 0b11), (0b11, 0b10)] {
            assert_eq!(u.entry(output, input), ONE);
        }
        assert!(u.max_abs_diff(&cnot(2, 1, 2).unwrap()) == 0.0);
    }

    #[test]
    fn oracle_with_minus_ancilla_flips_sign_only_on_marked_item() {
        let (m, x0) = (2, 2);
        let u = oracle(m, x0).unwrap();
        let r = FRAC_1_SQRT_2;
        for x in 0..4 {
            let mut amps = vec![0.0; 8];
            amps[2 * x] = r;
            amps[2 * x + 1] = -r;
            let psi = StateVector::from_real(&amps).unwrap();
            let out = apply(&u, &psi).unwrap();
            let sign = if x == x0 { -1.0 } else { 1.0 };
            for (k, &a) in amps.iter().enumerate() {
                assert!((out.amplitude(k).re - sign * a).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn oracle_is_permutation_involution() {
        for m in 1..=4 {
            for x0 in 0..(1 << m) {
                let u = oracle(m, x0).unwrap();
                let n = u.dim();
                for i in 0..n {
                    let row_ones = (0..n).filter(|&j| u.entry(i, j) == ONE).count();
                    let col_ones = (0..n).filter(|&j| u.entry(j, i) == ONE).count();
                    let nonzero = (0..n).filter(|&j| u.entry(i, j) != ZERO).count();
                    assert_eq!((row_ones, col_ones, nonzero), (1, 1, 1));
                }
                let sq = u.compose(&u).unwrap();
                assert_eq!(sq.max_abs_diff(&DenseOperator::identity(n).unwrap()), 0.0);
            }
        }
    }

    #[test]
    fn phase_inversion_via_oracle_examples() {
        let p = phase_inversion_via_oracle(2, 3).unwrap();
        assert_close(
            &p,
            &[
                &[1.0, 0.0, 0.0, 0.0],
                &[0.0, 1.0, 0.0, 0.0],
                &[0.0, 0.0, 1.0, 0.0],
                &[0.0, 0.0, 0.0, -1.0],
            ],
            1e-15,
        );
        let p = phase_inversion_via_oracle(1, 0).unwrap();
        assert_close(&p, &[&[-1.0, 0.0], &[0.0, 1.0]], 1e-15);
    }

    #[test]
    fn phase_inversion_via_oracle_matches_direct_construction() {
        for m in 1..=5 {
            for x0 in 0..(1 << m) {
                let a = phase_inversion_via_oracle(m, x0).unwrap();
                let b = phase_inversion(m, x0).unwrap();
                assert!(a.max_abs_diff(&b) <= 1e-12, "m={m} x0={x0}");
            }
        }
    }

    #[test]
    fn cnot21_matrix() {
        let c = cnot(2, 2, 1).unwrap();
        assert_eq!(
            real(&c),
            vec![
                vec![1.0, 0.0, 0.0, 0.0],
                vec![0.0, 0.0, 0.0, 1.0],
                vec![0.0, 0.0, 1.0, 0.0],
                vec![0.0, 1.0, 0.0, 0.0],
            ]
        );
        // control bit off: |10⟩ (control = qubit 2 is 0) unchanged
        let psi = basis_state(2, 0b10).unwrap();
        assert_eq!(apply(&c, &psi).unwrap(), psi);
        let sq = c.compose(&c).unwrap();
        assert_eq!(sq.max_abs_diff(&DenseOperator::identity(4).unwrap()), 0.0);
        assert!(cnot(2, 1, 1).is_err());
        assert!(cnot(2, 3, 1).is_err());
    }

    #[test]
    fn h_tilde_matrix() {
        let r = FRAC_1_SQRT_2;
        let ht = h_tilde();
        assert_close(&ht, &[&[-r, r], &[r, r]], 1e-16);
        assert!(ht.unitarity_defect() < 1e-15);
        let sq = ht.compose(&ht).unwrap();
        assert!(sq.unitarity_defect() < 1e-15);
    }

    #[test]
    fn every_gate_is_unitary() {
        let specs = [
            GateSpec::Hadamard { m: 5 },
            GateSpec::PhaseInversion { m: 4, x: 9 },
            GateSpec::Oracle { m: 3, x0: 5 },
            GateSpec::Cnot {
                m: 3,
                control: 3,
                target: 1,
            },
            GateSpec::Pauli(Pauli::X),
            GateSpec::Pauli(Pauli::Y),
            GateSpec::Pauli(Pauli::Z),
            GateSpec::HTilde,
        ];
        for spec in specs {
            let g = spec.build().unwrap();
            assert!(g.flags().unitary);
            assert!(g.unitarity_defect() <= 1e-10, "{spec:?}");
        }
        assert!(GateSpec::Oracle { m: 3, x0: 8 }.build().is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]
        #[test]
        fn hadamard_is_tensor_power(m in 1usize..=8) {
            let h1 = hadamard(1).unwrap();
            let mut power = h1.clone();
            for _ in 1..m {
                power = kron(&power, &h1);
            }
            prop_assert!(power.max_abs_diff(&hadamard(m).unwrap()) <= 1e-12);
        }
    }
}
