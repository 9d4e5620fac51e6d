// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

//! Dense state-vector simulation of Grover's search algorithm, its effective
//! two-level Hamiltonian, coherent detuning errors, and the balanced-weight
//! error-avoiding code that protects the search against collective detunings.
//!
//! Units: `ħ = 1` and the elementary step time `τ = 1`, so Hamiltonians are
//! expressed in units of `1/τ` and times count Grover iterations.
//!
//! Basis convention: qubit 1 is the most significant bit of a basis index,
//! so for four qubits `|0011⟩` is index 3.

pub mod dfs;
mod error;
pub mod experiments;
pub mod gates;
pub mod grover;
pub mod hamiltonian;
pub mod statevec;

pub use error::{Error, Result};
pub use statevec::{DenseOperator, OpFlags, Propagator, StateVector};
