// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

use faer::Mat;
use num_complex::Complex64;

use crate::error::{domain, Result};

/// Tolerance on `‖U†U − 1‖_max` for operators flagged unitary.
pub const UNITARY_TOL: f64 = 1e-10;
/// Tolerance on `‖A − A†‖_max` for operators flagged hermitian.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Structure flags carried by a [`DenseOperator`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpFlags {
    pub unitary: bool,
    pub hermitian: bool,
    pub diagonal: bool,
}

impl OpFlags {
    pub const NONE: OpFlags = OpFlags {
        unitary: false,
        hermitian: false,
        diagonal: false,
    };
    pub const UNITARY: OpFlags = OpFlags {
        unitary: true,
        hermitian: false,
        diagonal: false,
    };
    pub const HERMITIAN: OpFlags = OpFlags {
        unitary: false,
        hermitian: true,
        diagonal: false,
    };
    /// Unitary and hermitian: involutions such as Hadamard transforms and
    /// phase inversions.
    pub const INVOLUTION: OpFlags = OpFlags {
        unitary: true,
        hermitian: true,
        diagonal: false,
    };

    pub const fn with_diagonal(mut self) -> Self {
        self.diagonal = true;
        self
    }
}

#[derive(Clone, Debug)]
enum Repr {
    Dense(Mat<Complex64>),
    // Diagonal operators keep only their diagonal; the detuning Hamiltonians
    // at twelve qubits would otherwise need 4096² complex entries.
    Diagonal(Vec<Complex64>),
}

/// Square complex matrix acting on the state space of some number of qubits.
///
/// The dimension is always a power of two. Flags are checked when an operator
/// is built through the public constructors.
#[derive(Clone, Debug)]
pub struct DenseOperator {
    dim: usize,
    repr: Repr,
    flags: OpFlags,
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || !dim.is_power_of_two() {
        return domain(format!("operator dimension {dim} is not a positive power of two"));
    }
    Ok(())
}

impl DenseOperator {
    /// Wraps a square matrix, verifying every structural claim in `flags`.
    pub fn from_matrix(mat: Mat<Complex64>, flags: OpFlags) -> Result<Self> {
        if mat.nrows() != mat.ncols() {
            return domain(format!("matrix is {}x{}, not square", mat.nrows(), mat.ncols()));
        }
        check_dim(mat.nrows())?;
        let op = if flags.diagonal {
            let n = mat.nrows();
            for j in 0..n {
                for i in 0..n {
                    if i != j && mat[(i, j)] != Complex64::ZERO {
                        return domain(format!("entry ({i}, {j}) of a diagonal-flagged matrix is nonzero"));
                    }
                }
            }
            let diag = (0..n).map(|i| mat[(i, i)]).collect();
            Self {
                dim: n,
                repr: Repr::Diagonal(diag),
                flags,
            }
        } else {
            Self {
                dim: mat.nrows(),
                repr: Repr::Dense(mat),
                flags,
            }
        };
        op.verify_flags()?;
        Ok(op)
    }

    /// Builds a dense operator entry by entry and verifies `flags`.
    pub fn from_fn(dim: usize, flags: OpFlags, f: impl Fn(usize, usize) -> Complex64) -> Result<Self> {
        check_dim(dim)?;
        Self::from_matrix(Mat::from_fn(dim, dim, f), flags)
    }

    /// Diagonal operator with the given entries; the diagonal flag is implied.
    pub fn diagonal(entries: Vec<Complex64>, flags: OpFlags) -> Result<Self> {
        check_dim(entries.len())?;
        let op = Self {
            dim: entries.len(),
            repr: Repr::Diagonal(entries),
            flags: flags.with_diagonal(),
        };
        op.verify_flags()?;
        Ok(op)
    }

    /// Real diagonal, hence hermitian.
    pub fn real_diagonal(entries: &[f64]) -> Result<Self> {
        Self::diagonal(
            entries.iter().map(|&d| Complex64::new(d, 0.0)).collect(),
            OpFlags::HERMITIAN,
        )
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::diagonal(vec![Complex64::ONE; dim], OpFlags::INVOLUTION)
    }

    /// Constructor for builders whose structure holds by construction; the
    /// claimed flags are only checked in debug builds.
    pub(crate) fn trusted(mat: Mat<Complex64>, flags: OpFlags) -> Self {
        debug_assert_eq!(mat.nrows(), mat.ncols());
        debug_assert!(mat.nrows().is_power_of_two());
        debug_assert!(!flags.diagonal);
        Self {
            dim: mat.nrows(),
            repr: Repr::Dense(mat),
            flags,
        }
    }

    pub(crate) fn trusted_diagonal(entries: Vec<Complex64>, flags: OpFlags) -> Self {
        debug_assert!(entries.len().is_power_of_two());
        Self {
            dim: entries.len(),
            repr: Repr::Diagonal(entries),
            flags: flags.with_diagonal(),
        }
    }

    fn verify_flags(&self) -> Result<()> {
        if self.flags.hermitian {
            let dev = self.hermiticity_defect();
            if dev > HERMITIAN_TOL {
                return domain(format!("operator flagged hermitian has ‖A − A†‖_max = {dev:e}"));
            }
        }
        if self.flags.unitary {
            let dev = self.unitarity_defect();
            if dev > UNITARY_TOL {
                return domain(format!("operator flagged unitary has ‖U†U − 1‖_max = {dev:e}"));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    pub fn flags(&self) -> OpFlags {
        self.flags
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        match &self.repr {
            Repr::Dense(m) => m[(row, col)],
            Repr::Diagonal(d) if row == col => d[row],
            Repr::Diagonal(_) => Complex64::ZERO,
        }
    }

    /// The diagonal entries when the operator is stored as a diagonal.
    pub fn diagonal_entries(&self) -> Option<&[Complex64]> {
        match &self.repr {
            Repr::Diagonal(d) => Some(d),
            Repr::Dense(_) => None,
        }
    }

    pub fn to_matrix(&self) -> Mat<Complex64> {
        match &self.repr {
            Repr::Dense(m) => m.clone(),
            Repr::Diagonal(d) => Mat::from_fn(self.dim, self.dim, |i, j| if i == j { d[i] } else { Complex64::ZERO }),
        }
    }

    /// `‖U†U − 1‖_max`.
    pub fn unitarity_defect(&self) -> f64 {
        match &self.repr {
            Repr::Diagonal(d) => d.iter().map(|z| (z.norm_sqr() - 1.0).abs()).fold(0.0, f64::max),
            Repr::Dense(m) => {
                let gram = m.adjoint() * m;
                let mut worst = 0.0f64;
                for j in 0..self.dim {
                    for i in 0..self.dim {
                        let target = if i == j { Complex64::ONE } else { Complex64::ZERO };
                        worst = worst.max((gram[(i, j)] - target).norm());
                    }
                }
                worst
            }
        }
    }

    /// `‖A − A†‖_max`.
    pub fn hermiticity_defect(&self) -> f64 {
        match &self.repr {
            Repr::Diagonal(d) => d.iter().map(|z| 2.0 * z.im.abs()).fold(0.0, f64::max),
            Repr::Dense(m) => {
                let mut worst = 0.0f64;
                for j in 0..self.dim {
                    for i in 0..=j {
                        worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
                    }
                }
                worst
            }
        }
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &DenseOperator) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        match (&self.repr, &other.repr) {
            (Repr::Diagonal(a), Repr::Diagonal(b)) => a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max),
            _ => {
                let mut worst = 0.0f64;
                for j in 0..self.dim {
                    for i in 0..self.dim {
                        worst = worst.max((self.entry(i, j) - other.entry(i, j)).norm());
                    }
                }
                worst
            }
        }
    }

    /// Matrix-vector product on raw amplitudes.
    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        match &self.repr {
            Repr::Diagonal(d) => d.iter().zip(v).map(|(a, b)| a * b).collect(),
            Repr::Dense(m) => {
                let mut out = vec![Complex64::ZERO; self.dim];
                for (j, &vj) in v.iter().enumerate() {
                    if vj == Complex64::ZERO {
                        continue;
                    }
                    let col = m.col(j);
                    for (o, &mij) in out.iter_mut().zip(col.iter()) {
                        *o += mij * vj;
                    }
                }
                out
            }
        }
    }

    /// Operator product `self · rhs`.
    ///
    /// The product of unitaries is flagged unitary and the product of
    /// diagonals stays diagonal; hermiticity is not propagated.
    pub fn compose(&self, rhs: &DenseOperator) -> Result<DenseOperator> {
        if self.dim != rhs.dim {
            return domain(format!("cannot compose {}-dim with {}-dim operator", self.dim, rhs.dim));
        }
        let flags = OpFlags {
            unitary: self.flags.unitary && rhs.flags.unitary,
            hermitian: false,
            diagonal: false,
        };
        let out = match (&self.repr, &rhs.repr) {
            (Repr::Diagonal(a), Repr::Diagonal(b)) => {
                let d = a.iter().zip(b).map(|(x, y)| x * y).collect();
                return Ok(Self::trusted_diagonal(d, flags));
            }
            (Repr::Diagonal(a), Repr::Dense(m)) => Mat::from_fn(self.dim, self.dim, |i, j| a[i] * m[(i, j)]),
            (Repr::Dense(m), Repr::Diagonal(b)) => Mat::from_fn(self.dim, self.dim, |i, j| m[(i, j)] * b[j]),
            (Repr::Dense(a), Repr::Dense(b)) => a * b,
        };
        Ok(Self::trusted(out, flags))
    }

    /// Sum of two operators; hermitian if both are.
    pub fn add(&self, rhs: &DenseOperator) -> Result<DenseOperator> {
        if self.dim != rhs.dim {
            return domain(format!("cannot add {}-dim and {}-dim operators", self.dim, rhs.dim));
        }
        let flags = OpFlags {
            unitary: false,
            hermitian: self.flags.hermitian && rhs.flags.hermitian,
            diagonal: false,
        };
        match (&self.repr, &rhs.repr) {
            (Repr::Diagonal(a), Repr::Diagonal(b)) => {
                let d = a.iter().zip(b).map(|(x, y)| x + y).collect();
                Ok(Self::trusted_diagonal(d, flags))
            }
            _ => {
                let mut m = self.to_matrix();
                match &rhs.repr {
                    Repr::Dense(b) => m += b,
                    Repr::Diagonal(d) => {
                        for (i, &z) in d.iter().enumerate() {
                            m[(i, i)] += z;
                        }
                    }
                }
                Ok(Self::trusted(m, flags))
            }
        }
    }

    /// Multiplies every entry by `c`. Real scaling keeps hermiticity; a unit
    /// modulus keeps unitarity.
    pub fn scale(&self, c: Complex64) -> DenseOperator {
        let flags = OpFlags {
            unitary: self.flags.unitary && (c.norm() - 1.0).abs() < 1e-15,
            hermitian: self.flags.hermitian && c.im == 0.0,
            diagonal: self.flags.diagonal,
        };
        match &self.repr {
            Repr::Diagonal(d) => Self::trusted_diagonal(d.iter().map(|z| z * c).collect(), flags),
            Repr::Dense(m) => Self::trusted(Mat::from_fn(self.dim, self.dim, |i, j| m[(i, j)] * c), flags),
        }
    }

    pub fn adjoint(&self) -> DenseOperator {
        match &self.repr {
            Repr::Diagonal(d) => Self::trusted_diagonal(d.iter().map(|z| z.conj()).collect(), self.flags),
            Repr::Dense(m) => Self::trusted(m.adjoint().to_owned(), self.flags),
        }
    }

    /// Indices reachable from `seeds` through nonzero matrix entries.
    ///
    /// For a hermitian operator the span of the returned basis states is
    /// invariant, so dynamics started there never leave it.
    pub(crate) fn coupled_block(&self, seeds: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut seen = vec![false; self.dim];
        let mut stack: Vec<usize> = Vec::new();
        for s in seeds {
            if !seen[s] {
                seen[s] = true;
                stack.push(s);
            }
        }
        if let Repr::Dense(m) = &self.repr {
            while let Some(j) = stack.pop() {
                for (i, &z) in m.col(j).iter().enumerate() {
                    if !seen[i] && z != Complex64::ZERO {
                        seen[i] = true;
                        stack.push(i);
                    }
                }
            }
        }
        (0..self.dim).filter(|&i| seen[i]).collect()
    }
}

/// Kronecker product `a ⊗ b`; `a` acts on the more significant qubits.
pub fn kron(a: &DenseOperator, b: &DenseOperator) -> DenseOperator {
    let flags = OpFlags {
        unitary: a.flags.unitary && b.flags.unitary,
        hermitian: a.flags.hermitian && b.flags.hermitian,
        diagonal: a.flags.diagonal && b.flags.diagonal,
    };
    let n = a.dim * b.dim;
    if let (Repr::Diagonal(da), Repr::Diagonal(db)) = (&a.repr, &b.repr) {
        let d = da.iter().flat_map(|x| db.iter().map(move |y| x * y)).collect();
        return DenseOperator::trusted_diagonal(d, flags);
    }
    let m = Mat::from_fn(n, n, |i, j| {
        a.entry(i / b.dim, j / b.dim) * b.entry(i % b.dim, j % b.dim)
    });
    DenseOperator::trusted(
        m,
        OpFlags {
            diagonal: false,
            ..flags
        },
    )
}

/// `1 ⊗ … ⊗ op2 ⊗ … ⊗ 1` on `m` qubits with `op2` at `position`
/// (1-based, position 1 is the most significant bit).
pub fn embed_single_qubit(op2: &DenseOperator, m: usize, position: usize) -> Result<DenseOperator> {
    if op2.dim != 2 {
        return domain(format!(
            "single-qubit operator must be 2x2, got {}x{}",
            op2.dim, op2.dim
        ));
    }
    if m == 0 || position == 0 || position > m {
        return domain(format!("qubit position {position} out of range 1..={m}"));
    }
    let shift = m - position;
    let dim = 1usize << m;
    let bit = |x: usize| (x >> shift) & 1;
    if let Repr::Diagonal(d) = &op2.repr {
        let diag = (0..dim).map(|x| d[bit(x)]).collect();
        return Ok(DenseOperator::trusted_diagonal(diag, op2.flags));
    }
    let mask = !(1usize << shift);
    let mat = Mat::from_fn(dim, dim, |i, j| {
        if i & mask == j & mask {
            op2.entry(bit(i), bit(j))
        } else {
            Complex64::ZERO
        }
    });
    Ok(DenseOperator::trusted(mat, op2.flags))
}
