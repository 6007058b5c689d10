//! Dense complex matrices and state vectors.
//!
//! Tensor products put the first factor on the most significant digit,
//! matching the big-endian wire order of [`RegisterShape`].

use std::f64::consts::FRAC_PI_2;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::radix::RegisterShape;

pub use num_complex::Complex64 as C64;

/// Default tolerance for unitarity and normalization checks.
pub const TOLERANCE: f64 = 1e-12;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Self { rows, cols, data })
    }

    /// Real row-major entries. Panics if `values.len() != rows * cols`.
    pub fn from_real(rows: usize, cols: usize, values: &[f64]) -> Self {
        assert_eq!(values.len(), rows * cols, "entry count");
        Self { rows, cols, data: values.iter().map(|&v| C64::new(v, 0.0)).collect() }
    }

    pub fn diagonal(values: &[C64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[C64] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[C64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.data[k * rhs.cols + j];
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &ComplexMatrix, f: impl Fn(C64, C64) -> C64) -> Result<ComplexMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch(format!("{}x{} vs {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(&a, &b)| f(a, b)).collect();
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: C64) -> ComplexMatrix {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| a * s).collect() }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> ComplexMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[C64]) -> Result<Vec<C64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(&a, &b)| a * b).sum()).collect())
    }

    /// Largest entrywise modulus of `self - rhs`; `None` when shapes differ.
    pub fn max_abs_diff(&self, rhs: &ComplexMatrix) -> Option<f64> {
        let d = self.sub(rhs).ok()?;
        Some(d.data.iter().map(|z| z.norm()).fold(0.0, f64::max))
    }

    pub fn approx_eq(&self, rhs: &ComplexMatrix, tol: f64) -> bool {
        self.max_abs_diff(rhs).is_some_and(|d| d <= tol)
    }

    /// Every entry is exactly `0` or `1`.
    pub fn is_zero_one(&self) -> bool {
        self.data.iter().all(|&z| z == ZERO || z == ONE)
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> Result<C64> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = ONE;
        for col in 0..n {
            let pivot = (col..n).max_by(|&x, &y| a[x * n + col].norm().total_cmp(&a[y * n + col].norm())).unwrap();
            if a[pivot * n + col] == ZERO {
                return Ok(ZERO);
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det *= p;
            for r in col + 1..n {
                let factor = a[r * n + col] / p;
                for j in col..n {
                    let v = a[col * n + j];
                    a[r * n + j] -= factor * v;
                }
            }
        }
        Ok(det)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = C64;

    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

/// Kronecker product `a ⊗ b`; `a` indexes the high digit.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = ComplexMatrix::zeros(rows, cols);
    for ar in 0..a.rows {
        for ac in 0..a.cols {
            let x = a[(ar, ac)];
            if x == ZERO {
                continue;
            }
            for br in 0..b.rows {
                for bc in 0..b.cols {
                    out[(ar * b.rows + br, ac * b.cols + bc)] = x * b[(br, bc)];
                }
            }
        }
    }
    out
}

/// `|k⟩⟨k|` on a `radix`-level system.
pub fn projector(radix: usize, k: usize) -> Result<ComplexMatrix> {
    if k >= radix {
        return Err(Error::InvalidArgument(format!("projector level {k} out of range for radix {radix}")));
    }
    let mut m = ComplexMatrix::zeros(radix, radix);
    m[(k, k)] = ONE;
    Ok(m)
}

/// Controlled operator `Σ_k |k⟩⟨k| ⊗ U_k`, with the control as the first
/// tensor factor and one branch per control value.
pub fn conditional(control_radix: usize, branches: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    if branches.len() != control_radix {
        return Err(Error::SizeMismatch { left: control_radix, right: branches.len() });
    }
    let n = branches[0].rows;
    if let Some(bad) = branches.iter().find(|b| !b.is_square() || b.rows != n) {
        return Err(Error::DimensionMismatch(format!(
            "branch of size {}x{} among {n}x{n} branches",
            bad.rows, bad.cols
        )));
    }
    let mut out = ComplexMatrix::zeros(control_radix * n, control_radix * n);
    for (k, branch) in branches.iter().enumerate() {
        out = out.add(&tensor(&projector(control_radix, k)?, branch))?;
    }
    Ok(out)
}

/// `max |(U†U − I)_ij| ≤ tol`. Non-square matrices are never unitary.
pub fn is_unitary(u: &ComplexMatrix, tol: f64) -> bool {
    unitarity_deviation(u).is_some_and(|d| d <= tol)
}

pub(crate) fn unitarity_deviation(u: &ComplexMatrix) -> Option<f64> {
    if !u.is_square() {
        return None;
    }
    let gram = u.adjoint().mul(u).ok()?;
    gram.max_abs_diff(&ComplexMatrix::identity(u.rows))
}

/// A normalized state on a mixed-radix register.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    shape: RegisterShape,
    amplitudes: Vec<C64>,
}

impl StateVector {
    /// Requires one amplitude per basis state and `Σ|a|² = 1` within [`TOLERANCE`].
    pub fn new(shape: RegisterShape, amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.len() != shape.dimension() {
            return Err(Error::SizeMismatch { left: shape.dimension(), right: amplitudes.len() });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > TOLERANCE {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(Self { shape, amplitudes })
    }

    /// Rescales `amplitudes` to unit norm.
    pub fn normalized(shape: RegisterShape, amplitudes: Vec<C64>) -> Result<Self> {
        if amplitudes.len() != shape.dimension() {
            return Err(Error::SizeMismatch { left: shape.dimension(), right: amplitudes.len() });
        }
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized { norm_sqr: norm * norm });
        }
        let amplitudes = amplitudes.into_iter().map(|a| a / norm).collect();
        Ok(Self { shape, amplitudes })
    }

    /// Computational basis state `|digits⟩`.
    pub fn basis(shape: RegisterShape, digits: &[usize]) -> Result<Self> {
        let index = shape.digits_to_index(digits)?;
        let mut amplitudes = vec![ZERO; shape.dimension()];
        amplitudes[index] = ONE;
        Ok(Self { shape, amplitudes })
    }

    pub(crate) fn from_parts_unchecked(shape: RegisterShape, amplitudes: Vec<C64>) -> Self {
        debug_assert_eq!(shape.dimension(), amplitudes.len());
        Self { shape, amplitudes }
    }

    pub fn shape(&self) -> &RegisterShape {
        &self.shape
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Amplitude of the basis state `|digits⟩`.
    pub fn amplitude(&self, digits: &[usize]) -> Result<C64> {
        Ok(self.amplitudes[self.shape.digits_to_index(digits)?])
    }
}

/// `U|ψ⟩`, refusing operators that are not unitary within [`TOLERANCE`].
pub fn apply(u: &ComplexMatrix, state: &StateVector) -> Result<StateVector> {
    let dim = state.shape.dimension();
    if !u.is_square() || u.rows != dim {
        return Err(Error::DimensionMismatch(format!("{}x{} operator on a {dim}-dimensional state", u.rows, u.cols)));
    }
    let deviation = unitarity_deviation(u).unwrap_or(f64::INFINITY);
    if deviation > TOLERANCE {
        return Err(Error::NotUnitary { deviation });
    }
    let amplitudes = u.mul_vec(&state.amplitudes)?;
    Ok(StateVector { shape: state.shape.clone(), amplitudes })
}

/// Continuous NOT: `U(t) = e^{iπt/2}(cos(πt/2)·I − i·sin(πt/2)·X)` for
/// `t ∈ [0, 1]`, running from the identity at `t = 0` to NOT at `t = 1`.
/// Intermediate values leave `|0⟩` in a genuine superposition.
pub fn not_path(t: f64) -> Result<ComplexMatrix> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::InvalidArgument(format!("path parameter {t} outside [0, 1]")));
    }
    let theta = FRAC_PI_2 * t;
    let phase = C64::from_polar(1.0, theta);
    let diag = phase * theta.cos();
    let off = phase * C64::new(0.0, -theta.sin());
    Ok(ComplexMatrix::from_entries(2, 2, vec![diag, off, off, diag]).expect("2x2"))
}
