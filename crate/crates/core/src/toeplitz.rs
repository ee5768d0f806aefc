//! Dense Hermitian matrices and the finite restrictions of banded Laurent
//! operators: plain Toeplitz truncation and the periodic (circulant) wrap.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Sub};

use crate::symbol::BandedCoeffs;
use crate::{Error, Result, C64};

/// Relative tolerance for accepting dense input as Hermitian.
const HERMITIAN_TOL: f64 = 1e-14;

/// Dense `L × L` Hermitian matrix, row-major.
///
/// Every constructor symmetrizes `H ← (H + H*)/2`, so `h[i][j]` is exactly
/// `conj(h[j][i])` and the diagonal is exactly real.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl HermitianMatrix {
    pub fn zeros(dim: usize) -> Self {
        HermitianMatrix {
            dim,
            data: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Real diagonal matrix.
    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, v) in values.iter().enumerate() {
            m.data[i * values.len() + i] = C64::new(*v, 0.0);
        }
        m
    }

    /// Builds from an entry function and symmetrizes.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self::symmetrized(dim, data)
    }

    /// Accepts row-major data if it is Hermitian to `1e−14·max(1, max|h_ij|)`.
    pub fn from_row_major(dim: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: data.len(),
            });
        }
        let scale = data.iter().map(|v| v.norm()).fold(1.0, f64::max);
        for i in 0..dim {
            for j in i..dim {
                if (data[i * dim + j] - data[j * dim + i].conj()).norm() > HERMITIAN_TOL * scale {
                    return Err(Error::NotHermitian);
                }
            }
        }
        Ok(Self::symmetrized(dim, data))
    }

    /// Row-major rows, e.g. from a literal.
    pub fn from_rows(rows: &[Vec<C64>]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Self::from_row_major(dim, data)
    }

    pub(crate) fn symmetrized(dim: usize, mut data: Vec<C64>) -> Self {
        for i in 0..dim {
            data[i * dim + i] = C64::new(data[i * dim + i].re, 0.0);
            for j in (i + 1)..dim {
                let avg = (data[i * dim + j] + data[j * dim + i].conj()) * 0.5;
                data[i * dim + j] = avg;
                data[j * dim + i] = avg.conj();
            }
        }
        HermitianMatrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn as_row_major(&self) -> &[C64] {
        &self.data
    }

    pub(crate) fn into_row_major(self) -> Vec<C64> {
        self.data
    }

    /// Maximum absolute row sum `‖H‖_∞`.
    pub fn norm_inf(&self) -> f64 {
        (0..self.dim)
            .map(|i| self.row(i).iter().map(|v| v.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        HermitianMatrix {
            dim: self.dim,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    /// `H + shift·I`.
    pub fn shifted(&self, shift: f64) -> Self {
        let mut out = self.clone();
        for i in 0..self.dim {
            out.data[i * self.dim + i] += shift;
        }
        out
    }

    /// Entrywise complex conjugate (equivalently the transpose).
    pub fn conj(&self) -> Self {
        HermitianMatrix {
            dim: self.dim,
            data: self.data.iter().map(|v| v.conj()).collect(),
        }
    }

    /// `H x`.
    pub fn mul_vec(&self, x: &[C64]) -> Result<Vec<C64>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok((0..self.dim)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Principal submatrix on `start..start + len`.
    pub fn principal_block(&self, start: usize, len: usize) -> Result<Self> {
        if start + len > self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: start + len,
            });
        }
        let mut data = Vec::with_capacity(len * len);
        for i in start..start + len {
            data.extend_from_slice(&self.data[i * self.dim + start..i * self.dim + start + len]);
        }
        Ok(HermitianMatrix { dim: len, data })
    }

    /// Adds `block` onto the principal submatrix starting at `start`.
    pub fn add_principal_block(&mut self, start: usize, block: &HermitianMatrix) -> Result<()> {
        if start + block.dim > self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: start + block.dim,
            });
        }
        for i in 0..block.dim {
            for j in 0..block.dim {
                self.data[(start + i) * self.dim + start + j] += block.get(i, j);
            }
        }
        Ok(())
    }

    /// Largest `|h_ij − o_ij|`.
    pub fn max_abs_diff(&self, other: &HermitianMatrix) -> Result<f64> {
        check_same_dim(self, other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn try_add(&self, other: &HermitianMatrix) -> Result<Self> {
        check_same_dim(self, other)?;
        Ok(HermitianMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &HermitianMatrix) -> Result<Self> {
        check_same_dim(self, other)?;
        Ok(HermitianMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }
}

fn check_same_dim(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<()> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            expected: a.dim,
            found: b.dim,
        });
    }
    Ok(())
}

/// Panics on dimension mismatch; use [`HermitianMatrix::try_add`] otherwise.
impl Add for &HermitianMatrix {
    type Output = HermitianMatrix;

    fn add(self, rhs: &HermitianMatrix) -> HermitianMatrix {
        self.try_add(rhs).expect("matrix dimensions differ")
    }
}

/// Panics on dimension mismatch; use [`HermitianMatrix::try_sub`] otherwise.
impl Sub for &HermitianMatrix {
    type Output = HermitianMatrix;

    fn sub(self, rhs: &HermitianMatrix) -> HermitianMatrix {
        self.try_sub(rhs).expect("matrix dimensions differ")
    }
}

pub(crate) fn check_size(coeffs: &BandedCoeffs, size: usize) -> Result<()> {
    let min = 2 * coeffs.half_bandwidth() + 1;
    if size < min {
        return Err(Error::SizeTooSmall { size, min });
    }
    Ok(())
}

/// `T_{f,L}` with entry `(i, j)` equal to `a_{j−i}`.
pub fn toeplitz_finite(coeffs: &BandedCoeffs, size: usize) -> Result<HermitianMatrix> {
    check_size(coeffs, size)?;
    Ok(toeplitz_unchecked(coeffs, size))
}

pub(crate) fn toeplitz_unchecked(coeffs: &BandedCoeffs, size: usize) -> HermitianMatrix {
    HermitianMatrix::from_fn(size, |i, j| coeffs.get(j as isize - i as isize))
}

/// Periodic restriction `T^per_{f,L}`: the index difference `j − i` is taken
/// modulo `L` with representative in `[−⌊L/2⌋, ⌈L/2⌉)`.
pub fn circulant_periodic(coeffs: &BandedCoeffs, size: usize) -> Result<HermitianMatrix> {
    check_size(coeffs, size)?;
    let l = size as isize;
    let upper = (l + 1) / 2;
    Ok(HermitianMatrix::from_fn(size, |i, j| {
        let mut d = (j as isize - i as isize).rem_euclid(l);
        if d >= upper {
            d -= l;
        }
        coeffs.get(d)
    }))
}

/// Block-diagonal `A ⊕ B`.
pub fn direct_sum(a: &HermitianMatrix, b: &HermitianMatrix) -> HermitianMatrix {
    let mut out = HermitianMatrix::zeros(a.dim + b.dim);
    out.add_principal_block(0, a).expect("fits");
    out.add_principal_block(a.dim, b).expect("fits");
    out
}

/// `U* B U` with `(Ux)_k = x_{n−1−k}`, i.e. `B̃[i][j] = B[n−1−i][n−1−j]`.
pub fn reflect_antidiagonal(b: &HermitianMatrix) -> HermitianMatrix {
    let n = b.dim;
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            data.push(b.get(n - 1 - i, n - 1 - j));
        }
    }
    HermitianMatrix { dim: n, data }
}
