//! Cyclic Jacobi eigenvalue iteration for dense Hermitian matrices.
//!
//! Each rotation first removes the phase of `a_pq` with a diagonal unitary
//! and then applies the classical real rotation, so the working matrix stays
//! Hermitian with a real diagonal throughout.

use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::toeplitz::HermitianMatrix;
use crate::{Error, Result, C64};

const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    tolerance: f64,
}

impl Spectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Absolute bound on the error of every eigenvalue (residual
    /// off-diagonal mass plus rounding).
    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn min(&self) -> f64 {
        self.values.first().copied().unwrap_or(f64::NAN)
    }

    pub fn max(&self) -> f64 {
        self.values.last().copied().unwrap_or(f64::NAN)
    }

    /// 1-based `λ_k`.
    pub fn nth(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.values.get(i).copied())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn off_norm(a: &[C64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// All eigenvalues of `h`, ascending.
pub fn eigenvalues(h: &HermitianMatrix) -> Result<Spectrum> {
    let n = h.dim();
    let mut a: Vec<C64> = h.clone().into_row_major();
    let frob = a.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
    let target = f64::EPSILON * frob;
    let skip = target / (n.max(1) as f64);

    let mut off = off_norm(&a, n);
    let mut sweeps = 0;
    while off > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off,
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, n, p, q, skip);
            }
        }
        sweeps += 1;
        off = off_norm(&a, n);
    }

    let mut values: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    values.sort_by(f64::total_cmp);
    Ok(Spectrum {
        values,
        tolerance: off + 4.0 * (n as f64) * f64::EPSILON * frob,
    })
}

/// Annihilates `a_pq` by `A ← G* A G` with `G = diag(1, e^{−iφ}) R(θ)` on
/// the `(p, q)` plane.
fn rotate(a: &mut [C64], n: usize, p: usize, q: usize, skip: f64) {
    let apq = a[p * n + q];
    let r = apq.norm();
    if r <= skip {
        return;
    }
    let w = apq.conj() / r;
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        let x = a[k * n + p];
        let y = a[k * n + q];
        a[k * n + p] = x * c - y * w * s;
        a[k * n + q] = x * s + y * w * c;
    }
    let wc = w.conj();
    for k in 0..n {
        let x = a[p * n + k];
        let y = a[q * n + k];
        a[p * n + k] = x * c - y * wc * s;
        a[q * n + k] = x * s + y * wc * c;
    }
    a[p * n + q] = C64::new(0.0, 0.0);
    a[q * n + p] = C64::new(0.0, 0.0);
    a[p * n + p] = C64::new(app - t * r, 0.0);
    a[q * n + q] = C64::new(aqq + t * r, 0.0);
}

/// Smallest eigenvalue of `a − b`; `a ⪰ b` iff it is `>= −tol`.
pub fn psd_gap(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<f64> {
    Ok(eigenvalues(&a.try_sub(b)?)?.min())
}
