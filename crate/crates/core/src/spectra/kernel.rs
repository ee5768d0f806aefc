//! Kernel of `T^{N,N}_{g,L}` and the determinant that certifies its dimension.

use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::symbol::SymbolSpec;
use crate::{Error, Result, C64};

const NODE_TOL: f64 = 1e-12;

/// The `N` unit vectors `(k^j e^{−iEᵢk})_{k=1..L}`, `j = 0..αᵢ−1`, ordered by
/// factor and then by `j`.
///
/// With coefficients `a_{j−i}` in row `i`, column `j`, a plane wave
/// `e^{iθk}` sees the symbol at `−θ`, hence the minus sign in the phase.
pub fn kernel_basis(spec: &SymbolSpec, size: usize) -> Vec<Vec<C64>> {
    let mut basis = Vec::with_capacity(spec.degree());
    for f in spec.factors() {
        for j in 0..f.multiplicity {
            let mut v: Vec<C64> = (1..=size)
                .map(|k| C64::from_polar((k as f64).powi(j as i32), -f.angle * k as f64))
                .collect();
            let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            if norm > 0.0 {
                v.iter_mut().for_each(|x| *x /= norm);
            }
            basis.push(v);
        }
    }
    basis
}

/// `|det|` of the confluent Vandermonde matrix with columns
/// `(k^j zᵢ^k)_{k=1..N}`, `j < αᵢ`:
///
/// ```text
/// Π_i Π_{m<αᵢ} m! · Π_{i<j} |zᵢ − zⱼ|^{αᵢαⱼ}
/// ```
///
/// The nodes must be distinct and unimodular.
pub fn confluent_vandermonde_abs(nodes: &[C64], multiplicities: &[u32]) -> Result<f64> {
    if nodes.len() != multiplicities.len() {
        return Err(Error::DimensionMismatch {
            expected: nodes.len(),
            found: multiplicities.len(),
        });
    }
    for (i, (z, &a)) in nodes.iter().zip(multiplicities).enumerate() {
        if (z.norm() - 1.0).abs() > NODE_TOL {
            return Err(Error::NonUnimodularNode(i));
        }
        if a < 1 {
            return Err(Error::InvalidMultiplicity(a));
        }
    }
    let mut value = 1.0;
    for (i, zi) in nodes.iter().enumerate() {
        // Π_{m<α} m!
        let mut factorial = 1.0;
        for m in 1..multiplicities[i] {
            factorial *= m as f64;
            value *= factorial;
        }
        for (j, zj) in nodes.iter().enumerate().skip(i + 1) {
            let d = (zi - zj).norm();
            if d <= NODE_TOL {
                return Err(Error::DuplicateNode {
                    first: i,
                    second: j,
                });
            }
            value *= d.powi((multiplicities[i] * multiplicities[j]) as i32);
        }
    }
    Ok(value)
}
