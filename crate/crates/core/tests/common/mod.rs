//! Test-only oracles and generators, kept independent of the library's code
//! paths.

#![allow(dead_code)]

use rand::Rng;
use toeplitz_bracket::symbol::circular_distance;
use toeplitz_bracket::{HermitianMatrix, SymbolSpec, C64, TWO_PI};

/// Random product symbol with `1..=max_factors` factors, multiplicities in
/// `1..=max_alpha`, total degree at most `max_degree`, and zeros at least
/// `min_sep` apart on the circle.
pub fn random_spec(
    rng: &mut impl Rng,
    max_factors: usize,
    max_alpha: u32,
    max_degree: usize,
    min_sep: f64,
) -> SymbolSpec {
    loop {
        let n = rng.gen_range(1..=max_factors);
        let mut factors: Vec<(f64, u32)> = Vec::new();
        let mut degree = 0;
        while factors.len() < n {
            let angle = rng.gen_range(0.0..TWO_PI);
            if factors
                .iter()
                .any(|&(e, _)| circular_distance(e, angle) < min_sep)
            {
                continue;
            }
            let alpha = rng.gen_range(1..=max_alpha);
            if degree + alpha as usize > max_degree {
                break;
            }
            degree += alpha as usize;
            factors.push((angle, alpha));
        }
        if let Ok(spec) = SymbolSpec::new(&factors) {
            return spec;
        }
    }
}

/// Random split `L1 + L2 <= max_total` with both parts at least `2N + 1`.
pub fn random_split(rng: &mut impl Rng, degree: usize, max_total: usize) -> (usize, usize) {
    let min = 2 * degree + 1;
    assert!(2 * min <= max_total);
    let first = rng.gen_range(min..=max_total - min);
    let second = rng.gen_range(min..=max_total - first);
    (first, second)
}

/// `U_E H U_E*` with `(U_E b)_m = e^{−iEm} b_m`.
pub fn modulate(h: &HermitianMatrix, shift: f64) -> HermitianMatrix {
    let n = h.dim();
    let mut rows = Vec::with_capacity(n);
    for m in 0..n {
        rows.push(
            (0..n)
                .map(|k| {
                    C64::cis(-shift * (m + 1) as f64)
                        * h.get(m, k)
                        * C64::cis(shift * (k + 1) as f64)
                })
                .collect::<Vec<_>>(),
        );
    }
    HermitianMatrix::from_rows(&rows).unwrap()
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn brute_force_det(mut a: Vec<Vec<C64>>) -> C64 {
    let n = a.len();
    let mut det = C64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .unwrap();
        if a[pivot][col].norm() == 0.0 {
            return C64::new(0.0, 0.0);
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        let (upper, lower) = a.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        for row in lower.iter_mut() {
            let factor = row[col] / pivot_row[col];
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= factor * p;
            }
        }
    }
    det
}

/// The `N × N` truncated moment matrix with columns `(k^j zᵢ^k)_{k=1..N}`.
pub fn confluent_vandermonde_matrix(nodes: &[C64], multiplicities: &[u32]) -> Vec<Vec<C64>> {
    let n: usize = multiplicities.iter().map(|&a| a as usize).sum();
    let mut columns: Vec<Vec<C64>> = Vec::with_capacity(n);
    for (z, &alpha) in nodes.iter().zip(multiplicities) {
        for j in 0..alpha {
            columns.push(
                (1..=n)
                    .map(|k| z.powu(k as u32) * (k as f64).powi(j as i32))
                    .collect(),
            );
        }
    }
    (0..n)
        .map(|r| columns.iter().map(|c| c[r]).collect())
        .collect()
}

/// Exhaustive circular distance from `{(2πk/L − shift) mod 2π}` to `angles`.
pub fn exhaustive_grid_distance(angles: &[f64], size: usize, shift: f64) -> f64 {
    let mut best = f64::INFINITY;
    for k in 1..=size {
        let p = (TWO_PI * k as f64 / size as f64 - shift).rem_euclid(TWO_PI);
        for &e in angles {
            let d = (p - e.rem_euclid(TWO_PI)).abs();
            best = best.min(d.min(TWO_PI - d));
        }
    }
    best
}

pub fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}
