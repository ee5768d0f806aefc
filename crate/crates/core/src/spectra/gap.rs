//! The gap `λ_{N+1}` of `T^{N,N}_{g,L}` above its `N`-dimensional kernel.

use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::boundary::{build_restricted, BoundaryKind};
use crate::symbol::{circular_distance, reduce_angle, SymbolSpec};
use crate::{Error, Result, TWO_PI};

use super::eigen::eigenvalues;

/// Kernel threshold relative to `‖T‖_∞`.
pub const KERNEL_TOL: f64 = 1e-9;

/// Distance from the shifted grid `{(2πk/L − shift) mod 2π : k = 1..L}` to
/// the nearest angle, measured on the circle.
pub fn grid_distance(angles: &[f64], size: usize, shift: f64) -> f64 {
    let mut best = f64::INFINITY;
    for k in 1..=size {
        let point = TWO_PI * k as f64 / size as f64 - shift;
        for &e in angles {
            best = best.min(circular_distance(point, e));
        }
    }
    best
}

/// A shift `Ẽ ∈ (0, 2π]` whose grid keeps distance `>= 2π/(2ⁿL)` from all
/// `n` angles.
///
/// Starts from `Ẽ = −E₁ + π/L` and, for each further angle `Eᵢ` closer than
/// `2π/(2ⁱL)` to the grid, moves `Ẽ` by `±2π/(2ⁱL)` (trying `+` first).
pub fn grid_shift(angles: &[f64], size: usize) -> f64 {
    let Some(&first) = angles.first() else {
        return TWO_PI;
    };
    let l = size.max(1) as f64;
    let mut shift = -first + core::f64::consts::PI / l;
    for (i, &e) in angles.iter().enumerate().skip(1) {
        let step = TWO_PI / (2f64.powi(i as i32 + 1) * l);
        if grid_distance(&[e], size, shift) >= step {
            continue;
        }
        let plus = shift + step;
        shift = if grid_distance(&[e], size, plus) >= step * (1.0 - 1e-12) {
            plus
        } else {
            shift - step
        };
    }
    reduce_angle(shift)
}

/// `min_k g(2πk/L − shift)`: by min-max and modulation invariance a lower
/// bound on `λ_{N+1}(T^{N,N}_{g,L})` for every shift.
pub fn periodic_lower_bound(spec: &SymbolSpec, size: usize, shift: f64) -> f64 {
    (1..=size)
        .map(|k| spec.evaluate(TWO_PI * k as f64 / size as f64 - shift))
        .fold(f64::INFINITY, f64::min)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapRecord {
    pub size: usize,
    pub kernel_count: usize,
    /// `λ_{N+1}`.
    pub gap: f64,
}

/// Spectrum of `T^{N,N}_{g,L}`: the number of eigenvalues below
/// `1e−9·‖T‖_∞` and `λ_{N+1}`. Errors with [`Error::KernelMismatch`] if the
/// count differs from `N`.
pub fn spectral_gap(spec: &SymbolSpec, size: usize) -> Result<GapRecord> {
    let t = build_restricted(
        spec,
        size,
        BoundaryKind::ModifiedNeumann,
        BoundaryKind::ModifiedNeumann,
    )?;
    let spectrum = eigenvalues(&t)?;
    let threshold = KERNEL_TOL * t.norm_inf();
    let kernel_count = spectrum
        .values()
        .iter()
        .filter(|v| v.abs() <= threshold)
        .count();
    let n = spec.degree();
    if kernel_count != n {
        return Err(Error::KernelMismatch {
            expected: n,
            found: kernel_count,
        });
    }
    Ok(GapRecord {
        size,
        kernel_count,
        gap: spectrum.values()[n],
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapReport {
    /// Ordered as requested.
    pub records: Vec<GapRecord>,
    pub alpha_max: u32,
    /// Least-squares slope of `ln λ_{N+1}` against `ln L`.
    pub slope: Option<f64>,
    pub intercept: Option<f64>,
    /// `min_L λ_{N+1}·L^{2α_max}`.
    pub constant: f64,
}

/// Runs [`spectral_gap`] for every size and fits `ln gap = slope·ln L + c`.
///
/// Only sizes `L >= 4N` enter the fit, unless fewer than two qualify.
pub fn gap_scan(spec: &SymbolSpec, sizes: &[usize]) -> Result<GapReport> {
    let records = sizes
        .iter()
        .map(|&l| spectral_gap(spec, l))
        .collect::<Result<Vec<_>>>()?;
    let alpha_max = spec.max_multiplicity();
    let n = spec.degree();

    let mut points: Vec<(f64, f64)> = records
        .iter()
        .filter(|r| r.size >= 4 * n)
        .map(|r| ((r.size as f64).ln(), r.gap.ln()))
        .collect();
    if points.len() < 2 {
        points = records
            .iter()
            .map(|r| ((r.size as f64).ln(), r.gap.ln()))
            .collect();
    }
    let fit = least_squares(&points);

    let constant = records
        .iter()
        .map(|r| r.gap * (r.size as f64).powi(2 * alpha_max as i32))
        .fold(f64::INFINITY, f64::min);

    Ok(GapReport {
        records,
        alpha_max,
        slope: fit.map(|f| f.0),
        intercept: fit.map(|f| f.1),
        constant,
    })
}

/// `(slope, intercept)` of the ordinary least-squares line.
fn least_squares(points: &[(f64, f64)]) -> Option<(f64, f64)> {
    if points.len() < 2 {
        return None;
    }
    let m = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / m;
    let my = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    Some((slope, my - slope * mx))
}
