//! Boundary conditions built from the rank-one decomposition of product
//! symbols.
//!
//! For `g = Π (2 − 2cos(x − Eᵢ))^αᵢ` the Laurent operator factors as `S*S`
//! with `S = Π D_{Eᵢ}^{αᵢ}`, so `T_g = Σ_k |ψ_k⟩⟨ψ_k|` where `ψ_k` is the stencil
//! `c_0, …, c_N` placed on sites `k, …, k + N`. Dropping the placements that
//! cross an endpoint gives the modified Neumann condition; adding them twice
//! more gives the modified Dirichlet condition. Both only touch the `N × N`
//! corner at that endpoint.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::symbol::{convolve, unit_phase, BandedCoeffs, Symbol, SymbolSpec};
use crate::toeplitz::{
    check_size, direct_sum, reflect_antidiagonal, toeplitz_finite, toeplitz_unchecked,
    HermitianMatrix,
};
use crate::{Error, Result, C64};

/// Coefficients `c_0, …, c_N` of `ψ_0 = Π D_{Eᵢ}^{αᵢ} δ_0`, normalised to `c_0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct StencilVector {
    coeffs: Vec<C64>,
}

impl StencilVector {
    /// Convolves one pair `(1, −e^{−iE})` per unit of multiplicity.
    pub fn new(spec: &SymbolSpec) -> Self {
        let mut coeffs = vec![C64::new(1.0, 0.0)];
        for f in spec.factors() {
            let pair = [C64::new(1.0, 0.0), -unit_phase(f.angle).conj()];
            for _ in 0..f.multiplicity {
                coeffs = convolve(&coeffs, &pair);
            }
        }
        StencilVector { coeffs }
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// `N`; the stencil occupies `N + 1` consecutive sites.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `Σ_j c_j conj(c_{j+t})`, which equals the Fourier coefficient `a_t`.
    pub fn autocorrelation(&self, t: usize) -> C64 {
        self.coeffs
            .iter()
            .zip(self.coeffs.iter().skip(t))
            .map(|(a, b)| a * b.conj())
            .sum()
    }

    /// `ψ_k` restricted to the window `0..dim`, as a dense vector.
    pub fn placed(&self, start: isize, dim: usize) -> Vec<C64> {
        let mut v = vec![C64::new(0.0, 0.0); dim];
        for (p, c) in self.coeffs.iter().enumerate() {
            let site = start + p as isize;
            if site >= 0 && (site as usize) < dim {
                v[site as usize] = *c;
            }
        }
        v
    }

    /// Adds `weight·|ψ_start⟩⟨ψ_start|`, truncated to `0..dim`, into `data`.
    fn accumulate(&self, data: &mut [C64], dim: usize, start: isize, weight: f64) {
        let window = |p: usize| {
            let site = start + p as isize;
            (site >= 0 && (site as usize) < dim).then_some(site as usize)
        };
        for (p, cp) in self.coeffs.iter().enumerate() {
            let Some(i) = window(p) else { continue };
            for (q, cq) in self.coeffs.iter().enumerate() {
                let Some(j) = window(q) else { continue };
                data[i * dim + j] += cp * cq.conj() * weight;
            }
        }
    }
}

/// Which endpoint of the interval a condition is imposed at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundaryKind {
    /// Plain truncation, nothing added.
    Simple,
    ModifiedNeumann,
    ModifiedDirichlet,
    /// Toeplitz-plus-Hankel condition; only Hermitian for real symbols.
    ClassicNeumann,
}

/// Shifts `k` whose stencil `[k, k + N]` lies inside `0..size`.
pub fn interior_placements(size: usize, degree: usize) -> Range<isize> {
    0..(size as isize - degree as isize).max(0)
}

/// `Σ_{k ∈ shifts} |ψ_k⟩⟨ψ_k|` truncated to `0..size`.
///
/// With `shifts = interior_placements(size, N)` this is `T^{N,N}_{g,L}`.
pub fn rank_one_sum(
    spec: &SymbolSpec,
    size: usize,
    shifts: Range<isize>,
) -> Result<HermitianMatrix> {
    check_size(&spec.fourier_coefficients(), size)?;
    let stencil = StencilVector::new(spec);
    Ok(stencil_sum(&stencil, size, shifts))
}

fn stencil_sum(stencil: &StencilVector, size: usize, shifts: Range<isize>) -> HermitianMatrix {
    let mut data = vec![C64::new(0.0, 0.0); size * size];
    for k in shifts {
        stencil.accumulate(&mut data, size, k, 1.0);
    }
    HermitianMatrix::symmetrized(size, data)
}

/// Positive semidefinite `N × N` sum of the stencil placements that cross
/// the given endpoint, projected onto the `N` sites next to it.
pub fn crossing_block(stencil: &StencilVector, side: Side) -> HermitianMatrix {
    let n = stencil.degree();
    let starts = match side {
        // Window 0..N stands for the last N sites; placements start at b−N+1..b.
        Side::Right => 0..n as isize,
        // Window 0..N stands for the first N sites; placements start at a−N..a−1.
        Side::Left => -(n as isize)..0,
    };
    stencil_sum(stencil, n, starts)
}

/// Corner block `B̃_N ⪯ 0` or `B̃_D = −B̃_N ⪰ 0` for the product symbol.
pub fn corner_block(spec: &SymbolSpec, kind: BoundaryKind, side: Side) -> Result<HermitianMatrix> {
    let sign = match kind {
        BoundaryKind::ModifiedNeumann => -1.0,
        BoundaryKind::ModifiedDirichlet => 1.0,
        _ => {
            return Err(Error::UnsupportedBoundary(
                "corner blocks exist for the modified Neumann and Dirichlet conditions only",
            ))
        }
    };
    Ok(crossing_block(&StencilVector::new(spec), side).scaled(sign))
}

/// Hankel corner of the Toeplitz-plus-Hankel Neumann condition.
///
/// On the left, `H[i][j] = a_{−(i+j+1)}` for `i + j <= N − 1`; the right
/// corner is its anti-diagonal reflection.
pub fn hankel_block(coeffs: &BandedCoeffs, side: Side) -> Result<HermitianMatrix> {
    let n = coeffs.half_bandwidth();
    let scale = coeffs
        .as_slice()
        .iter()
        .map(|v| v.norm())
        .fold(1.0, f64::max);
    if !coeffs.is_real(1e-14 * scale) {
        return Err(Error::ComplexHankel);
    }
    let left = HermitianMatrix::from_fn(n, |i, j| {
        if i + j < n {
            coeffs.get(-((i + j + 1) as isize))
        } else {
            C64::new(0.0, 0.0)
        }
    });
    Ok(match side {
        Side::Left => left,
        Side::Right => reflect_antidiagonal(&left),
    })
}

/// `T_{f,L}` plus the Toeplitz-plus-Hankel corner at one side.
///
/// Needs only `L >= 2N`, so that corners at both ends stay disjoint; the
/// `Δ²` counterexample uses `L = 4`.
pub fn classic_neumann(coeffs: &BandedCoeffs, size: usize, side: Side) -> Result<HermitianMatrix> {
    let min = 2 * coeffs.half_bandwidth();
    if size < min.max(1) {
        return Err(Error::SizeTooSmall { size, min });
    }
    let mut t = toeplitz_unchecked(coeffs, size);
    let h = hankel_block(coeffs, side)?;
    let start = match side {
        Side::Left => 0,
        Side::Right => size - h.dim(),
    };
    t.add_principal_block(start, &h)?;
    Ok(t)
}

/// `T_{g,L}` with the given conditions at the left and right endpoints.
pub fn build_restricted(
    spec: &SymbolSpec,
    size: usize,
    left: BoundaryKind,
    right: BoundaryKind,
) -> Result<HermitianMatrix> {
    restricted(
        &spec.fourier_coefficients(),
        &StencilVector::new(spec),
        1.0,
        size,
        left,
        right,
    )
}

/// Same as [`build_restricted`] for a general [`Symbol`]: the Toeplitz part
/// comes from the symbol's own coefficients, the modified corners from its
/// product part scaled by [`Symbol::scale`].
pub fn build_restricted_symbol(
    symbol: &Symbol,
    size: usize,
    left: BoundaryKind,
    right: BoundaryKind,
) -> Result<HermitianMatrix> {
    restricted(
        &symbol.coefficients(),
        &StencilVector::new(symbol.product()),
        symbol.scale(),
        size,
        left,
        right,
    )
}

fn restricted(
    coeffs: &BandedCoeffs,
    stencil: &StencilVector,
    scale: f64,
    size: usize,
    left: BoundaryKind,
    right: BoundaryKind,
) -> Result<HermitianMatrix> {
    let mut t = toeplitz_finite(coeffs, size)?;
    for (side, kind) in [(Side::Left, left), (Side::Right, right)] {
        let block = match kind {
            BoundaryKind::Simple => continue,
            BoundaryKind::ModifiedNeumann => crossing_block(stencil, side).scaled(-scale),
            BoundaryKind::ModifiedDirichlet => crossing_block(stencil, side).scaled(scale),
            BoundaryKind::ClassicNeumann => hankel_block(coeffs, side)?,
        };
        let start = match side {
            Side::Left => 0,
            Side::Right => size - block.dim(),
        };
        t.add_principal_block(start, &block)?;
    }
    Ok(t)
}

/// Given `A ⪰ A11ᴺ ⊕ A22ᴺ`, returns `(2A11 − A11ᴺ) ⊕ (2A22 − A22ᴺ)`, which
/// dominates `A`. The hypothesis is not checked here.
pub fn dirichlet_from_neumann(
    a: &HermitianMatrix,
    first_neumann: &HermitianMatrix,
    second_neumann: &HermitianMatrix,
) -> Result<HermitianMatrix> {
    let d1 = first_neumann.dim();
    if d1 + second_neumann.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: d1 + second_neumann.dim(),
        });
    }
    let a11 = a.principal_block(0, d1)?;
    let a22 = a.principal_block(d1, second_neumann.dim())?;
    let first = &a11.scaled(2.0) - first_neumann;
    let second = &a22.scaled(2.0) - second_neumann;
    Ok(direct_sum(&first, &second))
}
