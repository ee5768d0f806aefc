//! Numerical certification of the bracketing chain
//!
//! ```text
//! inf g ≤ T^{N,N}_{L1} ⊕ T^{N,N}_{L2} ≤ T^{0,N}_{L1} ⊕ T^{N,0}_{L2} ≤ T_L ≤ T^{0,D}_{L1} ⊕ T^{D,0}_{L2}
//! ```
//!
//! Each inequality is reported as the smallest eigenvalue of the difference.

use crate::boundary::{build_restricted_symbol, dirichlet_from_neumann, BoundaryKind};
use crate::symbol::Symbol;
use crate::toeplitz::{direct_sum, toeplitz_finite, HermitianMatrix};
use crate::{Error, Result};

use super::eigen::{eigenvalues, psd_gap};

/// Which Neumann-type condition is used on the split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NeumannVariant {
    /// Stencil-based modified Neumann with its modified Dirichlet partner.
    #[default]
    Modified,
    /// Toeplitz-plus-Hankel Neumann; the Dirichlet side is obtained through
    /// [`dirichlet_from_neumann`].
    Classic,
}

/// Signed margins of the bracketing chain for one split `L = L1 + L2`.
#[derive(Debug, Clone, PartialEq)]
pub struct BracketReport {
    pub size: usize,
    pub first: usize,
    pub second: usize,
    pub variant: NeumannVariant,
    /// `‖T_{g,L}‖_∞`.
    pub norm: f64,
    /// `λ_min(T^{N,N}_{L1} ⊕ T^{N,N}_{L2}) − inf g`.
    pub floor_nn: f64,
    /// `λ_min((T^{0,N}_{L1} ⊕ T^{N,0}_{L2}) − (T^{N,N}_{L1} ⊕ T^{N,N}_{L2}))`.
    pub nn_vs_0n: f64,
    /// `λ_min(T_{g,L} − (T^{0,N}_{L1} ⊕ T^{N,0}_{L2}))`.
    pub lower: f64,
    /// `λ_min((T^{0,D}_{L1} ⊕ T^{D,0}_{L2}) − T_{g,L})`.
    pub upper: f64,
    pub tol: f64,
}

/// Per-inequality verdicts, each `margin >= −tol`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdicts {
    pub floor_nn: bool,
    pub nn_vs_0n: bool,
    pub lower: bool,
    pub upper: bool,
}

impl Verdicts {
    pub fn all(&self) -> bool {
        self.floor_nn && self.nn_vs_0n && self.lower && self.upper
    }
}

impl BracketReport {
    pub fn verdicts(&self) -> Verdicts {
        let ok = |m: f64| m >= -self.tol;
        Verdicts {
            floor_nn: ok(self.floor_nn),
            nn_vs_0n: ok(self.nn_vs_0n),
            lower: ok(self.lower),
            upper: ok(self.upper),
        }
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts().all()
    }

    /// Smallest of the four margins.
    pub fn worst_margin(&self) -> f64 {
        self.floor_nn
            .min(self.nn_vs_0n)
            .min(self.lower)
            .min(self.upper)
    }
}

/// Checks the chain with the modified conditions. `tol` is absolute.
pub fn check_bracketing(
    symbol: &Symbol,
    first: usize,
    second: usize,
    tol: f64,
) -> Result<BracketReport> {
    check_bracketing_with(symbol, first, second, tol, NeumannVariant::Modified)
}

pub fn check_bracketing_with(
    symbol: &Symbol,
    first: usize,
    second: usize,
    tol: f64,
    variant: NeumannVariant,
) -> Result<BracketReport> {
    let min = 2 * symbol.degree() + 1;
    for l in [first, second] {
        if l < min {
            return Err(Error::SizeTooSmall { size: l, min });
        }
    }
    let size = first + second;
    let full = toeplitz_finite(&symbol.coefficients(), size)?;

    let neumann = match variant {
        NeumannVariant::Modified => BoundaryKind::ModifiedNeumann,
        NeumannVariant::Classic => BoundaryKind::ClassicNeumann,
    };
    use BoundaryKind::Simple;
    let build = |l, left, right| build_restricted_symbol(symbol, l, left, right);

    let n_first = build(first, Simple, neumann)?;
    let n_second = build(second, neumann, Simple)?;
    let split_n = direct_sum(&n_first, &n_second);
    let split_nn = direct_sum(
        &build(first, neumann, neumann)?,
        &build(second, neumann, neumann)?,
    );
    let split_d: HermitianMatrix = match variant {
        NeumannVariant::Modified => direct_sum(
            &build(first, Simple, BoundaryKind::ModifiedDirichlet)?,
            &build(second, BoundaryKind::ModifiedDirichlet, Simple)?,
        ),
        NeumannVariant::Classic => dirichlet_from_neumann(&full, &n_first, &n_second)?,
    };

    Ok(BracketReport {
        size,
        first,
        second,
        variant,
        norm: full.norm_inf(),
        floor_nn: eigenvalues(&split_nn)?.min() - symbol.infimum(),
        nn_vs_0n: psd_gap(&split_n, &split_nn)?,
        lower: psd_gap(&full, &split_n)?,
        upper: psd_gap(&split_d, &full)?,
        tol,
    })
}
