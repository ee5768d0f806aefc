//! Eigenvalues, operator-inequality certification, kernel dimension and
//! spectral-gap measurements.

mod bracket;
mod eigen;
mod gap;
mod kernel;

pub use bracket::{
    check_bracketing, check_bracketing_with, BracketReport, NeumannVariant, Verdicts,
};
pub use eigen::{eigenvalues, psd_gap, Spectrum};
pub use gap::{
    gap_scan, grid_distance, grid_shift, periodic_lower_bound, spectral_gap, GapRecord, GapReport,
    KERNEL_TOL,
};
pub use kernel::{confluent_vandermonde_abs, kernel_basis};
