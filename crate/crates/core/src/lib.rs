//! Boundary conditions with Dirichlet–Neumann bracketing for banded Hermitian
//! Toeplitz matrices whose symbol is a product
//! `g(x) = Π (2 − 2cos(x − Eᵢ))^αᵢ`.
//!
//! The crate is organised bottom-up:
//!
//! - [`symbol`]: product symbols, their Fourier coefficients and the
//!   pentadiagonal class that reduces to a shifted, rescaled product symbol.
//! - [`toeplitz`]: dense Hermitian matrices, finite Toeplitz and circulant
//!   restrictions, direct sums and anti-diagonal reflection.
//! - [`boundary`]: the stencil vector whose shifted outer products sum to the
//!   Laurent operator, modified Neumann/Dirichlet corner blocks, the classic
//!   Toeplitz-plus-Hankel Neumann condition and the Neumann → Dirichlet
//!   reflection principle.
//! - [`spectra`]: a Jacobi eigensolver, operator-inequality certification,
//!   kernel bases, confluent Vandermonde determinants, grid shifts and
//!   spectral-gap scans.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use toeplitz_bracket::spectra::check_bracketing;
//! use toeplitz_bracket::{Symbol, SymbolSpec};
//!
//! let spec = SymbolSpec::new(&[(0.0, 1), (2.0, 1)])?;
//! let report = check_bracketing(&Symbol::from(spec), 7, 9, 1e-9)?;
//! assert!(report.all_hold());
//! # Ok::<(), toeplitz_bracket::Error>(())
//! ```

#![no_std]

extern crate alloc;

pub mod boundary;
mod error;
pub mod spectra;
pub mod symbol;
pub mod toeplitz;

pub use error::{Error, Result};

pub use boundary::{BoundaryKind, Side, StencilVector};
pub use spectra::{BracketReport, GapRecord, GapReport, NeumannVariant, Spectrum};
pub use symbol::{BandedCoeffs, Factor, PentaDecomposition, Symbol, SymbolSpec};
pub use toeplitz::HermitianMatrix;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;

/// Length of the circle `𝕋 = (0, 2π]`.
pub const TWO_PI: f64 = core::f64::consts::TAU;
