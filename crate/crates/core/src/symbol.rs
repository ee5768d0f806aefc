//! Product symbols `g(x) = Π (2 − 2cos(x − Eᵢ))^αᵢ`, their banded Fourier
//! coefficients and the real pentadiagonal class.
//!
//! Coefficients follow the convention `f(x) = Σ a_k e^{−ikx}` with the finite
//! Toeplitz matrix carrying `a_{j−i}` in row `i`, column `j`. A single factor
//! `2 − 2cos(x − E)` then has `(a_{−1}, a_0, a_1) = (−e^{−iE}, 2, −e^{iE})`.

use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result, C64, TWO_PI};

/// Two reduced angles closer than this (on the circle) are the same angle.
pub const ANGLE_TOL: f64 = 1e-12;

/// Tolerance on `|a_k − conj(a_{−k})|`, relative to `max(1, max |a_k|)`.
const HERMITIAN_TOL: f64 = 1e-14;

/// Relative tolerance on the imaginary residue of a symbol value.
const REAL_VALUE_TOL: f64 = 1e-12;

/// Reduces an angle into `𝕋 = (0, 2π]`.
pub fn reduce_angle(angle: f64) -> f64 {
    let r = angle % TWO_PI;
    if r <= 0.0 {
        r + TWO_PI
    } else {
        r
    }
}

/// Distance between two angles measured along the circle, in `[0, π]`.
pub fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (reduce_angle(a) - reduce_angle(b)).abs();
    d.min(TWO_PI - d)
}

/// `e^{iθ}` evaluated at the representative of `θ` in `(−π, π]`, so that
/// `θ = 2π` gives exactly `1`.
pub(crate) fn unit_phase(angle: f64) -> C64 {
    let r = reduce_angle(angle);
    C64::cis(if r > core::f64::consts::PI {
        r - TWO_PI
    } else {
        r
    })
}

/// Polynomial product of two coefficient sequences.
pub(crate) fn convolve(lhs: &[C64], rhs: &[C64]) -> Vec<C64> {
    if lhs.is_empty() || rhs.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C64::new(0.0, 0.0); lhs.len() + rhs.len() - 1];
    for (i, a) in lhs.iter().enumerate() {
        for (j, b) in rhs.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Factor {
    /// Zero of the factor, reduced into `(0, 2π]`.
    pub angle: f64,
    pub multiplicity: u32,
}

/// The product symbol `Π (2 − 2cos(x − Eᵢ))^αᵢ` with pairwise distinct `Eᵢ`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolSpec {
    factors: Vec<Factor>,
}

impl SymbolSpec {
    /// Builds a symbol from `(angle, multiplicity)` pairs.
    ///
    /// Angles are reduced into `(0, 2π]`. Angles that coincide after
    /// reduction are rejected rather than merged.
    pub fn new(factors: &[(f64, u32)]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::EmptySymbol);
        }
        let mut out: Vec<Factor> = Vec::with_capacity(factors.len());
        for &(angle, multiplicity) in factors {
            if !angle.is_finite() {
                return Err(Error::NonFiniteAngle(angle));
            }
            if multiplicity < 1 {
                return Err(Error::InvalidMultiplicity(multiplicity));
            }
            let angle = reduce_angle(angle);
            if let Some(prev) = out
                .iter()
                .find(|f| circular_distance(f.angle, angle) <= ANGLE_TOL)
            {
                return Err(Error::DuplicateAngle {
                    first: prev.angle,
                    second: angle,
                });
            }
            out.push(Factor {
                angle,
                multiplicity,
            });
        }
        Ok(SymbolSpec { factors: out })
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    /// Half band width `N = Σ αᵢ`.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.multiplicity as usize).sum()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.factors
            .iter()
            .map(|f| f.multiplicity)
            .max()
            .unwrap_or(0)
    }

    pub fn angles(&self) -> impl Iterator<Item = f64> + '_ {
        self.factors.iter().map(|f| f.angle)
    }

    /// The symbol `x ↦ g(x − shift)`, i.e. every zero moved by `shift`.
    pub fn shifted(&self, shift: f64) -> Result<Self> {
        let pairs: Vec<(f64, u32)> = self
            .factors
            .iter()
            .map(|f| (f.angle + shift, f.multiplicity))
            .collect();
        SymbolSpec::new(&pairs)
    }

    /// Evaluates the product form directly.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.factors
            .iter()
            .map(|f| (2.0 - 2.0 * (x - f.angle).cos()).powi(f.multiplicity as i32))
            .product()
    }

    /// Fourier coefficients `a_{−N..N}`, obtained by convolving one
    /// coefficient triple per factor.
    pub fn fourier_coefficients(&self) -> BandedCoeffs {
        let mut acc = vec![C64::new(1.0, 0.0)];
        for f in &self.factors {
            let e = unit_phase(f.angle);
            let triple = [-e.conj(), C64::new(2.0, 0.0), -e];
            for _ in 0..f.multiplicity {
                acc = convolve(&acc, &triple);
            }
        }
        BandedCoeffs::symmetrized(acc)
    }
}

/// Fourier coefficients `a_{−N}, …, a_N` of a real-valued symbol.
#[derive(Debug, Clone, PartialEq)]
pub struct BandedCoeffs {
    half_bandwidth: usize,
    values: Vec<C64>,
}

impl BandedCoeffs {
    /// Takes `a_{−N}, …, a_N` in order. Checks Hermitian symmetry to a
    /// tolerance of `1e−14·max(1, max|a_k|)` and then symmetrizes exactly.
    pub fn new(values: Vec<C64>) -> Result<Self> {
        if values.len().is_multiple_of(2) {
            return Err(Error::InvalidCoefficients(
                "expected an odd number of values",
            ));
        }
        let n = values.len() / 2;
        let scale = values.iter().map(|v| v.norm()).fold(1.0, f64::max);
        for k in 0..=n {
            let (lo, hi) = (values[n - k], values[n + k]);
            if (hi - lo.conj()).norm() > HERMITIAN_TOL * scale {
                return Err(Error::InvalidCoefficients("a_k != conj(a_-k)"));
            }
        }
        if n > 0 && values[2 * n] == C64::new(0.0, 0.0) {
            return Err(Error::InvalidCoefficients("outermost coefficient vanishes"));
        }
        Ok(BandedCoeffs::symmetrized(values))
    }

    /// Replaces `a_k` and `a_{−k}` by their Hermitian average.
    fn symmetrized(mut values: Vec<C64>) -> Self {
        let n = values.len() / 2;
        values[n] = C64::new(values[n].re, 0.0);
        for k in 1..=n {
            let avg = (values[n + k] + values[n - k].conj()) * 0.5;
            values[n + k] = avg;
            values[n - k] = avg.conj();
        }
        BandedCoeffs {
            half_bandwidth: n,
            values,
        }
    }

    /// The real pentadiagonal symbol `a2 e^{−2ix} + a1 e^{−ix} + a0 + a1 e^{ix} + a2 e^{2ix}`.
    pub fn pentadiagonal(a0: f64, a1: f64, a2: f64) -> Result<Self> {
        BandedCoeffs::new(vec![
            C64::new(a2, 0.0),
            C64::new(a1, 0.0),
            C64::new(a0, 0.0),
            C64::new(a1, 0.0),
            C64::new(a2, 0.0),
        ])
    }

    /// `N`, so that the band width is `2N + 1`.
    pub fn half_bandwidth(&self) -> usize {
        self.half_bandwidth
    }

    /// `a_k`; zero outside the band.
    pub fn get(&self, k: isize) -> C64 {
        let n = self.half_bandwidth as isize;
        if k.abs() > n {
            C64::new(0.0, 0.0)
        } else {
            self.values[(k + n) as usize]
        }
    }

    /// `a_{−N}, …, a_N`.
    pub fn as_slice(&self) -> &[C64] {
        &self.values
    }

    pub fn abs_sum(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).sum()
    }

    /// Whether every coefficient is real up to `tol`.
    pub fn is_real(&self, tol: f64) -> bool {
        self.values.iter().all(|v| v.im.abs() <= tol)
    }

    /// `f(x) = Σ a_k e^{−ikx}`.
    pub fn evaluate(&self, x: f64) -> Result<f64> {
        let n = self.half_bandwidth as isize;
        let sum: C64 = (-n..=n)
            .map(|k| self.get(k) * C64::cis(-(k as f64) * x))
            .sum();
        if sum.im.abs() > REAL_VALUE_TOL * self.abs_sum() {
            return Err(Error::NonRealSymbol { imag: sum.im });
        }
        Ok(sum.re)
    }
}

/// A real pentadiagonal symbol written as `h = scale·w_b + shift` with
/// `w_b(x) = (2 − 2cos(x − b))(2 − 2cos(x + b))`.
#[derive(Debug, Clone, PartialEq)]
pub struct PentaDecomposition {
    pub scale: f64,
    pub spec: SymbolSpec,
    pub shift: f64,
    /// `b ∈ [0, π]` with `4cos b = −a1/a2`.
    pub b: f64,
}

impl PentaDecomposition {
    /// Rebuilds `scale·coeffs(spec) + shift·δ₀`.
    pub fn reconstruct(&self) -> BandedCoeffs {
        let base = self.spec.fourier_coefficients();
        let n = base.half_bandwidth();
        let mut values: Vec<C64> = base.as_slice().iter().map(|v| v * self.scale).collect();
        values[n] += self.shift;
        BandedCoeffs::new(values).expect("affine image of Hermitian coefficients")
    }
}

/// Decomposes the real pentadiagonal symbol with coefficients `(a0, a1, a2)`.
///
/// Requires `a2 > 0` and `|a1/a2| <= 4`. The angle satisfies
/// `4cos b = −a1/a2` and the shift is `a0 − a2(4 + 2cos 2b)`. At `b ∈ {0, π}`
/// the two zeros merge into one double factor.
pub fn decompose_pentadiagonal(a0: f64, a1: f64, a2: f64) -> Result<PentaDecomposition> {
    if a2.is_nan() || a2 <= 0.0 || !a0.is_finite() || !a1.is_finite() || !a2.is_finite() {
        return Err(Error::OutOfClass { a1, a2 });
    }
    let ratio = -a1 / (4.0 * a2);
    if ratio.abs() > 1.0 {
        return Err(Error::OutOfClass { a1, a2 });
    }
    let mut b = ratio.acos();
    let spec = if 2.0 * b <= ANGLE_TOL {
        b = 0.0;
        SymbolSpec::new(&[(0.0, 2)])?
    } else if 2.0 * (core::f64::consts::PI - b) <= ANGLE_TOL {
        b = core::f64::consts::PI;
        SymbolSpec::new(&[(b, 2)])?
    } else {
        SymbolSpec::new(&[(b, 1), (TWO_PI - b, 1)])?
    };
    let shift = a0 - a2 * (4.0 + 2.0 * (2.0 * b).cos());
    Ok(PentaDecomposition {
        scale: a2,
        spec,
        shift,
        b,
    })
}

/// A symbol for which modified boundary conditions exist: either a product
/// symbol or a pentadiagonal symbol `scale·g + shift` with `g` a product.
#[derive(Debug, Clone, PartialEq)]
pub enum Symbol {
    Product(SymbolSpec),
    Pentadiagonal {
        /// The coefficients as given.
        coeffs: BandedCoeffs,
        decomposition: PentaDecomposition,
    },
}

impl Symbol {
    pub fn pentadiagonal(a0: f64, a1: f64, a2: f64) -> Result<Self> {
        let decomposition = decompose_pentadiagonal(a0, a1, a2)?;
        Ok(Symbol::Pentadiagonal {
            coeffs: BandedCoeffs::pentadiagonal(a0, a1, a2)?,
            decomposition,
        })
    }

    /// Fourier coefficients of the symbol itself (not of the product part).
    pub fn coefficients(&self) -> BandedCoeffs {
        match self {
            Symbol::Product(spec) => spec.fourier_coefficients(),
            Symbol::Pentadiagonal { coeffs, .. } => coeffs.clone(),
        }
    }

    /// The product symbol that generates the boundary conditions.
    pub fn product(&self) -> &SymbolSpec {
        match self {
            Symbol::Product(spec) => spec,
            Symbol::Pentadiagonal { decomposition, .. } => &decomposition.spec,
        }
    }

    /// Factor multiplying the product symbol.
    pub fn scale(&self) -> f64 {
        match self {
            Symbol::Product(_) => 1.0,
            Symbol::Pentadiagonal { decomposition, .. } => decomposition.scale,
        }
    }

    /// `inf_𝕋` of the symbol.
    pub fn infimum(&self) -> f64 {
        match self {
            Symbol::Product(_) => 0.0,
            Symbol::Pentadiagonal { decomposition, .. } => decomposition.shift,
        }
    }

    pub fn degree(&self) -> usize {
        self.product().degree()
    }
}

impl From<SymbolSpec> for Symbol {
    fn from(spec: SymbolSpec) -> Self {
        Symbol::Product(spec)
    }
}
