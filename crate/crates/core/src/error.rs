use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A symbol needs at least one factor.
    EmptySymbol,
    /// An angle was NaN or infinite.
    NonFiniteAngle(f64),
    /// Two factor angles coincide after reduction into `(0, 2π]`.
    DuplicateAngle {
        first: f64,
        second: f64,
    },
    /// A multiplicity below one.
    InvalidMultiplicity(u32),
    /// Coefficient sequence violates `a_k = conj(a_{-k})` or has a zero
    /// outermost coefficient.
    InvalidCoefficients(&'static str),
    /// The symbol evaluated to a value with a non-negligible imaginary part.
    NonRealSymbol {
        imag: f64,
    },
    /// Pentadiagonal coefficients outside `a2 > 0, |a1/a2| <= 4`.
    OutOfClass {
        a1: f64,
        a2: f64,
    },
    /// Matrix size below the band width `2N + 1`.
    SizeTooSmall {
        size: usize,
        min: usize,
    },
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// Dense input that is not Hermitian.
    NotHermitian,
    /// The Toeplitz-plus-Hankel condition is Hermitian only for real symbols.
    ComplexHankel,
    /// A boundary kind that has no corner block of the requested type.
    UnsupportedBoundary(&'static str),
    /// Jacobi sweeps exhausted before the off-diagonal mass vanished.
    NoConvergence {
        sweeps: usize,
        off_norm: f64,
    },
    /// Two Vandermonde nodes coincide.
    DuplicateNode {
        first: usize,
        second: usize,
    },
    /// A Vandermonde node off the unit circle.
    NonUnimodularNode(usize),
    /// The numerically counted kernel of `T^{N,N}` differs from `N`.
    KernelMismatch {
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySymbol => write!(f, "symbol has no factors"),
            Error::NonFiniteAngle(a) => write!(f, "angle {a} is not finite"),
            Error::DuplicateAngle { first, second } => write!(
                f,
                "angles {first} and {second} coincide modulo 2π; merge them into one factor"
            ),
            Error::InvalidMultiplicity(m) => write!(f, "multiplicity {m} must be at least 1"),
            Error::InvalidCoefficients(why) => write!(f, "invalid coefficients: {why}"),
            Error::NonRealSymbol { imag } => {
                write!(f, "symbol value has imaginary residue {imag:e}")
            }
            Error::OutOfClass { a1, a2 } => write!(
                f,
                "pentadiagonal symbol outside the admissible class (a1 = {a1}, a2 = {a2}): need a2 > 0 and |a1/a2| <= 4"
            ),
            Error::SizeTooSmall { size, min } => {
                write!(f, "matrix size {size} is below the band width {min}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotHermitian => write!(f, "matrix is not Hermitian"),
            Error::ComplexHankel => write!(
                f,
                "classic Neumann condition requires real Fourier coefficients"
            ),
            Error::UnsupportedBoundary(why) => write!(f, "unsupported boundary condition: {why}"),
            Error::NoConvergence { sweeps, off_norm } => write!(
                f,
                "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
            ),
            Error::DuplicateNode { first, second } => {
                write!(f, "nodes {first} and {second} coincide")
            }
            Error::NonUnimodularNode(i) => write!(f, "node {i} is not on the unit circle"),
            Error::KernelMismatch { expected, found } => write!(
                f,
                "kernel dimension {found} differs from the expected {expected}"
            ),
        }
    }
}

impl core::error::Error for Error {}
