use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "tbracket",
    version,
    about = "Boundary conditions and Dirichlet-Neumann bracketing for banded Hermitian Toeplitz matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Fourier coefficients a_{-N..N} of a symbol.
    Coeffs(CoeffsArgs),
    /// Certify the bracketing chain on a split L = L1 + L2.
    Check(CheckArgs),
    /// Scan the spectral gap of T^{N,N} over a list of sizes.
    Gap(GapArgs),
    /// Write a matrix as CSV or JSON.
    Export(ExportArgs),
    /// Run the bracketing check on seeded random symbols.
    Suite(SuiteArgs),
}

/// Exactly one of the two symbol forms.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct SymbolArgs {
    /// Product symbol as `E:alpha,...`; angles accept `pi`, e.g. `pi/3:1,-2*pi/5:2`.
    #[arg(long, value_parser = parse_factors, allow_hyphen_values = true)]
    pub factors: Option<FactorList>,
    /// Real pentadiagonal symbol `a0,a1,a2`.
    #[arg(long, value_parser = parse_penta, allow_hyphen_values = true)]
    pub penta: Option<Penta>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    #[command(flatten)]
    pub symbol: SymbolArgs,
    /// Also evaluate the symbol at these points.
    #[arg(long, value_parser = parse_angle, value_delimiter = ',', allow_hyphen_values = true)]
    pub eval: Vec<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub symbol: SymbolArgs,
    /// `L1,L2`.
    #[arg(long, value_parser = parse_split)]
    pub split: (usize, usize),
    /// Absolute tolerance on every margin.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Use the Toeplitz-plus-Hankel Neumann condition instead of the modified one.
    #[arg(long)]
    pub classic_neumann: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct GapArgs {
    #[arg(long, value_parser = parse_factors, allow_hyphen_values = true)]
    pub factors: FactorList,
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    /// Plain truncation T_L.
    Toeplitz,
    /// Periodic restriction T^per_L.
    Circulant,
    /// T_L with the boundary conditions given by `--bc`.
    Restricted,
    /// T_L − (T^{0,N}_{L1} ⊕ T^{N,0}_{L2}).
    #[value(alias = "difference")]
    LowerDiff,
    /// (T^{0,D}_{L1} ⊕ T^{D,0}_{L2}) − T_L.
    UpperDiff,
    /// `lower-diff` with the classic Neumann condition.
    Lap2Diff,
    /// T^per_L − T^{N,N}_L.
    PeriodicDiff,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub symbol: SymbolArgs,
    #[arg(long)]
    pub size: Option<usize>,
    /// `L1,L2` for the difference matrices.
    #[arg(long, value_parser = parse_split)]
    pub split: Option<(usize, usize)>,
    #[arg(long, value_enum, default_value_t = MatrixKind::Restricted)]
    pub matrix: MatrixKind,
    /// Left and right boundary kinds, each one of `0` (none), `n` (modified
    /// Neumann), `d` (modified Dirichlet), `c` (classic Neumann).
    #[arg(long, value_parser = parse_bc, default_value = "nn")]
    pub bc: BoundaryPair,
    /// Use the classic Neumann condition in `lower-diff`/`upper-diff`.
    #[arg(long)]
    pub classic_neumann: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 50)]
    pub count: usize,
    /// Largest number of distinct factors.
    #[arg(long, default_value_t = 3)]
    pub max_factors: usize,
    #[arg(long, default_value_t = 2)]
    pub max_alpha: u32,
    /// Upper bound on L = L1 + L2.
    #[arg(long, default_value_t = 60)]
    pub max_size: usize,
    /// Tolerance relative to ‖T_L‖_∞.
    #[arg(long, default_value_t = 1e-9)]
    pub rel_tol: f64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FactorList(pub Vec<(f64, u32)>);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Penta(pub f64, pub f64, pub f64);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryPair {
    pub left: char,
    pub right: char,
}

impl BoundaryPair {
    pub fn label(&self) -> String {
        format!("{}{}", self.left, self.right)
    }
}

/// Decimal literal, `pi`, or a product/quotient with `pi` such as `2*pi/3`,
/// optionally negated.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let (negative, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim_start()),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    if body.is_empty() {
        return Err(format!("empty angle in `{s}`"));
    }
    let (numerator, denominator) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (body, None),
    };
    let mut value = 1.0;
    for part in numerator.split('*') {
        value *= parse_term(part.trim()).map_err(|e| format!("{e} in `{s}`"))?;
    }
    if let Some(d) = denominator {
        let d = parse_term(d).map_err(|e| format!("{e} in `{s}`"))?;
        if d == 0.0 {
            return Err(format!("division by zero in `{s}`"));
        }
        value /= d;
    }
    if !value.is_finite() {
        return Err(format!("angle `{s}` is not finite"));
    }
    Ok(if negative { -value } else { value })
}

fn parse_term(t: &str) -> Result<f64, String> {
    if t.eq_ignore_ascii_case("pi") {
        return Ok(std::f64::consts::PI);
    }
    t.parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| format!("cannot read `{t}` as a number or `pi`"))
}

/// `E:alpha,...`; a missing `:alpha` means multiplicity one.
pub fn parse_factors(s: &str) -> Result<FactorList, String> {
    let mut factors = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        if item.is_empty() {
            return Err(format!("empty factor in `{s}`"));
        }
        let (angle, alpha) = match item.rsplit_once(':') {
            Some((a, m)) => {
                let m: u32 = m
                    .trim()
                    .parse()
                    .map_err(|_| format!("multiplicity `{m}` is not a positive integer"))?;
                (a, m)
            }
            None => (item, 1),
        };
        if alpha == 0 {
            return Err(format!("multiplicity of `{item}` must be at least 1"));
        }
        factors.push((parse_angle(angle)?, alpha));
    }
    Ok(FactorList(factors))
}

pub fn parse_penta(s: &str) -> Result<Penta, String> {
    let values: Vec<f64> = s
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| format!("cannot read `{v}` as a number"))
        })
        .collect::<Result<_, _>>()?;
    match values[..] {
        [a0, a1, a2] => Ok(Penta(a0, a1, a2)),
        _ => Err(format!(
            "expected three values a0,a1,a2, got {}",
            values.len()
        )),
    }
}

pub fn parse_split(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts[..] {
        [a, b] => {
            let read = |v: &str| {
                v.parse::<usize>()
                    .map_err(|_| format!("`{v}` is not a non-negative integer"))
            };
            Ok((read(a)?, read(b)?))
        }
        _ => Err(format!("expected L1,L2, got `{s}`")),
    }
}

pub fn parse_bc(s: &str) -> Result<BoundaryPair, String> {
    let chars: Vec<char> = s.trim().to_ascii_lowercase().chars().collect();
    match chars[..] {
        [left, right] if "0ndc".contains(left) && "0ndc".contains(right) => {
            Ok(BoundaryPair { left, right })
        }
        _ => Err(format!(
            "expected two letters from 0, n, d, c (left then right), got `{s}`"
        )),
    }
}
