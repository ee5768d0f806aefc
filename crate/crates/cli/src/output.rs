//! Byte-stable text output: CSV cells with 17 significant digits and
//! JSON through `serde_json`.

use std::fs;
use std::io::Write;

use serde::Serialize;
use toeplitz_bracket::{HermitianMatrix, Symbol, C64};

use crate::args::OutputArgs;
use crate::error::{CliError, CliResult};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// `-0.0` prints as `0`.
pub fn unsigned_zero(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

pub fn real(x: f64) -> String {
    format!("{:.16e}", unsigned_zero(x))
}

/// `a+bi` or `a-bi`.
pub fn complex(z: C64) -> String {
    let im = unsigned_zero(z.im);
    let sign = if im.is_sign_negative() { '-' } else { '+' };
    format!("{}{sign}{:.16e}i", real(z.re), im.abs())
}

pub fn matrix_rows(m: &HermitianMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.dim() {
        let cells: Vec<String> = m.row(i).iter().map(|&z| complex(z)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[derive(Debug, Serialize)]
pub struct FactorJson {
    pub angle: f64,
    pub multiplicity: u32,
}

/// Serializes as `{"factors": [...]}` or `{"penta": [a0, a1, a2]}`.
#[derive(Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SymbolJson {
    Factors(Vec<FactorJson>),
    Penta([f64; 3]),
}

impl SymbolJson {
    pub fn new(symbol: &Symbol) -> Self {
        match symbol {
            Symbol::Product(spec) => SymbolJson::Factors(
                spec.factors()
                    .iter()
                    .map(|f| FactorJson {
                        angle: f.angle,
                        multiplicity: f.multiplicity,
                    })
                    .collect(),
            ),
            Symbol::Pentadiagonal { coeffs, .. } => {
                SymbolJson::Penta([coeffs.get(0).re, coeffs.get(1).re, coeffs.get(2).re])
            }
        }
    }

    /// Compact, space-free form for CSV comment lines.
    pub fn label(&self) -> String {
        match self {
            SymbolJson::Factors(f) => {
                let items: Vec<String> = f
                    .iter()
                    .map(|f| format!("{}:{}", f.angle, f.multiplicity))
                    .collect();
                format!("factors:{}", items.join(","))
            }
            SymbolJson::Penta([a0, a1, a2]) => format!("penta:{a0},{a1},{a2}"),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn emit(output: &OutputArgs, content: &str) -> CliResult<()> {
    match &output.out {
        Some(path) => fs::write(path, content).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(CliError::Stdout)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells() {
        assert_eq!(
            complex(C64::new(1.0, -0.5)),
            "1.0000000000000000e0-5.0000000000000000e-1i"
        );
        assert_eq!(
            complex(C64::new(-0.0, -0.0)),
            "0.0000000000000000e0+0.0000000000000000e0i"
        );
        assert_eq!(real(-4.0), "-4.0000000000000000e0");
        assert_eq!(real(0.1), "1.0000000000000001e-1");
    }

    #[test]
    fn cells_round_trip() {
        let s = complex(C64::new(-4.0, 1e-17));
        let split = s[1..].find('+').unwrap() + 1;
        assert_eq!(s[..split].parse::<f64>().unwrap(), -4.0);
        assert_eq!(s[split..s.len() - 1].parse::<f64>().unwrap(), 1e-17);
    }
}
