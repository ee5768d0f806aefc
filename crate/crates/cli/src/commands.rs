use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use toeplitz_bracket::boundary::{
    build_restricted_symbol, classic_neumann, dirichlet_from_neumann, BoundaryKind, Side,
};
use toeplitz_bracket::spectra::{check_bracketing, check_bracketing_with, gap_scan};
use toeplitz_bracket::symbol::circular_distance;
use toeplitz_bracket::toeplitz::{circulant_periodic, direct_sum, toeplitz_finite};
use toeplitz_bracket::{
    BracketReport, HermitianMatrix, NeumannVariant, Symbol, SymbolSpec, TWO_PI,
};

use crate::args::{
    BoundaryPair, CheckArgs, CoeffsArgs, ExportArgs, Format, GapArgs, MatrixKind, SuiteArgs,
    SymbolArgs,
};
use crate::error::{CliError, CliResult};
use crate::output::{
    emit, matrix_rows, real, to_json, unsigned_zero, FactorJson, SymbolJson, VERSION,
};

/// Whether every verification in a command held.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Verified,
    Failed,
}

fn symbol(args: &SymbolArgs) -> CliResult<Symbol> {
    match (&args.factors, &args.penta) {
        (Some(f), None) => Ok(Symbol::from(SymbolSpec::new(&f.0)?)),
        (None, Some(p)) => Ok(Symbol::pentadiagonal(p.0, p.1, p.2)?),
        _ => Err(CliError::Usage(
            "give exactly one of --factors and --penta".into(),
        )),
    }
}

#[derive(Serialize)]
struct Coefficient {
    k: isize,
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct Decomposition {
    scale: f64,
    b: f64,
    shift: f64,
    factors: Vec<FactorJson>,
}

#[derive(Serialize)]
struct Sample {
    x: f64,
    value: f64,
}

#[derive(Serialize)]
struct CoeffsReport {
    command: &'static str,
    symbol: SymbolJson,
    half_bandwidth: usize,
    coefficients: Vec<Coefficient>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decomposition: Option<Decomposition>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    eval: Vec<Sample>,
    version: &'static str,
}

pub fn coeffs(args: &CoeffsArgs) -> CliResult<Outcome> {
    let sym = symbol(&args.symbol)?;
    let coeffs = sym.coefficients();
    let n = coeffs.half_bandwidth() as isize;
    let coefficients: Vec<Coefficient> = (-n..=n)
        .map(|k| {
            let a = coeffs.get(k);
            Coefficient {
                k,
                re: unsigned_zero(a.re),
                im: unsigned_zero(a.im),
            }
        })
        .collect();
    let decomposition = match &sym {
        Symbol::Pentadiagonal {
            decomposition: d, ..
        } => Some(Decomposition {
            scale: d.scale,
            b: d.b,
            shift: d.shift,
            factors: d
                .spec
                .factors()
                .iter()
                .map(|f| FactorJson {
                    angle: f.angle,
                    multiplicity: f.multiplicity,
                })
                .collect(),
        }),
        Symbol::Product(_) => None,
    };
    let eval = args
        .eval
        .iter()
        .map(|&x| {
            let value = match &sym {
                Symbol::Product(spec) => spec.evaluate(x),
                Symbol::Pentadiagonal { coeffs, .. } => coeffs.evaluate(x)?,
            };
            Ok(Sample { x, value })
        })
        .collect::<CliResult<Vec<_>>>()?;
    let report = CoeffsReport {
        command: "coeffs",
        symbol: SymbolJson::new(&sym),
        half_bandwidth: n as usize,
        coefficients,
        decomposition,
        eval,
        version: VERSION,
    };

    let text = match args.output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = format!("# symbol={} N={n}\n", report.symbol.label());
            if let Some(d) = &report.decomposition {
                s.push_str(&format!(
                    "# decomposition scale={} b={} shift={}\n",
                    real(d.scale),
                    real(d.b),
                    real(d.shift)
                ));
            }
            for e in &report.eval {
                s.push_str(&format!("# eval x={} value={}\n", real(e.x), real(e.value)));
            }
            s.push_str("k,re,im\n");
            for c in &report.coefficients {
                s.push_str(&format!("{},{},{}\n", c.k, real(c.re), real(c.im)));
            }
            s
        }
    };
    emit(&args.output, &text)?;
    Ok(Outcome::Verified)
}

#[derive(Serialize)]
struct Sizes {
    total: usize,
    first: usize,
    second: usize,
}

#[derive(Serialize)]
struct Margins {
    floor_nn: f64,
    nn_vs_0n: f64,
    lower: f64,
    upper: f64,
}

#[derive(Serialize)]
struct VerdictsJson {
    floor_nn: bool,
    nn_vs_0n: bool,
    lower: bool,
    upper: bool,
}

#[derive(Serialize)]
struct CheckReport {
    command: &'static str,
    symbol: SymbolJson,
    sizes: Sizes,
    neumann: &'static str,
    norm: f64,
    infimum: f64,
    margins: Margins,
    verdicts: VerdictsJson,
    all_hold: bool,
    tol: f64,
    version: &'static str,
}

fn variant_name(v: NeumannVariant) -> &'static str {
    match v {
        NeumannVariant::Modified => "modified",
        NeumannVariant::Classic => "classic",
    }
}

fn margins(r: &BracketReport) -> Margins {
    Margins {
        floor_nn: r.floor_nn,
        nn_vs_0n: r.nn_vs_0n,
        lower: r.lower,
        upper: r.upper,
    }
}

pub fn check(args: &CheckArgs) -> CliResult<Outcome> {
    if args.tol.is_nan() || args.tol < 0.0 {
        return Err(CliError::Usage("--tol must be non-negative".into()));
    }
    let sym = symbol(&args.symbol)?;
    let variant = if args.classic_neumann {
        NeumannVariant::Classic
    } else {
        NeumannVariant::Modified
    };
    let (first, second) = args.split;
    let r = check_bracketing_with(&sym, first, second, args.tol, variant)?;
    let v = r.verdicts();
    let report = CheckReport {
        command: "check",
        symbol: SymbolJson::new(&sym),
        sizes: Sizes {
            total: r.size,
            first,
            second,
        },
        neumann: variant_name(variant),
        norm: r.norm,
        infimum: sym.infimum(),
        margins: margins(&r),
        verdicts: VerdictsJson {
            floor_nn: v.floor_nn,
            nn_vs_0n: v.nn_vs_0n,
            lower: v.lower,
            upper: v.upper,
        },
        all_hold: v.all(),
        tol: args.tol,
        version: VERSION,
    };
    let text = match args.output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&report),
        Format::Csv => format!(
            "# symbol={} neumann={} tol={}\nL,L1,L2,floor_nn,nn_vs_0n,lower,upper,all_hold\n{},{first},{second},{},{},{},{},{}\n",
            report.symbol.label(),
            report.neumann,
            real(args.tol),
            r.size,
            real(r.floor_nn),
            real(r.nn_vs_0n),
            real(r.lower),
            real(r.upper),
            report.all_hold
        ),
    };
    emit(&args.output, &text)?;
    Ok(if report.all_hold {
        Outcome::Verified
    } else {
        Outcome::Failed
    })
}

#[derive(Serialize)]
struct GapRow {
    size: usize,
    kernel_count: usize,
    gap: f64,
    scaled_gap: f64,
}

#[derive(Serialize)]
struct GapSummary {
    slope: Option<f64>,
    #[serde(rename = "C")]
    constant: f64,
    alpha_max: u32,
}

#[derive(Serialize)]
struct GapJson {
    command: &'static str,
    symbol: SymbolJson,
    records: Vec<GapRow>,
    #[serde(flatten)]
    summary: GapSummary,
    intercept: Option<f64>,
    version: &'static str,
}

pub fn gap(args: &GapArgs) -> CliResult<Outcome> {
    let spec = SymbolSpec::new(&args.factors.0)?;
    let report = gap_scan(&spec, &args.sizes)?;
    let power = 2 * report.alpha_max as i32;
    let rows: Vec<GapRow> = report
        .records
        .iter()
        .map(|r| GapRow {
            size: r.size,
            kernel_count: r.kernel_count,
            gap: r.gap,
            scaled_gap: r.gap * (r.size as f64).powi(power),
        })
        .collect();
    let summary = GapSummary {
        slope: report.slope,
        constant: report.constant,
        alpha_max: report.alpha_max,
    };
    let text = match args.output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&GapJson {
            command: "gap",
            symbol: SymbolJson::new(&Symbol::from(spec)),
            records: rows,
            summary,
            intercept: report.intercept,
            version: VERSION,
        }),
        Format::Csv => {
            let mut s = format!(
                "# {}\nL,kernel_count,gap,gap_times_L^{power}\n",
                serde_json::to_string(&summary).expect("summary serializes")
            );
            for r in &rows {
                s.push_str(&format!(
                    "{},{},{},{}\n",
                    r.size,
                    r.kernel_count,
                    real(r.gap),
                    real(r.scaled_gap)
                ));
            }
            s
        }
    };
    emit(&args.output, &text)?;
    Ok(Outcome::Verified)
}

fn boundary_kind(c: char) -> BoundaryKind {
    match c {
        'n' => BoundaryKind::ModifiedNeumann,
        'd' => BoundaryKind::ModifiedDirichlet,
        'c' => BoundaryKind::ClassicNeumann,
        _ => BoundaryKind::Simple,
    }
}

/// `T^{0,N}_{L1} ⊕ T^{N,0}_{L2}` and the Dirichlet partner for the chosen
/// Neumann condition.
fn split_pair(
    sym: &Symbol,
    full: &HermitianMatrix,
    (first, second): (usize, usize),
    classic: bool,
) -> CliResult<(HermitianMatrix, HermitianMatrix)> {
    use BoundaryKind::{ModifiedDirichlet, ModifiedNeumann, Simple};
    if classic {
        let coeffs = sym.coefficients();
        let n1 = classic_neumann(&coeffs, first, Side::Right)?;
        let n2 = classic_neumann(&coeffs, second, Side::Left)?;
        let d = dirichlet_from_neumann(full, &n1, &n2)?;
        Ok((direct_sum(&n1, &n2), d))
    } else {
        let n = direct_sum(
            &build_restricted_symbol(sym, first, Simple, ModifiedNeumann)?,
            &build_restricted_symbol(sym, second, ModifiedNeumann, Simple)?,
        );
        let d = direct_sum(
            &build_restricted_symbol(sym, first, Simple, ModifiedDirichlet)?,
            &build_restricted_symbol(sym, second, ModifiedDirichlet, Simple)?,
        );
        Ok((n, d))
    }
}

fn matrix_name(kind: MatrixKind) -> &'static str {
    match kind {
        MatrixKind::Toeplitz => "toeplitz",
        MatrixKind::Circulant => "circulant",
        MatrixKind::Restricted => "restricted",
        MatrixKind::LowerDiff => "lower-diff",
        MatrixKind::UpperDiff => "upper-diff",
        MatrixKind::Lap2Diff => "lap2-diff",
        MatrixKind::PeriodicDiff => "periodic-diff",
    }
}

#[derive(Serialize)]
struct ExportJson {
    command: &'static str,
    dim: usize,
    symbol: SymbolJson,
    bc: String,
    matrix: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    split: Option<[usize; 2]>,
    /// Row-major `[re, im]` pairs.
    rows: Vec<Vec<[f64; 2]>>,
    version: &'static str,
}

pub fn export(args: &ExportArgs) -> CliResult<Outcome> {
    let sym = symbol(&args.symbol)?;
    let needs_split = matches!(
        args.matrix,
        MatrixKind::LowerDiff | MatrixKind::UpperDiff | MatrixKind::Lap2Diff
    );
    let split = match (needs_split, args.split) {
        (true, None) => {
            return Err(CliError::Usage(format!(
                "--matrix {} needs --split L1,L2",
                matrix_name(args.matrix)
            )))
        }
        (true, Some(s)) => Some(s),
        (false, _) => None,
    };
    let size = match (args.size, split) {
        (Some(l), Some((a, b))) if l != a + b => {
            return Err(CliError::Usage(format!(
                "--size {l} does not equal L1 + L2 = {}",
                a + b
            )))
        }
        (Some(l), _) => l,
        (None, Some((a, b))) => a + b,
        (None, None) => return Err(CliError::Usage("--size is required".into())),
    };

    let coeffs = sym.coefficients();
    let classic = args.classic_neumann || args.matrix == MatrixKind::Lap2Diff;
    let neumann_label = if classic { "cc" } else { "nn" };
    let (matrix, bc) = match args.matrix {
        MatrixKind::Toeplitz => (toeplitz_finite(&coeffs, size)?, "00".to_string()),
        MatrixKind::Circulant => (circulant_periodic(&coeffs, size)?, "per".to_string()),
        MatrixKind::Restricted => {
            let BoundaryPair { left, right } = args.bc;
            let m = build_restricted_symbol(&sym, size, boundary_kind(left), boundary_kind(right))?;
            (m, args.bc.label())
        }
        MatrixKind::LowerDiff | MatrixKind::Lap2Diff | MatrixKind::UpperDiff => {
            let split = split.expect("checked above");
            let full = toeplitz_finite(&coeffs, size)?;
            let (n, d) = split_pair(&sym, &full, split, classic)?;
            let m = if args.matrix == MatrixKind::UpperDiff {
                d.try_sub(&full)?
            } else {
                full.try_sub(&n)?
            };
            (m, neumann_label.to_string())
        }
        MatrixKind::PeriodicDiff => {
            let per = circulant_periodic(&coeffs, size)?;
            let nn = build_restricted_symbol(
                &sym,
                size,
                BoundaryKind::ModifiedNeumann,
                BoundaryKind::ModifiedNeumann,
            )?;
            (per.try_sub(&nn)?, "nn".to_string())
        }
    };

    let symbol_json = SymbolJson::new(&sym);
    let text = match args.output.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut s = format!(
                "# dim={size} symbol={} bc={bc} matrix={}",
                symbol_json.label(),
                matrix_name(args.matrix)
            );
            if let Some((a, b)) = split {
                s.push_str(&format!(" split={a},{b}"));
            }
            s.push('\n');
            s.push_str(&matrix_rows(&matrix));
            s
        }
        Format::Json => to_json(&ExportJson {
            command: "export",
            dim: size,
            symbol: symbol_json,
            bc,
            matrix: matrix_name(args.matrix),
            split: split.map(|(a, b)| [a, b]),
            rows: (0..size)
                .map(|i| {
                    matrix
                        .row(i)
                        .iter()
                        .map(|z| [unsigned_zero(z.re), unsigned_zero(z.im)])
                        .collect()
                })
                .collect(),
            version: VERSION,
        }),
    };
    emit(&args.output, &text)?;
    Ok(Outcome::Verified)
}

#[derive(Serialize)]
struct SuiteCase {
    factors: Vec<FactorJson>,
    split: [usize; 2],
    norm: f64,
    margins: Margins,
    all_hold: bool,
}

#[derive(Serialize)]
struct SuiteReport {
    command: &'static str,
    seed: u64,
    count: usize,
    rel_tol: f64,
    worst_relative_margin: f64,
    failures: usize,
    cases: Vec<SuiteCase>,
    version: &'static str,
}

fn random_spec(rng: &mut ChaCha8Rng, max_factors: usize, max_alpha: u32) -> SymbolSpec {
    loop {
        let n = rng.gen_range(1..=max_factors);
        let mut factors: Vec<(f64, u32)> = Vec::with_capacity(n);
        while factors.len() < n {
            let angle = rng.gen_range(0.0..TWO_PI);
            if factors
                .iter()
                .all(|&(e, _)| circular_distance(e, angle) > 1e-3)
            {
                factors.push((angle, rng.gen_range(1..=max_alpha)));
            }
        }
        if let Ok(spec) = SymbolSpec::new(&factors) {
            return spec;
        }
    }
}

pub fn suite(args: &SuiteArgs) -> CliResult<Outcome> {
    if args.max_factors == 0 || args.max_alpha == 0 {
        return Err(CliError::Usage(
            "--max-factors and --max-alpha must be positive".into(),
        ));
    }
    let min_part = 2 * args.max_factors * args.max_alpha as usize + 1;
    if args.max_size < 2 * min_part {
        return Err(CliError::Usage(format!(
            "--max-size must be at least {} for these factor limits",
            2 * min_part
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut cases = Vec::with_capacity(args.count);
    let mut worst = f64::INFINITY;
    for _ in 0..args.count {
        let spec = random_spec(&mut rng, args.max_factors, args.max_alpha);
        let min = 2 * spec.degree() + 1;
        let first = rng.gen_range(min..=args.max_size - min);
        let second = rng.gen_range(min..=args.max_size - first);
        let sym = Symbol::from(spec.clone());
        let norm = toeplitz_finite(&sym.coefficients(), first + second)?.norm_inf();
        let r = check_bracketing(&sym, first, second, args.rel_tol * norm)?;
        worst = worst.min(r.worst_margin() / norm);
        cases.push(SuiteCase {
            factors: spec
                .factors()
                .iter()
                .map(|f| FactorJson {
                    angle: f.angle,
                    multiplicity: f.multiplicity,
                })
                .collect(),
            split: [first, second],
            norm,
            margins: margins(&r),
            all_hold: r.all_hold(),
        });
    }
    let failures = cases.iter().filter(|c| !c.all_hold).count();
    let report = SuiteReport {
        command: "suite",
        seed: args.seed,
        count: args.count,
        rel_tol: args.rel_tol,
        worst_relative_margin: worst,
        failures,
        cases,
        version: VERSION,
    };
    let text = match args.output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&report),
        Format::Csv => {
            let mut s = format!(
                "# seed={} count={} rel_tol={} failures={failures}\ncase,factors,L1,L2,floor_nn,nn_vs_0n,lower,upper,all_hold\n",
                args.seed,
                args.count,
                real(args.rel_tol)
            );
            for (i, c) in report.cases.iter().enumerate() {
                let factors: Vec<String> = c
                    .factors
                    .iter()
                    .map(|f| format!("{}:{}", f.angle, f.multiplicity))
                    .collect();
                s.push_str(&format!(
                    "{i},{},{},{},{},{},{},{},{}\n",
                    factors.join(";"),
                    c.split[0],
                    c.split[1],
                    real(c.margins.floor_nn),
                    real(c.margins.nn_vs_0n),
                    real(c.margins.lower),
                    real(c.margins.upper),
                    c.all_hold
                ));
            }
            s
        }
    };
    emit(&args.output, &text)?;
    Ok(if failures == 0 {
        Outcome::Verified
    } else {
        Outcome::Failed
    })
}
