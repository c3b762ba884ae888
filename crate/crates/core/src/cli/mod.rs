//! Command-line front end: `bound`, `audit` and `oracle`.
//!
//! Exit codes: 0 ok, 2 parse/input error, 3 unsupported operator and
//! dimension, 4 bound-ordering violation, 5 infeasible LP, 1 anything else.

pub mod output;

use crate::error::BoundsError;
use crate::geometry::{DomainShape, ShapeDocument};
use crate::minimizer::{
    dimension_constants, scaled_mass, sigma_exact, MinimizationInput, MinimizerProfile,
};
use crate::operator::{bound_exact, lemma_beta, ml_constants, theorem_beta, OperatorKind};
use crate::verification::{
    audit_with_spectrum, box_spectrum_with_workers, lp_minimize, quadrature_moment, SpectrumSample,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{num, Cell, Document, Format};
use serde_json::{json, Map, Value};
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;
pub const EXIT_INFEASIBLE: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "spectral-bounds", version, about = "Lower bounds for sums of Dirichlet eigenvalues")]
pub struct Cli {
    /// Print a version banner on stderr and extra constants.
    #[arg(long, global = true)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every bound for one operator and domain.
    Bound(BoundArgs),
    /// Check the bound ordering (and exact box spectra) for m = 1..=m_max.
    Audit(AuditArgs),
    /// Compare the closed-form minimum with a discretised LP and quadrature.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OperatorArg {
    Laplace,
    Stokes,
    Bilaplace,
}

impl From<OperatorArg> for OperatorKind {
    fn from(o: OperatorArg) -> Self {
        match o {
            OperatorArg::Laplace => OperatorKind::DirichletLaplacian,
            OperatorArg::Stokes => OperatorKind::Stokes,
            OperatorArg::Bilaplace => OperatorKind::DirichletBilaplacian,
        }
    }
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Shape document (JSON).
    #[arg(long)]
    pub shape: PathBuf,
    #[arg(long, value_enum, default_value = "laplace")]
    pub operator: OperatorArg,
    /// Integer `m` or inclusive range `a..b`.
    #[arg(long)]
    pub m: String,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long)]
    pub shape: PathBuf,
    #[arg(long, value_enum, default_value = "laplace")]
    pub operator: OperatorArg,
    #[arg(long = "m-max")]
    pub m_max: usize,
    /// Eigenvalues to audit instead of the exact box spectrum (CSV, first column).
    #[arg(long)]
    pub spectrum: Option<PathBuf>,
    /// Threads for lattice enumeration. Output does not depend on it.
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Dimension n.
    #[arg(long = "dim", visible_alias = "n")]
    pub dim: usize,
    /// Cap M.
    #[arg(long = "cap", visible_alias = "M")]
    pub cap: f64,
    /// Slope bound L.
    #[arg(long = "slope", visible_alias = "L")]
    pub slope: f64,
    /// Mass m (real).
    #[arg(long = "mass", visible_alias = "m")]
    pub mass: f64,
    #[arg(long, default_value_t = 400)]
    pub grid: usize,
    /// Grid extent; defaults to 1.25 times the support of the minimiser.
    #[arg(long = "r-max")]
    pub r_max: Option<f64>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

/// Command failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
    /// Output that should still be emitted (audit rows with a violation).
    pub document: Option<Box<(Document, Format)>>,
}

impl From<BoundsError> for Failure {
    fn from(e: BoundsError) -> Self {
        let code = match e {
            BoundsError::Parse(_)
            | BoundsError::InvalidInput(_)
            | BoundsError::DegenerateShape(_)
            | BoundsError::Dimension(_)
            | BoundsError::ScaledMassBelowOne(_) => EXIT_PARSE,
            BoundsError::Unsupported { .. } => EXIT_UNSUPPORTED,
            BoundsError::Violation { .. } => EXIT_VIOLATION,
            BoundsError::Infeasible(_) => EXIT_INFEASIBLE,
            _ => EXIT_FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
            document: None,
        }
    }
}

/// Runs a parsed command, writing data to `out` and diagnostics to `err`.
pub fn run<O: Write, E: Write>(cli: &Cli, out: &mut O, err: &mut E) -> i32 {
    if cli.verbose {
        let _ = writeln!(err, "spectral-bounds {}", env!("CARGO_PKG_VERSION"));
    }
    let result = match &cli.command {
        Command::Bound(a) => cmd_bound(a, cli.verbose).map(|d| (d, a.format)),
        Command::Audit(a) => cmd_audit(a).map(|d| (d, a.format)),
        Command::Oracle(a) => cmd_oracle(a).map(|d| (d, a.format)),
    };
    match result {
        Ok((doc, format)) => match doc.write(format, out) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_FAILURE
            }
        },
        Err(f) => {
            if let Some(pair) = &f.document {
                let _ = pair.0.write(pair.1, out);
            }
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// `a` or `a..b`, inclusive, `a ≥ 1`.
pub fn parse_m_range(text: &str) -> Result<Vec<usize>, BoundsError> {
    let bad = || BoundsError::Parse(format!("`{text}` is not an integer m or range a..b"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let v: usize = text.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo == 0 || hi < lo {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn load_shape(path: &Path) -> Result<(DomainShape, ShapeDocument), BoundsError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| BoundsError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let doc = ShapeDocument::from_json(&text)?;
    let shape = doc.clone().into_shape()?;
    Ok((shape, doc))
}

fn check_supported(kind: OperatorKind, n: usize) -> Result<(), BoundsError> {
    if kind == OperatorKind::DirichletBilaplacian && n != 2 {
        return Err(BoundsError::Unsupported {
            operator: kind.name().into(),
            n,
            reason: "the bi-Laplacian theorem form is two-dimensional only".into(),
        });
    }
    Ok(())
}

fn shape_inputs(doc: &ShapeDocument, shape: &DomainShape, kind: OperatorKind) -> Result<Map<String, Value>, BoundsError> {
    let geom = shape.summary()?;
    let (cap, slope) = ml_constants(kind, &geom);
    let mut inputs = Map::new();
    inputs.insert(
        "shape".into(),
        serde_json::to_value(doc).map_err(|e| BoundsError::Parse(e.to_string()))?,
    );
    inputs.insert("operator".into(), json!(kind.name()));
    inputs.insert("dimension".into(), json!(geom.n));
    inputs.insert("volume".into(), num(geom.volume));
    inputs.insert("inertia".into(), num(geom.inertia));
    inputs.insert("M".into(), num(cap));
    inputs.insert("L".into(), num(slope));
    Ok(inputs)
}

pub fn cmd_bound(args: &BoundArgs, verbose: bool) -> Result<Document, Failure> {
    let kind: OperatorKind = args.operator.into();
    let ms = parse_m_range(&args.m)?;
    let (shape, doc) = load_shape(&args.shape)?;
    let geom = shape.summary()?;
    check_supported(kind, geom.n)?;

    let mut inputs = shape_inputs(&doc, &shape, kind)?;
    inputs.insert("m".into(), json!(args.m.trim()));
    let mut rows = Vec::with_capacity(ms.len());
    let mut degenerate = 0usize;
    for m in &ms {
        let r = bound_exact(kind, &geom, *m as f64)?;
        degenerate += r.degenerate as usize;
        rows.push(vec![
            Cell::Int(*m),
            r.liyau.into(),
            r.melas.into(),
            r.exact.into(),
            r.asymptotic.into(),
            r.theorem_form.into(),
            r.epsilon.into(),
            r.degenerate.into(),
        ]);
    }
    let mut summary = Map::new();
    summary.insert("rows".into(), json!(rows.len()));
    summary.insert("degenerate_rows".into(), json!(degenerate));
    if verbose {
        if let Ok(b) = theorem_beta(kind, geom.n) {
            summary.insert("beta_theorem".into(), num(b));
        }
        if let Ok(b) = lemma_beta(kind, geom.n) {
            summary.insert("beta_lemma".into(), num(b));
        }
    }
    Ok(Document {
        inputs,
        columns: vec!["m", "liyau", "melas", "exact", "asymptotic", "theorem", "epsilon", "degenerate"],
        rows,
        summary,
    })
}

pub fn cmd_audit(args: &AuditArgs) -> Result<Document, Failure> {
    let kind: OperatorKind = args.operator.into();
    let (shape, doc) = load_shape(&args.shape)?;
    let n = shape.dim();
    check_supported(kind, n)?;
    if args.m_max == 0 {
        return Err(BoundsError::Parse("--m-max must be at least 1".into()).into());
    }
    let spectrum = match (&args.spectrum, kind, &shape) {
        (Some(path), _, _) => {
            let file = std::fs::File::open(path)
                .map_err(|e| BoundsError::Parse(format!("cannot read {}: {e}", path.display())))?;
            Some(SpectrumSample::from_csv(file, kind)?)
        }
        (None, OperatorKind::DirichletLaplacian, DomainShape::Box(b)) => {
            Some(box_spectrum_with_workers(&b.sides, args.m_max, args.workers)?)
        }
        _ => None,
    };
    let report = audit_with_spectrum(kind, &shape, args.m_max, spectrum.as_ref())?;

    let mut inputs = shape_inputs(&doc, &shape, kind)?;
    inputs.insert("m_max".into(), json!(args.m_max));
    inputs.insert(
        "spectrum".into(),
        json!(match (&args.spectrum, report.spectral) {
            (Some(_), _) => "external",
            (None, true) => "exact_box",
            (None, false) => "none",
        }),
    );
    let bad: std::collections::BTreeSet<usize> = report.violations.iter().map(|v| v.m).collect();
    let rows = report
        .rows
        .iter()
        .map(|r| {
            vec![
                Cell::Int(r.m),
                r.spectrum_sum.into(),
                r.exact.into(),
                r.theorem.into(),
                r.liyau.into(),
                r.slack.into(),
                (!bad.contains(&r.m)).into(),
            ]
        })
        .collect();
    let mut summary = Map::new();
    summary.insert("min_slack".into(), num(report.min_slack));
    summary.insert("argmin".into(), json!(report.argmin));
    summary.insert("violations".into(), json!(report.violations.len()));
    if let Some(v) = report.violations.first() {
        summary.insert("first_violation_m".into(), json!(v.m));
        summary.insert("first_violation".into(), json!(v.detail));
    }
    let doc = Document {
        inputs,
        columns: vec!["m", "spectrum_sum", "exact", "theorem", "liyau", "slack", "ok"],
        rows,
        summary,
    };
    match report.ensure_ok() {
        Ok(()) => Ok(doc),
        Err(e) => {
            let mut f = Failure::from(e);
            f.document = Some(Box::new((doc, args.format)));
            Err(f)
        }
    }
}

pub fn cmd_oracle(args: &OracleArgs) -> Result<Document, Failure> {
    let input = MinimizationInput::new(args.dim, args.cap, args.slope, args.mass)?;
    let dc = dimension_constants(args.dim)?;
    let ms = scaled_mass(&input)?;
    let profile = MinimizerProfile::for_input(&input)?;
    let closed = sigma_exact(&input)?;
    let r_max = args.r_max.unwrap_or(1.25 * profile.support_end());
    if args.grid < 2 {
        return Err(BoundsError::Parse("--grid must be at least 2".into()).into());
    }
    let lp = lp_minimize(args.dim, args.cap, args.slope, args.mass, args.grid, r_max)?;
    let gap = (lp.value - closed).abs() / closed;
    let n = args.dim as f64;
    let quad_objective = dc.sigma * quadrature_moment(&profile, n + 1.0);
    let quad_mass = dc.sigma * quadrature_moment(&profile, n - 1.0);

    let mut inputs = Map::new();
    inputs.insert("n".into(), json!(args.dim));
    inputs.insert("M".into(), num(args.cap));
    inputs.insert("L".into(), num(args.slope));
    inputs.insert("m".into(), num(args.mass));
    inputs.insert("grid".into(), json!(args.grid));
    inputs.insert("r_max".into(), num(r_max));
    let (t, height) = match profile {
        MinimizerProfile::PlateauRamp { t, .. } => (Some(t), None),
        MinimizerProfile::Triangular { height, .. } => (None, Some(height)),
    };
    let rows = vec![vec![
        ms.value().into(),
        t.into(),
        height.into(),
        profile.is_degenerate().into(),
        closed.into(),
        lp.value.into(),
        gap.into(),
        ((quad_objective - closed).abs() / closed).into(),
        ((quad_mass - args.mass).abs() / args.mass).into(),
    ]];
    let mut summary = Map::new();
    summary.insert("lp_iterations".into(), json!(lp.iterations));
    summary.insert(
        "regime".into(),
        json!(if profile.is_degenerate() { "degenerate" } else { "plateau" }),
    );
    Ok(Document {
        inputs,
        columns: vec![
            "m_star",
            "t",
            "height",
            "degenerate",
            "closed_form",
            "lp",
            "relative_gap",
            "quadrature_residual",
            "mass_residual",
        ],
        rows,
        summary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_ranges() {
        assert_eq!(parse_m_range("10").unwrap(), vec![10]);
        assert_eq!(parse_m_range("1..5").unwrap(), vec![1, 2, 3, 4, 5]);
        assert!(parse_m_range("0").is_err());
        assert!(parse_m_range("5..1").is_err());
        assert!(parse_m_range("2.5").is_err());
        assert!(parse_m_range("a..b").is_err());
    }

    #[test]
    fn exit_code_map() {
        assert_eq!(Failure::from(BoundsError::Parse("x".into())).code, EXIT_PARSE);
        let u = BoundsError::Unsupported { operator: "bilaplace".into(), n: 3, reason: String::new() };
        assert_eq!(Failure::from(u).code, EXIT_UNSUPPORTED);
        assert_eq!(Failure::from(BoundsError::Violation { m: 1, detail: String::new() }).code, EXIT_VIOLATION);
        assert_eq!(Failure::from(BoundsError::Infeasible(String::new())).code, EXIT_INFEASIBLE);
        assert_eq!(Failure::from(BoundsError::Unbounded).code, EXIT_FAILURE);
    }
}
