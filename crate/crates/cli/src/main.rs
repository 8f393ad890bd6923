//! `kmpi`: real roots, pi-systems, derived Cartan matrices, the summary table
//! and verification runs for rank-2 Kac-Moody algebras.
//!
//! Exit codes: 0 on success, 1 when a check finds a counterexample or a
//! system is not a pi-system, 2 on usage or regime errors.

mod render;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use kmpi::classifier::{summary_table, TableRow};
use kmpi::pi_systems::{
    compute_gcm_of_system, enumerate_pi_systems, enumerate_real_roots, is_pi_system, Mode,
    PiSystem, PiVerdict, Provenance, Sign, SignedRoot,
};
use kmpi::root_core::norm_scaled;
use kmpi::verifier::{run_all, run_check, CheckId, CheckReport, CheckTarget};
use kmpi::{
    classify_root, enumerate_finite_roots, CartanType, Error, Family, Gcm2, Regime, RootClass,
    RootVec,
};

use render::{matrix_text, Format, Render};

const BOUND_ENV: &str = "KMPI_DEFAULT_BOUND";
const DEFAULT_GRID: &str = "2,2;3,2;3,3;5,1";

#[derive(Parser)]
#[command(
    name = "kmpi",
    version,
    about = "Root combinatorics of rank-2 Kac-Moody algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the real roots beta_i^j, or every root for finite type.
    Roots(RootsArgs),
    /// Enumerate pi-systems inside a window of roots.
    PiSystems(PiSystemsArgs),
    /// Derived Cartan matrix of a pi-system given as family:index:sign labels.
    GcmOf(GcmOfArgs),
    /// Rows of the summary table of root generated subalgebras.
    Table(TableArgs),
    /// Run named verification checks.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct RootsArgs {
    /// Cartan matrix entries as `a,b`.
    #[arg(long, value_parser = parse_gcm)]
    gcm: Gcm2,
    /// Largest beta index (ignored for finite type).
    #[arg(long, default_value_t = 5)]
    max_index: usize,
    /// Include the negatives of the listed roots.
    #[arg(long)]
    negatives: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Signs {
    Pos,
    All,
}

#[derive(Args)]
struct PiSystemsArgs {
    #[arg(long, value_parser = parse_gcm)]
    gcm: Gcm2,
    /// Largest beta index; with --extended, the largest coordinate.
    #[arg(long)]
    max_index: usize,
    /// Largest system size (at most 4).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=4))]
    max_size: u64,
    #[arg(long, value_enum, default_value_t = Signs::Pos)]
    signs: Signs,
    /// Allow positive imaginary roots as elements.
    #[arg(long)]
    extended: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct GcmOfArgs {
    #[arg(long, value_parser = parse_gcm)]
    gcm: Gcm2,
    /// Comma-separated labels, e.g. `1:1:+,2:0:+`.
    #[arg(long)]
    system: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_parser = parse_gcm)]
    gcm: Gcm2,
    /// Largest row index j.
    #[arg(long, default_value_t = 3)]
    rows: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy)]
enum CheckArg {
    All,
    One(CheckId),
}

#[derive(Args)]
struct VerifyArgs {
    /// A check id, or `all`.
    #[arg(long, value_parser = parse_check)]
    check: CheckArg,
    #[arg(long, value_parser = parse_gcm, conflicts_with = "grid")]
    gcm: Option<Gcm2>,
    /// Semicolon-separated matrices, e.g. `2,2;3,2;5,1`.
    #[arg(long, value_parser = parse_grid)]
    grid: Option<Grid>,
    /// Index bound; defaults to each check's own bound, or KMPI_DEFAULT_BOUND.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    bound: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Report elapsed_ms as 0 so output is byte-identical across runs.
    #[arg(long)]
    no_timing: bool,
}

fn parse_gcm(s: &str) -> Result<Gcm2, String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected a,b, got {s:?}"))?;
    let int = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| format!("expected a,b with positive integers, got {s:?}"))
    };
    Gcm2::new(int(a)?, int(b)?).map_err(|e| e.to_string())
}

/// Matrices given as `a,b;c,d;...`.
#[derive(Clone)]
struct Grid(Vec<Gcm2>);

fn parse_grid(s: &str) -> Result<Grid, String> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(parse_gcm)
        .collect::<Result<_, _>>()
        .map(Grid)
}

fn parse_check(s: &str) -> Result<CheckArg, String> {
    if s == "all" {
        return Ok(CheckArg::All);
    }
    s.parse::<CheckId>().map(CheckArg::One).map_err(|_| {
        let names: Vec<_> = CheckId::ALL.iter().map(|c| c.name()).collect();
        format!(
            "unknown check {s:?}; expected all or one of {}",
            names.join(", ")
        )
    })
}

/// A failed command: message for stderr and the exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotPiSystem { .. } | Error::Inconsistent(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Text for stdout, optional diagnostics for stderr, exit code.
struct Outcome {
    stdout: String,
    stderr: Vec<String>,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: Vec::new(),
            code: 0,
        }
    }
}

fn gcm_text(g: &Gcm2) -> String {
    format!("{},{}", g.a(), g.b())
}

fn swap_note(g: &Gcm2) -> Option<String> {
    g.was_swapped().then(|| {
        format!(
            "note: input taken as a,b = {} (a >= b); alpha1 and alpha2 are exchanged",
            gcm_text(g)
        )
    })
}

#[derive(Serialize)]
struct RootRow {
    family: Option<Family>,
    index: Option<usize>,
    sign: Option<Sign>,
    vector: RootVec,
    #[serde(with = "kmpi::serde_int::scalar")]
    norm_scaled: BigInt,
    class: RootClass,
}

#[derive(Serialize)]
struct RootsOutput {
    gcm: Gcm2,
    roots: Vec<RootRow>,
}

impl Render for RootsOutput {
    fn headers(&self) -> Vec<&'static str> {
        vec!["family", "index", "sign", "x", "y", "norm_scaled", "class"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        let opt = |v: Option<String>| v.unwrap_or_default();
        self.roots
            .iter()
            .map(|r| {
                vec![
                    opt(r.family.map(|f| f.number().to_string())),
                    opt(r.index.map(|i| i.to_string())),
                    opt(r.sign.map(|s| s.symbol().to_string())),
                    r.vector.x.to_string(),
                    r.vector.y.to_string(),
                    r.norm_scaled.to_string(),
                    r.class.to_string(),
                ]
            })
            .collect()
    }
}

fn cmd_roots(a: &RootsArgs) -> Result<Outcome, Failure> {
    let g = a.gcm;
    let row = |vector: RootVec, label: Option<Provenance>| RootRow {
        family: label.map(|p| p.index.family),
        index: label.map(|p| p.index.j),
        sign: label.map(|p| p.sign),
        norm_scaled: norm_scaled(&g, &vector),
        class: classify_root(&g, &vector),
        vector,
    };
    let roots = if g.regime() == Regime::Finite {
        enumerate_finite_roots(&g)?
            .into_iter()
            .map(|v| row(v, None))
            .collect()
    } else {
        enumerate_real_roots(&g, a.max_index, a.negatives)?
            .into_iter()
            .map(|r| row(r.vec, r.provenance))
            .collect()
    };
    let out = RootsOutput { gcm: g, roots };
    let mut o = Outcome::ok(out.render(a.format));
    o.stderr.extend(swap_note(&g));
    Ok(o)
}

#[derive(Serialize)]
struct SystemRow {
    size: usize,
    literal: String,
    vectors: Vec<RootVec>,
}

#[derive(Serialize)]
struct PiSystemsOutput {
    gcm: Gcm2,
    mode: Mode,
    max_index: usize,
    max_size: usize,
    include_negatives: bool,
    counts: BTreeMap<usize, usize>,
    systems: Vec<SystemRow>,
}

impl PiSystemsOutput {
    fn summary(&self) -> String {
        let parts: Vec<_> = self
            .counts
            .iter()
            .map(|(size, n)| format!("size {size}: {n}"))
            .collect();
        format!("{} pi-systems ({})", self.systems.len(), parts.join(", "))
    }
}

impl Render for PiSystemsOutput {
    fn headers(&self) -> Vec<&'static str> {
        vec!["size", "system", "vectors"]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.systems
            .iter()
            .map(|s| {
                let vs: Vec<_> = s.vectors.iter().map(|v| v.to_string()).collect();
                vec![s.size.to_string(), s.literal.clone(), vs.join(" ")]
            })
            .collect()
    }

    fn footer(&self) -> Vec<String> {
        vec![self.summary()]
    }
}

fn cmd_pi_systems(a: &PiSystemsArgs) -> Result<Outcome, Failure> {
    let g = a.gcm;
    let negatives = a.signs == Signs::All;
    if a.extended && negatives {
        return Err(usage(
            "--extended takes positive roots only; use --signs pos",
        ));
    }
    let mode = if a.extended {
        Mode::Extended
    } else {
        Mode::Standard
    };
    let systems = enumerate_pi_systems(&g, a.max_index, a.max_size as usize, negatives, mode)?;
    let mut counts = BTreeMap::new();
    for s in &systems {
        *counts.entry(s.len()).or_insert(0) += 1;
    }
    let out = PiSystemsOutput {
        gcm: g,
        mode,
        max_index: a.max_index,
        max_size: a.max_size as usize,
        include_negatives: negatives,
        counts,
        systems: systems
            .iter()
            .map(|s| SystemRow {
                size: s.len(),
                literal: s.literal(),
                vectors: s.vectors().cloned().collect(),
            })
            .collect(),
    };
    let mut o = Outcome::ok(out.render(a.format));
    o.stderr.push(out.summary());
    o.stderr.extend(swap_note(&g));
    Ok(o)
}

#[derive(Serialize)]
struct GcmOfOutput {
    gcm: Gcm2,
    system: String,
    #[serde(with = "kmpi::serde_int::matrix")]
    matrix: Vec<Vec<BigInt>>,
    #[serde(with = "kmpi::serde_int::scalar")]
    determinant: BigInt,
    symmetric: bool,
    cartan_type: Option<CartanType>,
}

impl Render for GcmOfOutput {
    fn headers(&self) -> Vec<&'static str> {
        vec![
            "system",
            "matrix",
            "determinant",
            "symmetric",
            "cartan_type",
        ]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.system.clone(),
            matrix_text(&self.matrix),
            self.determinant.to_string(),
            self.symmetric.to_string(),
            self.cartan_type.map(|t| t.to_string()).unwrap_or_default(),
        ]]
    }
}

#[derive(Serialize)]
struct ViolationOutput {
    gcm: Gcm2,
    system: String,
    pi_system: bool,
    first: String,
    second: String,
    difference: RootVec,
    difference_class: RootClass,
}

impl Render for ViolationOutput {
    fn headers(&self) -> Vec<&'static str> {
        vec![
            "system",
            "pi_system",
            "first",
            "second",
            "difference",
            "difference_class",
        ]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        vec![vec![
            self.system.clone(),
            self.pi_system.to_string(),
            self.first.clone(),
            self.second.clone(),
            self.difference.to_string(),
            self.difference_class.to_string(),
        ]]
    }
}

fn cmd_gcm_of(a: &GcmOfArgs) -> Result<Outcome, Failure> {
    let g = a.gcm;
    let elements = a
        .system
        .split(',')
        .map(|t| {
            let p: Provenance = t.parse()?;
            SignedRoot::from_provenance(&g, p)
        })
        .collect::<kmpi::Result<Vec<_>>>()?;
    if elements.is_empty() {
        return Err(usage("--system needs at least one element"));
    }
    let s = PiSystem::standard(elements)?;
    let literal = s.literal();
    if let PiVerdict::Violation {
        first,
        second,
        difference,
    } = is_pi_system(&g, &s)?
    {
        let out = ViolationOutput {
            gcm: g,
            system: literal,
            pi_system: false,
            difference: &first.vec - &second.vec,
            difference_class: difference,
            first: first.to_string(),
            second: second.to_string(),
        };
        return Ok(Outcome {
            stdout: out.render(a.format),
            stderr: vec![format!(
                "not a pi-system: {} - {} is a root",
                out.first, out.second
            )],
            code: 1,
        });
    }
    let m = compute_gcm_of_system(&g, &s)?;
    let out = GcmOfOutput {
        gcm: g,
        system: literal,
        determinant: m.determinant(),
        symmetric: m.is_symmetric(),
        cartan_type: m.cartan_type(),
        matrix: m.entries,
    };
    let mut o = Outcome::ok(out.render(a.format));
    o.stderr.extend(swap_note(&g));
    Ok(o)
}

#[derive(Serialize)]
struct TableOutput {
    gcm: Gcm2,
    rows: Vec<TableRow>,
}

impl Render for TableOutput {
    fn headers(&self) -> Vec<&'static str> {
        vec![
            "case",
            "pattern",
            "subcase",
            "j",
            "system",
            "symmetric",
            "matrix",
            "type",
        ]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| {
                vec![
                    r.case.clone(),
                    r.pattern.clone(),
                    r.subcase.clone(),
                    r.j.to_string(),
                    format!("Σ_{{{},{}}}", r.system.0, r.system.1),
                    r.symmetric.to_string(),
                    matrix_text(&r.matrix),
                    r.cartan_type.to_string(),
                ]
            })
            .collect()
    }
}

fn cmd_table(a: &TableArgs) -> Result<Outcome, Failure> {
    let g = a.gcm;
    if g.regime() == Regime::TwistedAffine {
        return Err(usage(
            "the summary table does not cover (4,1); see `kmpi verify --check appendix_thm41` \
             and `kmpi verify --check appendix_roots`",
        ));
    }
    let out = TableOutput {
        gcm: g,
        rows: summary_table(&g, a.rows)?,
    };
    let mut o = Outcome::ok(out.render(a.format));
    o.stderr.extend(swap_note(&g));
    Ok(o)
}

#[derive(Serialize)]
#[serde(transparent)]
struct VerifyOutput(Vec<CheckReport>);

fn target_text(t: &CheckTarget) -> String {
    match t {
        CheckTarget::Gcm(g) => gcm_text(g),
        CheckTarget::Appendix => "appendix".to_string(),
    }
}

impl Render for VerifyOutput {
    fn headers(&self) -> Vec<&'static str> {
        vec![
            "check",
            "gcm",
            "bound",
            "passed",
            "counterexamples",
            "elapsed_ms",
        ]
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.0
            .iter()
            .map(|r| {
                vec![
                    r.check.to_string(),
                    target_text(&r.gcm),
                    r.bound.to_string(),
                    r.passed.to_string(),
                    r.counterexamples.len().to_string(),
                    r.elapsed_ms.to_string(),
                ]
            })
            .collect()
    }

    fn footer(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in self.0.iter().filter(|r| !r.passed) {
            for c in &r.counterexamples {
                out.push(format!(
                    "- {} at {}: {}",
                    r.check,
                    target_text(&r.gcm),
                    c.claim
                ));
            }
        }
        out
    }
}

fn env_bound() -> Result<Option<usize>, Failure> {
    match std::env::var(BOUND_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(usage(format!(
                "{BOUND_ENV} must be a positive integer, got {v:?}"
            ))),
        },
    }
}

fn cmd_verify(a: &VerifyArgs) -> Result<Outcome, Failure> {
    let bound = match a.bound {
        Some(b) => Some(b as usize),
        None => env_bound()?,
    };
    let grid = a
        .grid
        .clone()
        .map(|g| g.0)
        .or_else(|| a.gcm.map(|g| vec![g]));
    let mut reports = match a.check {
        CheckArg::All => {
            let grid = match grid {
                Some(g) => g,
                None => parse_grid(DEFAULT_GRID).map_err(usage)?.0,
            };
            run_all(&grid, bound)?
        }
        CheckArg::One(id) => {
            let targets = match grid {
                Some(g) => g.into_iter().map(Some).collect(),
                None => vec![None],
            };
            let mut reports = targets
                .into_iter()
                .map(|t| run_check(id, t, bound))
                .collect::<kmpi::Result<Vec<_>>>()?;
            reports.sort_by_key(|r| (r.check, r.gcm));
            reports.dedup_by_key(|r| (r.check, r.gcm));
            reports
        }
    };
    if a.no_timing {
        for r in &mut reports {
            r.elapsed_ms = 0;
        }
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let out = VerifyOutput(reports);
    Ok(Outcome {
        stdout: out.render(a.format),
        stderr: vec![format!("{} checks, {failed} failed", out.0.len())],
        code: u8::from(failed > 0),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Roots(a) => cmd_roots(a),
        Command::PiSystems(a) => cmd_pi_systems(a),
        Command::GcmOf(a) => cmd_gcm_of(a),
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok(o) => {
            print!("{}", o.stdout);
            for line in o.stderr {
                eprintln!("{line}");
            }
            ExitCode::from(o.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
