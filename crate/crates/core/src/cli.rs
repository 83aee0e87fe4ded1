//! The `pentaflow` command line: `direction`, `orbit`, `verify` and `render`.
//!
//! Exit codes are 0 on success, 1 when a verification fails, 2 on usage
//! errors and 3 when a trace runs out of budget.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{
    billiard_multiplier, check_conjecture_concat, check_conjecture_splitting, displacement, length_report, pinned_case,
    ConjectureReport,
};
use crate::directions::{coordinate_of_index, in_sector, DirectionIndex};
use crate::golden::{GoldenNum, PentaNum, ProjectivePoint};
use crate::orbits::{
    apply_m, m_squared_and_m_plus_i, orbit_of_index, reduce, reduction_step, roman_of_arabic, rotate_alphabet, vector_of,
    Alphabet, CyclicWord, OrbitKind, OrbitVector,
};
use crate::periods::{period_of_index, periods_by_recursion, PeriodPair};
use crate::tracer::{
    diagonal_samples, direction_of_coordinate, strip_orbits, trace_billiard, trace_surface, PlanePoint, Segment,
    Sheet, SurfaceChart, TraceError, TraceResult,
};

/// Deepest generation `verify` accepts unless `--max-depth` raises it.
pub const HARD_DEPTH_LIMIT: usize = 8;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// How a command finished, when it did not fail outright.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    VerificationFailed,
    BudgetExhausted,
}

impl Outcome {
    pub fn code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::VerificationFailed => 1,
            Outcome::BudgetExhausted => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "pentaflow", version, about = "Periodic directions on the double pentagon, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coordinate, periods, orbit vectors and lengths of one direction.
    Direction(DirectionArgs),
    /// The symbolic orbit of one direction.
    Orbit(OrbitArgs),
    /// Run verification suites over every direction up to a generation.
    Verify(VerifyArgs),
    /// Draw a trajectory as SVG.
    Render(RenderArgs),
}

#[derive(Debug, clap::Args)]
pub struct DirectionArgs {
    /// Index digits (e.g. `0 3`); empty for α, `BOTTOM` for the far end.
    pub digits: Vec<String>,
    /// Machine-readable output.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, clap::Args)]
pub struct OrbitArgs {
    /// Index digits; empty for α, `BOTTOM` for the far end.
    pub digits: Vec<String>,
    #[arg(long, conflicts_with = "long")]
    pub short: bool,
    #[arg(long)]
    pub long: bool,
    #[arg(long, conflicts_with = "roman")]
    pub arabic: bool,
    #[arg(long)]
    pub roman: bool,
    /// Machine-readable output.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Periods,
    Table,
    Orbits,
    MRelation,
    Reduction,
    Displacement,
    Billiard,
    Conjectures,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Periods,
        Suite::Table,
        Suite::Orbits,
        Suite::MRelation,
        Suite::Reduction,
        Suite::Displacement,
        Suite::Billiard,
        Suite::Conjectures,
    ];
}

#[derive(Debug, Clone, clap::Args)]
pub struct VerifyArgs {
    /// Highest generation to check (at least 1).
    #[arg(long)]
    pub depth: usize,
    /// Suites to run; all of them when omitted.
    #[arg(long = "suite", value_enum)]
    pub suites: Vec<Suite>,
    /// Worker threads; 0 picks one per core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Report conjecture failures without failing the run.
    #[arg(long)]
    pub conjectures_advisory: bool,
    /// Side crossings allowed per traced orbit.
    #[arg(long, default_value_t = 20_000)]
    pub max_crossings: usize,
    /// Radius of the neighbour families in the conjecture suite.
    #[arg(long, default_value_t = 2)]
    pub radius: usize,
    /// Refuse depths above this (never more than 8).
    #[arg(long, default_value_t = HARD_DEPTH_LIMIT)]
    pub max_depth: usize,
    /// Machine-readable output.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, clap::Args)]
pub struct RenderArgs {
    /// Index digits of the direction to draw.
    pub digits: Vec<String>,
    /// IET parameter `u` (`A` or `A,B` for `A + Bφ`); draws both strips.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "vector")]
    pub u: Option<String>,
    /// Orbit vector `c,d,e,f`; the direction of its displacement is drawn.
    #[arg(long)]
    pub vector: Option<String>,
    /// Trajectory on the double pentagon (the default).
    #[arg(long, conflicts_with = "billiard")]
    pub surface: bool,
    /// Billiard path in a single pentagon.
    #[arg(long)]
    pub billiard: bool,
    /// Draw the long strip's orbit instead of the short one.
    #[arg(long)]
    pub long: bool,
    #[arg(long, default_value_t = 20_000)]
    pub max_crossings: usize,
    /// Output file; standard output when omitted.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command, writing to `out`.
/// Returns the process exit code.
pub fn run_from<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match run(&cli, out) {
        Ok(o) => o.code(),
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Direction(a) => cmd_direction(a, out),
        Command::Orbit(a) => cmd_orbit(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Render(a) => cmd_render(a, out),
    }
}

/// Reads positional digits: nothing is α, otherwise anything
/// [`DirectionIndex`] parses.
pub fn parse_index(digits: &[String]) -> Result<DirectionIndex, CliError> {
    let joined = digits.join(" ");
    if joined.trim().is_empty() {
        return Ok(DirectionIndex::alpha());
    }
    joined.parse().map_err(|e| CliError::Usage(format!("bad index {joined:?}: {e}")))
}

#[derive(Debug, Clone, Serialize)]
pub struct DirectionReport {
    pub index: DirectionIndex,
    pub generation: usize,
    pub coordinate: GoldenNum,
    pub coordinate_text: String,
    pub decimal: String,
    pub periods: PeriodPair,
    pub short_vector: OrbitVector,
    pub long_vector: OrbitVector,
    pub billiard_multiplier: u8,
    pub short_length_squared: GoldenNum,
    pub long_length_squared: GoldenNum,
    pub short_length: String,
    pub long_length: String,
}

pub fn direction_report(idx: &DirectionIndex) -> DirectionReport {
    let x = coordinate_of_index(idx).as_finite().cloned().expect("sector coordinates are finite");
    let lr = length_report(idx);
    DirectionReport {
        index: idx.clone(),
        generation: idx.generation(),
        coordinate_text: x.to_string(),
        decimal: x.to_decimal(20),
        coordinate: x,
        periods: period_of_index(idx),
        short_vector: lr.short_vector,
        long_vector: lr.long_vector,
        billiard_multiplier: lr.billiard_multiplier,
        short_length_squared: lr.short_length_squared,
        long_length_squared: lr.long_length_squared,
        short_length: lr.short_length,
        long_length: lr.long_length,
    }
}

fn cmd_direction(a: &DirectionArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let idx = parse_index(&a.digits)?;
    let r = direction_report(&idx);
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
    } else {
        writeln!(out, "index       {}", r.index)?;
        writeln!(out, "generation  {}", r.generation)?;
        writeln!(out, "coordinate  {}", r.coordinate_text)?;
        writeln!(out, "decimal     {}", r.decimal)?;
        writeln!(out, "periods     {}", r.periods)?;
        writeln!(out, "short       {}  length {}", r.short_vector, r.short_length)?;
        writeln!(out, "long        {}  length {}", r.long_vector, r.long_length)?;
        writeln!(out, "billiard    ×{}", r.billiard_multiplier)?;
    }
    Ok(Outcome::Success)
}

fn cmd_orbit(a: &OrbitArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let idx = parse_index(&a.digits)?;
    let kind = if a.long { OrbitKind::Long } else { OrbitKind::Short };
    let w = orbit_of_index(&idx, kind);
    let (alphabet, w) = if a.roman {
        (Alphabet::Roman, roman_of_arabic(&w).map_err(|e| CliError::Usage(e.to_string()))?)
    } else {
        (Alphabet::Arabic, w)
    };
    if a.json {
        #[derive(Serialize)]
        struct OrbitOut<'a> {
            index: &'a DirectionIndex,
            kind: OrbitKind,
            alphabet: Alphabet,
            word: &'a CyclicWord,
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&OrbitOut { index: &idx, kind, alphabet, word: &w })?)?;
    } else {
        writeln!(out, "{w}")?;
    }
    Ok(Outcome::Success)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Budget,
}

/// One checked case.
#[derive(Debug, Clone, Serialize)]
pub struct LedgerEntry {
    pub suite: Suite,
    pub case: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip)]
    order: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteSummary {
    pub checked: usize,
    pub failures: usize,
    pub budget_exhausted: usize,
    pub advisory: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Ledger {
    pub depth: usize,
    pub summary: BTreeMap<Suite, SuiteSummary>,
    pub entries: Vec<LedgerEntry>,
}

impl Ledger {
    pub fn outcome(&self) -> Outcome {
        let blocking = |s: &SuiteSummary| !s.advisory;
        if self.summary.values().filter(|s| blocking(s)).any(|s| s.failures > 0) {
            Outcome::VerificationFailed
        } else if self.summary.values().any(|s| s.budget_exhausted > 0) {
            Outcome::BudgetExhausted
        } else {
            Outcome::Success
        }
    }
}

/// A unit of work for `verify`.
#[derive(Debug, Clone)]
enum Case {
    Index(DirectionIndex),
    Row(DirectionIndex, PeriodPair),
    MatrixIdentity,
    Arc(DirectionIndex, DirectionIndex),
    Centre(DirectionIndex),
    Pinned,
}

impl Case {
    fn label(&self) -> String {
        match self {
            Case::Index(i) | Case::Row(i, _) => i.to_string(),
            Case::MatrixIdentity => "M² = M + I".into(),
            Case::Arc(a, b) => format!("arc {a}–{b}"),
            Case::Centre(c) => format!("centre {c}"),
            Case::Pinned => "worked example (1,1)".into(),
        }
    }
}

/// The period table rows for generation ≤ 1 and its children.
pub const PERIOD_TABLE: [(&[u8], u64, u64); 9] = [
    (&[], 1, 1),
    (&[0, 1], 3, 5),
    (&[0, 2], 4, 7),
    (&[0, 3], 4, 6),
    (&[1], 2, 3),
    (&[1, 1], 5, 9),
    (&[1, 2], 7, 11),
    (&[1, 3], 6, 9),
    (&[2], 2, 4),
];

/// Arcs whose children have generation at most `depth`, each as
/// (higher coordinate end, lower coordinate end).
pub fn arcs_through(depth: usize) -> Vec<(DirectionIndex, DirectionIndex)> {
    (0..depth)
        .flat_map(|g| {
            let v = DirectionIndex::all_to_generation(g);
            v.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect::<Vec<_>>()
        })
        .collect()
}

fn cases_for(suite: Suite, depth: usize) -> Vec<Case> {
    let indices = || DirectionIndex::all_to_generation(depth).into_iter().map(Case::Index);
    match suite {
        Suite::Table => PERIOD_TABLE.iter().map(|(d, a, b)| Case::Row(DirectionIndex::of(d), PeriodPair::new(*a, *b))).collect(),
        Suite::MRelation => std::iter::once(Case::MatrixIdentity).chain(indices()).collect(),
        Suite::Conjectures => arcs_through(depth)
            .into_iter()
            .map(|(a, b)| Case::Arc(a, b))
            .chain(DirectionIndex::all_to_generation(depth).into_iter().map(Case::Centre))
            .chain(std::iter::once(Case::Pinned))
            .collect(),
        _ => indices().collect(),
    }
}

struct Checked {
    status: Status,
    detail: String,
}

fn pass_if(ok: bool, detail: impl Into<String>) -> Checked {
    Checked { status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into() }
}

fn from_trace_error(e: TraceError) -> Checked {
    match e {
        TraceError::BudgetExhausted { .. } => Checked { status: Status::Budget, detail: e.to_string() },
        other => Checked { status: Status::Fail, detail: other.to_string() },
    }
}

fn conjecture_checked(r: &ConjectureReport) -> Checked {
    let mut parts = Vec::new();
    for v in &r.verdicts {
        let w: Vec<String> = v.witness.iter().map(|(k, x)| format!("{k}={x}")).collect();
        parts.push(format!("{} {}{}", v.case, w.join(" "), v.note.as_ref().map(|n| format!(" [{n}]")).unwrap_or_default()));
    }
    pass_if(r.pass(), parts.join("; "))
}

fn check(suite: Suite, case: &Case, cfg: &VerifyArgs, recursion: &BTreeMap<DirectionIndex, PeriodPair>) -> Checked {
    let chart = SurfaceChart::default();
    match (suite, case) {
        (Suite::Periods, Case::Index(i)) => {
            let p = period_of_index(i);
            let r = recursion.get(i);
            let roman = (
                roman_of_arabic(&orbit_of_index(i, OrbitKind::Short)).map(|w| w.len()),
                roman_of_arabic(&orbit_of_index(i, OrbitKind::Long)).map(|w| w.len()),
            );
            let counts = p.as_u64().map(|(a, b)| (Ok(a as usize), Ok(b as usize)));
            pass_if(r == Some(&p) && counts == Some(roman), format!("{p}"))
        }
        (Suite::Table, Case::Row(i, want)) => {
            let got = period_of_index(i);
            pass_if(&got == want, format!("{got}, expected {want}"))
        }
        (Suite::Orbits, Case::Index(i)) => {
            let x = coordinate_of_index(i);
            match strip_orbits(&chart, &x, cfg.max_crossings) {
                Err(e) => from_trace_error(e),
                Ok(so) => {
                    let p = period_of_index(i).as_u64().unwrap_or((0, 0));
                    let mut ok = true;
                    for (kind, period) in [(OrbitKind::Short, p.0), (OrbitKind::Long, p.1)] {
                        let engine = orbit_of_index(i, kind);
                        let traced = so.get(kind).cyclic_word();
                        let roman = roman_of_arabic(&engine).map(|w| w.len() as u64);
                        ok &= traced.as_ref() == Some(&engine) && roman == Ok(period) && engine.len() as u64 == 2 * period;
                    }
                    pass_if(ok, format!("short {} / long {}", orbit_of_index(i, OrbitKind::Short), orbit_of_index(i, OrbitKind::Long)))
                }
            }
        }
        (Suite::MRelation, Case::MatrixIdentity) => {
            let (sq, pi) = m_squared_and_m_plus_i();
            pass_if(sq == pi, format!("{sq:?}"))
        }
        (Suite::MRelation, Case::Index(i)) => {
            let s = vector_of(&orbit_of_index(i, OrbitKind::Short));
            let l = vector_of(&orbit_of_index(i, OrbitKind::Long));
            match (s, l) {
                (Ok(s), Ok(l)) => pass_if(apply_m(s) == l, format!("M·{s} = {}", apply_m(s))),
                (Err(e), _) | (_, Err(e)) => pass_if(false, e.to_string()),
            }
        }
        (Suite::Reduction, Case::Index(i)) => match reduction_step(i) {
            None => pass_if(true, "no predecessor"),
            Some((pred, back)) => {
                let ok = [OrbitKind::Short, OrbitKind::Long].into_iter().all(|k| {
                    reduce(&orbit_of_index(i, k)).and_then(|r| rotate_alphabet(&r, back)).ok() == Some(orbit_of_index(&pred, k))
                });
                pass_if(ok, format!("→ {pred}, rotate {back}"))
            }
        },
        (Suite::Displacement, Case::Index(i)) => {
            let r = length_report(i);
            let phi = PentaNum::from_golden(GoldenNum::phi());
            let scaled = displacement(&r.short_vector).scale(&phi) == displacement(&r.long_vector);
            pass_if(r.closed_form_holds && r.ratio_is_phi && scaled, format!("|short|² = {}", r.short_length_squared))
        }
        (Suite::Billiard, Case::Index(i)) => billiard_check(&chart, i, cfg.max_crossings),
        (Suite::Conjectures, Case::Arc(a, b)) => conjecture_checked(&check_conjecture_concat(a, b, Alphabet::Arabic)),
        (Suite::Conjectures, Case::Centre(c)) => match check_conjecture_splitting(c, cfg.radius, Alphabet::Arabic) {
            Ok(r) => conjecture_checked(&r),
            Err(e) => pass_if(false, e.to_string()),
        },
        (Suite::Conjectures, Case::Pinned) => {
            let p = pinned_case();
            pass_if(p.pass(), format!("{p:?}"))
        }
        (s, c) => pass_if(false, format!("no check for {s:?} on {}", c.label())),
    }
}

/// Billiard travel equals multiplier × surface travel for both strips, and the
/// long billiard orbit is φ times the short one.
pub fn billiard_check_result(
    chart: &SurfaceChart,
    idx: &DirectionIndex,
    max_crossings: usize,
) -> Result<(bool, String), TraceError> {
    let x = coordinate_of_index(idx);
    let so = strip_orbits(chart, &x, max_crossings)?;
    let mut travels = Vec::new();
    let mut ok = true;
    let mut detail = Vec::new();
    for kind in [OrbitKind::Short, OrbitKind::Long] {
        let surface = so.get(kind);
        let m = billiard_multiplier(&vector_of(&orbit_of_index(idx, kind)).expect("sector-3 word"));
        let b = trace_billiard(chart, &so.start_point(chart, kind), &so.direction, 5 * max_crossings)?;
        if !b.closed {
            return Err(TraceError::BudgetExhausted { budget: 5 * max_crossings });
        }
        ok &= b.travel == &surface.travel * &PentaNum::from_golden(GoldenNum::from_integer(m as i64));
        detail.push(format!("{kind:?} ×{m}"));
        travels.push(b.travel);
    }
    ok &= travels[1] == &travels[0] * &PentaNum::from_golden(GoldenNum::phi());
    Ok((ok, detail.join(", ")))
}

fn billiard_check(chart: &SurfaceChart, idx: &DirectionIndex, max_crossings: usize) -> Checked {
    match billiard_check_result(chart, idx, max_crossings) {
        Ok((ok, d)) => pass_if(ok, d),
        Err(e) => from_trace_error(e),
    }
}

/// Runs the suites and returns a ledger sorted by suite and case order. The
/// ledger does not depend on `jobs`.
pub fn verify(cfg: &VerifyArgs) -> Result<Ledger, CliError> {
    if cfg.depth == 0 {
        return Err(CliError::Usage("--depth must be at least 1".into()));
    }
    if cfg.depth > cfg.max_depth {
        return Err(CliError::Usage(format!("--depth {} exceeds the limit {}", cfg.depth, cfg.max_depth)));
    }
    if cfg.max_crossings == 0 {
        return Err(CliError::Usage("--max-crossings must be positive".into()));
    }
    let mut suites: Vec<Suite> = if cfg.suites.is_empty() { Suite::ALL.to_vec() } else { cfg.suites.clone() };
    suites.sort();
    suites.dedup();
    let recursion = if suites.contains(&Suite::Periods) { periods_by_recursion(cfg.depth) } else { BTreeMap::new() };
    let work: Vec<(Suite, usize, Case)> = suites
        .iter()
        .flat_map(|&s| cases_for(s, cfg.depth).into_iter().enumerate().map(move |(k, c)| (s, k, c)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {} workers: {e}", cfg.jobs)))?;
    let mut entries: Vec<LedgerEntry> = pool.install(|| {
        work.par_iter()
            .map(|(suite, order, case)| {
                let c = check(*suite, case, cfg, &recursion);
                LedgerEntry { suite: *suite, case: case.label(), status: c.status, detail: c.detail, order: *order }
            })
            .collect()
    });
    entries.sort_by_key(|e| (e.suite, e.order));
    let mut summary: BTreeMap<Suite, SuiteSummary> = BTreeMap::new();
    for s in &suites {
        summary.insert(*s, SuiteSummary { advisory: *s == Suite::Conjectures && cfg.conjectures_advisory, ..Default::default() });
    }
    for e in &entries {
        let s = summary.get_mut(&e.suite).expect("suite listed");
        s.checked += 1;
        match e.status {
            Status::Pass => {}
            Status::Fail => s.failures += 1,
            Status::Budget => s.budget_exhausted += 1,
        }
    }
    Ok(Ledger { depth: cfg.depth, summary, entries })
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let ledger = verify(a)?;
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&ledger)?)?;
    } else {
        for (suite, s) in &ledger.summary {
            let name = serde_json::to_value(suite)?.as_str().unwrap_or_default().to_string();
            write!(out, "{name}: {} checked, {} failures", s.checked, s.failures)?;
            if s.budget_exhausted > 0 {
                write!(out, ", {} out of budget", s.budget_exhausted)?;
            }
            if s.advisory && s.failures > 0 {
                write!(out, " (advisory)")?;
            }
            writeln!(out)?;
        }
        for e in ledger.entries.iter().filter(|e| e.status != Status::Pass) {
            writeln!(out, "  {:?} {:?} {}: {}", e.status, e.suite, e.case, e.detail)?;
        }
    }
    Ok(ledger.outcome())
}

/// Formats a number with 15 significant digits and no trailing zeros.
pub fn sig15(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".into();
    }
    let mag = v.abs().log10().floor() as i32;
    let decimals = (14 - mag).max(0) as usize;
    let s = format!("{v:.decimals$}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.').to_string() } else { s };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// What to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderMode {
    Surface,
    Billiard,
}

/// An SVG figure: polygons in the plane and polylines over them.
#[derive(Debug, Default)]
pub struct Figure {
    pub polygons: Vec<Vec<(f64, f64)>>,
    pub paths: Vec<(Vec<(f64, f64)>, &'static str)>,
    pub banner: Option<String>,
    pub title: String,
}

impl Figure {
    pub fn to_svg(&self) -> String {
        let pts = self.polygons.iter().flatten().chain(self.paths.iter().flat_map(|(p, _)| p));
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        let scale = 300.0;
        let margin = 20.0;
        let top = if self.banner.is_some() { 30.0 } else { 0.0 };
        let w = (x1 - x0) * scale + 2.0 * margin;
        let h = (y1 - y0) * scale + 2.0 * margin + top;
        let map = |&(x, y): &(f64, f64)| format!("{},{}", sig15((x - x0) * scale + margin), sig15((y1 - y) * scale + margin + top));
        let mut s = String::new();
        s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        s.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
            sig15(w),
            sig15(h),
            sig15(w),
            sig15(h)
        ));
        s.push_str(&format!("<title>{}</title>\n", xml_escape(&self.title)));
        if let Some(b) = &self.banner {
            s.push_str(&format!(
                "<text x=\"{}\" y=\"20\" fill=\"#b00000\" font-family=\"sans-serif\" font-size=\"14\">{}</text>\n",
                sig15(margin),
                xml_escape(b)
            ));
        }
        for p in &self.polygons {
            let v: Vec<String> = p.iter().map(map).collect();
            s.push_str(&format!("<polygon points=\"{}\" fill=\"#f4f1ea\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n", v.join(" ")));
        }
        for (p, colour) in &self.paths {
            let v: Vec<String> = p.iter().map(map).collect();
            s.push_str(&format!("<polyline points=\"{}\" fill=\"none\" stroke=\"{colour}\" stroke-width=\"1\"/>\n", v.join(" ")));
        }
        s.push_str("</svg>\n");
        s
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

// Sheet B already sits below A in the plane, so segments are drawn in place.
fn segments_as_lines(path: &[Segment]) -> Vec<Vec<(f64, f64)>> {
    path.iter().map(|seg| vec![seg.from.to_f64(), seg.to.to_f64()]).collect()
}

fn polygons_for(chart: &SurfaceChart, mode: RenderMode) -> Vec<Vec<(f64, f64)>> {
    let sheets: &[Sheet] = match mode {
        RenderMode::Surface => &[Sheet::A, Sheet::B],
        RenderMode::Billiard => &[Sheet::A],
    };
    sheets.iter().map(|&s| chart.polygon(s).iter().map(PlanePoint::to_f64).collect()).collect()
}

/// A trace that may not have closed.
fn trace_for(
    chart: &SurfaceChart,
    x: &ProjectivePoint,
    kind: OrbitKind,
    mode: RenderMode,
    budget: usize,
) -> Result<TraceResult, CliError> {
    match strip_orbits(chart, x, budget) {
        Ok(so) => match mode {
            RenderMode::Surface => Ok(so.get(kind).clone()),
            RenderMode::Billiard => trace_billiard(chart, &so.start_point(chart, kind), &so.direction, budget)
                .map_err(|e| CliError::Usage(e.to_string())),
        },
        Err(TraceError::BudgetExhausted { .. }) => {
            // Partial trace from the first start point that avoids the vertices.
            let dir = direction_of_coordinate(x);
            for t in diagonal_samples() {
                let start = chart.diagonal_point(&t);
                let r = match mode {
                    RenderMode::Surface => trace_surface(chart, &start, &dir, budget),
                    RenderMode::Billiard => trace_billiard(chart, &start, &dir, budget),
                };
                match r {
                    Ok(r) => return Ok(r),
                    Err(TraceError::VertexHit { .. }) => continue,
                    Err(e) => return Err(CliError::Usage(e.to_string())),
                }
            }
            Err(CliError::Usage("no start point avoids the vertices".into()))
        }
        Err(e) => Err(CliError::Usage(e.to_string())),
    }
}

/// Builds the figure for one direction; with `both` the short and the long
/// strip orbits are drawn together.
pub fn render_figure(x: &ProjectivePoint, mode: RenderMode, kind: OrbitKind, both: bool, budget: usize) -> Result<Figure, CliError> {
    if !in_sector(x) {
        return Err(CliError::Usage(format!("direction {x} is outside the sector")));
    }
    let chart = SurfaceChart::default();
    let kinds: Vec<(OrbitKind, &'static str)> =
        if both { vec![(OrbitKind::Short, "#1f5fbf"), (OrbitKind::Long, "#c0392b")] } else { vec![(kind, "#1f5fbf")] };
    let mut fig = Figure { polygons: polygons_for(&chart, mode), title: format!("direction x = {x}"), ..Default::default() };
    for (k, colour) in kinds {
        let r = trace_for(&chart, x, k, mode, budget)?;
        if !r.closed {
            fig.banner = Some(format!("warning: the {k:?} trajectory did not close within {budget} crossings"));
        }
        for line in segments_as_lines(&r.path) {
            fig.paths.push((line, colour));
        }
    }
    Ok(fig)
}

fn parse_vector(s: &str) -> Result<OrbitVector, CliError> {
    let v: Vec<u64> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(format!("bad vector {s:?}: {e}")))?;
    let a: [u64; 4] = v.try_into().map_err(|_| CliError::Usage(format!("vector {s:?} needs four entries")))?;
    Ok(OrbitVector::from_array(a))
}

/// The coordinate `x` of the direction `(x, s)` parallel to the displacement of `v`.
pub fn coordinate_of_vector(v: &OrbitVector) -> Result<ProjectivePoint, CliError> {
    let d = displacement(v);
    let bad = || CliError::Usage(format!("vector {v} has no direction in the sector"));
    let height = d.y.checked_div(&PentaNum::s()).map_err(|_| bad())?;
    let height = height.as_golden().cloned().ok_or_else(bad)?;
    let run = d.x.as_golden().cloned().ok_or_else(bad)?;
    run.checked_div(&height).map(ProjectivePoint::Finite).map_err(|_| bad())
}

fn cmd_render(a: &RenderArgs, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let mode = if a.billiard { RenderMode::Billiard } else { RenderMode::Surface };
    let kind = if a.long { OrbitKind::Long } else { OrbitKind::Short };
    if a.max_crossings == 0 {
        return Err(CliError::Usage("--max-crossings must be positive".into()));
    }
    let (x, both) = if let Some(u) = &a.u {
        if !a.digits.is_empty() {
            return Err(CliError::Usage("give either an index or --u".into()));
        }
        let u: GoldenNum = u.parse().map_err(|e| CliError::Usage(format!("bad --u {u:?}: {e}")))?;
        (ProjectivePoint::Finite(-&u), true)
    } else if let Some(v) = &a.vector {
        (coordinate_of_vector(&parse_vector(v)?)?, false)
    } else {
        (coordinate_of_index(&parse_index(&a.digits)?), false)
    };
    let fig = render_figure(&x, mode, kind, both, a.max_crossings)?;
    let svg = fig.to_svg();
    match &a.out {
        Some(p) => std::fs::write(p, &svg)?,
        None => out.write_all(svg.as_bytes())?,
    }
    Ok(if fig.banner.is_some() { Outcome::BudgetExhausted } else { Outcome::Success })
}

/// Entry point used by the binary.
pub fn main_with_args() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_from(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_from(std::iter::once("pentaflow").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn direction_command() {
        let (code, out, _) = run_args(&["direction", "0", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("(3, 5)"), "{out}");
        let (code, out, _) = run_args(&["direction"]);
        assert_eq!(code, 0);
        assert!(out.contains("1 - φ/2") && out.contains("(1, 1)"), "{out}");
        assert_eq!(run_args(&["direction", "9"]).0, 2);
    }

    #[test]
    fn orbit_command() {
        let (code, out, _) = run_args(&["orbit", "--long"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "4 3");
    }

    #[test]
    fn verify_usage_and_table() {
        assert_eq!(run_args(&["verify", "--depth", "0"]).0, 2);
        let (code, out, _) = run_args(&["verify", "--depth", "1", "--suite", "table"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("table: 9 checked, 0 failures"), "{out}");
    }

    #[test]
    fn sig15_format() {
        assert_eq!(sig15(1.0), "1");
        assert_eq!(sig15(-0.30901699437494745), "-0.309016994374947");
        assert_eq!(sig15(123.456), "123.456");
    }

    #[test]
    fn vector_direction_round_trip() {
        let x = coordinate_of_vector(&OrbitVector::new(1, 0, 0, 1)).unwrap();
        assert_eq!(x, ProjectivePoint::Finite(GoldenNum::zero()));
    }
}
