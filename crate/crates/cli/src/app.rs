//! Commands and the exit-code contract: 0 consistent, 1 other failure,
//! 2 usage, 3 mathematical violation.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use eigencong::congruence::{analyze, cross_congruences, sturm_bound_level, AnalysisOptions, FormData};
use eigencong::hecke::{default_precision, dimension, disc_report, int_charpoly, HeckeLattice, LevelOne, MAX_WEIGHT};
use eigencong_kernels::arith::prime_divisors;
use eigencong_kernels::DEFAULT_SEED;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::fetch::{fetch, FetchError, Source, ENDPOINT_VAR};
use crate::file::{EigenformFile, FileError};
use crate::report::{form_report, hecke_report, tool_version, CrossReport, OptionsReport, Provenance, ReportDocument, FORMAT};

pub const SEED_VAR: &str = "EIGENCONG_SEED";

#[derive(Debug, Error)]
pub enum AppError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Violation(String),
    #[error("{0}")]
    Failure(String),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Failure(_) => 1,
            AppError::Usage(_) => 2,
            AppError::Violation(_) => 3,
        }
    }
}

impl From<eigencong::Error> for AppError {
    fn from(e: eigencong::Error) -> Self {
        match e {
            e if e.is_violation() => AppError::Violation(e.to_string()),
            eigencong::Error::WeightUnsupported(_) => AppError::Usage(e.to_string()),
            e => AppError::Failure(e.to_string()),
        }
    }
}

impl From<FileError> for AppError {
    fn from(e: FileError) -> Self {
        match e {
            FileError::Core(e) => e.into(),
            e => AppError::Failure(e.to_string()),
        }
    }
}

impl From<FetchError> for AppError {
    fn from(e: FetchError) -> Self {
        match e {
            FetchError::NoSource | FetchError::BadId(_) => AppError::Usage(e.to_string()),
            e => AppError::Failure(e.to_string()),
        }
    }
}

type AppResult<T> = std::result::Result<T, AppError>;

#[derive(Debug, Parser)]
#[command(name = "eigencong", version, about = "Congruences between Galois-conjugate eigenforms")]
pub struct Cli {
    /// Seed for randomized factorization (decimal or 0x-hex).
    #[arg(long, global = true, env = SEED_VAR)]
    pub seed: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze every eigenform of level one and weight k.
    AnalyzeWeight {
        #[arg(allow_negative_numbers = true)]
        k: i64,
        #[command(flatten)]
        flags: AnalysisFlags,
    },
    /// Analyze an eigenform file.
    AnalyzeFile {
        path: PathBuf,
        #[command(flatten)]
        flags: AnalysisFlags,
    },
    /// Retrieve a newform and write it as an eigenform file.
    Fetch {
        id: String,
        #[arg(long, env = ENDPOINT_VAR)]
        endpoint: Option<String>,
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Output file; defaults to `<id>.eigenform`.
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Also analyze the form and write the report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run quick internal consistency checks.
    Selftest,
}

#[derive(Debug, Clone, Args)]
pub struct AnalysisFlags {
    /// Coefficients compared; defaults to the Sturm bound.
    #[arg(long)]
    pub bound: Option<usize>,
    /// Primes scanned for the congruence side of the Galois criterion.
    #[arg(long = "scan-primes", default_value_t = 1000)]
    pub scan: u64,
    /// Write the JSON report here (`-` for standard output).
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub bound: Option<usize>,
    pub scan: u64,
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { bound: None, scan: 1000, seed: DEFAULT_SEED }
    }
}

impl RunOptions {
    fn analysis(&self) -> AnalysisOptions {
        AnalysisOptions { bound: self.bound, scan: self.scan, seed: self.seed }
    }

    fn report(&self) -> OptionsReport {
        OptionsReport { bound: self.bound, scan: self.scan, seed: format!("{:#018x}", self.seed) }
    }
}

pub fn parse_seed(s: &str) -> AppResult<u64> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(h) => u64::from_str_radix(&h.replace('_', ""), 16),
        None => s.replace('_', "").parse(),
    };
    parsed.map_err(|_| AppError::Usage(format!("bad seed {s:?}")))
}

fn check(cond: bool, what: impl FnOnce() -> String) -> AppResult<()> {
    if cond {
        Ok(())
    } else {
        Err(AppError::Violation(what()))
    }
}

/// Sanity failures are violations only for forms computed here; ingested
/// coefficient lists need not come from eigenforms.
fn analyze_forms(fds: &[FormData], opts: &RunOptions, enforce_sanity: bool) -> AppResult<(Vec<crate::report::FormReport>, Vec<crate::report::WitnessReport>)> {
    let mut forms = Vec::new();
    let mut witnesses = Vec::new();
    for fd in fds {
        let f = fd.form();
        let r = analyze(fd, &opts.analysis())?;
        let report = form_report(fd, &r, sturm_bound_level(f.weight(), f.level()), &mut witnesses);
        if let Some(s) = report.sanity.as_ref().filter(|_| enforce_sanity) {
            check(s.multiplicative, || format!("{}: coefficients are not multiplicative", fd.label))?;
            check(s.ramanujan, || format!("{}: a_p exceeds the Ramanujan bound", fd.label))?;
        }
        forms.push(report);
    }
    Ok((forms, witnesses))
}

/// The level-one pipeline for weight `k`.
pub fn analyze_weight(k: i64, opts: &RunOptions) -> AppResult<ReportDocument> {
    if k % 2 != 0 || !(12..=MAX_WEIGHT).contains(&k) {
        return Err(AppError::Usage(format!("weight must be even with 12 ≤ k ≤ {MAX_WEIGHT}, got {k}")));
    }
    let precision = default_precision(k).max(opts.bound.unwrap_or(0));
    let lev = LevelOne::with_precision(k, precision)?;
    check(lev.dimension() == dimension(k), || format!("weight {k}: basis has the wrong size"))?;
    let t = HeckeLattice::from_level_one(&lev)?;
    let d = disc_report(&t);
    check(d.holds, || format!("weight {k}: disc(T) = {} but the decomposition gives {}", d.disc_t, d.rhs()))?;

    let bound = opts.bound.unwrap_or(sturm_bound_level(k, 1)).clamp(1, precision);
    let mut cross = Vec::new();
    if !d.congruence_module_order.is_one() {
        for p in prime_divisors(&d.congruence_module_order).map_err(eigencong::Error::from)? {
            let p = p.to_u64().ok_or_else(|| AppError::Failure(format!("prime {p} exceeds 64 bits")))?;
            cross.push(CrossReport { p, pairs: cross_congruences(t.orbits(), p, bound)? });
        }
    }
    let charpoly = int_charpoly(lev.operator(2));

    let fds = lev
        .eigenforms()
        .iter()
        .enumerate()
        .map(|(i, f)| FormData::new(format!("1.{k}.{}", i + 1), f.clone()))
        .collect::<Result<Vec<_>, _>>()?;
    let (forms, witnesses) = analyze_forms(&fds, opts, true)?;
    Ok(ReportDocument {
        format: FORMAT.into(),
        tool: tool_version(),
        provenance: Provenance::Generated { weight: k },
        options: opts.report(),
        hecke: Some(hecke_report(&d, lev.dimension(), lev.precision(), lev.generator(), charpoly.coeffs(), cross)),
        forms,
        witnesses,
    })
}

pub fn analyze_eigenform_file(file: &EigenformFile, default_label: &str, provenance: Provenance, opts: &RunOptions) -> AppResult<ReportDocument> {
    let form = file.to_eigenform()?;
    let label = file.label.clone().unwrap_or_else(|| default_label.to_string());
    let fd = FormData::new(label, form)?;
    let (forms, witnesses) = analyze_forms(&[fd], opts, false)?;
    Ok(ReportDocument {
        format: FORMAT.into(),
        tool: tool_version(),
        provenance,
        options: opts.report(),
        hecke: None,
        forms,
        witnesses,
    })
}

fn file_name(path: &Path) -> String {
    path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned())
}

pub fn analyze_path(path: &Path, opts: &RunOptions) -> AppResult<ReportDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| AppError::Failure(format!("{}: {e}", path.display())))?;
    let file = EigenformFile::parse(&text).map_err(|e| AppError::Failure(format!("{}: {e}", path.display())))?;
    let name = file_name(path);
    let stem = path.file_stem().map_or(name.clone(), |s| s.to_string_lossy().into_owned());
    analyze_eigenform_file(&file, &stem, Provenance::File { name }, opts)
}

fn write_text(path: &Path, text: &str) -> AppResult<()> {
    std::fs::write(path, text).map_err(|e| AppError::Failure(format!("{}: {e}", path.display())))
}

fn summarize(doc: &ReportDocument, out: &mut dyn Write) -> std::io::Result<()> {
    if let Some(h) = &doc.hecke {
        writeln!(out, "weight {}: dim {}, disc(T) = {}, |⊕T_f/T| = {}", h.weight, h.dimension, h.disc_t, h.congruence_module_order)?;
    }
    for f in &doc.forms {
        writeln!(
            out,
            "{}: degree {}, [O:R] = {}, disc(O) = {}, closure degree {}",
            f.label,
            f.minpoly.len() - 1,
            f.index,
            f.disc_o,
            f.closure.degree
        )?;
        if let Some(note) = &f.note {
            writeln!(out, "  {note} (bound {} < Sturm bound {})", f.bound, f.sturm_bound)?;
        }
        for v in &f.verdicts {
            match v.witness {
                Some(i) => {
                    let w = &doc.witnesses[i];
                    writeln!(out, "  p = {}: witness ({:?} branch, f = {}, e = {})", v.p, w.branch, w.residue_degree, w.ramification_index)?;
                }
                None => writeln!(out, "  p = {}: no witness required", v.p)?,
            }
        }
        match &f.corollary {
            crate::report::CorollaryReport::Iff { scan, s1, s2, consistent } => {
                writeln!(out, "  Galois: S1 = {s1:?}, congruence primes ≤ scan {scan} plus divisors = {s2:?}, consistent = {consistent}")?
            }
            crate::report::CorollaryReport::OneWay { s1 } => writeln!(out, "  not Galois: witnesses at every p in {s1:?}")?,
        }
    }
    Ok(())
}

fn emit(doc: &ReportDocument, json: Option<&Path>, out: &mut dyn Write) -> AppResult<()> {
    let io = |e: std::io::Error| AppError::Failure(e.to_string());
    match json {
        Some(p) if p == Path::new("-") => out.write_all(doc.to_json().as_bytes()).map_err(io)?,
        Some(p) => {
            write_text(p, &doc.to_json())?;
            summarize(doc, out).map_err(io)?;
        }
        None => summarize(doc, out).map_err(io)?,
    }
    Ok(())
}

struct Check {
    name: &'static str,
    run: fn() -> AppResult<bool>,
}

const SELFTEST: &[Check] = &[
    Check {
        name: "dimensions of S_k for 12 ≤ k ≤ 40",
        run: || {
            Ok((12..=40).step_by(2).all(|k| {
                let m = if k % 12 == 2 { k / 12 - 1 } else { k / 12 };
                dimension(k) == m as usize
            }))
        },
    },
    Check {
        name: "weight 24: T_2 char poly and disc(O) = 144169",
        run: || {
            let doc = analyze_weight(24, &RunOptions::default())?;
            let h = doc.hecke.as_ref().expect("level one");
            Ok(h.charpoly_t2 == ["-20468736", "-1080", "1"] && doc.forms[0].disc_o == "144169")
        },
    },
    Check {
        name: "synthetic Z[√5]: [O:R] = 2, index-branch witness at 2",
        run: || {
            let file = EigenformFile::parse(SYNTHETIC).map_err(AppError::from)?;
            let doc = analyze_eigenform_file(&file, "synthetic", Provenance::File { name: "synthetic".into() }, &RunOptions::default())?;
            let f = &doc.forms[0];
            let v = f.verdicts.iter().find(|v| v.p == 2);
            let w = v.and_then(|v| v.witness).map(|i| &doc.witnesses[i]);
            Ok(f.index == "2" && w.is_some_and(|w| w.branch == crate::report::BranchReport::Index))
        },
    },
    Check {
        name: "reports are deterministic",
        run: || Ok(analyze_weight(28, &RunOptions::default())?.to_json() == analyze_weight(28, &RunOptions::default())?.to_json()),
    },
];

/// The `Q(√5)` form with `a_2 = √5`, so `R = Z[√5]`.
pub const SYNTHETIC: &str = include_str!("../fixtures/synthetic-sqrt5.eigenform");

fn selftest(out: &mut dyn Write) -> AppResult<()> {
    let mut failed = Vec::new();
    for c in SELFTEST {
        let ok = (c.run)()?;
        writeln!(out, "{} {}", if ok { "ok  " } else { "FAIL" }, c.name).map_err(|e| AppError::Failure(e.to_string()))?;
        if !ok {
            failed.push(c.name);
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(AppError::Violation(format!("selftest failed: {}", failed.join("; "))))
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> AppResult<()> {
    let seed = cli.seed.as_deref().map(parse_seed).transpose()?.unwrap_or(DEFAULT_SEED);
    match cli.command {
        Command::AnalyzeWeight { k, flags } => {
            let opts = RunOptions { bound: flags.bound, scan: flags.scan, seed };
            emit(&analyze_weight(k, &opts)?, flags.json.as_deref(), out)
        }
        Command::AnalyzeFile { path, flags } => {
            let opts = RunOptions { bound: flags.bound, scan: flags.scan, seed };
            emit(&analyze_path(&path, &opts)?, flags.json.as_deref(), out)
        }
        Command::Fetch { id, endpoint, fixtures, out: dest, json } => {
            let source = match (fixtures, endpoint) {
                (Some(dir), _) => Source::Fixtures(dir),
                (None, Some(url)) if !url.is_empty() => Source::Endpoint(url),
                _ => return Err(FetchError::NoSource.into()),
            };
            let file = fetch(&id, &source)?;
            let dest = dest.unwrap_or_else(|| PathBuf::from(format!("{id}.eigenform")));
            write_text(&dest, &file.to_text())?;
            writeln!(out, "wrote {}", dest.display()).map_err(|e| AppError::Failure(e.to_string()))?;
            if let Some(json) = json {
                let opts = RunOptions { seed, ..RunOptions::default() };
                let doc = analyze_eigenform_file(&file, &id, Provenance::Fetched { id: id.clone() }, &opts)?;
                write_text(&json, &doc.to_json())?;
            }
            Ok(())
        }
        Command::Selftest => selftest(out),
    }
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = match e.exit_code() {
                0 => write!(out, "{}", e.render()),
                _ => write!(err, "{}", e.render()),
            };
            return e.exit_code();
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let kind = match e {
                AppError::Usage(_) => "usage error",
                AppError::Violation(_) => "violation",
                AppError::Failure(_) => "error",
            };
            let _ = writeln!(err, "{kind}: {e}");
            e.exit_code()
        }
    }
}
