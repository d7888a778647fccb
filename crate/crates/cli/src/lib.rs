//! Job runner behind the `goodmap` binary.
//!
//! Exit codes: 0 verdict computed, 1 property violated, 2 input error,
//! 3 resource guard tripped.

pub mod input;
mod report;

use std::path::PathBuf;
use std::time::Instant;

use goodmap_core::constructible::criterion_failure;
use goodmap_core::goodness::characterization_failure;
use goodmap_core::poly::Limits;
use goodmap_core::sweep::run_sweep;
use goodmap_core::{
    chevalley_image, good_witness, image_preserves_constructible, is_constructible_bruteforce,
    is_constructible_criterion, is_good_definition, is_weak_good, Counterexample, SizeCap,
    SweepConfig,
};
use serde_json::{json, Value};

pub use report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

/// Default sweep size for `proptest`: exhaustive up to this many points,
/// sampled at one more.
pub const DEFAULT_SWEEP_POINTS: usize = 3;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Violation(String),
    #[error("{0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Violation(_) => EXIT_VIOLATION,
            CliError::Resource(_) => EXIT_RESOURCE,
        }
    }
}

impl From<goodmap_core::Error> for CliError {
    fn from(e: goodmap_core::Error) -> Self {
        use goodmap_core::Error::*;
        match e {
            Resource(_) => CliError::Resource(e.to_string()),
            OracleDisagreement(_) | TheoremViolation(_) => CliError::Violation(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JobKind {
    CheckGood,
    CheckWeakGood,
    CheckConstructible,
    Image,
    GoodWitness,
    Proptest,
}

impl JobKind {
    pub fn name(self) -> &'static str {
        match self {
            JobKind::CheckGood => "check-good",
            JobKind::CheckWeakGood => "check-weak-good",
            JobKind::CheckConstructible => "check-constructible",
            JobKind::Image => "image",
            JobKind::GoodWitness => "good-witness",
            JobKind::Proptest => "proptest",
        }
    }
}

#[derive(Debug, Clone)]
pub struct JobSpec {
    pub kind: JobKind,
    /// Input file; for `proptest` an optional counterexample to replay.
    pub input: Option<PathBuf>,
    pub seed: u64,
    /// Point cap for checkers, sweep size for `proptest`.
    pub size_cap: Option<usize>,
    /// Where `proptest` writes counterexample files.
    pub counterexample_dir: Option<PathBuf>,
    pub timing: bool,
}

impl JobSpec {
    pub fn new(kind: JobKind, input: Option<PathBuf>) -> Self {
        JobSpec {
            kind,
            input,
            seed: DEFAULT_SEED,
            size_cap: None,
            counterexample_dir: None,
            timing: false,
        }
    }

    fn effective_cap(&self) -> usize {
        match (self.kind, self.size_cap) {
            (_, Some(cap)) => cap,
            (JobKind::Proptest, None) => DEFAULT_SWEEP_POINTS,
            (_, None) => SizeCap::DEFAULT.0,
        }
    }

    fn required_input(&self) -> Result<input::Source, CliError> {
        let path = self
            .input
            .as_ref()
            .ok_or_else(|| CliError::Input(format!("{} needs an input file", self.kind.name())))?;
        input::Source::read(path)
    }
}

/// A finished job: the report and the exit code it implies.
pub struct JobOutcome {
    pub report: Report,
    pub exit_code: i32,
}

/// Runs `job` with the process resource limits installed from the
/// environment.
pub fn run(job: &JobSpec) -> Result<JobOutcome, CliError> {
    Limits::from_env().map_err(CliError::Input)?.install();
    let start = Instant::now();
    let cap = job.effective_cap();
    let mut report = Report::new(job.kind.name(), job.seed, cap);
    let exit_code = match job.kind {
        JobKind::CheckGood => check_good(job, SizeCap(cap), &mut report)?,
        JobKind::CheckWeakGood => check_weak_good(job, SizeCap(cap), &mut report)?,
        JobKind::CheckConstructible => check_constructible(job, SizeCap(cap), &mut report)?,
        JobKind::Image => image(job, &mut report)?,
        JobKind::GoodWitness => witness(job, &mut report)?,
        JobKind::Proptest => proptest(job, cap, &mut report)?,
    };
    if job.timing {
        report.set_timing(start.elapsed());
    }
    Ok(JobOutcome { report, exit_code })
}

fn check_good(job: &JobSpec, cap: SizeCap, report: &mut Report) -> Result<i32, CliError> {
    let source = job.required_input()?;
    let f = input::map(&source, cap)?;
    report.input(&source);
    let verdict = is_good_definition(&f, cap)?;
    let characterization = characterization_failure(&f, cap)?;
    let preserves = image_preserves_constructible(&f, cap)?;
    if characterization.is_none() != verdict.is_good() || preserves != verdict.is_good() {
        return Err(CliError::Violation(format!(
            "deciders disagree: definition {}, characterization {}, constructible transfer {preserves}",
            verdict.is_good(),
            characterization.is_none()
        )));
    }
    report.verdict("good", json!(verdict.is_good()));
    report.verdict("characterization", json!(characterization.is_none()));
    report.verdict("preserves_constructible", json!(preserves));
    for entry in verdict.entries() {
        match entry.w {
            Some(w) => report.witness(json!({"u": entry.u, "w": w})),
            None => report.counterexample(json!({"u": entry.u})),
        }
    }
    if let Some((z, u)) = characterization {
        report.counterexample(json!({"z": z, "u": u}));
    }
    Ok(EXIT_OK)
}

fn check_weak_good(job: &JobSpec, cap: SizeCap, report: &mut Report) -> Result<i32, CliError> {
    let source = job.required_input()?;
    let f = input::map(&source, cap)?;
    report.input(&source);
    let verdict = is_weak_good(&f, cap)?;
    report.verdict("weak_good", json!(verdict.is_weak_good()));
    for entry in verdict.entries() {
        match entry.v {
            Some(v) => report.witness(json!({"u": entry.u, "v": v})),
            None => report.counterexample(json!({"u": entry.u})),
        }
    }
    Ok(EXIT_OK)
}

fn check_constructible(job: &JobSpec, cap: SizeCap, report: &mut Report) -> Result<i32, CliError> {
    let source = job.required_input()?;
    let (space, e) = input::subset(&source, cap)?;
    report.input(&source);
    let criterion = is_constructible_criterion(&space, e);
    let decomposition = is_constructible_bruteforce(&space, e, cap)?;
    if criterion != decomposition.is_some() {
        return Err(CliError::Violation(format!(
            "criterion says {criterion} but brute force says {} for {e}",
            decomposition.is_some()
        )));
    }
    report.verdict("constructible", json!(criterion));
    if let Some(d) = decomposition {
        report.witness(json!({"pieces": d.pieces()}));
    }
    if let Some(f) = criterion_failure(&space, e) {
        report.counterexample(json!({"f": f}));
    }
    Ok(EXIT_OK)
}

fn image(job: &JobSpec, report: &mut Report) -> Result<i32, CliError> {
    let source = job.required_input()?;
    let p = input::poly_map(&source)?;
    report.input(&source);
    let image = chevalley_image(&p.map, &p.source)?.normalized()?;
    report.verdict("empty", json!(image.is_empty()?));
    report.verdict("strata", report::strata(&image, &p.map_to));
    report.verdict("closure", report::ideal(&image.closure()?, &p.map_to)?);
    report.verdict("target_vars", json!(p.map_to));
    Ok(EXIT_OK)
}

fn witness(job: &JobSpec, report: &mut Report) -> Result<i32, CliError> {
    let source = job.required_input()?;
    let p = input::poly_map(&source)?;
    report.input(&source);
    let [stratum] = p.source.strata() else {
        return Err(CliError::Input(format!(
            "{}: good-witness needs exactly one source stratum (Z as present, J as absent), found {}",
            source.path.display(),
            p.source.strata().len()
        )));
    };
    let w = good_witness(&p.map, stratum.present(), stratum.absent())?;
    report.verdict("certified", json!(true));
    report.witness(json!({
        "closure_ideal": report::ideal(w.closure_ideal(), &p.map_to)?,
        "witness_poly": w.witness_poly().display_with(&p.map_to).to_string(),
        "certified_stratum": report::stratum(&w.certified_stratum().normalized()?, &p.map_to),
        "image": report::strata(&w.image().normalized()?, &p.map_to),
    }));
    Ok(EXIT_OK)
}

fn proptest(job: &JobSpec, points: usize, report: &mut Report) -> Result<i32, CliError> {
    if let Some(path) = &job.input {
        let source = input::Source::read(path)?;
        let record: Counterexample = serde_json::from_str(&source.text).map_err(|e| {
            CliError::Input(format!(
                "{}:{}:{}: {e}",
                path.display(),
                e.line(),
                e.column()
            ))
        })?;
        report.input(&source);
        let reproduced = record.replay(SizeCap::DEFAULT)?;
        report.verdict("invariant", json!(record.invariant));
        report.verdict("reproduced", json!(reproduced.is_some()));
        if let Some(detail) = reproduced {
            report.counterexample(json!({"invariant": record.invariant, "detail": detail}));
            return Ok(EXIT_VIOLATION);
        }
        return Ok(EXIT_OK);
    }
    if points > 3 {
        return Err(CliError::Input(format!(
            "proptest size cap {points} is too large: the exhaustive sweep supports at most 3 points"
        )));
    }
    let mut config = SweepConfig::new(job.seed);
    config.exhaustive_points = points;
    config.sampled_points = points + 1;
    let sweep = run_sweep(config)?;
    report.verdict("passed", json!(sweep.passed()));
    report.verdict("exhaustive_maps", json!(sweep.exhaustive_maps));
    report.verdict("sampled_pairs", json!(sweep.sampled_pairs));
    report.verdict("sampled_maps", json!(sweep.sampled_maps));
    report.verdict(
        "tallies",
        serde_json::to_value(&sweep.tallies).expect("tallies serialize"),
    );
    report.verdict(
        "non_sober_locality",
        serde_json::to_value(sweep.non_sober_locality).expect("counts serialize"),
    );
    if sweep.counterexamples.is_empty() {
        return Ok(EXIT_OK);
    }
    let dir = job
        .counterexample_dir
        .clone()
        .unwrap_or_else(|| PathBuf::from("goodmap-counterexamples"));
    std::fs::create_dir_all(&dir)
        .map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    for (i, record) in sweep.counterexamples.iter().enumerate() {
        let path = dir.join(format!("{}-{i:03}.json", record.invariant));
        let text = serde_json::to_string_pretty(record).expect("counterexamples serialize");
        std::fs::write(&path, text + "\n")
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        report.counterexample(json!({
            "invariant": record.invariant,
            "detail": record.detail,
            "file": path.display().to_string(),
        }));
    }
    Ok(EXIT_VIOLATION)
}

/// The value written for a report: pretty JSON with a trailing newline.
pub fn render(report: &Report) -> String {
    let mut text = serde_json::to_string_pretty(&Value::from(report)).expect("reports serialize");
    text.push('\n');
    text
}
