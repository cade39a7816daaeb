//! Depth-bounded verification of commutator-blueprint axioms for the families
//! in `blueprint-families`, and drivers for their nilpotency-class statements.
//!
//! Every check quantifies over the ball of radius `depth` only. Within the
//! ball each element `w` contributes all of `Min(w)`; work fans out over
//! galleries and the first failure in `(length(w), ShortLex(w), type)` order
//! is reported, so counterexamples have minimal length.

mod atlas;
mod checks;
mod report;
mod reproduce;

use std::time::Instant;

use blueprint_families::{BlueprintFamily, FamilyError, Variant};
use coxeter_core::Gen;
use group_engine::GroupError;
use thiserror::Error;

pub use atlas::{Atlas, GalleryData, MTable};
pub use report::{CheckKind, CheckSection, Counterexample, Status, VerificationReport, REPORT_SCHEMA_VERSION};
pub use reproduce::{group_summary, GroupSummary, Reproduction, DEFAULT_CAP};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("{0}")]
    Config(String),
    #[error("extension step {step} failed: {source}")]
    Extension { step: usize, source: GroupError },
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub depth: usize,
    pub checks: Vec<CheckKind>,
    /// Worker threads; `None` lets rayon decide.
    pub jobs: Option<usize>,
}

/// 8 for universal rank 2, 6 otherwise.
pub fn default_depth(family: &BlueprintFamily) -> usize {
    let m = family.matrix();
    if m.is_universal() && m.rank() == 2 {
        8
    } else {
        6
    }
}

/// The checks `--all` selects: all of them, except that `prop52` needs a quad family.
pub fn applicable_checks(family: &BlueprintFamily) -> Vec<CheckKind> {
    CheckKind::ALL.into_iter().filter(|&k| k != CheckKind::Prop52 || matches!(family.variant(), Variant::Quad { .. })).collect()
}

pub fn certification_text(depth: usize) -> String {
    format!("Checks cover the ball of radius {depth} only; the axioms quantify over all of W and are not certified beyond it.")
}

fn with_pool<T: Send>(jobs: Option<usize>, work: impl FnOnce() -> T + Send) -> Result<T, VerifyError> {
    match jobs {
        None => Ok(work()),
        Some(0) => Err(VerifyError::Config("jobs must be positive".into())),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|e| VerifyError::Config(e.to_string()))?;
            Ok(pool.install(work))
        }
    }
}

/// Runs the selected checks over the ball of radius `options.depth`.
pub fn verify(family: &BlueprintFamily, options: &VerifyOptions) -> Result<VerificationReport, VerifyError> {
    with_pool(options.jobs, || {
        let atlas = Atlas::build(family, options.depth)?;
        run_checks(family, &atlas, &options.checks, certification_text(options.depth))
    })?
}

/// Runs the selected checks over the minimal galleries of the given elements
/// (all of `Min(w)` for each), for instances far outside any practical ball.
pub fn verify_sample(family: &BlueprintFamily, words: &[Vec<Gen>], checks: &[CheckKind], jobs: Option<usize>) -> Result<VerificationReport, VerifyError> {
    let m = family.matrix();
    for w in words {
        m.check_word(w).map_err(|e| VerifyError::Config(e.to_string()))?;
    }
    let elements = words.iter().map(|w| m.reduce(w)).collect();
    with_pool(jobs, || {
        let atlas = Atlas::from_elements(family, elements)?;
        let text = format!("Checks cover {} sample elements only; prefixes are examined where a check asks for them.", atlas.ball_size());
        run_checks(family, &atlas, checks, text)
    })?
}

fn run_checks(family: &BlueprintFamily, atlas: &Atlas, checks: &[CheckKind], certification: String) -> Result<VerificationReport, VerifyError> {
    if checks.contains(&CheckKind::Prop52) && !matches!(family.variant(), Variant::Quad { .. }) {
        return Err(VerifyError::Config("prop52 checks apply to quad families only".into()));
    }
    let start = Instant::now();
    let checker = checks::Checker { family, atlas };
    let mut kinds = checks.to_vec();
    kinds.sort();
    kinds.dedup();
    let mut sections = Vec::new();
    for kind in kinds {
        let t = Instant::now();
        let outcome = match kind {
            CheckKind::Cb1 => checker.cb1(),
            CheckKind::Cb2 => checker.cb2(),
            CheckKind::Cb3Pcb => checker.cb3_pcb(),
            CheckKind::Weyl => checker.weyl(),
            CheckKind::TwoN => checker.two_n(),
            CheckKind::Prop52 => checker.prop52(),
        };
        sections.push(CheckSection::from_outcome(kind.name(), outcome, t.elapsed().as_millis() as u64));
    }
    Ok(VerificationReport {
        schema_version: REPORT_SCHEMA_VERSION,
        certification,
        family: family.document(),
        depth: atlas.depth,
        ball_size: atlas.ball_size(),
        sphere_sizes: atlas.sphere_sizes.clone(),
        galleries: atlas.gallery_count(),
        checks: sections,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Runs one reproduction driver as a report section.
pub fn reproduce(family: &BlueprintFamily, what: Reproduction, cap: usize, jobs: Option<usize>) -> Result<CheckSection, VerifyError> {
    with_pool(jobs, || {
        let t = Instant::now();
        let outcome = reproduce::run(family, what, cap)?;
        Ok(CheckSection::from_outcome(&what.name(), outcome, t.elapsed().as_millis() as u64))
    })?
}
