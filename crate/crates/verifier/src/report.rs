use blueprint_families::FamilyDocument;
use serde::Serialize;

/// Version of the JSON report layout; bump when fields change meaning.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Cb1,
    Cb2,
    Cb3Pcb,
    Weyl,
    TwoN,
    Prop52,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [CheckKind::Cb1, CheckKind::Cb2, CheckKind::Cb3Pcb, CheckKind::Weyl, CheckKind::TwoN, CheckKind::Prop52];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Cb1 => "cb1",
            CheckKind::Cb2 => "cb2",
            CheckKind::Cb3Pcb => "cb3_pcb",
            CheckKind::Weyl => "weyl",
            CheckKind::TwoN => "2n",
            CheckKind::Prop52 => "prop52",
        }
    }

    pub fn from_name(name: &str) -> Option<CheckKind> {
        CheckKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// A search or enumeration hit its bound; nothing is certified.
    Truncated,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Truncated => "truncated",
        }
    }
}

/// The first failure in `(length(w), ShortLex(w), type of G)` order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub w: String,
    pub gallery: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSection {
    pub name: String,
    pub status: Status,
    /// How many units (galleries, elements or relations) were examined.
    pub examined: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// The exhausted resource, for truncated sections.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncated: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub elapsed_ms: u64,
}

impl CheckSection {
    pub(crate) fn from_outcome(name: &str, outcome: Outcome, elapsed_ms: u64) -> Self {
        let (status, counterexample, truncated) = match outcome.verdict {
            Verdict::Pass => (Status::Pass, None, None),
            Verdict::Fail(c) => (Status::Fail, Some(c), None),
            Verdict::Truncated(r) => (Status::Truncated, None, Some(r)),
        };
        CheckSection { name: name.into(), status, examined: outcome.examined, counterexample, truncated, note: outcome.note, elapsed_ms }
    }
}

pub(crate) enum Verdict {
    Pass,
    Fail(Counterexample),
    Truncated(String),
}

pub(crate) struct Outcome {
    pub verdict: Verdict,
    pub examined: usize,
    pub note: Option<String>,
}

impl Outcome {
    pub fn pass(examined: usize) -> Self {
        Outcome { verdict: Verdict::Pass, examined, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    /// States that only a finite ball was examined.
    pub certification: String,
    pub family: FamilyDocument,
    pub depth: usize,
    /// Number of elements of each length `0..=depth`.
    pub sphere_sizes: Vec<usize>,
    pub ball_size: usize,
    pub galleries: usize,
    pub checks: Vec<CheckSection>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.name.as_str()).collect()
    }

    pub fn section(&self, name: &str) -> Option<&CheckSection> {
        self.checks.iter().find(|c| c.name == name)
    }
}
