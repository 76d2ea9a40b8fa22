use std::time::Duration;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    /// Full serialization of the failing instance.
    pub instance: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub id: String,
    /// The statement being checked, in words.
    pub claim: String,
    pub status: Status,
    pub instances: usize,
    pub failures: Vec<Failure>,
    /// Reason the suite could not run, e.g. a guard was hit.
    pub skipped: Option<String>,
    /// Values reported without being asserted.
    pub notes: Vec<String>,
    /// Excluded from serialization so reports are byte-identical across runs.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Per-instance results, merged in instance order.
#[derive(Debug, Default)]
pub(crate) struct Outcome {
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn instance() -> Self {
        Self {
            instances: 1,
            ..Self::default()
        }
    }

    pub fn check(&mut self, ok: bool, instance: impl FnOnce() -> String, expected: impl ToString, got: impl ToString) {
        if !ok {
            self.failures.push(Failure {
                instance: instance(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn merge(mut self, other: Outcome) -> Self {
        self.instances += other.instances;
        self.failures.extend(other.failures);
        self.notes.extend(other.notes);
        self
    }

    pub fn merge_all(parts: impl IntoIterator<Item = Outcome>) -> Self {
        parts.into_iter().fold(Self::default(), Self::merge)
    }
}

/// Runs a suite body and packages the result. Guard errors mark the suite
/// as skipped; other errors are failures.
pub(crate) fn run_suite(
    id: &str,
    claim: &str,
    body: impl FnOnce() -> crate::Result<Outcome>,
) -> SuiteReport {
    let start = std::time::Instant::now();
    let result = body();
    let wall_time = start.elapsed();
    let (outcome, skipped) = match result {
        Ok(outcome) => (outcome, None),
        Err(e) if e.is_guard() => (Outcome::default(), Some(e.to_string())),
        Err(e) => {
            let mut outcome = Outcome::default();
            outcome.failures.push(Failure {
                instance: id.to_string(),
                expected: "no error".into(),
                got: e.to_string(),
            });
            (outcome, None)
        }
    };
    let status = if skipped.is_some() {
        Status::Skipped
    } else if outcome.failures.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    SuiteReport {
        id: id.to_string(),
        claim: claim.to_string(),
        status,
        instances: outcome.instances,
        failures: outcome.failures,
        skipped,
        notes: outcome.notes,
        wall_time,
    }
}
