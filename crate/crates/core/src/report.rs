use std::fmt;

use serde::Serialize;

/// Maximum number of failures kept verbatim; the rest are only counted.
pub const MAX_RECORDED_FAILURES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub law: String,
    pub input: Vec<i64>,
    pub expected: i64,
    pub actual: i64,
}

/// Outcome of an exhaustive or sampled verification sweep.
///
/// Boolean laws are recorded with `expected = 1` and `actual` in `{0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub total: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport {
            suite: suite.into(),
            total: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    /// Records one case; returns whether it held.
    pub fn case(&mut self, law: &str, input: &[i64], expected: i64, actual: i64) -> bool {
        self.total += 1;
        if expected == actual {
            return true;
        }
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Failure {
                law: law.to_string(),
                input: input.to_vec(),
                expected,
                actual,
            });
        }
        false
    }

    pub fn holds(&mut self, law: &str, input: &[i64], ok: bool) -> bool {
        self.case(law, input, 1, i64::from(ok))
    }

    /// Concatenates two partial sweeps of the same suite. Associative, so
    /// workers can be merged in any grouping.
    pub fn merge(mut self, other: CheckReport) -> CheckReport {
        self.total += other.total;
        self.failure_count += other.failure_count;
        let room = MAX_RECORDED_FAILURES.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
        self
    }

    pub fn witness(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} cases)", self.suite, self.total)
        } else {
            write!(
                f,
                "FAIL {} ({} of {} cases failed)",
                self.suite, self.failure_count, self.total
            )?;
            if let Some(w) = self.witness() {
                write!(
                    f,
                    "; first: {} at {:?}, expected {}, got {}",
                    w.law, w.input, w.expected, w.actual
                )?;
            }
            Ok(())
        }
    }
}
