//! Check reports shared by the verification suites.

use std::collections::BTreeMap;
use std::fmt::Debug;

/// Failures kept verbatim per report; the counts stay exact beyond this.
pub const MAX_RECORDED_FAILURES: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub check: String,
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub checked: usize,
    pub failed_count: usize,
    pub failed: Vec<Failure>,
    pub by_check: BTreeMap<String, Tally>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(suite: &str, seed: u64) -> Report {
        Report { suite: suite.to_string(), seed, ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failed_count == 0
    }

    /// Record one comparison; `inputs` is only evaluated on failure.
    pub fn check<T: PartialEq + Debug>(
        &mut self,
        id: &str,
        inputs: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        let ok = lhs == rhs;
        self.record(id, ok, || (inputs(), format!("{:?}", lhs), format!("{:?}", rhs)));
        ok
    }

    /// Record a boolean outcome with lazily built details.
    pub fn record(&mut self, id: &str, ok: bool, details: impl FnOnce() -> (String, String, String)) {
        self.checked += 1;
        let t = self.by_check.entry(id.to_string()).or_default();
        t.checked += 1;
        if !ok {
            t.failed += 1;
            self.failed_count += 1;
            if self.failed.len() < MAX_RECORDED_FAILURES {
                let (inputs, lhs, rhs) = details();
                self.failed.push(Failure { check: id.to_string(), inputs, lhs, rhs });
            }
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Fold another report in, keeping this report's suite name and seed.
    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.failed_count += other.failed_count;
        for f in other.failed {
            if self.failed.len() < MAX_RECORDED_FAILURES {
                self.failed.push(f);
            }
        }
        for (k, v) in other.by_check {
            let t = self.by_check.entry(k).or_default();
            t.checked += v.checked;
            t.failed += v.failed;
        }
        self.notes.extend(other.notes);
    }
}
