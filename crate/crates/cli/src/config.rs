use grolat_core::pushforward::Mode;
use serde::{Serialize, Serializer};

use crate::suites;

/// Everything that determines a run. Two runs with equal configs produce
/// byte-identical reports (wall times are only recorded when `timings` is on).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub suite: String,
    /// Sweeps cover `1..=m_max`; zero means an empty range.
    pub m_max: usize,
    pub n_max: usize,
    pub k_max: usize,
    pub l_max: usize,
    /// Partition filter for suites that range over shapes directly.
    pub box_rows: usize,
    pub box_cols: u32,
    #[serde(serialize_with = "as_display")]
    pub mode: Mode,
    pub trials: usize,
    pub seed: u64,
    pub timings: bool,
}

fn as_display<S: Serializer>(mode: &Mode, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(mode)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl SuiteConfig {
    pub fn new(suite: &str) -> SuiteConfig {
        SuiteConfig {
            suite: suite.to_string(),
            m_max: 3,
            n_max: 2,
            k_max: 3,
            l_max: 3,
            box_rows: 3,
            box_cols: 3,
            mode: Mode::Symbolic,
            trials: 1,
            seed: 0,
            timings: false,
        }
    }

    pub fn validate(&self) -> Result<(), UsageError> {
        if suites::lookup(&self.suite).is_none() {
            return Err(UsageError(format!("unknown suite `{}` (see list-suites)", self.suite)));
        }
        if self.mode == Mode::Sample && self.trials == 0 {
            return Err(UsageError("sample mode needs --trials ≥ 1".into()));
        }
        if self.m_max > 12 || self.n_max > 8 {
            return Err(UsageError("ranges too large: m ≤ 12 and n ≤ 8".into()));
        }
        Ok(())
    }
}
