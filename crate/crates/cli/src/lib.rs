//! Deterministic suite runner and report writer for the identities in
//! `grolat-core`.

pub mod config;
pub mod report;
pub mod suites;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

pub use config::{SuiteConfig, UsageError};
pub use report::{canonical_hash, emit_report, CaseResult, Diagnostic, Discrepancy, Format, Report, Status, Summary};
pub use suites::{lookup, SuiteInfo, REGISTRY};

/// Run every case of the configured suite on the rayon pool.
///
/// Case `i` draws from its own ChaCha stream `i` under the configured seed,
/// and results are collected in generation order, so the report does not
/// depend on scheduling.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report, UsageError> {
    cfg.validate()?;
    let info = lookup(&cfg.suite).expect("validated");
    let cases = info.cases(cfg);
    let results: Vec<CaseResult> = cases
        .par_iter()
        .enumerate()
        .map(|(i, case)| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(i as u64);
            let start = Instant::now();
            let outcome = case.run(&mut rng);
            let time_ms = if cfg.timings { start.elapsed().as_millis() as u64 } else { 0 };
            let (status, lhs, rhs, note) = match outcome {
                Ok(Some(c)) => (if c.holds { Status::Pass } else { Status::Fail }, c.lhs, c.rhs, c.note),
                Ok(None) => (Status::Skip, String::new(), String::new(), None),
                Err(e) => (Status::Fail, String::new(), String::new(), Some(format!("error: {e}"))),
            };
            CaseResult {
                params: case.params.clone(),
                status,
                lhs_hash: canonical_hash(&lhs),
                rhs_hash: canonical_hash(&rhs),
                time_ms,
                diagnostic: (status == Status::Fail).then_some(Diagnostic { lhs, rhs, note }),
            }
        })
        .collect();
    Ok(Report::new(cfg.clone(), results, info.discrepancies()))
}
