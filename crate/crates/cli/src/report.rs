use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::SuiteConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

/// Both canonical forms, attached to every failing case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub params: BTreeMap<String, String>,
    pub status: Status,
    pub lhs_hash: String,
    pub rhs_hash: String,
    pub time_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<Diagnostic>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

/// A known mismatch between a formula as commonly quoted and the version
/// that holds, reproduced live on its smallest witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub name: String,
    pub description: String,
    pub witness: String,
    pub lhs: String,
    pub rhs: String,
    /// The quoted form really does fail at the witness.
    pub reproduced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub config: SuiteConfig,
    pub cases: Vec<CaseResult>,
    pub summary: Summary,
    pub version: String,
    pub discrepancies: Vec<Discrepancy>,
}

impl Report {
    pub fn new(config: SuiteConfig, cases: Vec<CaseResult>, discrepancies: Vec<Discrepancy>) -> Report {
        let mut summary = Summary::default();
        for c in &cases {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Skip => summary.skip += 1,
            }
        }
        Report {
            suite: config.suite.clone(),
            config,
            cases,
            summary,
            version: env!("CARGO_PKG_VERSION").to_string(),
            discrepancies,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }
}

/// Hex SHA-256 of a canonical form.
pub fn canonical_hash(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "json" => Ok(Format::Json),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(format!("unknown format `{other}`")),
        }
    }
}

pub fn emit_report(r: &Report, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(r).expect("report serializes");
            out.push(b'\n');
            out
        }
        Format::Markdown => markdown(r).into_bytes(),
    }
}

fn params_cell(p: &BTreeMap<String, String>) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn markdown(r: &Report) -> String {
    let c = &r.config;
    let mut s = String::new();
    let _ = writeln!(s, "# Suite `{}`\n", r.suite);
    let _ = writeln!(
        s,
        "mode {}, m ≤ {}, n ≤ {}, k ≤ {}, ℓ ≤ {}, box {}x{}, trials {}, seed {}, version {}\n",
        c.mode, c.m_max, c.n_max, c.k_max, c.l_max, c.box_rows, c.box_cols, c.trials, c.seed, r.version
    );
    let _ = writeln!(s, "pass {} · fail {} · skip {}\n", r.summary.pass, r.summary.fail, r.summary.skip);
    let _ = writeln!(s, "| # | params | status | lhs | rhs | ms |");
    let _ = writeln!(s, "|---|---|---|---|---|---|");
    for (i, case) in r.cases.iter().enumerate() {
        let _ = writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} |",
            i + 1,
            params_cell(&case.params),
            case.status.label(),
            &case.lhs_hash[..12.min(case.lhs_hash.len())],
            &case.rhs_hash[..12.min(case.rhs_hash.len())],
            case.time_ms
        );
    }
    let failing: Vec<_> = r.cases.iter().filter(|c| c.diagnostic.is_some()).collect();
    if !failing.is_empty() {
        let _ = writeln!(s, "\n## Failures\n");
        for case in failing {
            let d = case.diagnostic.as_ref().expect("filtered");
            let _ = writeln!(s, "- {}\n  - lhs: `{}`\n  - rhs: `{}`", params_cell(&case.params), d.lhs, d.rhs);
            if let Some(n) = &d.note {
                let _ = writeln!(s, "  - note: {n}");
            }
        }
    }
    if !r.discrepancies.is_empty() {
        let _ = writeln!(s, "\n## Known discrepancies\n");
        for d in &r.discrepancies {
            let _ = writeln!(
                s,
                "- {}: {} At {}: `{}` vs `{}` (reproduced: {})",
                d.name, d.description, d.witness, d.lhs, d.rhs, d.reproduced
            );
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn case(status: Status) -> CaseResult {
        CaseResult {
            params: BTreeMap::from([("n".to_string(), "1".to_string())]),
            status,
            lhs_hash: canonical_hash("a"),
            rhs_hash: canonical_hash(if status == Status::Fail { "b" } else { "a" }),
            time_ms: 0,
            diagnostic: (status == Status::Fail).then(|| Diagnostic { lhs: "a".into(), rhs: "b".into(), note: None }),
        }
    }

    #[test]
    fn empty_report_has_zero_summary() {
        let r = Report::new(SuiteConfig::new("wavefunction"), Vec::new(), Vec::new());
        let v: serde_json::Value = serde_json::from_slice(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(v["summary"], serde_json::json!({"pass": 0, "fail": 0, "skip": 0}));
        assert_eq!(v["cases"], serde_json::json!([]));
    }

    #[test]
    fn failing_case_carries_both_forms() {
        let r = Report::new(SuiteConfig::new("wavefunction"), vec![case(Status::Pass), case(Status::Fail)], Vec::new());
        let v: serde_json::Value = serde_json::from_slice(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(v["cases"][1]["diagnostic"]["lhs"], "a");
        assert_eq!(v["cases"][1]["diagnostic"]["rhs"], "b");
        assert!(v["cases"][0].get("diagnostic").is_none());
        assert!(!r.all_pass());
    }

    #[test]
    fn markdown_and_json_counts_agree() {
        let cases = vec![case(Status::Pass), case(Status::Fail), case(Status::Skip), case(Status::Pass)];
        let r = Report::new(SuiteConfig::new("wavefunction"), cases, Vec::new());
        let md = String::from_utf8(emit_report(&r, Format::Markdown)).unwrap();
        assert!(md.contains("pass 2 · fail 1 · skip 1"));
        let v: serde_json::Value = serde_json::from_slice(&emit_report(&r, Format::Json)).unwrap();
        assert_eq!(v["summary"], serde_json::json!({"pass": 2, "fail": 1, "skip": 1}));
        assert_eq!(md.matches("| pass |").count(), 2);
    }
}
