//! A registry of machine-checkable claims, a runner that evaluates them
//! over (ring, Y) cases, and a hypothesis-dropping counterexample hunter.
//!
//! Checks are independent jobs over (case, claim) pairs; when the
//! `parallel` feature is active the runner fans cases out across a rayon
//! pool. Results are sorted canonically before reporting, so output is
//! byte-identical no matter what the schedule did.

mod context;
mod corpus;
mod registry;

pub use context::CaseContext;
pub use corpus::{corrupted_table_case, default_corpus};
pub use registry::{find_entry, registry, TheoremEntry};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::ring::RingSpec;
use crate::space::YSelector;

/// One corpus entry: a ring recipe plus a selector for `Y`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Case {
    pub ring: RingSpec,
    pub selector: YSelector,
}

impl Case {
    pub fn label(&self) -> String {
        format!("{} | Y={}", self.ring, self.selector)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    CapExceeded,
    Error,
}

/// Result of one claim on one case. `visited` counts quantifier
/// instances; failures always carry a structured witness.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub case: String,
    pub theorem: String,
    pub status: Status,
    pub visited: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// For vacuous results: which hypotheses never fired.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Accumulator threaded through a check: quantifier count, whether any
/// non-vacuous instance fired, and the first counterexample.
#[derive(Debug, Default)]
pub struct Probe {
    pub visited: u64,
    pub fired: bool,
    pub witness: Option<Value>,
}

impl Probe {
    pub fn tick(&mut self) {
        self.visited += 1;
    }

    /// Record one evaluated instance; a false condition freezes the first
    /// witness.
    pub fn check(&mut self, cond: bool, witness: impl FnOnce() -> Value) {
        self.visited += 1;
        self.fired = true;
        if !cond && self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    pub fn failed(&self) -> bool {
        self.witness.is_some()
    }
}

/// Per-run configuration: caps plus an optionally dropped hypothesis.
#[derive(Debug, Clone)]
pub struct CheckConfig {
    pub caps: Caps,
    pub dropped: Option<String>,
}

impl CheckConfig {
    pub fn new(caps: Caps) -> Self {
        CheckConfig { caps, dropped: None }
    }

    /// Whether the named hypothesis is still in force.
    pub fn keeps(&self, name: &str) -> bool {
        self.dropped.as_deref() != Some(name)
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub checks: usize,
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub cap_exceeded: usize,
    pub errors: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0 || self.summary.errors > 0 || self.summary.cap_exceeded > 0
    }

    /// JSON lines: one object per result, then a summary object.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&serde_json::to_string(r).expect("serializable"));
            out.push('\n');
        }
        let summary = serde_json::json!({ "summary": self.summary });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }
}

fn outcome_status(probe: &Probe) -> Status {
    if probe.failed() {
        Status::Fail
    } else if probe.fired {
        Status::Pass
    } else {
        Status::Vacuous
    }
}

fn run_entry(entry: &TheoremEntry, ctx: &CaseContext, config: &CheckConfig) -> CheckResult {
    let mut probe = Probe::default();
    let case = ctx.case.label();
    match (entry.run)(ctx, config, &mut probe) {
        Ok(()) => {
            let status = outcome_status(&probe);
            let note = (status == Status::Vacuous).then(|| {
                if entry.hypotheses.is_empty() {
                    "no instance fired".to_string()
                } else {
                    format!("hypotheses unmet: {}", entry.hypotheses.join(", "))
                }
            });
            CheckResult {
                case,
                theorem: entry.id.to_string(),
                status,
                visited: probe.visited,
                witness: probe.witness,
                error: None,
                note,
            }
        }
        Err(err @ (Error::FilterCapExceeded { .. } | Error::IdealCapExceeded { .. } | Error::SizeCapExceeded { .. })) => {
            CheckResult {
                case,
                theorem: entry.id.to_string(),
                status: Status::CapExceeded,
                visited: probe.visited,
                witness: None,
                error: Some(err.to_string()),
                note: None,
            }
        }
        Err(err) => CheckResult {
            case,
            theorem: entry.id.to_string(),
            status: Status::Error,
            visited: probe.visited,
            witness: None,
            error: Some(err.to_string()),
            note: None,
        },
    }
}

/// Run a single registered claim on a single case.
pub fn run_check(case: &Case, theorem_id: &str, config: &CheckConfig) -> Result<CheckResult> {
    let entry = find_entry(theorem_id)?;
    if let Some(h) = &config.dropped {
        if !entry.hypotheses.contains(&h.as_str()) {
            return Err(Error::UnknownHypothesis {
                claim: theorem_id.to_string(),
                hypothesis: h.clone(),
            });
        }
    }
    let ctx = match CaseContext::build(case, &config.caps) {
        Ok(ctx) => ctx,
        Err(err) => {
            return Ok(CheckResult {
                case: case.label(),
                theorem: theorem_id.to_string(),
                status: Status::Error,
                visited: 0,
                witness: None,
                error: Some(err.to_string()),
                note: None,
            })
        }
    };
    Ok(run_entry(entry, &ctx, config))
}

fn run_case(case: &Case, config: &CheckConfig) -> Vec<CheckResult> {
    let ctx = match CaseContext::build(case, &config.caps) {
        Ok(ctx) => ctx,
        Err(err) => {
            return registry()
                .iter()
                .map(|entry| CheckResult {
                    case: case.label(),
                    theorem: entry.id.to_string(),
                    status: Status::Error,
                    visited: 0,
                    witness: None,
                    error: Some(err.to_string()),
                    note: None,
                })
                .collect()
        }
    };
    if ctx.ring.size() > config.caps.check_elements || ctx.ideals.len() > config.caps.check_ideals {
        let err = Error::SizeCapExceeded {
            size: ctx.ring.size().max(ctx.ideals.len()),
            cap: config.caps.check_elements.min(config.caps.check_ideals),
        };
        return registry()
            .iter()
            .map(|entry| CheckResult {
                case: case.label(),
                theorem: entry.id.to_string(),
                status: Status::CapExceeded,
                visited: 0,
                witness: None,
                error: Some(err.to_string()),
                note: None,
            })
            .collect();
    }
    registry().iter().map(|entry| run_entry(entry, &ctx, config)).collect()
}

fn collect_cases(corpus: &[Case], config: &CheckConfig, parallel: bool) -> Vec<Vec<CheckResult>> {
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return corpus.par_iter().map(|case| run_case(case, config)).collect();
    }
    let _ = parallel;
    corpus.iter().map(|case| run_case(case, config)).collect()
}

/// Evaluate the whole registry over a corpus. Failures are data, not
/// errors; the summary carries the aggregate counts.
pub fn run_suite(corpus: &[Case], config: &CheckConfig, parallel: bool) -> Report {
    let per_case = collect_cases(corpus, config, parallel);
    let mut results: Vec<CheckResult> = per_case.into_iter().flatten().collect();
    results.sort_by(|a, b| a.case.cmp(&b.case).then_with(|| {
        let na: usize = a.theorem[1..].parse().unwrap_or(0);
        let nb: usize = b.theorem[1..].parse().unwrap_or(0);
        na.cmp(&nb)
    }));
    let mut summary = Summary { cases: corpus.len(), checks: results.len(), ..Summary::default() };
    for r in &results {
        match r.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Vacuous => summary.vacuous += 1,
            Status::CapExceeded => summary.cap_exceeded += 1,
            Status::Error => summary.errors += 1,
        }
    }
    Report { results, summary }
}

/// Outcome of a hunt: the first counterexample to the (possibly weakened)
/// claim in corpus order, or the visit statistics of an empty search.
#[derive(Debug, Clone, Serialize)]
pub struct HuntOutcome {
    pub theorem: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dropped: Option<String>,
    pub visited: u64,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub cap_exceeded: bool,
}

/// Weaken one claim by dropping a named hypothesis and scan the corpus
/// for the first counterexample.
pub fn hunt(
    corpus: &[Case],
    theorem_id: &str,
    drop: Option<&str>,
    config: &CheckConfig,
) -> Result<HuntOutcome> {
    let entry = find_entry(theorem_id)?;
    if let Some(h) = drop {
        if !entry.hypotheses.contains(&h) {
            return Err(Error::UnknownHypothesis {
                claim: theorem_id.to_string(),
                hypothesis: h.to_string(),
            });
        }
    }
    let config = CheckConfig { caps: config.caps, dropped: drop.map(str::to_string) };
    let results = hunt_cases(corpus, theorem_id, &config)?;
    let mut visited = 0;
    let mut cap_exceeded = false;
    for result in results {
        visited += result.visited;
        match result.status {
            Status::Fail => {
                return Ok(HuntOutcome {
                    theorem: theorem_id.to_string(),
                    dropped: config.dropped,
                    visited,
                    cases: corpus.len(),
                    witness_case: Some(result.case),
                    witness: result.witness,
                    cap_exceeded,
                })
            }
            Status::CapExceeded => cap_exceeded = true,
            _ => {}
        }
    }
    Ok(HuntOutcome {
        theorem: theorem_id.to_string(),
        dropped: config.dropped,
        visited,
        cases: corpus.len(),
        witness_case: None,
        witness: None,
        cap_exceeded,
    })
}

/// Evaluate one claim over every case, in corpus order. Fans out across
/// the rayon pool when the `parallel` feature is active; order and
/// content of the results are schedule-independent either way.
fn hunt_cases(corpus: &[Case], theorem_id: &str, config: &CheckConfig) -> Result<Vec<CheckResult>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        corpus.par_iter().map(|case| run_check(case, theorem_id, config)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    corpus.iter().map(|case| run_check(case, theorem_id, config)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> CheckConfig {
        CheckConfig::new(Caps::default())
    }

    fn case(n: usize) -> Case {
        Case { ring: RingSpec::Modular { n }, selector: YSelector::Spec }
    }

    #[test]
    fn spot_checks_from_small_rings() {
        let r = run_check(&case(12), "T11", &config()).unwrap();
        assert_eq!(r.status, Status::Pass, "{:?}", r);

        let r = run_check(&case(4), "T5", &config()).unwrap();
        assert_eq!(r.status, Status::Vacuous, "{:?}", r);

        let r = run_check(&case(6), "T26", &config()).unwrap();
        assert_eq!(r.status, Status::Pass, "{:?}", r);
    }

    #[test]
    fn empty_corpus_is_a_clean_report() {
        let report = run_suite(&[], &config(), false);
        assert_eq!(report.summary.checks, 0);
        assert!(!report.has_failures());
    }

    #[test]
    fn corrupted_table_ring_surfaces_as_error() {
        let report = run_suite(&[corrupted_table_case()], &config(), false);
        assert_eq!(report.summary.errors, registry().len());
        assert!(report.has_failures());
        assert!(report.results[0].error.as_deref().unwrap_or("").contains("axiom"));
    }

    #[test]
    fn hunter_finds_the_interior_witness_in_z4() {
        let outcome = hunt(&[case(4)], "T5", Some("kY=0"), &config()).unwrap();
        let witness = outcome.witness.expect("witness expected");
        let detail = &witness["detail"];
        assert_eq!(detail["s"], serde_json::json!(["2"]));
        assert_eq!(outcome.witness_case.as_deref(), Some("Z/4 | Y=spec"));
    }

    #[test]
    fn hunter_finds_regularity_mismatch_in_z4() {
        let outcome = hunt(&[case(4)], "T26", Some("kY=0"), &config()).unwrap();
        assert!(outcome.witness.is_some());
    }

    #[test]
    fn hunter_rejects_unknown_names() {
        assert!(hunt(&[case(4)], "T99", None, &config()).is_err());
        assert!(hunt(&[case(4)], "T5", Some("bogus"), &config()).is_err());
    }

    #[test]
    fn degenerate_single_element_ring_survives_the_suite() {
        let report = run_suite(&[case(1)], &config(), false);
        assert_eq!(report.summary.errors, 0, "{:?}", report.results.iter().find(|r| r.error.is_some()));
        assert_eq!(report.summary.fail, 0);
    }

    #[test]
    fn suite_over_a_few_cases_is_green() {
        let corpus = vec![case(4), case(6), case(12)];
        let report = run_suite(&corpus, &config(), false);
        for r in &report.results {
            assert!(
                matches!(r.status, Status::Pass | Status::Vacuous),
                "{} {} -> {:?} {:?}",
                r.case,
                r.theorem,
                r.status,
                r.witness
            );
        }
    }
}
