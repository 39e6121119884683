use serde::Serialize;
use simlab::constructions::{narrowness, NarrownessReport};
use simlab::simcheck::{
    check_closure, check_equivalence, check_pullback_law, check_simulation, probe_encodings, SimReport, Verdict,
};

use crate::scenario::{Check, Scenario};

#[derive(Debug, thiserror::Error)]
#[error("scenario `{scenario}` ({check} check): {source}")]
pub struct ExecuteError {
    pub scenario: String,
    pub check: &'static str,
    #[source]
    pub source: simlab::Error,
}

/// What running a scenario produces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "output", rename_all = "kebab-case")]
pub enum RunOutput {
    Report { scenario: String, report: SimReport },
    Probe { scenario: String, verdict: Verdict, reports: Vec<SimReport> },
    Narrowness { scenario: String, narrow: bool, report: NarrownessReport },
}

impl RunOutput {
    pub fn verdict(&self) -> Verdict {
        match self {
            RunOutput::Report { report, .. } => report.aggregate,
            RunOutput::Probe { verdict, .. } => *verdict,
            RunOutput::Narrowness { narrow: true, .. } => Verdict::Verified,
            RunOutput::Narrowness { narrow: false, .. } => Verdict::Refuted,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.verdict().exit_code()
    }

    pub fn report(&self) -> Option<&SimReport> {
        match self {
            RunOutput::Report { report, .. } => Some(report),
            _ => None,
        }
    }
}

/// Note attached when the simulator's listed members form a proper
/// subset of the simulated model's.
pub const STRICT_SUBSET: &str = "strict subset";

/// Any verified encoding wins; otherwise refuted only if all refuted.
fn probe_verdict(reports: &[SimReport]) -> Verdict {
    if reports.iter().any(|r| r.aggregate == Verdict::Verified) {
        Verdict::Verified
    } else if reports.iter().all(|r| r.aggregate == Verdict::Refuted) {
        Verdict::Refuted
    } else {
        Verdict::Unknown
    }
}

pub fn execute(s: &Scenario) -> Result<RunOutput, ExecuteError> {
    let wrap = |source| ExecuteError { scenario: s.name.clone(), check: s.check.kind(), source };
    let plan = match &s.plan {
        Some(p) => Some(p.build().map_err(wrap)?),
        None => None,
    };
    let plan = || plan.as_ref().expect("checks other than narrowness carry a plan");
    let scenario = s.name.clone();
    Ok(match &s.check {
        Check::Simulation { simulator, simulated, encoding } => {
            let mut report = check_simulation(simulator, simulated, encoding, plan()).map_err(wrap)?;
            let proper = simulator.is_subset_of(simulated) && simulator.members().len() < simulated.members().len();
            if proper {
                report.notes.push(format!(
                    "{STRICT_SUBSET}: the {} listed members of `{}` are a proper subset of the {} of `{}`",
                    simulator.members().len(),
                    simulator.name(),
                    simulated.members().len(),
                    simulated.name()
                ));
            }
            RunOutput::Report { scenario, report }
        }
        Check::PullbackLaw { simulator, simulated, encoding } => RunOutput::Report {
            scenario,
            report: check_pullback_law(simulator, simulated, encoding, plan()).map_err(wrap)?,
        },
        Check::Equivalence { a, b, e_ab, e_ba, mode } => {
            RunOutput::Report { scenario, report: check_equivalence(a, b, e_ab, e_ba, plan(), *mode).map_err(wrap)? }
        }
        Check::Closure { model } => RunOutput::Report { scenario, report: check_closure(model, plan()).map_err(wrap)? },
        Check::Probe { simulator, simulated, family } => {
            let reports = probe_encodings(simulator, simulated, family, plan()).map_err(wrap)?;
            RunOutput::Probe { scenario, verdict: probe_verdict(&reports), reports }
        }
        Check::Narrowness { encoding, prefix } => {
            let report = narrowness(encoding, *prefix).map_err(wrap)?;
            RunOutput::Narrowness { scenario, narrow: report.bound_if_narrow.is_some(), report }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scenario::parse_scenario;
    use std::path::Path;

    fn run(text: &str) -> RunOutput {
        execute(&parse_scenario(Path::new("t.json"), text).unwrap()).unwrap()
    }

    #[test]
    fn closure_on_successor_alone_is_refuted() {
        let out = run(
            r#"{"name": "succ", "models": [{"name": "M", "kind": "dsl-terms", "members": [{"name": "succ", "term": "S"}]}],
                "check": {"kind": "closure", "model": "M"}, "plan": {"inputs": "0..=8", "fuel": 100}}"#,
        );
        assert_eq!(out.verdict(), Verdict::Refuted);
        assert_eq!(out.exit_code(), 1);
    }

    #[test]
    fn probe_verdicts() {
        let out = run(
            r#"{"name": "p", "models": [{"name": "M", "kind": "dsl-terms", "members": [{"name": "id", "term": "I"}]}],
                "check": {"kind": "probe", "simulator": "M", "simulated": "M", "family": {"stripes": 2}},
                "plan": {"inputs": "0..=8", "fuel": 100}}"#,
        );
        assert_eq!(out.verdict(), Verdict::Verified);
        match out {
            RunOutput::Probe { reports, .. } => assert_eq!(reports.len(), 3),
            _ => panic!(),
        }
    }

    #[test]
    fn narrowness_outputs() {
        let out = run(r#"{"name": "n", "encodings": [{"name": "pi", "scheme": "tri-pi"}],
                "check": {"kind": "narrowness", "encoding": "pi", "prefix": 100}}"#);
        assert_eq!(out.verdict(), Verdict::Verified);
        let out = run(r#"{"name": "n", "encodings": [{"name": "s", "scheme": "stripe", "d": 2}],
                "check": {"kind": "narrowness", "encoding": "s", "prefix": 10}}"#);
        assert!(matches!(out, RunOutput::Narrowness { narrow: false, .. }));
        assert_eq!(out.exit_code(), 1);
    }
}
