use rayon::prelude::*;

use super::plan::TestPlan;
use super::report::{CandidateFailure, CheckKind, Claim, Counterexample, MemberReport, SimReport, Verdict};
use crate::encoding::Encoding;
use crate::error::{Error, Result};
use crate::map::PartialMap;
use crate::model::Model;
use crate::value::{Outcome, Value};

/// Checks `A ≿_e B` on the plan: every sampled `g ∈ B` needs an `f` among
/// A's candidates with `e(g(x)) = f(e(x))` at every planned `x`.
pub fn check_simulation(a: &Model, b: &Model, e: &Encoding, plan: &TestPlan) -> Result<SimReport> {
    if e.source() != b.domain() {
        return Err(Error::WrongDomain { expected: b.domain(), found: e.source() });
    }
    if e.target() != a.domain() {
        return Err(Error::WrongDomain { expected: a.domain(), found: e.target() });
    }
    if plan.domain() != b.domain() {
        return Err(Error::WrongDomain { expected: b.domain(), found: plan.domain() });
    }
    let gs = simulated_sample(b, plan)?;
    let candidates = candidate_sample(a, plan)?;
    let claim = Claim {
        check: CheckKind::Simulation,
        simulator: a.name().to_string(),
        simulated: b.name().to_string(),
        encodings: vec![e.to_string()],
        mode: None,
    };
    let members = search_witnesses(&gs, &candidates, e, plan)?;
    Ok(SimReport::assemble(claim, plan.inputs.len() as u64, members, Vec::new()))
}

pub(crate) fn simulated_sample(b: &Model, plan: &TestPlan) -> Result<Vec<PartialMap>> {
    match &plan.b_sample {
        None => Ok(b.members().to_vec()),
        Some(names) => Ok(b.restricted(names)?.members().to_vec()),
    }
}

pub(crate) fn candidate_sample(a: &Model, plan: &TestPlan) -> Result<Vec<PartialMap>> {
    let all = a.candidates(plan.enumeration_depth)?;
    match &plan.a_sample {
        None => Ok(all),
        Some(names) => names
            .iter()
            .map(|n| {
                all.iter()
                    .find(|m| m.name() == n)
                    .cloned()
                    .ok_or_else(|| Error::InvalidModel(format!("`{}` has no candidate `{n}`", a.name())))
            })
            .collect(),
    }
}

/// One member report per `g`, in order; the work per `g` runs in parallel.
pub(crate) fn search_witnesses(
    gs: &[PartialMap],
    candidates: &[PartialMap],
    e: &Encoding,
    plan: &TestPlan,
) -> Result<Vec<MemberReport>> {
    let encoded = plan.inputs.iter().map(|x| e.encode(x)).collect::<Result<Vec<_>>>()?;
    gs.par_iter().map(|g| check_member(g, candidates, &plan.inputs, &encoded, e, plan.fuel)).collect()
}

enum Fit {
    Agrees,
    Undecided,
    Fails(CandidateFailure),
}

fn check_member(
    g: &PartialMap,
    candidates: &[PartialMap],
    inputs: &[Value],
    encoded: &[Value],
    e: &Encoding,
    fuel: u64,
) -> Result<MemberReport> {
    let mut report = MemberReport::simple(g.name(), Verdict::Refuted, None);
    let mut expected = Vec::with_capacity(inputs.len());
    for x in inputs {
        let (out, spent) = g.apply_metered(x, fuel)?;
        report.fuel_spent += spent;
        expected.push(match out {
            Outcome::Converged(v) => Outcome::Converged(e.encode(&v)?),
            other => other,
        });
    }

    let mut failures = Vec::new();
    for f in candidates {
        let mut fit = Fit::Agrees;
        let mut undecided = 0u64;
        for (k, want) in expected.iter().enumerate() {
            if !want.is_decided() {
                undecided += 1;
                continue;
            }
            let (got, spent) = f.apply_metered(&encoded[k], fuel)?;
            report.fuel_spent += spent;
            report.comparisons += 1;
            if !got.is_decided() {
                undecided += 1;
            } else if &got != want {
                fit = Fit::Fails(CandidateFailure {
                    candidate: f.name().to_string(),
                    input: inputs[k].clone(),
                    expected: want.clone(),
                    got,
                });
                break;
            }
        }
        if matches!(fit, Fit::Agrees) && undecided > 0 {
            fit = Fit::Undecided;
        }
        match fit {
            Fit::Agrees => {
                report.verdict = Verdict::Verified;
                report.witness = Some(f.name().to_string());
                report.tentative = None;
                return Ok(report);
            }
            Fit::Undecided => {
                report.verdict = Verdict::Unknown;
                if report.tentative.is_none() {
                    report.tentative = Some(f.name().to_string());
                    report.undecided_points = undecided;
                }
            }
            Fit::Fails(failure) => failures.push(failure),
        }
    }
    if report.verdict == Verdict::Refuted {
        report.counterexample = Some(Counterexample::NoWitness { failures });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::Builtin;
    use crate::recdsl::{parse_term, Term};
    use crate::value::Domain;

    fn model(name: &str, members: Vec<PartialMap>) -> Model {
        Model::new(name, Domain::Nat, members).unwrap()
    }

    fn id() -> PartialMap {
        PartialMap::builtin("iota", Domain::Nat, Builtin::Identity)
    }

    fn succ() -> PartialMap {
        PartialMap::term("S", Term::Succ).unwrap()
    }

    #[test]
    fn identity_cannot_simulate_successor() {
        let plan = TestPlan::nat_range(0..=4, 100).unwrap();
        let r = check_simulation(
            &model("a", vec![id()]),
            &model("b", vec![succ()]),
            &Encoding::identity(Domain::Nat),
            &plan,
        )
        .unwrap();
        assert_eq!(r.aggregate, Verdict::Refuted);
        let Some(Counterexample::NoWitness { failures }) = &r.members[0].counterexample else { panic!() };
        assert_eq!(failures[0].input, Value::from(0));
        assert_eq!(failures[0].expected, Outcome::Converged(Value::from(1)));
        assert_eq!(failures[0].got, Outcome::Converged(Value::from(0)));
    }

    #[test]
    fn first_listed_witness_wins() {
        let twin = succ().renamed("S2");
        let plan = TestPlan::nat_range(0..=4, 100).unwrap();
        let r = check_simulation(
            &model("a", vec![id(), twin, succ()]),
            &model("b", vec![succ()]),
            &Encoding::identity(Domain::Nat),
            &plan,
        )
        .unwrap();
        assert_eq!(r.aggregate, Verdict::Verified);
        assert_eq!(r.witnesses(), [("S", "S2")]);
    }

    #[test]
    fn fuel_exhaustion_is_unknown() {
        let slow = PartialMap::term("slow", parse_term("(C (R (P 1 1) (C S (P 2 3))) I I)").unwrap()).unwrap();
        let plan = TestPlan::nat_range(0..=30, 20).unwrap();
        let m = model("m", vec![slow]);
        let r = check_simulation(&m, &m, &Encoding::identity(Domain::Nat), &plan).unwrap();
        assert_eq!(r.aggregate, Verdict::Unknown);
        assert!(r.stats.undecided_points > 0);
        let r = check_simulation(&m, &m, &Encoding::identity(Domain::Nat), &plan.with_fuel(10_000).unwrap()).unwrap();
        assert_eq!(r.aggregate, Verdict::Verified);
    }

    #[test]
    fn divergence_must_match() {
        let semi = PartialMap::builtin("semi_even", Domain::Nat, Builtin::SemiEven);
        let zero = PartialMap::builtin("zero", Domain::Nat, Builtin::Const(Value::from(0)));
        let plan = TestPlan::nat_range(0..=3, 10).unwrap();
        let r = check_simulation(
            &model("a", vec![zero]),
            &model("b", vec![semi.clone()]),
            &Encoding::identity(Domain::Nat),
            &plan,
        )
        .unwrap();
        assert_eq!(r.aggregate, Verdict::Refuted);
        let r = check_simulation(
            &model("a", vec![semi.clone()]),
            &model("b", vec![semi]),
            &Encoding::identity(Domain::Nat),
            &plan,
        )
        .unwrap();
        assert_eq!(r.aggregate, Verdict::Verified);
    }

    #[test]
    fn domains_are_checked() {
        let plan = TestPlan::nat_range(0..=3, 10).unwrap();
        let m = model("m", vec![id()]);
        assert!(check_simulation(&m, &m, &Encoding::bits(), &plan).is_err());
    }
}
