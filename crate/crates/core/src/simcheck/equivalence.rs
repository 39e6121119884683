use std::collections::HashMap;

use super::plan::TestPlan;
use super::report::{CheckKind, Claim, Counterexample, EquivalenceMode, MemberReport, SimReport, Verdict};
use super::simulation::check_simulation;
use crate::encoding::Encoding;
use crate::error::{Error, Result};
use crate::model::Model;
use crate::value::{Domain, Value};

/// Checks `A ≿_{e_ab} B ≿_{e_ba} A`; `strong` also checks both encodings
/// are bijective on the tested prefixes, `isomorphism` additionally that
/// `e_ba` inverts `e_ab` there.
///
/// The plan's inputs are used on B's side; A's side uses the same inputs
/// when the domains agree and A's canonical prefix of the same length
/// otherwise.
pub fn check_equivalence(
    a: &Model,
    b: &Model,
    e_ab: &Encoding,
    e_ba: &Encoding,
    plan: &TestPlan,
    mode: EquivalenceMode,
) -> Result<SimReport> {
    let plan_a = if a.domain() == b.domain() {
        TestPlan { a_sample: plan.b_sample.clone(), b_sample: plan.a_sample.clone(), ..plan.clone() }
    } else {
        let mut p = TestPlan::canonical_prefix(a.domain(), plan.inputs.len() as u64, plan.fuel)?;
        p.a_sample = plan.b_sample.clone();
        p.b_sample = plan.a_sample.clone();
        p.enumeration_depth = plan.enumeration_depth;
        p
    };
    let forward = check_simulation(a, b, e_ab, plan)?;
    let backward = check_simulation(b, a, e_ba, &plan_a)?;

    let mut members = Vec::new();
    for (tag, part) in [("→", &forward), ("←", &backward)] {
        for m in &part.members {
            members.push(MemberReport { member: format!("{tag} {}", m.member), ..m.clone() });
        }
    }
    if mode != EquivalenceMode::Plain {
        members.push(bijective_on_prefix(e_ab, &plan.inputs)?);
        members.push(bijective_on_prefix(e_ba, &plan_a.inputs)?);
    }
    if mode == EquivalenceMode::Isomorphism {
        members.push(inverse_on(e_ab, e_ba, &plan.inputs)?);
        members.push(inverse_on(e_ba, e_ab, &plan_a.inputs)?);
    }
    let claim = Claim {
        check: CheckKind::Equivalence,
        simulator: a.name().to_string(),
        simulated: b.name().to_string(),
        encodings: vec![e_ab.to_string(), e_ba.to_string()],
        mode: Some(mode),
    };
    Ok(SimReport::assemble(claim, plan.inputs.len() as u64, members, vec![forward, backward]))
}

/// Injective on `inputs` and onto the first `|inputs|` elements of the
/// target domain.
fn bijective_on_prefix(e: &Encoding, inputs: &[Value]) -> Result<MemberReport> {
    let name = format!("bijective({e})");
    let mut seen: HashMap<Value, &Value> = HashMap::new();
    for x in inputs {
        let y = e.encode(x)?;
        if let Some(prev) = seen.insert(y.clone(), x) {
            let cx =
                Counterexample::Collision { encoding: e.to_string(), first: prev.clone(), second: x.clone(), image: y };
            return Ok(MemberReport::simple(name, Verdict::Refuted, Some(cx)));
        }
    }
    let target: Domain = e.target();
    for k in 0..inputs.len() as u64 {
        let y = target.canonical(&k.into());
        if e.decode(&y)?.is_none() {
            let cx = Counterexample::Uncovered { encoding: e.to_string(), element: y };
            return Ok(MemberReport::simple(name, Verdict::Refuted, Some(cx)));
        }
    }
    Ok(MemberReport::simple(name, Verdict::Verified, None))
}

/// `second(first(x)) = x` for every input.
fn inverse_on(first: &Encoding, second: &Encoding, inputs: &[Value]) -> Result<MemberReport> {
    if first.target() != second.source() || second.target() != first.source() {
        return Err(Error::WrongDomain { expected: first.target(), found: second.source() });
    }
    let name = format!("inverse({second}, {first})");
    for x in inputs {
        let back = second.encode(&first.encode(x)?)?;
        if &back != x {
            let cx = Counterexample::NotInverse { input: x.clone(), round_trip: back };
            return Ok(MemberReport::simple(name, Verdict::Refuted, Some(cx)));
        }
    }
    Ok(MemberReport::simple(name, Verdict::Verified, None))
}
