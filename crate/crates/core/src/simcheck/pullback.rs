use super::plan::TestPlan;
use super::report::{CheckKind, Claim, Counterexample, MemberReport, SimReport, Verdict};
use super::simulation::{candidate_sample, check_simulation};
use crate::encoding::Encoding;
use crate::error::Result;
use crate::map::pullback;
use crate::model::Model;

/// Compares, member by member, `A ≿_e B` against `B ⊆ ⟨e⟩A` (each `g`
/// equal to the pullback of some candidate). A member is Verified when
/// both sides reach the same decided verdict.
pub fn check_pullback_law(a: &Model, b: &Model, e: &Encoding, plan: &TestPlan) -> Result<SimReport> {
    let direct = check_simulation(a, b, e, plan)?;

    let pulled_members = candidate_sample(a, plan)?.iter().map(|f| pullback(e, f)).collect::<Result<Vec<_>>>()?;
    let pulled = Model::new(format!("⟨{e}⟩{}", a.name()), e.source(), pulled_members)?;
    let inner_plan = TestPlan { a_sample: None, enumeration_depth: 0, ..plan.clone() };
    let via_pullback = check_simulation(&pulled, b, &Encoding::identity(b.domain()), &inner_plan)?;

    let members = direct
        .members
        .iter()
        .zip(&via_pullback.members)
        .map(|(s, p)| {
            let (verdict, cx) = match (s.verdict, p.verdict) {
                (Verdict::Unknown, _) | (_, Verdict::Unknown) => (Verdict::Unknown, None),
                (x, y) if x == y => (Verdict::Verified, None),
                (x, y) => (Verdict::Refuted, Some(Counterexample::LawMismatch { simulation: x, pullback: y })),
            };
            MemberReport {
                witness: s.witness.clone(),
                comparisons: s.comparisons + p.comparisons,
                fuel_spent: s.fuel_spent + p.fuel_spent,
                undecided_points: s.undecided_points + p.undecided_points,
                ..MemberReport::simple(s.member.clone(), verdict, cx)
            }
        })
        .collect();
    let claim = Claim {
        check: CheckKind::PullbackLaw,
        simulator: a.name().to_string(),
        simulated: b.name().to_string(),
        encodings: vec![e.to_string()],
        mode: None,
    };
    let notes =
        vec![format!("simulation side: {}", direct.aggregate), format!("pullback side: {}", via_pullback.aggregate)];
    let mut report = SimReport::assemble(claim, plan.inputs.len() as u64, members, vec![direct, via_pullback]);
    report.notes = notes;
    Ok(report)
}
