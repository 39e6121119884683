use super::plan::TestPlan;
use super::report::{CheckKind, Claim, SimReport};
use super::simulation::{candidate_sample, search_witnesses, simulated_sample};
use crate::encoding::Encoding;
use crate::error::{Error, Result};
use crate::map::PartialMap;
use crate::model::Model;

/// For every ordered pair `(f, g)` of sampled members, looks for a
/// candidate equal to `f∘g` on the plan inputs.
pub fn check_closure(m: &Model, plan: &TestPlan) -> Result<SimReport> {
    if plan.domain() != m.domain() {
        return Err(Error::WrongDomain { expected: m.domain(), found: plan.domain() });
    }
    let sample = simulated_sample(m, plan)?;
    let mut pairs: Vec<PartialMap> = Vec::with_capacity(sample.len() * sample.len());
    for f in &sample {
        for g in &sample {
            pairs.push(f.compose(g)?);
        }
    }
    let candidates = candidate_sample(m, plan)?;
    let members = search_witnesses(&pairs, &candidates, &Encoding::identity(m.domain()), plan)?;
    let claim = Claim {
        check: CheckKind::Closure,
        simulator: m.name().to_string(),
        simulated: format!("{}∘{}", m.name(), m.name()),
        encodings: vec![Encoding::identity(m.domain()).to_string()],
        mode: None,
    };
    Ok(SimReport::assemble(claim, plan.inputs.len() as u64, members, Vec::new()))
}
