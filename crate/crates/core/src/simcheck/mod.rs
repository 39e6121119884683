//! Finite-scale checks of simulation, equivalence, closure and the
//! pullback law, with three-valued verdicts.
//!
//! A comparison point is decided when neither side ran out of fuel.
//! Verified means every sampled member found a witness agreeing on every
//! point; Refuted means some member has none even on decided points;
//! anything else is Unknown.

mod closure;
mod equivalence;
mod plan;
mod probe;
mod pullback;
mod report;
mod simulation;

pub use closure::check_closure;
pub use equivalence::check_equivalence;
pub use plan::{TestPlan, DEFAULT_ENUMERATION_DEPTH};
pub use probe::{permutation_family, probe_encodings, stripe_family, FAMILY_RELATIVE};
pub use pullback::check_pullback_law;
pub use report::{
    CandidateFailure, CheckKind, Claim, Counterexample, EquivalenceMode, MemberReport, SimReport, Stats, Verdict,
};
pub use simulation::check_simulation;
