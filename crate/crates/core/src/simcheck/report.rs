use std::fmt;

use serde::Serialize;

use crate::value::{Outcome, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Unknown,
}

impl Verdict {
    /// Refuted dominates Unknown, which dominates Verified.
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Refuted, _) | (_, Refuted) => Refuted,
            (Unknown, _) | (_, Unknown) => Unknown,
            _ => Verified,
        }
    }

    pub fn all(vs: impl IntoIterator<Item = Verdict>) -> Verdict {
        vs.into_iter().fold(Verdict::Verified, Verdict::and)
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::Refuted => 1,
            Verdict::Unknown => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::Refuted => "refuted",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Simulation,
    Equivalence,
    Closure,
    PullbackLaw,
    Probe,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::Simulation => "simulation",
            CheckKind::Equivalence => "equivalence",
            CheckKind::Closure => "closure",
            CheckKind::PullbackLaw => "pullback-law",
            CheckKind::Probe => "probe",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EquivalenceMode {
    Plain,
    Strong,
    Isomorphism,
}

impl fmt::Display for EquivalenceMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquivalenceMode::Plain => "plain",
            EquivalenceMode::Strong => "strong",
            EquivalenceMode::Isomorphism => "isomorphism",
        })
    }
}

/// What was checked: `simulator ≿_encodings simulated`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub check: CheckKind,
    pub simulator: String,
    pub simulated: String,
    pub encodings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<EquivalenceMode>,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} ≿[{}] {}", self.check, self.simulator, self.encodings.join(", "), self.simulated)?;
        if let Some(m) = self.mode {
            write!(f, " ({m})")?;
        }
        Ok(())
    }
}

/// The first decided disagreement of one candidate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateFailure {
    pub candidate: String,
    pub input: Value,
    pub expected: Outcome,
    pub got: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Counterexample {
    /// Every candidate disagrees somewhere on decided points.
    NoWitness { failures: Vec<CandidateFailure> },
    /// An element of the target prefix with no preimage.
    Uncovered { encoding: String, element: Value },
    /// Two inputs with the same image.
    Collision { encoding: String, first: Value, second: Value, image: Value },
    /// `e_ba(e_ab(x)) ≠ x`.
    NotInverse { input: Value, round_trip: Value },
    /// The two sides of the pullback law disagree.
    LawMismatch { simulation: Verdict, pullback: Verdict },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberReport {
    pub member: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// For Unknown: the first candidate still consistent on decided points.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tentative: Option<String>,
    pub undecided_points: u64,
    pub comparisons: u64,
    pub fuel_spent: u64,
}

impl MemberReport {
    pub(crate) fn simple(member: impl Into<String>, verdict: Verdict, counterexample: Option<Counterexample>) -> Self {
        MemberReport {
            member: member.into(),
            verdict,
            witness: None,
            counterexample,
            tentative: None,
            undecided_points: 0,
            comparisons: 0,
            fuel_spent: 0,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub inputs_tested: u64,
    pub comparisons: u64,
    pub undecided_points: u64,
    pub fuel_spent: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimReport {
    pub claim: Claim,
    pub aggregate: Verdict,
    pub members: Vec<MemberReport>,
    pub stats: Stats,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    /// Sub-checks this report was assembled from.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<SimReport>,
}

impl SimReport {
    /// Aggregates member verdicts and sums their statistics.
    pub(crate) fn assemble(
        claim: Claim,
        inputs_tested: u64,
        members: Vec<MemberReport>,
        parts: Vec<SimReport>,
    ) -> Self {
        let aggregate = Verdict::all(members.iter().map(|m| m.verdict));
        let mut stats = Stats { inputs_tested, ..Stats::default() };
        for m in &members {
            stats.comparisons += m.comparisons;
            stats.undecided_points += m.undecided_points;
            stats.fuel_spent += m.fuel_spent;
        }
        SimReport { claim, aggregate, members, stats, notes: Vec::new(), parts }
    }

    pub fn member(&self, name: &str) -> Option<&MemberReport> {
        self.members.iter().find(|m| m.member == name)
    }

    /// `(g, f)` for every member with a witness, in listed order.
    pub fn witnesses(&self) -> Vec<(&str, &str)> {
        self.members.iter().filter_map(|m| m.witness.as_deref().map(|w| (m.member.as_str(), w))).collect()
    }
}
