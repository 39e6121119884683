use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::value::{Domain, Value};

/// Enumerated members looked at beyond the listed sample, by default.
pub const DEFAULT_ENUMERATION_DEPTH: usize = 64;

/// What a check evaluates: the inputs, the per-evaluation fuel, and which
/// members take part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestPlan {
    pub inputs: Vec<Value>,
    pub fuel: u64,
    /// Restricts the simulating side (candidates) to these names.
    pub a_sample: Option<Vec<String>>,
    /// Restricts the simulated side to these names.
    pub b_sample: Option<Vec<String>>,
    /// How many enumerated members to add to the listed candidates.
    pub enumeration_depth: usize,
}

impl TestPlan {
    pub fn new(inputs: Vec<Value>, fuel: u64) -> Result<Self> {
        if inputs.is_empty() {
            return Err(Error::InvalidPlan("no inputs".into()));
        }
        if fuel == 0 {
            return Err(Error::InvalidPlan("fuel must be at least 1".into()));
        }
        let d = inputs[0].domain();
        if let Some(bad) = inputs.iter().find(|v| v.domain() != d) {
            return Err(Error::WrongDomain { expected: d, found: bad.domain() });
        }
        Ok(TestPlan { inputs, fuel, a_sample: None, b_sample: None, enumeration_depth: DEFAULT_ENUMERATION_DEPTH })
    }

    pub fn nat_range(range: RangeInclusive<u64>, fuel: u64) -> Result<Self> {
        Self::new(range.map(Value::from).collect(), fuel)
    }

    /// The first `count` elements of `domain`'s canonical enumeration.
    pub fn canonical_prefix(domain: Domain, count: u64, fuel: u64) -> Result<Self> {
        Self::new((0..count).map(|k| domain.canonical(&k.into())).collect(), fuel)
    }

    pub fn with_fuel(mut self, fuel: u64) -> Result<Self> {
        if fuel == 0 {
            return Err(Error::InvalidPlan("fuel must be at least 1".into()));
        }
        self.fuel = fuel;
        Ok(self)
    }

    pub fn with_enumeration_depth(mut self, depth: usize) -> Self {
        self.enumeration_depth = depth;
        self
    }

    pub fn with_a_sample(mut self, names: Vec<String>) -> Self {
        self.a_sample = Some(names);
        self
    }

    pub fn with_b_sample(mut self, names: Vec<String>) -> Self {
        self.b_sample = Some(names);
        self
    }

    /// Keeps `count` inputs chosen reproducibly from `seed`, in their
    /// original order.
    pub fn sampled(mut self, count: usize, seed: u64) -> Self {
        if count >= self.inputs.len() {
            return self;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut picks: Vec<usize> = (0..self.inputs.len()).collect::<Vec<_>>();
        picks.shuffle(&mut rng);
        picks.truncate(count.max(1));
        picks.sort_unstable();
        self.inputs = picks.into_iter().map(|k| self.inputs[k].clone()).collect();
        self
    }

    pub fn domain(&self) -> Domain {
        self.inputs[0].domain()
    }
}
