//! The predicate family `h_i` built over a 0/1 oracle `h`, its images
//! `h'_i`, and the encoding `ρ(n) = 2n + h(n)` under which the
//! semi-decidable predicates simulate every `h_i`.
//!
//! The oracle stands in for a non-computable predicate and is injected;
//! nothing here tries to compute it.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::encoding::Encoding;
use crate::error::{Error, Result};
use crate::map::{Builtin, PartialMap};
use crate::model::Model;
use crate::value::Domain;

type OracleFn = dyn Fn(&BigUint) -> bool + Send + Sync;

/// A total 0/1 predicate on the naturals with `h(0) = 0`.
#[derive(Clone)]
pub struct OracleH {
    name: String,
    f: Arc<OracleFn>,
}

impl fmt::Debug for OracleH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OracleH({})", self.name)
    }
}

impl OracleH {
    /// `f(n) == true` means `h(n) = 1`.
    pub fn new(name: impl Into<String>, f: impl Fn(&BigUint) -> bool + Send + Sync + 'static) -> Result<Self> {
        if f(&BigUint::zero()) {
            return Err(Error::OracleZero);
        }
        Ok(OracleH { name: name.into(), f: Arc::new(f) })
    }

    pub fn all_zeros() -> Self {
        OracleH::new("zeros", |_| false).expect("h(0) = 0")
    }

    pub fn parity() -> Self {
        OracleH::new("parity", |n| n.bit(0)).expect("h(0) = 0")
    }

    /// Independent fair bits per input, reproducible from `seed`; `h(0)` is
    /// pinned to 0.
    pub fn pseudorandom(seed: u64) -> Self {
        OracleH::new(format!("random:{seed}"), move |n| {
            if n.is_zero() {
                return false;
            }
            let stream = n.iter_u64_digits().fold(0u64, |acc, d| acc.rotate_left(17) ^ d);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream);
            rng.gen::<bool>()
        })
        .expect("h(0) = 0")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn value(&self, n: &BigUint) -> u32 {
        u32::from((self.f)(n))
    }
}

/// The three objects attached to index `i`.
#[derive(Debug, Clone)]
pub struct ReFamily {
    /// `h_i(n) = 0` if `n < i` or `h(n) = 0`, else ⊥.
    pub h_i: PartialMap,
    /// `h'_i(n) = 0` if `⌊n/2⌋ < i` or `n` is even, else ⊥.
    pub h_prime_i: PartialMap,
    /// `ρ(n) = 2n + h(n)`.
    pub rho: Encoding,
}

pub fn re_family(h: &OracleH, i: u64) -> Result<ReFamily> {
    if h.value(&BigUint::zero()) != 0 {
        return Err(Error::OracleZero);
    }
    Ok(ReFamily {
        h_i: PartialMap::builtin(
            format!("h_{i}[{}]", h.name()),
            Domain::Nat,
            Builtin::ReH { oracle: h.clone(), i: i.into() },
        ),
        h_prime_i: PartialMap::builtin(format!("h'_{i}"), Domain::Nat, Builtin::ReHPrime { i: i.into() }),
        rho: Encoding::rho(h.clone()),
    })
}

/// Semi-decision procedures (0 on acceptance, ⊥ otherwise) used as the
/// RE part of the sample.
pub fn re_sample() -> Vec<PartialMap> {
    vec![
        PartialMap::builtin("semi_all", Domain::Nat, Builtin::SemiAtLeast(BigUint::zero())),
        PartialMap::builtin("semi_ge3", Domain::Nat, Builtin::SemiAtLeast(3u32.into())),
        PartialMap::builtin("semi_even", Domain::Nat, Builtin::SemiEven),
    ]
}

/// `(A, B)` with `B = RE sample ∪ {h_i : i ≤ i_max}` and `A` holding
/// `f(⌊n/2⌋)` for each sampled `f` together with every `h'_i`.
pub fn re_models(h: &OracleH, i_max: u64) -> Result<(Model, Model, Encoding)> {
    let mut simulated = re_sample();
    let mut simulator: Vec<PartialMap> = re_sample().into_iter().map(PartialMap::halve_input).collect();
    for i in 0..=i_max {
        let fam = re_family(h, i)?;
        simulated.push(fam.h_i);
        simulator.push(fam.h_prime_i);
    }
    Ok((
        Model::new("re_images", Domain::Nat, simulator)?,
        Model::new(format!("re_with_h[{}]", h.name()), Domain::Nat, simulated)?,
        Encoding::rho(h.clone()),
    ))
}
