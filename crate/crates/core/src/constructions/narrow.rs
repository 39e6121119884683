//! Cycle structure of a permutation restricted to a finite prefix.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::encoding::Encoding;
use crate::error::{Error, Result};
use crate::value::{Domain, Value};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NarrownessReport {
    pub encoding: String,
    pub prefix: u64,
    /// The prefix is mapped onto itself.
    pub is_permutation_on_prefix: bool,
    /// Longest cycle that closes inside the prefix.
    pub max_cycle_length: u64,
    /// Present iff every prefix element lies on a closed cycle.
    pub bound_if_narrow: Option<u64>,
    /// Least `k` with `π^k = id` on the closed cycles (lcm of their lengths).
    #[serde(serialize_with = "as_string")]
    pub period: BigUint,
    pub cycle_lengths_histogram: BTreeMap<u64, u64>,
    /// Closed cycles, each starting at its least element, ordered by it.
    #[serde(serialize_with = "cycles_as_strings")]
    pub cycles: Vec<Vec<BigUint>>,
    /// Prefix elements whose orbit leaves the prefix.
    pub escaping_elements: u64,
}

fn as_string<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn cycles_as_strings<S: serde::Serializer>(v: &[Vec<BigUint>], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        let words: Vec<String> = c.iter().map(ToString::to_string).collect();
        seq.serialize_element(&words.join(" "))?;
    }
    seq.end()
}

pub fn narrowness(e: &Encoding, prefix: u64) -> Result<NarrownessReport> {
    if e.source() != Domain::Nat || e.target() != Domain::Nat {
        return Err(Error::WrongDomain { expected: Domain::Nat, found: e.target() });
    }
    let mut image: Vec<Option<u64>> = Vec::with_capacity(prefix as usize);
    let mut seen: HashMap<BigUint, u64> = HashMap::new();
    for x in 0..prefix {
        let y = e.encode(&Value::from(x))?.as_nat()?.clone();
        if let Some(prev) = seen.insert(y.clone(), x) {
            return Err(Error::NotAPermutation(format!("{e} sends both {prev} and {x} to {y}")));
        }
        image.push(u64::try_from(&y).ok().filter(|&v| v < prefix));
    }

    let mut visited = HashSet::new();
    let mut cycles = Vec::new();
    let mut escaping = 0u64;
    for start in 0..prefix {
        if visited.contains(&start) {
            continue;
        }
        let mut path = vec![start];
        visited.insert(start);
        let mut cur = start;
        let closed = loop {
            match image[cur as usize] {
                Some(next) if next == start => break true,
                Some(next) if !visited.contains(&next) => {
                    visited.insert(next);
                    path.push(next);
                    cur = next;
                }
                _ => break false,
            }
        };
        if closed {
            cycles.push(path.into_iter().map(BigUint::from).collect::<Vec<_>>());
        } else {
            escaping += path.len() as u64;
        }
    }

    let mut histogram = BTreeMap::new();
    let mut period = BigUint::one();
    for c in &cycles {
        *histogram.entry(c.len() as u64).or_insert(0) += 1;
        period = period.lcm(&BigUint::from(c.len()));
    }
    let max_cycle_length = histogram.keys().next_back().copied().unwrap_or(0);
    Ok(NarrownessReport {
        encoding: e.to_string(),
        prefix,
        is_permutation_on_prefix: escaping == 0,
        max_cycle_length,
        bound_if_narrow: (escaping == 0).then_some(max_cycle_length),
        period,
        cycle_lengths_histogram: histogram,
        cycles,
        escaping_elements: escaping,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoding::FinitePermutation;

    #[test]
    fn identity_is_narrow() {
        let r = narrowness(&Encoding::identity(Domain::Nat), 100).unwrap();
        assert_eq!(r.bound_if_narrow, Some(1));
        assert_eq!(r.cycles.len(), 100);
    }

    #[test]
    fn adjacent_swaps() {
        let images: Vec<u64> = (0..100).map(|k| k ^ 1).collect();
        let e = Encoding::table(FinitePermutation::from_images(&images).unwrap());
        let r = narrowness(&e, 100).unwrap();
        assert_eq!(r.bound_if_narrow, Some(2));
        assert_eq!(r.period, BigUint::from(2u32));
        assert_eq!(r.cycle_lengths_histogram, BTreeMap::from([(2, 50)]));
    }

    #[test]
    fn escaping_orbits() {
        let e = Encoding::stripe(2u32, 0u32).unwrap();
        // 0 is fixed; 2n for n > 0 is injective but leaves any prefix
        assert!(narrowness(&e, 10).is_ok());
        let r = narrowness(&e, 10).unwrap();
        assert!(!r.is_permutation_on_prefix);
        assert_eq!(r.bound_if_narrow, None);
        assert_eq!(r.cycles.len(), 1);
        assert_eq!(r.escaping_elements, 9);
    }

    #[test]
    fn rows_of_the_triangle() {
        let r = narrowness(&Encoding::tri_pi(), 100).unwrap();
        assert_eq!(r.max_cycle_length, 19);
        assert_eq!(r.cycles.len(), 10);
        assert_eq!(r.cycles[1], [1u32, 2, 3].map(BigUint::from).to_vec());
    }

    #[test]
    fn other_domains_are_rejected() {
        assert!(matches!(narrowness(&Encoding::bits(), 5), Err(Error::WrongDomain { .. })));
    }
}
