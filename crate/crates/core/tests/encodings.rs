//! Encodings, the shortlex bijection and the map transports.

use std::collections::HashSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use simlab::constructions::{f_member, OracleH};
use simlab::encoding::FinitePermutation;
use simlab::machines::{bits_to_nat, nat_to_bits};
use simlab::recdsl::library;
use simlab::{compose_encodings, pullback, pushforward, BitString, Domain, Encoding, Outcome, PartialMap, Value};

const PREFIX: u64 = 1 << 16;

fn catalogue() -> Vec<Encoding> {
    let swaps: Vec<u64> = (0..64).map(|k| k ^ 1).collect();
    vec![
        Encoding::identity(Domain::Nat),
        Encoding::stripe(2u32, 0u32).unwrap(),
        Encoding::stripe(2u32, 1u32).unwrap(),
        Encoding::stripe(3u32, 2u32).unwrap(),
        Encoding::tri_pi(),
        Encoding::tri_pi_inverse(),
        Encoding::bits(),
        Encoding::bits().inverse().unwrap(),
        Encoding::godel(),
        Encoding::godel().inverse().unwrap(),
        Encoding::table(FinitePermutation::from_images(&swaps).unwrap()),
        Encoding::rho(OracleH::parity()),
        Encoding::rho(OracleH::pseudorandom(11)),
        compose_encodings(&Encoding::stripe(2u32, 0u32).unwrap(), &Encoding::tri_pi()).unwrap(),
        compose_encodings(&Encoding::bits(), &Encoding::godel()).unwrap(),
    ]
}

#[test]
fn injective_with_exact_decode_on_the_prefix() {
    for e in catalogue() {
        let mut seen = HashSet::new();
        for k in 0..PREFIX {
            let x = e.source().canonical(&k.into());
            let y = e.encode(&x).unwrap();
            assert_eq!(y.domain(), e.target());
            assert!(seen.insert(y.clone()), "{e}: collision at {x}");
            assert_eq!(e.decode(&y).unwrap(), Some(x), "{e}");
        }
    }
}

#[test]
fn decode_is_empty_off_the_range() {
    let even = Encoding::stripe(2u32, 0u32).unwrap();
    assert_eq!(even.decode(&Value::from(7)).unwrap(), None);
    let rho = Encoding::rho(OracleH::parity());
    for k in 0..200u64 {
        let miss = 2 * k + 1 - k % 2;
        assert_eq!(rho.decode(&Value::from(miss)).unwrap(), None);
    }
    assert!(even.decode(&Value::Bits(BitString::empty())).is_err());
}

#[test]
fn composition_examples() {
    let s20 = Encoding::stripe(2u32, 0u32).unwrap();
    let s31 = Encoding::stripe(3u32, 1u32).unwrap();
    let s21 = Encoding::stripe(2u32, 1u32).unwrap();
    let at = |e: &Encoding, x: u64| e.encode(&Value::from(x)).unwrap();
    assert_eq!(at(&compose_encodings(&s20, &s20).unwrap(), 3), Value::from(12));
    assert_eq!(at(&compose_encodings(&Encoding::identity(Domain::Nat), &s31).unwrap(), 2), Value::from(7));
    assert_eq!(at(&compose_encodings(&s20, &s21).unwrap(), 5), Value::from(2 * (2 * 5 + 1)));
    assert!(compose_encodings(&s20, &Encoding::bits()).is_err());
}

/// Shortlex index of a word: `2^len − 1` words are shorter.
fn shortlex_index(bits: &[bool]) -> u64 {
    let value = bits.iter().fold(0u64, |acc, &b| acc * 2 + b as u64);
    (1u64 << bits.len()) - 1 + value
}

#[test]
fn shortlex_bijection() {
    let listed: Vec<String> = (0..8u32).map(|k| nat_to_bits(&k.into()).to_string()).collect();
    assert_eq!(listed, ["ε", "0", "1", "00", "01", "10", "11", "000"]);
    assert_eq!(bits_to_nat(&"01".parse().unwrap()), BigUint::from(4u32));
    for k in 0..PREFIX {
        let b = nat_to_bits(&k.into());
        assert_eq!(shortlex_index(b.bits()), k);
        assert_eq!(bits_to_nat(&b), BigUint::from(k));
    }
    for len in 0..=16usize {
        for v in 0..(1u64 << len) {
            let word: Vec<bool> = (0..len).rev().map(|i| v >> i & 1 == 1).collect();
            let b = BitString::from(word.clone());
            let k = bits_to_nat(&b);
            assert_eq!(k, BigUint::from(shortlex_index(&word)));
            assert_eq!(nat_to_bits(&k), b);
        }
    }
}

fn suite_maps() -> Vec<PartialMap> {
    let mut v: Vec<PartialMap> =
        library::rec_suite().into_iter().map(|(n, t)| PartialMap::term(n, t).unwrap()).collect();
    v.push(f_member(1, 2));
    v
}

fn nat_encodings() -> Vec<Encoding> {
    catalogue().into_iter().filter(|e| e.source() == Domain::Nat).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn push_then_pull_is_the_original(ei in 0usize..64, mi in 0usize..64, x in 0u64..200) {
        let es = nat_encodings();
        let ms = suite_maps();
        let e = &es[ei % es.len()];
        let m = &ms[mi % ms.len()];
        let round = pullback(e, &pushforward(e, m).unwrap()).unwrap();
        let v = Value::from(x);
        prop_assert_eq!(round.apply(&v, 1_000_000).unwrap(), m.apply(&v, 1_000_000).unwrap());
    }

    #[test]
    fn map_evaluation_is_fuel_monotone(mi in 0usize..64, x in 0u64..100, f1 in 1u64..400, extra in 0u64..5000) {
        let ms = suite_maps();
        let m = &ms[mi % ms.len()];
        let v = Value::from(x);
        let low = m.apply(&v, f1).unwrap();
        prop_assert_eq!(&low, &m.apply(&v, f1).unwrap());
        if let Outcome::Converged(_) = low {
            prop_assert_eq!(m.apply(&v, f1 + extra).unwrap(), low);
        }
    }

    #[test]
    fn composed_decode_reverses_encode(a in 0usize..64, b in 0usize..64, x in 0u64..100_000) {
        let es = nat_encodings();
        let (e1, e2) = (&es[a % es.len()], &es[b % es.len()]);
        if e2.target() == e1.source() {
            let c = compose_encodings(e1, e2).unwrap();
            let v = Value::from(x);
            let y = c.encode(&v).unwrap();
            prop_assert_eq!(&y, &e1.encode(&e2.encode(&v).unwrap()).unwrap());
            prop_assert_eq!(c.decode(&y).unwrap(), Some(v));
        }
    }

    #[test]
    fn bijections_invert(a in 0usize..64, k in 0u64..100_000) {
        let es = catalogue();
        let e = &es[a % es.len()];
        if e.is_bijection() {
            let inv = e.inverse().unwrap();
            let x = e.source().canonical(&k.into());
            prop_assert_eq!(inv.encode(&e.encode(&x).unwrap()).unwrap(), x);
        } else {
            prop_assert!(e.inverse().is_err());
        }
    }
}
