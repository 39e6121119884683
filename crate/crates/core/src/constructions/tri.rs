//! The naturals laid out as a triangular array.
//!
//! Row `m` holds `m², m²+1, …, m²+2m` (width `2m+1`). `f_{i,j}` jumps `i`
//! rows down to column `j` (wrapping at the row width), `g_i` jumps to the
//! first entry, and `π` rotates every row by one.

use num_bigint::BigUint;
use num_integer::Roots;
use num_traits::ToPrimitive;

use crate::error::Result;
use crate::map::{Builtin, PartialMap};
use crate::model::Model;
use crate::value::{Domain, Value};

/// Row of `n`: `⌊√n⌋`, computed exactly.
pub fn row_of(n: &BigUint) -> BigUint {
    if let Some(small) = n.to_u64() {
        return BigUint::from(small.sqrt());
    }
    n.sqrt()
}

fn width(row: &BigUint) -> BigUint {
    row * 2u32 + 1u32
}

/// `(⌊√n⌋+i)² + (j mod (2⌊√n⌋+2i+1))`.
pub fn tri_f(i: &BigUint, j: &BigUint, n: &BigUint) -> BigUint {
    let target = row_of(n) + i;
    let col = j % width(&target);
    &target * &target + col
}

/// `(⌊√n⌋+i)²`, the first entry `i` rows below `n`.
pub fn tri_g(i: &BigUint, n: &BigUint) -> BigUint {
    let target = row_of(n) + i;
    &target * &target
}

/// `⌊√n⌋² + ((n − ⌊√n⌋² + 1) mod (2⌊√n⌋+1))`.
pub fn tri_pi(n: &BigUint) -> BigUint {
    let m = row_of(n);
    let start = &m * &m;
    let col = (n - &start + 1u32) % width(&m);
    start + col
}

pub fn tri_pi_inverse(n: &BigUint) -> BigUint {
    let m = row_of(n);
    let start = &m * &m;
    let w = width(&m);
    // step back one column: add w-1 = 2m
    let col = (n - &start + &w - 1u32) % w;
    start + col
}

pub fn iota() -> PartialMap {
    PartialMap::builtin("iota", Domain::Nat, Builtin::Identity)
}

pub fn kappa(k: u64) -> PartialMap {
    PartialMap::builtin(format!("kappa_{k}"), Domain::Nat, Builtin::Const(Value::from(k)))
}

pub fn f_member(i: u64, j: u64) -> PartialMap {
    PartialMap::builtin(format!("f_{i}_{j}"), Domain::Nat, Builtin::TriF { i: i.into(), j: j.into() })
}

pub fn g_member(i: u64) -> PartialMap {
    PartialMap::builtin(format!("g_{i}"), Domain::Nat, Builtin::TriG { i: i.into() })
}

/// Enumeration of `K ∪ F` (and `G` when `with_g`): `ι` first, then level
/// `s = 0, 1, …` holding `κ_s`, every `f_{i,j}` with `max(i,j) = s`, and `g_s`.
pub fn enumerate_member(index: usize, with_g: bool) -> PartialMap {
    if index == 0 {
        return iota();
    }
    let mut rest = index - 1;
    let mut s = 0u64;
    loop {
        let mut level = vec![kappa(s)];
        if s >= 1 {
            for i in 1..=s {
                for j in 1..=s {
                    if i.max(j) == s {
                        level.push(f_member(i, j));
                    }
                }
            }
            if with_g {
                level.push(g_member(s));
            }
        }
        if rest < level.len() {
            return level.swap_remove(rest);
        }
        rest -= level.len();
        s += 1;
    }
}

/// Samples of `A = K ∪ F ∪ G` and `B = K ∪ F` with
/// `K = {ι} ∪ {κ_k : k ≤ k_max}`, `F = {f_{i,j} : 1 ≤ i ≤ i_max, 1 ≤ j ≤ j_max}`
/// and `G = {g_i : 1 ≤ i ≤ i_max}`.
///
/// Both models carry enumerators for the full infinite sets, so witness
/// searches may look past the listed sample.
pub fn tri_models(i_max: u64, j_max: u64, k_max: u64) -> Result<(Model, Model)> {
    let mut k_part = vec![iota()];
    k_part.extend((0..=k_max).map(kappa));
    let mut f_part = Vec::new();
    for i in 1..=i_max {
        for j in 1..=j_max {
            f_part.push(f_member(i, j));
        }
    }
    let g_part: Vec<_> = (1..=i_max).map(g_member).collect();

    let mut b_members = k_part.clone();
    b_members.extend(f_part.iter().cloned());
    let mut a_members = k_part;
    a_members.extend(f_part);
    a_members.extend(g_part);

    let a = Model::new("tri_A", Domain::Nat, a_members)?.with_enumerator(|k| Some(enumerate_member(k, true)));
    let b = Model::new("tri_B", Domain::Nat, b_members)?.with_enumerator(|k| Some(enumerate_member(k, false)));
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn worked_values() {
        assert_eq!(tri_f(&n(1), &n(0), &n(0)), n(1));
        assert_eq!(tri_f(&n(1), &n(2), &n(5)), n(11));
        assert_eq!(tri_g(&n(2), &n(2)), n(9));
        assert_eq!(tri_pi(&n(0)), n(0));
        assert_eq!([1, 2, 3].map(|k| tri_pi(&n(k))), [n(2), n(3), n(1)]);
        assert_eq!(tri_pi(&n(8)), n(4));
        assert_eq!(tri_pi_inverse(&n(4)), n(8));
    }

    #[test]
    fn large_arguments_are_exact() {
        let big = BigUint::from(u64::MAX) * BigUint::from(u64::MAX);
        assert_eq!(row_of(&big), BigUint::from(u64::MAX));
        assert_eq!(tri_pi_inverse(&tri_pi(&big)), big);
    }

    #[test]
    fn model_sizes() {
        let (a, b) = tri_models(2, 2, 1).unwrap();
        // K = {ι, κ_0, κ_1}, F has 4 members, G has 2
        assert_eq!(a.members().len(), 9);
        assert_eq!(b.members().len(), 7);
        assert!(a.member("g_1").is_some());
        assert!(b.member("g_1").is_none());
        assert!(b.is_subset_of(&a));
        assert!(!a.is_subset_of(&b));
    }

    #[test]
    fn enumeration_covers_small_members() {
        let names: Vec<String> = (0..12).map(|k| enumerate_member(k, true).name().to_string()).collect();
        assert_eq!(
            names,
            [
                "iota", "kappa_0", "kappa_1", "f_1_1", "g_1", "kappa_2", "f_1_2", "f_2_1", "f_2_2", "g_2", "kappa_3",
                "f_1_3"
            ]
        );
        let b_names: Vec<String> = (0..60).map(|k| enumerate_member(k, false).name().to_string()).collect();
        assert!(b_names.iter().all(|s| !s.starts_with("g_")));
        assert!(b_names.contains(&"kappa_6".to_string()));
        assert!(b_names.contains(&"f_3_4".to_string()));
    }
}
