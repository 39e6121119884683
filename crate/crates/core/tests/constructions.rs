//! Constructions checked against brute-force oracles.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use simlab::constructions::{
    diag_h, f_member, godel_decode, godel_encode, iota, kappa, narrowness, re_family, stripe_model_member, tri_f,
    tri_g, tri_models, tri_pi, tri_pi_inverse, OracleH,
};
use simlab::recdsl::{library, parse_term};
use simlab::{pushforward, Encoding, Outcome, PartialMap, PureList, Value};

fn n(x: u64) -> BigUint {
    BigUint::from(x)
}

/// The triangle laid out by counting: row `m` gets the next `2m+1` numbers.
struct Table {
    pos: Vec<(u64, u64)>,
    at: HashMap<(u64, u64), u64>,
}

impl Table {
    fn build(limit: u64) -> Table {
        let mut pos = Vec::new();
        let mut at = HashMap::new();
        let (mut row, mut col) = (0u64, 0u64);
        for k in 0..limit {
            pos.push((row, col));
            at.insert((row, col), k);
            col += 1;
            if col == 2 * row + 1 {
                row += 1;
                col = 0;
            }
        }
        Table { pos, at }
    }

    fn row(&self, k: u64) -> u64 {
        self.pos[k as usize].0
    }

    fn entry(&self, row: u64, col: u64) -> u64 {
        self.at[&(row, col)]
    }
}

#[test]
fn triangle_table_placement() {
    let t = Table::build(20_000);
    for k in 0..10_000u64 {
        let row = t.row(k);
        assert_eq!(n(k).sqrt(), n(row));
        assert!(row * row <= k && k <= row * row + 2 * row);
        for i in 0..=5u64 {
            let target = row + i;
            assert_eq!(tri_g(&n(i), &n(k)), n(t.entry(target, 0)), "g_{i}({k})");
            for j in 0..=12u64 {
                let want = t.entry(target, j % (2 * target + 1));
                assert_eq!(tri_f(&n(i), &n(j), &n(k)), n(want), "f_{i},{j}({k})");
            }
        }
    }
}

#[test]
fn composition_law() {
    for i in 0..=5u64 {
        for k in 0..=5u64 {
            if i + k == 0 {
                continue;
            }
            for j in 0..=5u64 {
                for l in 0..=5u64 {
                    for x in 0..=2000u64 {
                        let lhs = tri_f(&n(i), &n(j), &tri_f(&n(k), &n(l), &n(x)));
                        assert_eq!(lhs, tri_f(&n(i + k), &n(j), &n(x)), "f_{i},{j}∘f_{k},{l} at {x}");
                    }
                }
            }
        }
    }
}

#[test]
fn jumps_and_first_entries_are_disjoint() {
    for i in 1..=5u64 {
        for j in 1..=5u64 {
            for x in (j * j + 1)..=2000 {
                let g = tri_g(&n(i), &n(x));
                assert!(tri_f(&n(i - 1), &n(j), &n(x)) < g, "i={i} j={j} n={x}");
                assert!(g < tri_f(&n(i), &n(j), &n(x)), "i={i} j={j} n={x}");
            }
        }
    }
}

#[test]
fn rotation_cycles_are_the_rows() {
    let r = narrowness(&Encoding::tri_pi(), 100).unwrap();
    assert!(r.is_permutation_on_prefix);
    let rows: Vec<Vec<BigUint>> = (0..10u64).map(|m| (m * m..=m * m + 2 * m).map(n).collect()).collect();
    assert_eq!(r.cycles, rows);
    assert_eq!(r.cycles[0], vec![n(0)]);
    assert_eq!(r.cycles[1], vec![n(1), n(2), n(3)]);
    assert_eq!(r.cycles[2], (4..=8).map(n).collect::<Vec<_>>());
    assert_eq!(r.max_cycle_length, 19);
    // orbit length by direct iteration
    for k in 0..100u64 {
        let mut len = 1;
        let mut y = tri_pi(&n(k));
        while y != n(k) {
            y = tri_pi(&y);
            len += 1;
        }
        assert_eq!(len, 2 * n(k).sqrt().to_u64().unwrap() + 1);
    }
    for k in 0..10_000u64 {
        assert_eq!(tri_pi_inverse(&tri_pi(&n(k))), n(k));
        assert_eq!(tri_pi(&tri_pi_inverse(&n(k))), n(k));
    }
}

fn agree_on(a: &PartialMap, b: &PartialMap, upto: u64) {
    for x in 0..=upto {
        let v = Value::from(x);
        assert_eq!(a.apply(&v, 100).unwrap(), b.apply(&v, 100).unwrap(), "{} vs {} at {x}", a.name(), b.name());
    }
}

#[test]
fn conjugation_table() {
    let pi = Encoding::tri_pi();
    agree_on(&pushforward(&pi, &iota()).unwrap(), &iota(), 1000);
    for k in 0..=10u64 {
        let image = tri_pi(&n(k)).to_u64().unwrap();
        agree_on(&pushforward(&pi, &kappa(k)).unwrap(), &kappa(image), 1000);
    }
    for i in 1..=3u64 {
        for j in 0..=3u64 {
            agree_on(&pushforward(&pi, &f_member(i, j)).unwrap(), &f_member(i, j + 1), 1000);
        }
    }
}

#[test]
fn tri_models_shape() {
    let (a, b) = tri_models(3, 3, 5).unwrap();
    assert_eq!(a.members().len(), 1 + 6 + 9 + 3);
    assert_eq!(b.members().len(), 1 + 6 + 9);
    assert!(b.is_subset_of(&a) && !a.is_subset_of(&b));
}

/// All pure lists with code below `bound`, codes computed independently.
fn lists_below(bound: u64, memo: &mut HashMap<u64, Vec<(PureList, u64)>>) -> Vec<(PureList, u64)> {
    if let Some(v) = memo.get(&bound) {
        return v.clone();
    }
    let mut out = Vec::new();
    if bound > 0 {
        out.push((PureList::Nil, 0));
        let max_head = 64 - (bound - 1).leading_zeros() as u64;
        for (h, a) in lists_below(max_head, memo) {
            let top = (bound - 1) >> a;
            if top == 0 {
                continue;
            }
            for (t, b) in lists_below(top.div_ceil(2), memo) {
                let code = (1u64 << a) * (2 * b + 1);
                out.push((PureList::cons(h.clone(), t), code));
            }
        }
    }
    memo.insert(bound, out.clone());
    out
}

#[test]
fn godel_pairing_is_a_bijection_below_two_to_the_sixteen() {
    let lists = lists_below(1 << 16, &mut HashMap::new());
    assert_eq!(lists.len(), 1 << 16);
    let codes: BTreeSet<u64> = lists.iter().map(|(_, c)| *c).collect();
    assert_eq!(codes.len(), 1 << 16);
    for (l, c) in &lists {
        assert_eq!(godel_encode(l).unwrap(), n(*c));
        assert_eq!(&godel_decode(&n(*c)), l);
    }
    for k in 0..(1u64 << 16) {
        assert_eq!(godel_encode(&godel_decode(&n(k))).unwrap(), n(k));
    }
}

#[test]
fn godel_worked_values() {
    let nil = PureList::Nil;
    let one = PureList::cons(nil.clone(), nil.clone());
    assert_eq!(godel_encode(&nil).unwrap(), n(0));
    assert_eq!(godel_encode(&one).unwrap(), n(1));
    assert_eq!(godel_encode(&PureList::cons(nil, one)).unwrap(), n(3));
}

#[test]
fn ackermann_diagonal() {
    let double = parse_term(&format!("(C {} I I)", library::add_src())).unwrap();
    assert_eq!(diag_h(&double, 2, 100).unwrap(), n(8));
    assert_eq!(diag_h(&parse_term("I").unwrap(), 0, 100).unwrap(), n(2));
    assert_eq!(diag_h(&double, 0, 100).unwrap(), n(2));
}

fn re_oracles() -> Vec<OracleH> {
    vec![OracleH::all_zeros(), OracleH::parity(), OracleH::pseudorandom(2024)]
}

#[test]
fn re_simulation_equation() {
    for h in re_oracles() {
        for i in 0..=8u64 {
            let fam = re_family(&h, i).unwrap();
            for x in 0..=64u64 {
                let lhs = fam.h_prime_i.apply(&fam.rho.encode(&Value::from(x)).unwrap(), 100).unwrap();
                let rhs = match fam.h_i.apply(&Value::from(x), 100).unwrap() {
                    Outcome::Converged(v) => Outcome::Converged(fam.rho.encode(&v).unwrap()),
                    other => other,
                };
                assert!(lhs.is_decided());
                assert_eq!(lhs, rhs, "{} i={i} n={x}", h.name());
            }
        }
    }
}

#[test]
fn re_definitions_by_hand() {
    let h = OracleH::parity();
    let fam = re_family(&h, 2).unwrap();
    for x in 0..=64u64 {
        let want_h = if x < 2 || x % 2 == 0 { Outcome::Converged(Value::from(0)) } else { Outcome::Diverged };
        assert_eq!(fam.h_i.apply(&Value::from(x), 10).unwrap(), want_h);
        let want_hp = if x / 2 < 2 || x % 2 == 0 { Outcome::Converged(Value::from(0)) } else { Outcome::Diverged };
        assert_eq!(fam.h_prime_i.apply(&Value::from(x), 10).unwrap(), want_hp);
        assert_eq!(fam.rho.encode(&Value::from(x)).unwrap(), Value::from(2 * x + x % 2));
    }
}

#[test]
fn stripes_simulate_the_suite() {
    for (name, t) in library::rec_suite() {
        let plain = PartialMap::term(name, t.clone()).unwrap();
        let even = stripe_model_member(&t, 2, 0).unwrap();
        for x in 0..=64u64 {
            let want = plain.apply(&Value::from(x), 1_000_000).unwrap().map(|v| Value::Nat(v.as_nat().unwrap() * 2u32));
            assert_eq!(even.apply(&Value::from(2 * x), 1_000_000).unwrap(), want, "{name}({x})");
            let odd = Value::from(2 * x + 1);
            assert_eq!(even.apply(&odd, 1_000_000).unwrap(), Outcome::Converged(odd.clone()));
        }
    }
}
