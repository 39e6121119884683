use num_bigint::BigUint;
use num_traits::Zero;

use super::ack::AckMachine;
use super::term::Term;
use crate::error::{Error, Result};
use crate::fuel::{settle, Eval, Fuel};
use crate::value::Outcome;

/// Fuel-bounded big-step evaluation.
///
/// Every node visit costs one unit, every primitive-recursion iteration
/// one more, every μ probe one more (on top of the probe's own cost), and
/// every transition of the Ackermann machine one.
pub fn eval_term(t: &Term, args: &[BigUint], fuel: u64) -> Result<Outcome<BigUint>> {
    let mut f = Fuel::new(fuel);
    eval_with(t, args, &mut f)
}

pub fn eval_with(t: &Term, args: &[BigUint], fuel: &mut Fuel) -> Result<Outcome<BigUint>> {
    let arity = t.check_arity()?;
    if args.len() != arity {
        return Err(Error::Arity {
            term: t.to_string(),
            msg: format!("expected {arity} arguments, got {}", args.len()),
        });
    }
    settle(eval(t, args, fuel))
}

pub(crate) fn eval(t: &Term, args: &[BigUint], fuel: &mut Fuel) -> Eval<BigUint> {
    fuel.tick()?;
    match t {
        Term::Zero => Ok(BigUint::zero()),
        Term::Succ => Ok(&args[0] + 1u32),
        Term::Id => Ok(args[0].clone()),
        Term::Const(k) => Ok(k.clone()),
        Term::Proj { index, .. } => Ok(args[index - 1].clone()),
        Term::Comp(f, gs) => {
            let inner = gs.iter().map(|g| eval(g, args, fuel)).collect::<Eval<Vec<_>>>()?;
            eval(f, &inner, fuel)
        }
        Term::PrimRec(base, step) => {
            let (y, xs) = args.split_first().expect("arity checked");
            let mut acc = eval(base, xs, fuel)?;
            let mut frame = Vec::with_capacity(args.len() + 1);
            let mut counter = BigUint::zero();
            while &counter < y {
                fuel.tick()?;
                frame.clear();
                frame.push(counter.clone());
                frame.push(acc);
                frame.extend_from_slice(xs);
                acc = eval(step, &frame, fuel)?;
                counter += 1u32;
            }
            Ok(acc)
        }
        Term::Mu(f) => {
            let mut frame = args.to_vec();
            frame.push(BigUint::zero());
            loop {
                fuel.tick()?;
                if eval(f, &frame, fuel)?.is_zero() {
                    return Ok(frame.pop().expect("search variable"));
                }
                *frame.last_mut().expect("search variable") += 1u32;
            }
        }
        Term::Ack => {
            let mut machine = AckMachine::new(args[0].clone(), args[1].clone());
            loop {
                fuel.tick()?;
                if let Some(v) = machine.step() {
                    return Ok(v);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recdsl::parse_term;

    fn nats(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn basics() {
        let s = parse_term("S").unwrap();
        assert_eq!(eval_term(&s, &nats(&[4]), 100).unwrap(), Outcome::Converged(5u32.into()));
        let k = parse_term("(K 9)").unwrap();
        assert_eq!(eval_term(&k, &nats(&[123]), 10).unwrap(), Outcome::Converged(9u32.into()));
    }

    #[test]
    fn unsatisfiable_search_exhausts_fuel() {
        let t = parse_term("(M (C S (P 2 2)))").unwrap();
        assert_eq!(eval_term(&t, &nats(&[0]), 1000).unwrap(), Outcome::FuelExhausted);
    }

    #[test]
    fn wrong_argument_count() {
        let s = parse_term("S").unwrap();
        assert!(matches!(eval_term(&s, &nats(&[1, 2]), 10), Err(Error::Arity { .. })));
    }

    #[test]
    fn ack_term() {
        let t = parse_term("ACK").unwrap();
        assert_eq!(eval_term(&t, &nats(&[2, 3]), 10_000).unwrap(), Outcome::Converged(9u32.into()));
        assert_eq!(eval_term(&t, &nats(&[3, 3]), 10).unwrap(), Outcome::FuelExhausted);
    }

    #[test]
    fn composition_fuel_is_additive() {
        let s = parse_term("S").unwrap();
        let ss = crate::recdsl::compose_unary(&s, &s).unwrap();
        let mut f1 = Fuel::new(1000);
        eval_with(&s, &nats(&[3]), &mut f1).unwrap();
        let mut f2 = Fuel::new(1000);
        assert_eq!(eval_with(&ss, &nats(&[3]), &mut f2).unwrap(), Outcome::Converged(5u32.into()));
        assert_eq!(f2.spent(), 2 * f1.spent() + 1);
    }
}
