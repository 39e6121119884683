use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::recdsl::{ackermann, eval_term, Term, TermClass};
use crate::value::Outcome;

/// Per-evaluation budget for the encoding term inside [`diag_h`].
pub const DIAG_FUEL: u64 = 1_000_000;

/// `h(n) = e(min{ i : e(i) > ack(n, n) })`, searching `i < bound`.
///
/// `e` must be a unary primitive recursive term.
pub fn diag_h(e: &Term, n: u64, bound: u64) -> Result<BigUint> {
    if e.check_arity()? != 1 {
        return Err(Error::Arity { term: e.to_string(), msg: "encoding term must be unary".into() });
    }
    if e.classify() != TermClass::Prim {
        return Err(Error::InvalidMap(format!("encoding term `{e}` is not primitive recursive")));
    }
    let threshold = ackermann(n, n)?;
    for i in 0..bound {
        match eval_term(e, &[BigUint::from(i)], DIAG_FUEL)? {
            Outcome::Converged(v) if v > threshold => return Ok(v),
            Outcome::Converged(_) => {}
            _ => {
                return Err(Error::InvalidMap(format!(
                    "encoding term `{e}` did not converge at {i} within {DIAG_FUEL} steps"
                )))
            }
        }
    }
    Err(Error::SearchBound(bound.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recdsl::parse_term;

    fn double() -> Term {
        parse_term("(C (R (P 1 1) (C S (P 2 3))) I I)").unwrap()
    }

    #[test]
    fn worked_values() {
        assert_eq!(diag_h(&double(), 2, 100).unwrap(), BigUint::from(8u32));
        assert_eq!(diag_h(&Term::Id, 0, 100).unwrap(), BigUint::from(2u32));
        assert_eq!(diag_h(&double(), 0, 100).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn errors() {
        assert!(matches!(diag_h(&double(), 3, 10), Err(Error::SearchBound(_))));
        assert!(matches!(diag_h(&double(), 9, 10), Err(Error::AckBound { .. })));
        assert!(matches!(diag_h(&parse_term("(C ACK I I)").unwrap(), 1, 10), Err(Error::InvalidMap(_))));
        assert!(diag_h(&Term::Ack, 1, 10).is_err());
    }
}
