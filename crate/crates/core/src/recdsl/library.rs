//! A fixed library of terms used as the benchmark "Rec" sample.

use super::parse::parse_term;
use super::term::Term;

/// `add(y, x) = x + y`.
pub fn add_src() -> String {
    "(R (P 1 1) (C S (P 2 3)))".to_string()
}

/// `mul(y, x) = y · x`, each step adding `x` to the accumulator.
pub fn mul_src() -> String {
    format!("(R Z (C {} (P 3 3) (P 2 3)))", add_src())
}

pub fn pred_src() -> String {
    "(C (R Z (P 1 3)) I I)".to_string()
}

/// `monus(y, x) = x ∸ y`.
pub fn monus_src() -> String {
    format!("(R I (C {} (P 2 3)))", pred_src())
}

/// 1 on zero, 0 elsewhere.
pub fn is_zero_src() -> String {
    "(C (R (K 1) (C Z (P 1 3))) I I)".to_string()
}

pub fn parity_src() -> String {
    format!("(C (R Z (C {} (P 2 3))) I I)", is_zero_src())
}

/// Row 1 of Ackermann's function from `A(1,0) = A(0,1)` and
/// `A(1,y+1) = A(0, A(1,y))`.
pub fn ack_row1_src() -> String {
    "(C (R (K 2) (C S (P 2 3))) I I)".to_string()
}

/// Row 2, built on row 1 the same way.
pub fn ack_row2_src() -> String {
    format!("(C (R (K 3) (C {} (P 2 3))) I I)", ack_row1_src())
}

/// `⌊√n⌋ = μi. (n+1) ∸ (i+1)² = 0`.
pub fn isqrt_src() -> String {
    let square = format!("(C {} I I)", mul_src());
    format!("(M (C {} (C {square} (C S (P 2 2))) (C S (P 1 2))))", monus_src())
}

/// The unary benchmark suite as `(name, source)` pairs.
pub fn rec_suite_sources() -> Vec<(&'static str, String)> {
    vec![
        ("zero", "Z".into()),
        ("succ", "S".into()),
        ("id", "I".into()),
        ("const3", "(K 3)".into()),
        ("succ2", "(C S S)".into()),
        ("plus3", format!("(C {} (K 3) I)", add_src())),
        ("double", format!("(C {} I I)", add_src())),
        ("triple", format!("(C {} (K 3) I)", mul_src())),
        ("pred", pred_src()),
        ("is_zero", is_zero_src()),
        ("parity", parity_src()),
        ("half", format!("(C (R Z (C {} (C {} (P 1 3)) (P 2 3))) I I)", add_src(), parity_src())),
        ("ten_minus", format!("(C {} I (K 10))", monus_src())),
        ("isqrt", isqrt_src()),
        ("ack_row1", ack_row1_src()),
        ("ack_row2", ack_row2_src()),
    ]
}

/// Parsed form of [`rec_suite_sources`].
pub fn rec_suite() -> Vec<(&'static str, Term)> {
    rec_suite_sources().into_iter().map(|(name, src)| (name, parse_term(&src).expect("library term parses"))).collect()
}

/// A few unary terms that use the `ACK` builtin directly.
pub fn ack_builtin_sources() -> Vec<(&'static str, String)> {
    vec![
        ("ack_builtin_row1", "(C ACK (K 1) I)".into()),
        ("ack_builtin_row2", "(C ACK (K 2) I)".into()),
        ("ack_diagonal", "(C ACK I I)".into()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recdsl::{eval_term, TermClass};
    use crate::value::Outcome;
    use num_bigint::BigUint;

    #[test]
    fn suite_is_unary_and_large_enough() {
        let suite = rec_suite();
        assert!(suite.len() >= 15);
        for (name, t) in &suite {
            assert_eq!(t.arity(), 1, "{name}");
        }
        let isqrt = suite.iter().find(|(n, _)| *n == "isqrt").unwrap();
        assert_eq!(isqrt.1.classify(), TermClass::General);
    }

    #[test]
    fn builtin_ack_terms_parse() {
        for (name, src) in ack_builtin_sources() {
            let t = parse_term(&src).unwrap();
            assert_eq!(t.arity(), 1, "{name}");
            assert_eq!(t.classify(), TermClass::General);
        }
        let t = parse_term("(C ACK (K 2) I)").unwrap();
        assert_eq!(eval_term(&t, &[BigUint::from(5u32)], 100_000).unwrap(), Outcome::Converged(BigUint::from(13u32)));
    }
}
