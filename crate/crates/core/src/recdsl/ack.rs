use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Safety limits for [`ackermann_bounded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AckBound {
    pub max_m: u32,
    /// Largest iteration count allowed when unfolding a row from the one
    /// below it.
    pub max_n: u64,
}

impl Default for AckBound {
    fn default() -> Self {
        AckBound { max_m: 3, max_n: 4096 }
    }
}

/// Ackermann–Péter function with the default safety bound.
pub fn ackermann(m: u64, n: u64) -> Result<BigUint> {
    ackermann_bounded(&BigUint::from(m), &BigUint::from(n), AckBound::default())
}

/// `A(0,n) = n+1`, `A(m+1,0) = A(m,1)`, `A(m+1,n+1) = A(m, A(m+1,n))`.
///
/// Row `m+1` is obtained by iterating row `m`: `A(m+1, n) = A(m, ·)^(n+1)(1)`.
/// Rows 0–2 use their closed forms.
pub fn ackermann_bounded(m: &BigUint, n: &BigUint, bound: AckBound) -> Result<BigUint> {
    let exceeded = || Error::AckBound { m: m.to_string(), n: n.to_string() };
    let row_index = m.to_u32().filter(|&r| r <= bound.max_m).ok_or_else(exceeded)?;
    row(row_index, n, bound).ok_or_else(exceeded)
}

fn row(m: u32, n: &BigUint, bound: AckBound) -> Option<BigUint> {
    match m {
        0 => Some(n + 1u32),
        1 => Some(n + 2u32),
        2 => Some(n * 2u32 + 3u32),
        _ => {
            let steps = n.to_u64().filter(|&s| s <= bound.max_n)?;
            let mut v = row(m - 1, &BigUint::one(), bound)?;
            for _ in 0..steps {
                v = row(m - 1, &v, bound)?;
            }
            Some(v)
        }
    }
}

/// One transition of the explicit-stack Ackermann machine used by the
/// term evaluator. Returns `Some(result)` once the stack is empty.
pub(crate) struct AckMachine {
    stack: Vec<BigUint>,
    n: BigUint,
}

impl AckMachine {
    pub(crate) fn new(m: BigUint, n: BigUint) -> Self {
        AckMachine { stack: vec![m], n }
    }

    pub(crate) fn step(&mut self) -> Option<BigUint> {
        let Some(m) = self.stack.pop() else {
            return Some(std::mem::take(&mut self.n));
        };
        if m.is_zero() {
            self.n += 1u32;
        } else if self.n.is_zero() {
            self.stack.push(m - 1u32);
            self.n = BigUint::one();
        } else {
            self.stack.push(&m - 1u32);
            self.stack.push(m);
            self.n -= 1u32;
        }
        if self.stack.is_empty() {
            Some(std::mem::take(&mut self.n))
        } else {
            None
        }
    }
}
