//! Gödel pairing between pure lists and the naturals:
//! `nil ↦ 0`, `cons(x, y) ↦ 2^code(x) · (2·code(y) + 1)`.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::value::PureList;

/// Largest exponent `2^code(head)` the encoder will materialise.
const MAX_SHIFT: u64 = 1 << 32;

/// Fails only when a head's code is too large to be used as a shift
/// (the result would not fit in memory).
pub fn godel_encode(x: &PureList) -> Result<BigUint> {
    match x {
        PureList::Nil => Ok(BigUint::zero()),
        PureList::Cons(head, tail) => {
            let h = godel_encode(head)?;
            let shift = h
                .to_u64()
                .filter(|&s| s <= MAX_SHIFT)
                .ok_or_else(|| Error::TooLarge(format!("list code 2^{h} is not representable")))?;
            let t = godel_encode(tail)?;
            Ok((t * 2u32 + 1u32) << shift)
        }
    }
}

/// Every `n > 0` splits uniquely as `2^a · (2b + 1)`.
pub fn godel_decode(n: &BigUint) -> PureList {
    if n.is_zero() {
        return PureList::Nil;
    }
    let a = n.trailing_zeros().expect("non-zero");
    let b = (n >> a) >> 1u32;
    PureList::cons(godel_decode(&BigUint::from(a)), godel_decode(&b))
}
