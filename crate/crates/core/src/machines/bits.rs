//! Shortlex bijection between the naturals and `{0,1}*`.

use num_bigint::BigUint;
use num_traits::One;

use crate::value::BitString;

/// `ε` for 0; otherwise the binary form of `n+1` with its leading 1 dropped.
pub fn nat_to_bits(n: &BigUint) -> BitString {
    let m = n + 1u32;
    let width = m.bits();
    // skip the leading 1
    (0..width - 1).rev().map(|k| m.bit(k)).collect::<Vec<_>>().into()
}

pub fn bits_to_nat(b: &BitString) -> BigUint {
    let mut m = BigUint::one();
    for &bit in b.bits() {
        m <<= 1u32;
        if bit {
            m += 1u32;
        }
    }
    m - 1u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_words() {
        let words: Vec<String> = (0u32..8).map(|n| nat_to_bits(&n.into()).to_string()).collect();
        assert_eq!(words, ["ε", "0", "1", "00", "01", "10", "11", "000"]);
        assert_eq!(bits_to_nat(&"01".parse().unwrap()), BigUint::from(4u32));
        let n = BigUint::from(12345u32);
        assert_eq!(bits_to_nat(&nat_to_bits(&n)), n);
    }
}
