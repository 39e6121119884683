//! Domain elements and evaluation outcomes.
//!
//! Three concrete domains are supported: the naturals, finite strings over
//! `{0,1}`, and pure lists (nil, or a pair of pure lists). Every domain
//! has a canonical enumeration `0, 1, 2, …` so that "the first `k`
//! elements" is meaningful in any of them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Nat,
    Bits,
    List,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Domain::Nat => "nat",
            Domain::Bits => "bits",
            Domain::List => "list",
        })
    }
}

impl FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nat" => Ok(Domain::Nat),
            "bits" => Ok(Domain::Bits),
            "list" => Ok(Domain::List),
            other => Err(Error::InvalidPlan(format!("unknown domain `{other}`"))),
        }
    }
}

impl Domain {
    /// The `index`-th element of the domain's canonical enumeration.
    ///
    /// Naturals enumerate themselves, bit strings go in shortlex order
    /// (ε, 0, 1, 00, …) and pure lists follow their Gödel codes.
    pub fn canonical(self, index: &BigUint) -> Value {
        match self {
            Domain::Nat => Value::Nat(index.clone()),
            Domain::Bits => Value::Bits(crate::machines::bits::nat_to_bits(index)),
            Domain::List => Value::List(crate::constructions::godel::godel_decode(index)),
        }
    }

    /// Position of `v` in the canonical enumeration.
    pub fn index_of(self, v: &Value) -> Result<BigUint> {
        v.expect_domain(self)?;
        Ok(match v {
            Value::Nat(n) => n.clone(),
            Value::Bits(b) => crate::machines::bits::bits_to_nat(b),
            Value::List(l) => crate::constructions::godel::godel_encode(l)?,
        })
    }
}

/// A finite string over `{0,1}`, possibly empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn new(bits: Vec<bool>) -> Self {
        BitString(bits)
    }

    pub fn empty() -> Self {
        BitString(Vec::new())
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<bool>> for BitString {
    fn from(v: Vec<bool>) -> Self {
        BitString(v)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = Error;

    /// Accepts `ε` (or the empty string) for the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "ε" {
            return Ok(BitString::empty());
        }
        s.chars()
            .enumerate()
            .map(|(pos, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Syntax { pos, msg: format!("`{c}` is not a bit") }),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitString)
    }
}

/// A pure list: `nil`, or a pair of pure lists.
///
/// Displayed in Lisp list notation, so `cons(nil, cons(nil, nil))` is
/// `(() ())`. Every pure list is a proper list, which keeps the notation
/// unambiguous.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PureList {
    Nil,
    Cons(Box<PureList>, Box<PureList>),
}

impl PureList {
    pub fn cons(head: PureList, tail: PureList) -> Self {
        PureList::Cons(Box::new(head), Box::new(tail))
    }

    /// Builds a proper list from its elements.
    pub fn from_elements(items: Vec<PureList>) -> Self {
        items.into_iter().rev().fold(PureList::Nil, |tail, head| PureList::cons(head, tail))
    }

    pub fn elements(&self) -> Vec<&PureList> {
        let mut out = Vec::new();
        let mut cur = self;
        while let PureList::Cons(h, t) = cur {
            out.push(h.as_ref());
            cur = t;
        }
        out
    }
}

impl fmt::Display for PureList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, e) in self.elements().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for PureList {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let list = parse_list(bytes, &mut pos)?;
        skip_ws(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(Error::Syntax { pos, msg: "trailing input after list".into() });
        }
        Ok(list)
    }
}

fn skip_ws(b: &[u8], pos: &mut usize) {
    while *pos < b.len() && b[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_list(b: &[u8], pos: &mut usize) -> Result<PureList> {
    skip_ws(b, pos);
    if b.get(*pos) != Some(&b'(') {
        return Err(Error::Syntax { pos: *pos, msg: "expected `(`".into() });
    }
    *pos += 1;
    let mut items = Vec::new();
    loop {
        skip_ws(b, pos);
        match b.get(*pos) {
            Some(b')') => {
                *pos += 1;
                return Ok(PureList::from_elements(items));
            }
            Some(b'(') => items.push(parse_list(b, pos)?),
            Some(_) => return Err(Error::Syntax { pos: *pos, msg: "expected `(` or `)`".into() }),
            None => return Err(Error::Syntax { pos: *pos, msg: "unclosed list".into() }),
        }
    }
}

/// An element of one of the supported domains.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Nat(BigUint),
    Bits(BitString),
    List(PureList),
}

impl Value {
    pub fn nat(n: impl Into<BigUint>) -> Self {
        Value::Nat(n.into())
    }

    pub fn domain(&self) -> Domain {
        match self {
            Value::Nat(_) => Domain::Nat,
            Value::Bits(_) => Domain::Bits,
            Value::List(_) => Domain::List,
        }
    }

    pub fn expect_domain(&self, d: Domain) -> Result<()> {
        if self.domain() == d {
            Ok(())
        } else {
            Err(Error::WrongDomain { expected: d, found: self.domain() })
        }
    }

    pub fn as_nat(&self) -> Result<&BigUint> {
        match self {
            Value::Nat(n) => Ok(n),
            other => Err(Error::WrongDomain { expected: Domain::Nat, found: other.domain() }),
        }
    }

    pub fn as_bits(&self) -> Result<&BitString> {
        match self {
            Value::Bits(b) => Ok(b),
            other => Err(Error::WrongDomain { expected: Domain::Bits, found: other.domain() }),
        }
    }

    pub fn as_list(&self) -> Result<&PureList> {
        match self {
            Value::List(l) => Ok(l),
            other => Err(Error::WrongDomain { expected: Domain::List, found: other.domain() }),
        }
    }

    pub fn parse(domain: Domain, text: &str) -> Result<Value> {
        match domain {
            Domain::Nat => text
                .trim()
                .parse::<BigUint>()
                .map(Value::Nat)
                .map_err(|e| Error::Syntax { pos: 0, msg: format!("bad natural `{text}`: {e}") }),
            Domain::Bits => text.parse().map(Value::Bits),
            Domain::List => text.parse().map(Value::List),
        }
    }
}

impl From<u64> for Value {
    fn from(n: u64) -> Self {
        Value::Nat(BigUint::from(n))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Nat(n) => write!(f, "{n}"),
            Value::Bits(b) => write!(f, "{b}"),
            Value::List(l) => write!(f, "{l}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry(&self.domain().to_string(), &self.to_string())?;
        map.end()
    }
}

/// Result of a fuel-bounded evaluation.
///
/// `Diverged` is certified non-termination; `FuelExhausted` means the
/// evaluator gave up and nothing is known.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Outcome<T = Value> {
    Converged(T),
    Diverged,
    FuelExhausted,
}

impl<T> Outcome<T> {
    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Converged(v) => Outcome::Converged(f(v)),
            Outcome::Diverged => Outcome::Diverged,
            Outcome::FuelExhausted => Outcome::FuelExhausted,
        }
    }

    pub fn is_decided(&self) -> bool {
        !matches!(self, Outcome::FuelExhausted)
    }

    pub fn converged(&self) -> Option<&T> {
        match self {
            Outcome::Converged(v) => Some(v),
            _ => None,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Outcome<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Converged(v) => write!(f, "{v}"),
            Outcome::Diverged => f.write_str("⊥"),
            Outcome::FuelExhausted => f.write_str("?fuel"),
        }
    }
}

impl Serialize for Outcome<Value> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Outcome::Converged(v) => {
                let mut map = serializer.serialize_map(Some(1))?;
                map.serialize_entry("converged", v)?;
                map.end()
            }
            Outcome::Diverged => serializer.serialize_str("diverged"),
            Outcome::FuelExhausted => serializer.serialize_str("fuel-exhausted"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_notation() {
        let l = PureList::cons(PureList::Nil, PureList::cons(PureList::Nil, PureList::Nil));
        assert_eq!(l.to_string(), "(() ())");
        assert_eq!("(() ())".parse::<PureList>().unwrap(), l);
        assert_eq!("()".parse::<PureList>().unwrap(), PureList::Nil);
        assert!("(()".parse::<PureList>().is_err());
        assert!("(x)".parse::<PureList>().is_err());
    }

    #[test]
    fn bits_notation() {
        assert_eq!("ε".parse::<BitString>().unwrap(), BitString::empty());
        assert_eq!("".parse::<BitString>().unwrap(), BitString::empty());
        assert_eq!("0110".parse::<BitString>().unwrap().to_string(), "0110");
        assert!("012".parse::<BitString>().is_err());
    }

    #[test]
    fn domain_check() {
        let v = Value::from(3);
        assert!(v.expect_domain(Domain::Nat).is_ok());
        assert_eq!(
            v.expect_domain(Domain::Bits),
            Err(Error::WrongDomain { expected: Domain::Bits, found: Domain::Nat })
        );
    }
}
