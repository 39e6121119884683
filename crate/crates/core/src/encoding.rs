//! Injective encodings between domains.
//!
//! An [`Encoding`] is total on its source domain and injective; `decode`
//! is the partial inverse, defined exactly on the range. Undefinedness is
//! never encoded: a diverging evaluation stays diverging on the other side.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::constructions::{godel, re::OracleH, tri};
use crate::error::{Error, Result};
use crate::machines::bits;
use crate::value::{Domain, Value};

/// A permutation of the naturals that moves only finitely many points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePermutation {
    forward: BTreeMap<BigUint, BigUint>,
    backward: BTreeMap<BigUint, BigUint>,
}

impl FinitePermutation {
    /// `pairs` must map its key set onto itself; every other natural is fixed.
    pub fn new(pairs: impl IntoIterator<Item = (BigUint, BigUint)>) -> Result<Self> {
        let mut forward = BTreeMap::new();
        let mut backward = BTreeMap::new();
        for (a, b) in pairs {
            if forward.insert(a.clone(), b.clone()).is_some() {
                return Err(Error::InvalidEncoding(format!("table maps {a} twice")));
            }
            if backward.insert(b.clone(), a).is_some() {
                return Err(Error::InvalidEncoding(format!("table hits {b} twice")));
            }
        }
        if forward.keys().ne(backward.keys()) {
            return Err(Error::InvalidEncoding("table must permute its own key set".into()));
        }
        Ok(FinitePermutation { forward, backward })
    }

    /// The permutation of `[0, images.len())` sending `k` to `images[k]`.
    pub fn from_images(images: &[u64]) -> Result<Self> {
        FinitePermutation::new(images.iter().enumerate().map(|(k, &v)| (BigUint::from(k), BigUint::from(v))))
    }

    pub fn apply(&self, n: &BigUint) -> BigUint {
        self.forward.get(n).cloned().unwrap_or_else(|| n.clone())
    }

    pub fn apply_inverse(&self, n: &BigUint) -> BigUint {
        self.backward.get(n).cloned().unwrap_or_else(|| n.clone())
    }

    fn inverted(&self) -> Self {
        FinitePermutation { forward: self.backward.clone(), backward: self.forward.clone() }
    }
}

#[derive(Debug, Clone)]
pub enum EncodingKind {
    Identity(Domain),
    /// `n ↦ d·n + r` with `d ≥ 1`, `r < d`.
    Stripe {
        d: BigUint,
        r: BigUint,
    },
    /// The row-cycling permutation of the triangular array.
    TriPi,
    TriPiInverse,
    /// Naturals to bit strings (shortlex).
    Bits,
    BitsInverse,
    /// Pure lists to naturals.
    Godel,
    GodelInverse,
    Table(Arc<FinitePermutation>),
    /// `n ↦ 2n + h(n)` for a 0/1 oracle `h`.
    Rho(OracleH),
    /// `outer ∘ inner`.
    Composed(Box<Encoding>, Box<Encoding>),
}

#[derive(Debug, Clone)]
pub struct Encoding {
    kind: EncodingKind,
}

impl Encoding {
    pub fn identity(domain: Domain) -> Self {
        Encoding { kind: EncodingKind::Identity(domain) }
    }

    pub fn stripe(d: impl Into<BigUint>, r: impl Into<BigUint>) -> Result<Self> {
        let (d, r) = (d.into(), r.into());
        if d.is_zero() {
            return Err(Error::InvalidEncoding("stripe width must be at least 1".into()));
        }
        if r >= d {
            return Err(Error::InvalidEncoding(format!("stripe offset {r} must be below width {d}")));
        }
        Ok(Encoding { kind: EncodingKind::Stripe { d, r } })
    }

    pub fn tri_pi() -> Self {
        Encoding { kind: EncodingKind::TriPi }
    }

    pub fn tri_pi_inverse() -> Self {
        Encoding { kind: EncodingKind::TriPiInverse }
    }

    pub fn bits() -> Self {
        Encoding { kind: EncodingKind::Bits }
    }

    pub fn godel() -> Self {
        Encoding { kind: EncodingKind::Godel }
    }

    pub fn table(p: FinitePermutation) -> Self {
        Encoding { kind: EncodingKind::Table(Arc::new(p)) }
    }

    pub fn rho(oracle: OracleH) -> Self {
        Encoding { kind: EncodingKind::Rho(oracle) }
    }

    pub fn kind(&self) -> &EncodingKind {
        &self.kind
    }

    pub fn source(&self) -> Domain {
        use EncodingKind::*;
        match &self.kind {
            Identity(d) => *d,
            Stripe { .. } | TriPi | TriPiInverse | Bits | Table(_) | Rho(_) | GodelInverse => Domain::Nat,
            BitsInverse => Domain::Bits,
            Godel => Domain::List,
            Composed(_, inner) => inner.source(),
        }
    }

    pub fn target(&self) -> Domain {
        use EncodingKind::*;
        match &self.kind {
            Identity(d) => *d,
            Stripe { .. } | TriPi | TriPiInverse | Table(_) | Rho(_) | BitsInverse | Godel => Domain::Nat,
            Bits => Domain::Bits,
            GodelInverse => Domain::List,
            Composed(outer, _) => outer.target(),
        }
    }

    pub fn encode(&self, x: &Value) -> Result<Value> {
        use EncodingKind::*;
        x.expect_domain(self.source())?;
        Ok(match &self.kind {
            Identity(_) => x.clone(),
            Stripe { d, r } => Value::Nat(x.as_nat()? * d + r),
            TriPi => Value::Nat(tri::tri_pi(x.as_nat()?)),
            TriPiInverse => Value::Nat(tri::tri_pi_inverse(x.as_nat()?)),
            Bits => Value::Bits(bits::nat_to_bits(x.as_nat()?)),
            BitsInverse => Value::Nat(bits::bits_to_nat(x.as_bits()?)),
            Godel => Value::Nat(godel::godel_encode(x.as_list()?)?),
            GodelInverse => Value::List(godel::godel_decode(x.as_nat()?)),
            Table(p) => Value::Nat(p.apply(x.as_nat()?)),
            Rho(h) => {
                let n = x.as_nat()?;
                Value::Nat(n * 2u32 + h.value(n))
            }
            Composed(outer, inner) => outer.encode(&inner.encode(x)?)?,
        })
    }

    /// Preimage of `y`, or `None` when `y` lies outside the range.
    pub fn decode(&self, y: &Value) -> Result<Option<Value>> {
        use EncodingKind::*;
        y.expect_domain(self.target())?;
        Ok(match &self.kind {
            Identity(_) => Some(y.clone()),
            Stripe { d, r } => {
                let y = y.as_nat()?;
                if y < r {
                    None
                } else {
                    let (q, rem) = (y - r).div_rem(d);
                    rem.is_zero().then_some(Value::Nat(q))
                }
            }
            TriPi => Some(Value::Nat(tri::tri_pi_inverse(y.as_nat()?))),
            TriPiInverse => Some(Value::Nat(tri::tri_pi(y.as_nat()?))),
            Bits => Some(Value::Nat(bits::bits_to_nat(y.as_bits()?))),
            BitsInverse => Some(Value::Bits(bits::nat_to_bits(y.as_nat()?))),
            Godel => Some(Value::List(godel::godel_decode(y.as_nat()?))),
            GodelInverse => Some(Value::Nat(godel::godel_encode(y.as_list()?)?)),
            Table(p) => Some(Value::Nat(p.apply_inverse(y.as_nat()?))),
            Rho(h) => {
                let y = y.as_nat()?;
                let n = y >> 1u32;
                (&n * 2u32 + h.value(&n) == *y).then_some(Value::Nat(n))
            }
            Composed(outer, inner) => match outer.decode(y)? {
                Some(mid) => inner.decode(&mid)?,
                None => None,
            },
        })
    }

    /// Whether the encoding is onto its target domain.
    pub fn is_bijection(&self) -> bool {
        use EncodingKind::*;
        match &self.kind {
            Stripe { d, .. } => d.is_one(),
            Rho(_) => false,
            Composed(a, b) => a.is_bijection() && b.is_bijection(),
            _ => true,
        }
    }

    /// The inverse encoding; only bijections have one.
    pub fn inverse(&self) -> Result<Encoding> {
        use EncodingKind::*;
        let kind = match &self.kind {
            Identity(d) => Identity(*d),
            Stripe { d, r } if d.is_one() => Stripe { d: d.clone(), r: r.clone() },
            TriPi => TriPiInverse,
            TriPiInverse => TriPi,
            Bits => BitsInverse,
            BitsInverse => Bits,
            Godel => GodelInverse,
            GodelInverse => Godel,
            Table(p) => Table(Arc::new(p.inverted())),
            Composed(outer, inner) => Composed(Box::new(inner.inverse()?), Box::new(outer.inverse()?)),
            Stripe { .. } | Rho(_) => return Err(Error::InvalidEncoding(format!("{self} is not a bijection"))),
        };
        Ok(Encoding { kind })
    }
}

/// `e1 ∘ e2`: encodes `x` as `e1(e2(x))`.
pub fn compose_encodings(e1: &Encoding, e2: &Encoding) -> Result<Encoding> {
    if e2.target() != e1.source() {
        return Err(Error::WrongDomain { expected: e1.source(), found: e2.target() });
    }
    Ok(Encoding { kind: EncodingKind::Composed(Box::new(e1.clone()), Box::new(e2.clone())) })
}

impl fmt::Display for Encoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use EncodingKind::*;
        match &self.kind {
            Identity(d) => write!(f, "identity[{d}]"),
            Stripe { d, r } => write!(f, "stripe({d},{r})"),
            TriPi => f.write_str("tri_pi"),
            TriPiInverse => f.write_str("tri_pi_inverse"),
            Bits => f.write_str("bits"),
            BitsInverse => f.write_str("bits_inverse"),
            Godel => f.write_str("godel"),
            GodelInverse => f.write_str("godel_inverse"),
            Table(p) => {
                f.write_str("table[")?;
                for (k, (a, b)) in p.forward.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{a}>{b}")?;
                }
                f.write_str("]")
            }
            Rho(h) => write!(f, "rho[{}]", h.name()),
            Composed(a, b) => write!(f, "{a}∘{b}"),
        }
    }
}
