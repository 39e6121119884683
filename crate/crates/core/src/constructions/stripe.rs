//! Striped copies of recursive functions: act on one residue class,
//! fix everything else.

use num_bigint::BigUint;

use crate::encoding::Encoding;
use crate::error::{Error, Result};
use crate::map::PartialMap;
use crate::model::Model;
use crate::recdsl::Term;
use crate::value::Domain;

/// `λn. d·n + r`.
pub fn stripe_encoding(d: u64, r: u64) -> Result<Encoding> {
    Encoding::stripe(d, r)
}

/// `n ↦ d·f((n−r)/d) + r` when `n ≡ r (mod d)`, and `n ↦ n` otherwise.
pub fn stripe_model_member(t: &Term, d: u64, r: u64) -> Result<PartialMap> {
    let inner = PartialMap::term(t.to_string(), t.clone())?;
    stripe_map(&inner, d, r)
}

/// Striped copy of any map over the naturals.
pub fn stripe_map(m: &PartialMap, d: u64, r: u64) -> Result<PartialMap> {
    if d == 0 || r >= d {
        return Err(Error::InvalidEncoding(format!("stripe({d},{r}) needs d ≥ 1 and r < d")));
    }
    if m.domain() != Domain::Nat {
        return Err(Error::WrongDomain { expected: Domain::Nat, found: m.domain() });
    }
    Ok(m.striped(BigUint::from(d), BigUint::from(r)))
}

/// The striped image of every listed member, e.g. `R_2` for `(d, r) = (2, 0)`.
pub fn stripe_model(base: &Model, d: u64, r: u64) -> Result<Model> {
    let members = base.members().iter().map(|m| stripe_map(m, d, r)).collect::<Result<Vec<_>>>()?;
    let name = if d == 2 { format!("R{}[{}]", 2 - r, base.name()) } else { format!("stripe{d}_{r}[{}]", base.name()) };
    Model::new(name, Domain::Nat, members)
}
