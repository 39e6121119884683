//! Evaluable partial functions over a domain.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::constructions::re::OracleH;
use crate::constructions::tri;
use crate::encoding::Encoding;
use crate::error::{Error, Result};
use crate::fuel::{settle, unsettle, Eval, Fuel, Stop};
use crate::machines::{bits, cm, tm, CmProgram, TmProgram};
use crate::recdsl::{self, Term};
use crate::value::{Domain, Outcome, Value};

/// Closed-form functions that are cheaper to state than to program.
#[derive(Debug, Clone)]
pub enum Builtin {
    Identity,
    /// `λn.k` for any domain value `k`.
    Const(Value),
    Successor,
    /// `(⌊√n⌋+i)² + (j mod (2⌊√n⌋+2i+1))`.
    TriF {
        i: BigUint,
        j: BigUint,
    },
    /// `(⌊√n⌋+i)²`.
    TriG {
        i: BigUint,
    },
    /// `0` if `n < i` or `h(n) = 0`, else ⊥.
    ReH {
        oracle: OracleH,
        i: BigUint,
    },
    /// `0` if `⌊n/2⌋ < i` or `n` is even, else ⊥.
    ReHPrime {
        i: BigUint,
    },
    /// Semi-decides `n ≥ k`: `0` or ⊥.
    SemiAtLeast(BigUint),
    /// Semi-decides evenness: `0` or ⊥.
    SemiEven,
}

/// How a Turing machine's bit strings meet the map's domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Adapter {
    /// The map lives on bit strings.
    Native,
    /// The map lives on naturals, converted through the shortlex bijection.
    NatViaBits,
}

#[derive(Debug)]
enum Body {
    Term(Term),
    Tm { program: TmProgram, adapter: Adapter },
    Cm(CmProgram),
    Builtin(Builtin),
    Table(BTreeMap<Value, Value>),
    Pushforward(Encoding, PartialMap),
    Pullback(Encoding, PartialMap),
    Compose(PartialMap, PartialMap),
    Striped { inner: PartialMap, d: BigUint, r: BigUint },
    HalveInput(PartialMap),
}

/// A named partial function `D → D ∪ {⊥}`. Cheap to clone.
#[derive(Debug, Clone)]
pub struct PartialMap {
    name: String,
    domain: Domain,
    body: Arc<Body>,
}

impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

impl PartialMap {
    fn make(name: String, domain: Domain, body: Body) -> Self {
        PartialMap { name, domain, body: Arc::new(body) }
    }

    pub fn builtin(name: impl Into<String>, domain: Domain, b: Builtin) -> Self {
        Self::make(name.into(), domain, Body::Builtin(b))
    }

    /// A unary term over the naturals.
    pub fn term(name: impl Into<String>, t: Term) -> Result<Self> {
        let arity = t.check_arity()?;
        if arity != 1 {
            return Err(Error::InvalidMap(format!("term `{t}` has arity {arity}, maps must be unary")));
        }
        Ok(Self::make(name.into(), Domain::Nat, Body::Term(t)))
    }

    pub fn tm(name: impl Into<String>, program: TmProgram, adapter: Adapter) -> Self {
        let domain = match adapter {
            Adapter::Native => Domain::Bits,
            Adapter::NatViaBits => Domain::Nat,
        };
        Self::make(name.into(), domain, Body::Tm { program, adapter })
    }

    /// A single-input counter machine over the naturals.
    pub fn cm(name: impl Into<String>, program: CmProgram) -> Result<Self> {
        if program.inputs().len() != 1 {
            return Err(Error::InvalidMap(format!(
                "counter machine has {} inputs, maps must be unary",
                program.inputs().len()
            )));
        }
        Ok(Self::make(name.into(), Domain::Nat, Body::Cm(program)))
    }

    /// Defined exactly on the listed keys; ⊥ elsewhere.
    pub fn table(
        name: impl Into<String>,
        domain: Domain,
        entries: impl IntoIterator<Item = (Value, Value)>,
    ) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (x, y) in entries {
            x.expect_domain(domain)?;
            y.expect_domain(domain)?;
            if let Some(prev) = table.insert(x.clone(), y.clone()) {
                if prev != y {
                    return Err(Error::InvalidMap(format!("table sends {x} to both {prev} and {y}")));
                }
            }
        }
        Ok(Self::make(name.into(), domain, Body::Table(table)))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PartialMap) -> Result<Self> {
        if self.domain != inner.domain {
            return Err(Error::WrongDomain { expected: self.domain, found: inner.domain });
        }
        Ok(Self::make(format!("{}∘{}", self.name, inner.name), self.domain, Body::Compose(self.clone(), inner.clone())))
    }

    /// Acts as `n ↦ d·self((n−r)/d) + r` on `n ≡ r (mod d)` and fixes
    /// every other `n`. Callers check `0 ≤ r < d` and the domain.
    pub fn striped(&self, d: BigUint, r: BigUint) -> Self {
        Self::make(format!("stripe{d}_{r}({})", self.name), Domain::Nat, Body::Striped { inner: self.clone(), d, r })
    }

    /// `n ↦ m(⌊n/2⌋)`.
    pub fn halve_input(m: PartialMap) -> Self {
        Self::make(format!("{}∘half", m.name), Domain::Nat, Body::HalveInput(m))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// The same map under another name.
    pub fn renamed(&self, name: impl Into<String>) -> Self {
        PartialMap { name: name.into(), domain: self.domain, body: Arc::clone(&self.body) }
    }

    /// Fuel-bounded evaluation at `x`.
    pub fn apply(&self, x: &Value, fuel: u64) -> Result<Outcome> {
        Ok(self.apply_metered(x, fuel)?.0)
    }

    /// Like [`PartialMap::apply`], also returning the fuel spent.
    pub fn apply_metered(&self, x: &Value, fuel: u64) -> Result<(Outcome, u64)> {
        if fuel == 0 {
            return Err(Error::InvalidPlan("fuel must be at least 1".into()));
        }
        x.expect_domain(self.domain)?;
        let mut f = Fuel::new(fuel);
        let out = settle(self.run(x, &mut f))?;
        Ok((out, f.spent()))
    }

    pub fn apply_with(&self, x: &Value, fuel: &mut Fuel) -> Result<Outcome> {
        x.expect_domain(self.domain)?;
        settle(self.run(x, fuel))
    }

    fn run(&self, x: &Value, fuel: &mut Fuel) -> Eval<Value> {
        match &*self.body {
            Body::Term(t) => {
                let n = x.as_nat()?;
                recdsl::eval(t, std::slice::from_ref(n), fuel).map(Value::Nat)
            }
            Body::Tm { program, adapter } => match adapter {
                Adapter::Native => unsettle(tm::run_tm_with(program, x.as_bits()?, fuel)?).map(Value::Bits),
                Adapter::NatViaBits => {
                    let input = bits::nat_to_bits(x.as_nat()?);
                    let out = unsettle(tm::run_tm_with(program, &input, fuel)?)?;
                    Ok(Value::Nat(bits::bits_to_nat(&out)))
                }
            },
            Body::Cm(p) => {
                let n = x.as_nat()?;
                unsettle(cm::run_cm_with(p, std::slice::from_ref(n), fuel)?).map(Value::Nat)
            }
            Body::Builtin(b) => {
                fuel.tick()?;
                self.run_builtin(b, x)
            }
            Body::Table(t) => {
                fuel.tick()?;
                t.get(x).cloned().ok_or(Stop::Diverged)
            }
            Body::Pushforward(e, m) => {
                fuel.tick()?;
                let pre = e.decode(x)?.ok_or(Stop::Diverged)?;
                let y = m.run(&pre, fuel)?;
                Ok(e.encode(&y)?)
            }
            Body::Pullback(e, m) => {
                fuel.tick()?;
                let y = m.run(&e.encode(x)?, fuel)?;
                e.decode(&y)?.ok_or(Stop::Diverged)
            }
            Body::Compose(outer, inner) => {
                let mid = inner.run(x, fuel)?;
                outer.run(&mid, fuel)
            }
            Body::Striped { inner, d, r } => {
                fuel.tick()?;
                let n = x.as_nat()?;
                if n < r {
                    return Ok(x.clone());
                }
                let (q, rem) = (n - r).div_rem(d);
                if !rem.is_zero() {
                    return Ok(x.clone());
                }
                let y = inner.run(&Value::Nat(q), fuel)?;
                Ok(Value::Nat(y.as_nat()? * d + r))
            }
            Body::HalveInput(m) => {
                fuel.tick()?;
                m.run(&Value::Nat(x.as_nat()? >> 1u32), fuel)
            }
        }
    }

    fn run_builtin(&self, b: &Builtin, x: &Value) -> Eval<Value> {
        let zero = || Value::Nat(BigUint::zero());
        match b {
            Builtin::Identity => Ok(x.clone()),
            Builtin::Const(k) => {
                k.expect_domain(self.domain)?;
                Ok(k.clone())
            }
            Builtin::Successor => Ok(match x {
                Value::Nat(n) => Value::Nat(n + 1u32),
                Value::Bits(b) => Value::Bits(bits::nat_to_bits(&(bits::bits_to_nat(b) + 1u32))),
                Value::List(_) => return Err(Error::InvalidMap("successor is not defined on lists".into()).into()),
            }),
            Builtin::TriF { i, j } => Ok(Value::Nat(tri::tri_f(i, j, x.as_nat()?))),
            Builtin::TriG { i } => Ok(Value::Nat(tri::tri_g(i, x.as_nat()?))),
            Builtin::ReH { oracle, i } => {
                let n = x.as_nat()?;
                if n < i || oracle.value(n) == 0 {
                    Ok(zero())
                } else {
                    Err(Stop::Diverged)
                }
            }
            Builtin::ReHPrime { i } => {
                let n = x.as_nat()?;
                if &(n >> 1u32) < i || !n.bit(0) {
                    Ok(zero())
                } else {
                    Err(Stop::Diverged)
                }
            }
            Builtin::SemiAtLeast(k) => {
                if x.as_nat()? >= k {
                    Ok(zero())
                } else {
                    Err(Stop::Diverged)
                }
            }
            Builtin::SemiEven => {
                if x.as_nat()?.bit(0) {
                    Err(Stop::Diverged)
                } else {
                    Ok(zero())
                }
            }
        }
    }
}

/// `ρ(g) = ρ∘g∘ρ⁻¹`, ⊥ off the range of `ρ`.
pub fn pushforward(e: &Encoding, m: &PartialMap) -> Result<PartialMap> {
    if m.domain != e.source() {
        return Err(Error::WrongDomain { expected: e.source(), found: m.domain });
    }
    Ok(PartialMap::make(format!("{e}({})", m.name), e.target(), Body::Pushforward(e.clone(), m.clone())))
}

/// `⟨ρ⟩f = ρ⁻¹∘f∘ρ`, ⊥ wherever `f` leaves the range of `ρ`.
pub fn pullback(e: &Encoding, m: &PartialMap) -> Result<PartialMap> {
    if m.domain != e.target() {
        return Err(Error::WrongDomain { expected: e.target(), found: m.domain });
    }
    Ok(PartialMap::make(format!("⟨{e}⟩{}", m.name), e.source(), Body::Pullback(e.clone(), m.clone())))
}
