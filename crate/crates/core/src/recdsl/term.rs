use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};

/// A recursive-function term over the naturals.
///
/// Conventions: `Z`, `S`, `I` and `(K k)` are unary; `(P i k)` is the
/// 1-based `i`-th of `k` arguments. `(R base step)` recurses on its
/// *first* argument: `R(0, x̄) = base(x̄)` and
/// `R(y+1, x̄) = step(y, R(y, x̄), x̄)`. `(M f)` returns the least `i`
/// with `f(x̄, i) = 0`, the search variable being last.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    Succ,
    Proj { index: usize, arity: usize },
    Comp(Box<Term>, Vec<Term>),
    PrimRec(Box<Term>, Box<Term>),
    Mu(Box<Term>),
    Ack,
    Const(BigUint),
    Id,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum TermClass {
    /// Neither `M` nor `ACK` occurs.
    Prim,
    General,
}

impl fmt::Display for TermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TermClass::Prim => "PRIM",
            TermClass::General => "GENERAL",
        })
    }
}

fn arity_error(t: &Term, msg: impl Into<String>) -> Error {
    Error::Arity { term: t.to_string(), msg: msg.into() }
}

impl Term {
    pub fn proj(index: usize, arity: usize) -> Result<Term> {
        let t = Term::Proj { index, arity };
        t.check_arity()?;
        Ok(t)
    }

    pub fn comp(f: Term, gs: Vec<Term>) -> Result<Term> {
        let t = Term::Comp(Box::new(f), gs);
        t.check_arity()?;
        Ok(t)
    }

    pub fn prim_rec(base: Term, step: Term) -> Result<Term> {
        let t = Term::PrimRec(Box::new(base), Box::new(step));
        t.check_arity()?;
        Ok(t)
    }

    pub fn mu(f: Term) -> Result<Term> {
        let t = Term::Mu(Box::new(f));
        t.check_arity()?;
        Ok(t)
    }

    pub fn constant(k: impl Into<BigUint>) -> Term {
        Term::Const(k.into())
    }

    /// Validates arities bottom-up and returns the arity of the term.
    pub fn check_arity(&self) -> Result<usize> {
        match self {
            Term::Zero | Term::Succ | Term::Id | Term::Const(_) => Ok(1),
            Term::Ack => Ok(2),
            Term::Proj { index, arity } => {
                if *index == 0 || index > arity {
                    Err(arity_error(self, format!("projection index must lie in 1..={arity}")))
                } else {
                    Ok(*arity)
                }
            }
            Term::Comp(f, gs) => {
                let fa = f.check_arity()?;
                if gs.is_empty() {
                    return Err(arity_error(self, "composition needs at least one inner term"));
                }
                if fa != gs.len() {
                    return Err(arity_error(
                        self,
                        format!("outer term has arity {fa} but {} inner terms were given", gs.len()),
                    ));
                }
                let mut inner = None;
                for g in gs {
                    let ga = g.check_arity()?;
                    match inner {
                        None => inner = Some(ga),
                        Some(a) if a != ga => {
                            return Err(arity_error(self, format!("inner terms disagree on arity ({a} vs {ga})")))
                        }
                        _ => {}
                    }
                }
                Ok(inner.unwrap_or(1))
            }
            Term::PrimRec(base, step) => {
                let n = base.check_arity()?;
                let s = step.check_arity()?;
                if s != n + 2 {
                    return Err(arity_error(
                        self,
                        format!("base has arity {n} so step must have arity {}, found {s}", n + 2),
                    ));
                }
                Ok(n + 1)
            }
            Term::Mu(f) => {
                let a = f.check_arity()?;
                if a < 2 {
                    return Err(arity_error(self, "minimised term needs arity at least 2"));
                }
                Ok(a - 1)
            }
        }
    }

    /// Arity of a term that already passed `check_arity`.
    pub fn arity(&self) -> usize {
        match self {
            Term::Zero | Term::Succ | Term::Id | Term::Const(_) => 1,
            Term::Ack => 2,
            Term::Proj { arity, .. } => *arity,
            Term::Comp(_, gs) => gs.first().map_or(1, Term::arity),
            Term::PrimRec(base, _) => base.arity() + 1,
            Term::Mu(f) => f.arity() - 1,
        }
    }

    pub fn classify(&self) -> TermClass {
        if self.is_prim() {
            TermClass::Prim
        } else {
            TermClass::General
        }
    }

    fn is_prim(&self) -> bool {
        match self {
            Term::Mu(_) | Term::Ack => false,
            Term::Comp(f, gs) => f.is_prim() && gs.iter().all(Term::is_prim),
            Term::PrimRec(b, s) => b.is_prim() && s.is_prim(),
            _ => true,
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Comp(f, gs) => 1 + f.size() + gs.iter().map(Term::size).sum::<usize>(),
            Term::PrimRec(b, s) => 1 + b.size() + s.size(),
            Term::Mu(f) => 1 + f.size(),
            _ => 1,
        }
    }
}

/// `t1 ∘ t2` for unary terms.
pub fn compose_unary(t1: &Term, t2: &Term) -> Result<Term> {
    for t in [t1, t2] {
        if t.check_arity()? != 1 {
            return Err(arity_error(t, "compose_unary expects unary terms"));
        }
    }
    Term::comp(t1.clone(), vec![t2.clone()])
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => f.write_str("Z"),
            Term::Succ => f.write_str("S"),
            Term::Id => f.write_str("I"),
            Term::Ack => f.write_str("ACK"),
            Term::Const(k) => write!(f, "(K {k})"),
            Term::Proj { index, arity } => write!(f, "(P {index} {arity})"),
            Term::Comp(outer, gs) => {
                write!(f, "(C {outer}")?;
                for g in gs {
                    write!(f, " {g}")?;
                }
                f.write_str(")")
            }
            Term::PrimRec(b, s) => write!(f, "(R {b} {s})"),
            Term::Mu(g) => write!(f, "(M {g})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arities() {
        let add =
            Term::prim_rec(Term::proj(1, 1).unwrap(), Term::comp(Term::Succ, vec![Term::proj(2, 3).unwrap()]).unwrap())
                .unwrap();
        assert_eq!(add.arity(), 2);
        assert_eq!(add.classify(), TermClass::Prim);
        assert!(Term::prim_rec(Term::Zero, Term::Succ).is_err());
        assert!(Term::proj(0, 2).is_err());
        assert!(Term::proj(3, 2).is_err());
        assert!(Term::comp(Term::Ack, vec![Term::Succ]).is_err());
    }

    #[test]
    fn classification() {
        assert_eq!(Term::Ack.classify(), TermClass::General);
        let mu = Term::mu(Term::comp(Term::Succ, vec![Term::proj(2, 2).unwrap()]).unwrap()).unwrap();
        assert_eq!(mu.arity(), 1);
        let t = Term::comp(Term::Succ, vec![mu]).unwrap();
        assert_eq!(t.classify(), TermClass::General);
        assert_eq!(Term::Succ.classify(), TermClass::Prim);
    }

    #[test]
    fn compose_requires_unary() {
        assert!(compose_unary(&Term::Succ, &Term::Ack).is_err());
        let t = compose_unary(&Term::Succ, &Term::Succ).unwrap();
        assert_eq!(t.to_string(), "(C S S)");
    }
}
