//! Symbolic-expression reader for terms.
//!
//! ```text
//! term := Z | S | I | ACK
//!       | (P i k) | (K k)
//!       | (C term term+) | (R term term) | (M term)
//! ```
//!
//! Whitespace separates tokens; `;` starts a comment running to the end
//! of the line.

use num_bigint::BigUint;

use super::term::Term;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok<'a> {
    Open,
    Close,
    Atom(&'a str),
}

fn tokenize(src: &str) -> Vec<(usize, Tok<'_>)> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => {
                out.push((i, Tok::Open));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::Close));
                i += 1;
            }
            b';' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            c if c.is_ascii_whitespace() => i += 1,
            _ => {
                let start = i;
                while i < bytes.len() && !bytes[i].is_ascii_whitespace() && !matches!(bytes[i], b'(' | b')' | b';') {
                    i += 1;
                }
                out.push((start, Tok::Atom(&src[start..i])));
            }
        }
    }
    out
}

struct Reader<'a> {
    toks: Vec<(usize, Tok<'a>)>,
    at: usize,
    end: usize,
}

impl<'a> Reader<'a> {
    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn next(&mut self) -> Option<Tok<'a>> {
        let t = self.toks.get(self.at).map(|t| t.1.clone());
        self.at += 1;
        t
    }

    fn err<T>(&self, pos: usize, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos, msg: msg.into() })
    }

    fn number(&mut self) -> Result<BigUint> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Atom(a)) => {
                a.parse::<BigUint>().or_else(|_| self.err(pos, format!("expected a natural number, found `{a}`")))
            }
            Some(_) => self.err(pos, "expected a natural number"),
            None => self.err(pos, "unexpected end of input"),
        }
    }

    fn small(&mut self) -> Result<usize> {
        let pos = self.pos();
        let n = self.number()?;
        usize::try_from(&n).or_else(|_| self.err(pos, "index too large"))
    }

    fn close(&mut self) -> Result<()> {
        let pos = self.pos();
        match self.next() {
            Some(Tok::Close) => Ok(()),
            _ => self.err(pos, "expected `)`"),
        }
    }

    fn term(&mut self) -> Result<Term> {
        let pos = self.pos();
        match self.next() {
            None => self.err(pos, "unexpected end of input"),
            Some(Tok::Close) => self.err(pos, "unexpected `)`"),
            Some(Tok::Atom(a)) => match a {
                "Z" => Ok(Term::Zero),
                "S" => Ok(Term::Succ),
                "I" => Ok(Term::Id),
                "ACK" => Ok(Term::Ack),
                other => self.err(pos, format!("unknown atom `{other}`")),
            },
            Some(Tok::Open) => {
                let head_pos = self.pos();
                let head = match self.next() {
                    Some(Tok::Atom(h)) => h,
                    _ => return self.err(head_pos, "expected an operator after `(`"),
                };
                let t = match head {
                    "P" => {
                        let index = self.small()?;
                        let arity = self.small()?;
                        Term::Proj { index, arity }
                    }
                    "K" => Term::Const(self.number()?),
                    "C" => {
                        let f = self.term()?;
                        let mut gs = Vec::new();
                        while !matches!(self.toks.get(self.at), Some((_, Tok::Close)) | None) {
                            gs.push(self.term()?);
                        }
                        Term::Comp(Box::new(f), gs)
                    }
                    "R" => {
                        let b = self.term()?;
                        let s = self.term()?;
                        Term::PrimRec(Box::new(b), Box::new(s))
                    }
                    "M" => Term::Mu(Box::new(self.term()?)),
                    other => return self.err(head_pos, format!("unknown operator `{other}`")),
                };
                self.close()?;
                Ok(t)
            }
        }
    }
}

/// Parses a term and checks its arities.
pub fn parse_term(text: &str) -> Result<Term> {
    let mut r = Reader { toks: tokenize(text), at: 0, end: text.len() };
    let t = r.term()?;
    if r.at < r.toks.len() {
        return r.err(r.pos(), "trailing input after term");
    }
    t.check_arity()?;
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms_and_forms() {
        assert_eq!(parse_term("S").unwrap(), Term::Succ);
        let t = parse_term("(C S S)").unwrap();
        assert_eq!(t.arity(), 1);
        let add = parse_term("(R (P 1 1) (C S (P 2 3)))").unwrap();
        assert_eq!(add.arity(), 2);
        assert_eq!(parse_term("(K 9)").unwrap(), Term::constant(9u32));
        assert_eq!(parse_term("  ACK ; binary\n").unwrap(), Term::Ack);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_term("(C S S") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        match parse_term("(Q S)") {
            Err(Error::Syntax { pos, msg }) => {
                assert_eq!(pos, 1);
                assert!(msg.contains("Q"));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_term("S S"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_term("(P x 2)"), Err(Error::Syntax { pos: 3, .. })));
    }

    #[test]
    fn arity_errors_name_the_subterm() {
        match parse_term("(C S (R Z S))") {
            Err(Error::Arity { term, .. }) => assert_eq!(term, "(R Z S)"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_term("(C ACK S)"), Err(Error::Arity { .. })));
        assert!(matches!(parse_term("(M S)"), Err(Error::Arity { .. })));
    }
}
