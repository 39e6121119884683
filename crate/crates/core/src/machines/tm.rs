//! Single-tape Turing machines over `{0, 1, _}`.
//!
//! Text format, one item per line, `#` comments:
//!
//! ```text
//! start seek
//! halt done
//! seek 0 -> seek 0 R
//! seek _ -> carry _ L
//! ```
//!
//! Every non-halt state needs a transition for each of `0`, `1`, `_`;
//! the halt state has none. The machine starts on the leftmost input
//! symbol and its output is the maximal `{0,1}` block around the head
//! when it halts (empty if the head sits on a blank).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fuel::{settle, Eval, Fuel};
use crate::value::{BitString, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Zero,
    One,
    Blank,
}

impl Symbol {
    fn index(self) -> usize {
        self as usize
    }

    fn from_bit(b: bool) -> Self {
        if b {
            Symbol::One
        } else {
            Symbol::Zero
        }
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "0" => Some(Symbol::Zero),
            "1" => Some(Symbol::One),
            "_" => Some(Symbol::Blank),
            _ => None,
        }
    }

    const ALL: [Symbol; 3] = [Symbol::Zero, Symbol::One, Symbol::Blank];
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symbol::Zero => "0",
            Symbol::One => "1",
            Symbol::Blank => "_",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    L,
    R,
    S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transition {
    pub next: usize,
    pub write: Symbol,
    pub shift: Move,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TmProgram {
    states: Vec<String>,
    start: usize,
    halt: usize,
    table: Vec<[Option<Transition>; 3]>,
}

impl TmProgram {
    /// Builds a program from `(state, read, next, write, move)` rows.
    pub fn from_rows<'a>(
        start: &str,
        halt: &str,
        rows: impl IntoIterator<Item = (&'a str, Symbol, &'a str, Symbol, Move)>,
    ) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let id = |s: &str, names: &mut Vec<String>| -> usize {
            names.iter().position(|n| n == s).unwrap_or_else(|| {
                names.push(s.to_string());
                names.len() - 1
            })
        };
        let start_id = id(start, &mut names);
        let halt_id = id(halt, &mut names);
        let mut entries = Vec::new();
        for (from, read, to, write, shift) in rows {
            let f = id(from, &mut names);
            let t = id(to, &mut names);
            entries.push((f, read, Transition { next: t, write, shift }));
        }
        let mut table = vec![[None; 3]; names.len()];
        for (f, read, tr) in entries {
            let slot = &mut table[f][read.index()];
            if slot.is_some() {
                return Err(Error::MalformedProgram(format!("duplicate transition for ({}, {read})", names[f])));
            }
            *slot = Some(tr);
        }
        let p = TmProgram { states: names, start: start_id, halt: halt_id, table };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        if self.table[self.halt].iter().any(Option::is_some) {
            return Err(Error::MalformedProgram(format!(
                "halt state `{}` has outgoing transitions",
                self.states[self.halt]
            )));
        }
        for (q, row) in self.table.iter().enumerate() {
            if q == self.halt {
                continue;
            }
            for s in Symbol::ALL {
                if row[s.index()].is_none() {
                    return Err(Error::MalformedProgram(format!("no transition for ({}, {s})", self.states[q])));
                }
            }
        }
        Ok(())
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }
}

impl FromStr for TmProgram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut start = None;
        let mut halt = None;
        let mut rows = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| Error::MalformedProgram(format!("line {}: {msg}", lineno + 1));
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                ["start", q] => start = Some(q.to_string()),
                ["halt", q] => halt = Some(q.to_string()),
                [from, read, "->", to, write, mv] => {
                    let read = Symbol::parse(read).ok_or_else(|| bad("bad read symbol"))?;
                    let write = Symbol::parse(write).ok_or_else(|| bad("bad write symbol"))?;
                    let shift = match *mv {
                        "L" => Move::L,
                        "R" => Move::R,
                        "S" => Move::S,
                        _ => return Err(bad("move must be L, R or S")),
                    };
                    rows.push((from.to_string(), read, to.to_string(), write, shift));
                }
                _ => return Err(bad("expected `start q`, `halt q` or `q a -> q' b M`")),
            }
        }
        let start = start.ok_or_else(|| Error::MalformedProgram("missing `start` line".into()))?;
        let halt = halt.ok_or_else(|| Error::MalformedProgram("missing `halt` line".into()))?;
        TmProgram::from_rows(&start, &halt, rows.iter().map(|(f, r, t, w, m)| (f.as_str(), *r, t.as_str(), *w, *m)))
    }
}

impl fmt::Display for TmProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "start {}", self.states[self.start])?;
        writeln!(f, "halt {}", self.states[self.halt])?;
        for (q, row) in self.table.iter().enumerate() {
            for s in Symbol::ALL {
                if let Some(tr) = row[s.index()] {
                    let mv = match tr.shift {
                        Move::L => "L",
                        Move::R => "R",
                        Move::S => "S",
                    };
                    writeln!(f, "{} {s} -> {} {} {mv}", self.states[q], self.states[tr.next], tr.write)?;
                }
            }
        }
        Ok(())
    }
}

struct Tape {
    cells: Vec<Symbol>,
    // index of tape position 0 inside `cells`
    origin: usize,
}

impl Tape {
    fn new(input: &BitString) -> Self {
        let cells = input.bits().iter().map(|&b| Symbol::from_bit(b)).collect();
        Tape { cells, origin: 0 }
    }

    fn slot(&mut self, pos: i64) -> &mut Symbol {
        let mut idx = pos + self.origin as i64;
        if idx < 0 {
            let grow = (-idx) as usize + 16;
            self.cells.splice(0..0, std::iter::repeat_n(Symbol::Blank, grow));
            self.origin += grow;
            idx += grow as i64;
        }
        let idx = idx as usize;
        if idx >= self.cells.len() {
            self.cells.resize(idx + 16, Symbol::Blank);
        }
        &mut self.cells[idx]
    }

    fn segment_at(&mut self, pos: i64) -> BitString {
        let head = (pos + self.origin as i64) as usize;
        let is_bit = |s: &Symbol| *s != Symbol::Blank;
        if !is_bit(&self.cells[head]) {
            return BitString::empty();
        }
        let mut lo = head;
        while lo > 0 && is_bit(&self.cells[lo - 1]) {
            lo -= 1;
        }
        let mut hi = head;
        while hi + 1 < self.cells.len() && is_bit(&self.cells[hi + 1]) {
            hi += 1;
        }
        self.cells[lo..=hi].iter().map(|s| *s == Symbol::One).collect::<Vec<_>>().into()
    }
}

/// Runs until the halt state or until `fuel` transitions have been made.
pub fn run_tm(p: &TmProgram, input: &BitString, fuel: u64) -> Result<Outcome<BitString>> {
    let mut f = Fuel::new(fuel);
    run_tm_with(p, input, &mut f)
}

pub fn run_tm_with(p: &TmProgram, input: &BitString, fuel: &mut Fuel) -> Result<Outcome<BitString>> {
    settle(run(p, input, fuel))
}

fn run(p: &TmProgram, input: &BitString, fuel: &mut Fuel) -> Eval<BitString> {
    let mut tape = Tape::new(input);
    let mut head: i64 = 0;
    let mut state = p.start;
    while state != p.halt {
        fuel.tick()?;
        let cell = tape.slot(head);
        let tr = p.table[state][cell.index()].expect("validated program");
        *cell = tr.write;
        state = tr.next;
        match tr.shift {
            Move::L => head -= 1,
            Move::R => head += 1,
            Move::S => {}
        }
    }
    tape.slot(head);
    Ok(tape.segment_at(head))
}

/// Small machines used as witnesses and in tests.
pub mod library {
    use super::*;

    const SUCCESSOR: &str = "\
# successor under the shortlex bijection: add one to the word,
# and when every bit carries, grow the word by one 0
start seek
halt done
seek 0 -> seek 0 R
seek 1 -> seek 1 R
seek _ -> carry _ L
carry 1 -> carry 0 L
carry 0 -> done 1 S
carry _ -> done 0 S
";

    const ERASE_ALL: &str = "\
start erase
halt done
erase 0 -> erase _ R
erase 1 -> erase _ R
erase _ -> done _ S
";

    const IDENTITY: &str = "\
start done
halt done
";

    pub fn successor_source() -> &'static str {
        SUCCESSOR
    }

    pub fn erase_all_source() -> &'static str {
        ERASE_ALL
    }

    pub fn identity_source() -> &'static str {
        IDENTITY
    }

    pub fn binary_successor() -> TmProgram {
        SUCCESSOR.parse().expect("library machine")
    }

    /// Writes blanks over the input; the constant `ε`, i.e. constant zero
    /// through the shortlex bijection.
    pub fn erase_all() -> TmProgram {
        ERASE_ALL.parse().expect("library machine")
    }

    pub fn identity() -> TmProgram {
        IDENTITY.parse().expect("library machine")
    }
}
