//! Counter machines with `inc`, `decjz`, `jump` and `halt`.
//!
//! Text format:
//!
//! ```text
//! registers 2
//! input r0
//! output r1
//! loop: decjz r0 end     # decrement r0, or jump to `end` if it is zero
//!       inc r1
//!       jump loop
//! end:  halt
//! ```
//!
//! Execution also stops when control runs past the last instruction.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::fuel::{settle, Eval, Fuel};
use crate::value::Outcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Instr {
    Inc(usize),
    /// Decrement, or jump to the target when the register is already zero.
    DecJz(usize, usize),
    Jump(usize),
    Halt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmProgram {
    registers: usize,
    inputs: Vec<usize>,
    output: usize,
    code: Vec<Instr>,
}

impl CmProgram {
    pub fn new(registers: usize, inputs: Vec<usize>, output: usize, code: Vec<Instr>) -> Result<Self> {
        let p = CmProgram { registers, inputs, output, code };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let reg = |r: usize| {
            if r < self.registers {
                Ok(())
            } else {
                Err(Error::MalformedProgram(format!("register r{r} out of range (program has {})", self.registers)))
            }
        };
        let target = |t: usize| {
            if t < self.code.len() {
                Ok(())
            } else {
                Err(Error::MalformedProgram(format!("jump target {t} outside the program")))
            }
        };
        if self.inputs.is_empty() {
            return Err(Error::MalformedProgram("no input register".into()));
        }
        self.inputs.iter().try_for_each(|&r| reg(r))?;
        reg(self.output)?;
        for ins in &self.code {
            match *ins {
                Instr::Inc(r) => reg(r)?,
                Instr::DecJz(r, t) => {
                    reg(r)?;
                    target(t)?;
                }
                Instr::Jump(t) => target(t)?,
                Instr::Halt => {}
            }
        }
        Ok(())
    }

    pub fn registers(&self) -> usize {
        self.registers
    }

    pub fn inputs(&self) -> &[usize] {
        &self.inputs
    }

    pub fn output(&self) -> usize {
        self.output
    }

    pub fn code(&self) -> &[Instr] {
        &self.code
    }
}

impl FromStr for CmProgram {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        enum Raw {
            Inc(usize),
            DecJz(usize, String, usize),
            Jump(String, usize),
            Halt,
        }
        let mut registers = None;
        let mut inputs = None;
        let mut output = None;
        let mut labels: HashMap<String, usize> = HashMap::new();
        let mut raw = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let lineno = lineno + 1;
            let bad = |msg: String| Error::MalformedProgram(format!("line {lineno}: {msg}"));
            let mut line = line.split('#').next().unwrap_or("").trim();
            if let Some((label, rest)) = line.split_once(':') {
                let label = label.trim();
                if label.is_empty() || label.contains(char::is_whitespace) {
                    return Err(bad(format!("bad label `{label}`")));
                }
                if labels.insert(label.to_string(), raw.len()).is_some() {
                    return Err(bad(format!("duplicate label `{label}`")));
                }
                line = rest.trim();
            }
            if line.is_empty() {
                continue;
            }
            let parse_reg = |w: &str| -> Result<usize> {
                w.strip_prefix('r').and_then(|n| n.parse().ok()).ok_or_else(|| bad(format!("bad register `{w}`")))
            };
            let words: Vec<&str> = line.split_whitespace().collect();
            match words.as_slice() {
                ["registers", n] => registers = Some(n.parse().map_err(|_| bad(format!("bad register count `{n}`")))?),
                ["input", rs @ ..] if !rs.is_empty() => {
                    inputs = Some(rs.iter().map(|w| parse_reg(w)).collect::<Result<Vec<_>>>()?)
                }
                ["output", r] => output = Some(parse_reg(r)?),
                ["inc", r] => raw.push(Raw::Inc(parse_reg(r)?)),
                ["decjz", r, l] => raw.push(Raw::DecJz(parse_reg(r)?, l.to_string(), lineno)),
                ["jump", l] => raw.push(Raw::Jump(l.to_string(), lineno)),
                ["halt"] => raw.push(Raw::Halt),
                _ => return Err(bad(format!("unrecognised instruction `{line}`"))),
            }
        }
        let resolve = |l: &str, lineno: usize| {
            labels
                .get(l)
                .copied()
                .ok_or_else(|| Error::MalformedProgram(format!("line {lineno}: undefined label `{l}`")))
        };
        let code = raw
            .into_iter()
            .map(|r| {
                Ok(match r {
                    Raw::Inc(reg) => Instr::Inc(reg),
                    Raw::DecJz(reg, l, ln) => Instr::DecJz(reg, resolve(&l, ln)?),
                    Raw::Jump(l, ln) => Instr::Jump(resolve(&l, ln)?),
                    Raw::Halt => Instr::Halt,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        CmProgram::new(
            registers.ok_or_else(|| Error::MalformedProgram("missing `registers` line".into()))?,
            inputs.ok_or_else(|| Error::MalformedProgram("missing `input` line".into()))?,
            output.ok_or_else(|| Error::MalformedProgram("missing `output` line".into()))?,
            code,
        )
    }
}

impl fmt::Display for CmProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "registers {}", self.registers)?;
        write!(f, "input")?;
        for r in &self.inputs {
            write!(f, " r{r}")?;
        }
        writeln!(f)?;
        writeln!(f, "output r{}", self.output)?;
        let targets: BTreeSet<usize> = self
            .code
            .iter()
            .filter_map(|i| match *i {
                Instr::DecJz(_, t) | Instr::Jump(t) => Some(t),
                _ => None,
            })
            .collect();
        for (k, ins) in self.code.iter().enumerate() {
            let label = if targets.contains(&k) { format!("L{k}:") } else { String::new() };
            let body = match *ins {
                Instr::Inc(r) => format!("inc r{r}"),
                Instr::DecJz(r, t) => format!("decjz r{r} L{t}"),
                Instr::Jump(t) => format!("jump L{t}"),
                Instr::Halt => "halt".to_string(),
            };
            writeln!(f, "{label:<8}{body}")?;
        }
        Ok(())
    }
}

pub fn run_cm(p: &CmProgram, input: &BigUint, fuel: u64) -> Result<Outcome<BigUint>> {
    run_cm_multi(p, std::slice::from_ref(input), fuel)
}

pub fn run_cm_multi(p: &CmProgram, inputs: &[BigUint], fuel: u64) -> Result<Outcome<BigUint>> {
    let mut f = Fuel::new(fuel);
    run_cm_with(p, inputs, &mut f)
}

/// Registers are 64-bit; a register can only grow by one per step, so
/// overflow is out of reach of any realistic fuel budget.
pub fn run_cm_with(p: &CmProgram, inputs: &[BigUint], fuel: &mut Fuel) -> Result<Outcome<BigUint>> {
    if inputs.len() != p.inputs.len() {
        return Err(Error::InvalidMap(format!(
            "counter machine expects {} inputs, got {}",
            p.inputs.len(),
            inputs.len()
        )));
    }
    let mut regs = vec![0u64; p.registers];
    for (&r, v) in p.inputs.iter().zip(inputs) {
        regs[r] = v.to_u64().ok_or_else(|| Error::TooLarge(format!("input {v} exceeds the 64-bit register width")))?;
    }
    settle(run(p, &mut regs, fuel))
}

fn run(p: &CmProgram, regs: &mut [u64], fuel: &mut Fuel) -> Eval<BigUint> {
    let mut pc = 0;
    while let Some(&ins) = p.code.get(pc) {
        fuel.tick()?;
        match ins {
            Instr::Inc(r) => {
                regs[r] += 1;
                pc += 1;
            }
            Instr::DecJz(r, t) => {
                if regs[r] == 0 {
                    pc = t;
                } else {
                    regs[r] -= 1;
                    pc += 1;
                }
            }
            Instr::Jump(t) => pc = t,
            Instr::Halt => break,
        }
    }
    Ok(BigUint::from(regs[p.output]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn tiny_programs() {
        let halt = CmProgram::new(1, vec![0], 0, vec![Instr::Halt]).unwrap();
        assert_eq!(run_cm(&halt, &n(5), 10).unwrap(), Outcome::Converged(n(5)));
        let inc = CmProgram::new(1, vec![0], 0, vec![Instr::Inc(0), Instr::Halt]).unwrap();
        assert_eq!(run_cm(&inc, &n(4), 10).unwrap(), Outcome::Converged(n(5)));
        let spin = CmProgram::new(1, vec![0], 0, vec![Instr::Jump(0)]).unwrap();
        assert_eq!(run_cm(&spin, &n(0), 100).unwrap(), Outcome::FuelExhausted);
    }

    #[test]
    fn text_format() {
        let src = "registers 2\ninput r0\noutput r1\nloop: decjz r0 end # move\n inc r1\n jump loop\nend: halt\n";
        let p: CmProgram = src.parse().unwrap();
        assert_eq!(run_cm(&p, &n(7), 100).unwrap(), Outcome::Converged(n(7)));
        assert_eq!(p.to_string().parse::<CmProgram>().unwrap(), p);
    }

    #[test]
    fn malformed() {
        assert!(matches!(
            "registers 1\ninput r0\noutput r0\njump nowhere\n".parse::<CmProgram>(),
            Err(Error::MalformedProgram(_))
        ));
        assert!(matches!(
            "registers 1\ninput r0\noutput r3\nhalt\n".parse::<CmProgram>(),
            Err(Error::MalformedProgram(_))
        ));
        assert!(CmProgram::new(1, vec![0], 0, vec![Instr::Jump(4)]).is_err());
        assert!("registers 1\ninput r0\noutput r0\nfrobnicate\n".parse::<CmProgram>().is_err());
    }
}
