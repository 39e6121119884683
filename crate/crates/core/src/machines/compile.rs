//! Compiles recursive-function terms to counter machines.
//!
//! Every term becomes a code fragment that sets an output register to the
//! term's value while leaving its input registers as it found them.
//! Fragments own their scratch registers and clear them on entry, so the
//! same fragment can run again inside a loop. Projections are not copied:
//! they alias the caller's input register directly.

use num_traits::ToPrimitive;

use super::cm::{CmProgram, Instr};
use crate::error::{Error, Result};
use crate::recdsl::Term;

type Reg = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Label(usize);

enum Op {
    Inc(Reg),
    DecJz(Reg, Label),
    Jump(Label),
    Halt,
    Place(Label),
}

struct Emitter {
    ops: Vec<Op>,
    next_reg: Reg,
    labels: usize,
    // shared spill register for copies; zero between uses
    spill: Reg,
}

/// Largest constant the compiler will unroll into `inc` instructions.
const MAX_CONST: u64 = 1 << 16;

impl Emitter {
    fn reg(&mut self) -> Reg {
        self.next_reg += 1;
        self.next_reg - 1
    }

    fn label(&mut self) -> Label {
        self.labels += 1;
        Label(self.labels - 1)
    }

    fn clear(&mut self, r: Reg) {
        let top = self.label();
        let done = self.label();
        self.ops.push(Op::Place(top));
        self.ops.push(Op::DecJz(r, done));
        self.ops.push(Op::Jump(top));
        self.ops.push(Op::Place(done));
    }

    /// `dst := src`, restoring `src` through the spill register.
    fn copy(&mut self, src: Reg, dst: Reg) {
        debug_assert_ne!(src, dst);
        self.clear(dst);
        let drain = self.label();
        let restore = self.label();
        let done = self.label();
        let spill = self.spill;
        self.ops.push(Op::Place(drain));
        self.ops.push(Op::DecJz(src, restore));
        self.ops.push(Op::Inc(dst));
        self.ops.push(Op::Inc(spill));
        self.ops.push(Op::Jump(drain));
        self.ops.push(Op::Place(restore));
        self.ops.push(Op::DecJz(spill, done));
        self.ops.push(Op::Inc(src));
        self.ops.push(Op::Jump(restore));
        self.ops.push(Op::Place(done));
    }

    /// `dst := src; src := 0`.
    fn transfer(&mut self, src: Reg, dst: Reg) {
        self.clear(dst);
        let top = self.label();
        let done = self.label();
        self.ops.push(Op::Place(top));
        self.ops.push(Op::DecJz(src, done));
        self.ops.push(Op::Inc(dst));
        self.ops.push(Op::Jump(top));
        self.ops.push(Op::Place(done));
    }

    /// Register holding the value of `g` on `ins`: an existing input when
    /// `g` only selects one, otherwise a fresh register filled by `g`.
    fn operand(&mut self, g: &Term, ins: &[Reg]) -> Result<Reg> {
        match g {
            Term::Proj { index, .. } => Ok(ins[index - 1]),
            Term::Id => Ok(ins[0]),
            _ => {
                let r = self.reg();
                self.term(g, ins, r)?;
                Ok(r)
            }
        }
    }

    fn term(&mut self, t: &Term, ins: &[Reg], out: Reg) -> Result<()> {
        debug_assert!(!ins.contains(&out));
        match t {
            Term::Zero => self.clear(out),
            Term::Succ => {
                self.copy(ins[0], out);
                self.ops.push(Op::Inc(out));
            }
            Term::Id => self.copy(ins[0], out),
            Term::Proj { index, .. } => self.copy(ins[index - 1], out),
            Term::Const(k) => {
                let k = k
                    .to_u64()
                    .filter(|&k| k <= MAX_CONST)
                    .ok_or_else(|| Error::Unsupported(format!("constant {k} is too large to unroll")))?;
                self.clear(out);
                for _ in 0..k {
                    self.ops.push(Op::Inc(out));
                }
            }
            Term::Comp(f, gs) => {
                if matches!(**f, Term::Succ) && !matches!(gs[0], Term::Proj { .. } | Term::Id) {
                    // S(g): compute g straight into `out`, then bump it
                    self.term(&gs[0], ins, out)?;
                    self.ops.push(Op::Inc(out));
                    return Ok(());
                }
                let args = gs.iter().map(|g| self.operand(g, ins)).collect::<Result<Vec<_>>>()?;
                self.term(f, &args, out)?;
            }
            Term::PrimRec(base, step) => {
                let (y, xs) = ins.split_first().expect("arity checked");
                let remaining = self.reg();
                let counter = self.reg();
                let acc = self.reg();
                let next = self.reg();
                self.copy(*y, remaining);
                self.term(base, xs, acc)?;
                self.clear(counter);
                let top = self.label();
                let done = self.label();
                self.ops.push(Op::Place(top));
                self.ops.push(Op::DecJz(remaining, done));
                let mut frame = vec![counter, acc];
                frame.extend_from_slice(xs);
                self.term(step, &frame, next)?;
                self.transfer(next, acc);
                self.ops.push(Op::Inc(counter));
                self.ops.push(Op::Jump(top));
                self.ops.push(Op::Place(done));
                self.transfer(acc, out);
            }
            Term::Mu(f) => {
                let i = self.reg();
                let probe = self.reg();
                self.clear(i);
                let top = self.label();
                let found = self.label();
                self.ops.push(Op::Place(top));
                let mut frame = ins.to_vec();
                frame.push(i);
                self.term(f, &frame, probe)?;
                self.ops.push(Op::DecJz(probe, found));
                self.ops.push(Op::Inc(i));
                self.ops.push(Op::Jump(top));
                self.ops.push(Op::Place(found));
                self.copy(i, out);
            }
            Term::Ack => {
                return Err(Error::Unsupported(
                    "ACK (the Ackermann builtin has no counter-machine translation; \
                     define the needed rows by primitive recursion instead)"
                        .into(),
                ))
            }
        }
        Ok(())
    }

    fn finish(self, inputs: Vec<Reg>, output: Reg) -> Result<CmProgram> {
        let mut positions = vec![usize::MAX; self.labels];
        let mut pc = 0;
        for op in &self.ops {
            match op {
                Op::Place(l) => positions[l.0] = pc,
                _ => pc += 1,
            }
        }
        let code = self
            .ops
            .iter()
            .filter_map(|op| match *op {
                Op::Inc(r) => Some(Instr::Inc(r)),
                Op::DecJz(r, l) => Some(Instr::DecJz(r, positions[l.0])),
                Op::Jump(l) => Some(Instr::Jump(positions[l.0])),
                Op::Halt => Some(Instr::Halt),
                Op::Place(_) => None,
            })
            .collect();
        CmProgram::new(self.next_reg, inputs, output, code)
    }
}

/// Translates a term of any arity `k` into a counter machine reading its
/// arguments from `r0..r{k-1}`.
pub fn compile_rec_to_cm(t: &Term) -> Result<CmProgram> {
    let arity = t.check_arity()?;
    let inputs: Vec<Reg> = (0..arity).collect();
    let mut e = Emitter { ops: Vec::new(), next_reg: arity + 2, labels: 0, spill: arity + 1 };
    let output = arity;
    e.term(t, &inputs, output)?;
    e.ops.push(Op::Halt);
    e.finish(inputs, output)
}
