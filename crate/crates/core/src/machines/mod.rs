//! Turing machines, counter machines, the term-to-counter-machine
//! compiler, and the shortlex bijection between naturals and bit strings.

pub mod bits;
pub mod cm;
mod compile;
pub mod tm;

pub use bits::{bits_to_nat, nat_to_bits};
pub use cm::{run_cm, run_cm_multi, CmProgram, Instr};
pub use compile::compile_rec_to_cm;
pub use tm::{run_tm, Move, Symbol, TmProgram};
