//! Primitive, general and partial recursive function terms.

mod ack;
mod eval;
pub mod library;
mod parse;
mod term;

pub use ack::{ackermann, ackermann_bounded, AckBound};
pub use eval::{eval_term, eval_with};
pub use parse::parse_term;
pub use term::{compose_unary, Term, TermClass};

pub(crate) use eval::eval;
