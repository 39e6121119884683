//! Interpreters for recursive-function terms, Turing machines and counter
//! machines, a catalogue of domain encodings, and a checker that verifies
//! or refutes simulation relations `ρ∘g = f∘ρ` between models on finite
//! samples.
//!
//! ```
//! use simlab::{Encoding, Value};
//!
//! let even = Encoding::stripe(2u32, 0u32).unwrap();
//! assert_eq!(even.encode(&Value::from(5)).unwrap(), Value::from(10));
//! assert_eq!(even.decode(&Value::from(7)).unwrap(), None);
//! ```

pub mod constructions;
pub mod encoding;
pub mod error;
pub mod fuel;
pub mod machines;
pub mod map;
pub mod model;
pub mod recdsl;
pub mod simcheck;
pub mod value;

pub use encoding::{compose_encodings, Encoding, EncodingKind, FinitePermutation};
pub use error::{Error, Result};
pub use fuel::Fuel;
pub use map::{pullback, pushforward, Adapter, Builtin, PartialMap};
pub use model::Model;
pub use value::{BitString, Domain, Outcome, PureList, Value};
