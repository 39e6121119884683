//! Concrete constructions: striped models, the triangular array and its
//! row-rotating permutation, cycle analysis, Gödel pairing of pure lists,
//! the Ackermann diagonal, and the oracle-indexed RE family.

mod diag;
pub mod godel;
mod narrow;
pub mod re;
mod stripe;
pub mod tri;

pub use diag::{diag_h, DIAG_FUEL};
pub use godel::{godel_decode, godel_encode};
pub use narrow::{narrowness, NarrownessReport};
pub use re::{re_family, re_models, re_sample, OracleH, ReFamily};
pub use stripe::{stripe_encoding, stripe_map, stripe_model, stripe_model_member};
pub use tri::{f_member, g_member, iota, kappa, tri_f, tri_g, tri_models, tri_pi, tri_pi_inverse};
