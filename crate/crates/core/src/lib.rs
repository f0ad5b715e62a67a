//! Finite-ring computational algebra: ring constructions, distinguished
//! subsets, nil-clean style classification, group rings, and a harness that
//! checks structural results about GSWNC rings (rings whose non-units are
//! strongly weakly nil-clean) on a catalog of small rings.

pub mod error;
pub mod ring;
pub mod classify;
pub mod subsets;
pub mod group;
pub mod group_ring;
pub mod structure;
pub mod expr;
pub mod harness;

pub use error::{Result, RingError};
pub use ring::{Elem, FiniteRing, RingEndomorphism};
pub use subsets::{ElementSet, NilWitness};
