//! Explicit constructions behind a model structure on diffeological spaces.
//!
//! * [`simplicial`]: finite simplicial sets, horns, cones, pushouts, Kan checks.
//! * [`geometry`]: the smooth standard simplices, their chart atlas, good
//!   neighborhoods, and every explicit deformation retraction as an
//!   evaluable homotopy.
//! * [`realization`]: normal-form points of `|K|` and the canonical injection.
//! * [`model`]: lifting problems against the generating sets, bounded gluing
//!   factorizations, numeric horn filling and elementary invariants.

pub mod cli;
pub mod error;
pub mod geometry;
pub mod model;
pub mod realization;
pub mod report;
pub mod simplicial;
pub mod verify;

pub use error::{Error, Result};
