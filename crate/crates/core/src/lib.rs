//! Knot diagrams given as PD codes, their exact invariants, satellite and
//! 2-bridge constructions, and combinatorial certificates for branched
//! surfaces built from Seifert surfaces.
//!
//! The crate is organised bottom-up:
//!
//! - [`diagram`]: parsing, validation, orientation, faces and Reidemeister moves.
//! - [`seifert`]: Seifert circles, Seifert graph and surface genus.
//! - [`invariants`]: Alexander polynomial, determinant, signature.
//! - [`constructions`]: torus knots, 2-bridge knots, cables and twisted doubles.
//! - [`branched`]: branched-surface models and their certificates.
//! - [`knotdb`]: the bundled knot table and invariant-based identification.
//! - [`cli`]: the `knotlab` command-line front end.

pub mod branched;
pub mod cli;
pub mod constructions;
pub mod diagram;
pub mod invariants;
pub mod knotdb;
pub mod seifert;

pub use diagram::{Crossing, PlanarDiagram, ValidationReport};
pub use invariants::{InvariantTuple, LaurentPoly};
