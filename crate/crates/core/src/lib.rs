//! Exact combinatorics of parabolic gradings of complex simple Lie algebras.
//!
//! The crate computes, in exact arithmetic throughout:
//!
//! - root systems for all complex simple types in Bourbaki ordering
//!   ([`roots`]);
//! - parabolic crossing sets, the induced gradings, and marked-diagram module
//!   recipes ([`grading`], [`diagram`]);
//! - length-two Hasse words and the lowest weights of the harmonic-curvature
//!   components ([`kostant`]);
//! - the top-slot orthogonal cascade with its H-sequence and orbit counts
//!   ([`cascade`]);
//! - isotropy criteria, centralizers, Tanaka prolongation profiles, and
//!   classification sweeps ([`criteria`]);
//! - Chevalley structure constants and flat-model symmetry fields with their
//!   jet filtrations ([`chevalley`], [`flatjets`]).

pub mod cascade;
pub mod chevalley;
pub mod criteria;
pub mod diagram;
pub mod error;
pub mod flatjets;
pub mod grading;
pub mod kostant;
pub mod poly;
pub mod roots;

pub use error::{Error, Result};
