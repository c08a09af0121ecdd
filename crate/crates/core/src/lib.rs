//! Resonance varieties of rank-three matroids over finite fields, `Z/N`
//! and `Q`: Orlik-Solomon pair tests, neighborly graphs and their
//! combinatorial components, directrix line geometry and Schubert degrees.

pub mod catalog;
pub mod error;
pub mod linegeom;
pub mod matroid;
pub mod neighborly;
pub mod notation;
pub mod oracle;
pub mod osalg;
pub mod rings;
pub mod schubert;

pub use error::{Error, Result};
