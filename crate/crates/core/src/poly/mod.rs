//! Exact integer polynomials and the chromatic polynomial of a signed graph.

mod chromatic;
pub(crate) mod coefficient;
mod intpoly;

pub use chromatic::{chromatic_polynomial, count_proper_colorings, gluing_check};
pub use intpoly::{IntPoly, PolyError};
