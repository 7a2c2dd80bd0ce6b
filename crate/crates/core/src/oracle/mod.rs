//! Ground truth from the arrangement itself: intersection lattice, Möbius
//! function, characteristic polynomial, supersolvability and freeness.

mod arrangement;
mod freeness;
mod lattice;
mod multipoly;
mod supersolvable;

use serde::{Deserialize, Serialize};

pub use arrangement::{realize, Arrangement, Hyperplane};
pub use freeness::{
    freeness_decide, freeness_decide_with, is_logarithmic, Derivation, FreenessCertificate, FreenessResult,
    FreenessStatus, GradedPiece, OracleLimits,
};
pub use lattice::{characteristic_polynomial, intersection_lattice, localization, Flat, IntersectionLattice};
pub use multipoly::MultiPoly;
pub use supersolvable::{is_supersolvable_lattice, SupersolvableResult};

#[cfg(test)]
pub(crate) use lattice::vector_rank;

use crate::error::OracleError;
use crate::poly::IntPoly;

/// Everything the oracle knows about one arrangement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub dimension: usize,
    pub hyperplanes: usize,
    pub flat_count: usize,
    pub rank: usize,
    pub characteristic_polynomial: IntPoly,
    pub supersolvable: SupersolvableResult,
    /// `None` when the instance is beyond the freeness limits.
    pub freeness: Option<FreenessResult>,
}

/// Runs the lattice computations and, within `limits`, the freeness test.
pub fn analyze(a: &Arrangement, limits: &OracleLimits) -> Result<OracleReport, OracleError> {
    let lattice = intersection_lattice(a)?;
    let supersolvable = supersolvable::supersolvable_in(&lattice);
    let freeness = if limits.admits(a) { Some(freeness_decide_with(a, limits)?) } else { None };
    Ok(OracleReport {
        dimension: a.dimension(),
        hyperplanes: a.len(),
        flat_count: lattice.flats.len(),
        rank: lattice.rank(),
        characteristic_polynomial: lattice.characteristic_polynomial(),
        supersolvable,
        freeness,
    })
}
