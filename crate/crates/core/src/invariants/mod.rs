//! Exact invariants of knot diagrams: the Alexander polynomial, the
//! determinant and the signature.

mod alexander;
mod goeritz;
mod laurent;
pub(crate) mod matrix;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{DiagramError, PlanarDiagram};

pub use alexander::{alexander, alexander_minor, fox_matrix};
pub use goeritz::{goeritz, Goeritz};
pub use laurent::LaurentPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

/// Validates and returns the crossing signs.
pub(crate) fn require_valid_knot(pd: &PlanarDiagram) -> Result<Vec<i32>, DiagramError> {
    let report = pd.validate();
    if !report.ok {
        return Err(DiagramError::Invalid(report.summary()));
    }
    pd.require_knot()?;
    pd.signs()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct InvariantTuple {
    pub alexander: LaurentPoly,
    pub determinant: u64,
    pub signature: i64,
    pub genus_lower_bound: u32,
}

impl InvariantTuple {
    /// The tuple of the mirror image.
    pub fn mirrored(&self) -> InvariantTuple {
        InvariantTuple {
            signature: -self.signature,
            ..self.clone()
        }
    }
}

/// `|det G|` for the reduced Goeritz matrix, checked against `|Δ(-1)|`.
pub fn determinant(pd: &PlanarDiagram) -> Result<u64, InvariantError> {
    let delta = alexander(pd)?;
    checked_determinant(&delta, &goeritz(pd)?)
}

fn checked_determinant(delta: &LaurentPoly, g: &Goeritz) -> Result<u64, InvariantError> {
    let from_alexander = delta.eval(-1).unsigned_abs();
    let from_goeritz = goeritz::goeritz_determinant(g);
    if from_alexander != from_goeritz as u128 {
        return Err(InvariantError::Inconsistent(format!(
            "|Δ(-1)| = {from_alexander} but the Goeritz determinant is {from_goeritz}"
        )));
    }
    Ok(from_goeritz)
}

/// Signature, normalised so that the positive trefoil has signature -2.
pub fn signature(pd: &PlanarDiagram) -> Result<i64, InvariantError> {
    Ok(goeritz::goeritz_signature(&goeritz(pd)?))
}

pub fn invariant_tuple(pd: &PlanarDiagram) -> Result<InvariantTuple, InvariantError> {
    let alexander = alexander(pd)?;
    let g = goeritz(pd)?;
    let determinant = checked_determinant(&alexander, &g)?;
    let signature = goeritz::goeritz_signature(&g);
    if signature % 2 != 0 {
        return Err(InvariantError::Inconsistent(format!("odd signature {signature}")));
    }
    if alexander.eval(1).abs() != 1 {
        return Err(InvariantError::Inconsistent(format!(
            "Δ(1) = {} for a knot",
            alexander.eval(1)
        )));
    }
    let genus_lower_bound = alexander.span() / 2;
    Ok(InvariantTuple {
        alexander,
        determinant,
        signature,
        genus_lower_bound,
    })
}

/// Invariant factors of the reduced Goeritz matrix other than 1: the
/// torsion of the first homology of the double branched cover.
pub fn goeritz_torsion(pd: &PlanarDiagram) -> Result<Vec<u64>, InvariantError> {
    let g = goeritz(pd)?;
    Ok(matrix::smith_invariants(&g.reduced())
        .iter()
        .map(|v| matrix::small(v).unsigned_abs())
        .collect())
}
