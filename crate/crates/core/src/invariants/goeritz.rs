//! Goeritz matrix of the white faces and the signature correction.

use super::matrix::{int_determinant, small, symmetric_signature};
use super::InvariantError;
use crate::diagram::{Color, PlanarDiagram};

/// Goeritz data of the checkerboard surface on the black faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Goeritz {
    /// Unreduced matrix indexed by white faces; rows sum to zero.
    pub full: Vec<Vec<i64>>,
    /// Correction term: sum of the crossing incidences over crossings
    /// whose oriented smoothing joins the black corners.
    pub correction: i64,
}

impl Goeritz {
    /// The matrix with the last white face deleted.
    pub fn reduced(&self) -> Vec<Vec<i64>> {
        let n = self.full.len().saturating_sub(1);
        self.full[..n].iter().map(|r| r[..n].to_vec()).collect()
    }
}

pub fn goeritz(pd: &PlanarDiagram) -> Result<Goeritz, InvariantError> {
    let signs = super::require_valid_knot(pd)?;
    let cb = pd.checkerboard()?;
    let mut white_index = vec![usize::MAX; cb.faces.len()];
    let mut whites = 0;
    for (f, &c) in cb.colors.iter().enumerate() {
        if c == Color::White {
            white_index[f] = whites;
            whites += 1;
        }
    }
    let mut full = vec![vec![0i64; whites]; whites];
    let mut correction = 0;
    for (x, &sign) in signs.iter().enumerate() {
        let even_white = cb.color_of(x, 0) == Color::White;
        let eta: i64 = if even_white { -1 } else { 1 };
        let w = if even_white { 0 } else { 1 };
        let a = white_index[cb.face_of[x][w]];
        let b = white_index[cb.face_of[x][w + 2]];
        if a != b {
            full[a][b] -= eta;
            full[b][a] -= eta;
            full[a][a] += eta;
            full[b][b] += eta;
        }
        // the oriented smoothing joins corners 0,2 at positive crossings
        let joined_even = sign > 0;
        if joined_even != even_white {
            correction += eta;
        }
    }
    Ok(Goeritz { full, correction })
}

pub(crate) fn goeritz_determinant(g: &Goeritz) -> u64 {
    small(&int_determinant(&g.reduced())).unsigned_abs()
}

pub(crate) fn goeritz_signature(g: &Goeritz) -> i64 {
    symmetric_signature(&g.reduced()) - g.correction
}
