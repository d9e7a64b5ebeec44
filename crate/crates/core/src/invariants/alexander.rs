//! Alexander polynomial from the Fox derivatives of the Wirtinger
//! presentation.

use super::laurent::LaurentPoly;
use super::matrix::{poly_determinant, small};
use super::InvariantError;
use crate::diagram::PlanarDiagram;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// The abelianised Fox matrix: one row per crossing, one column per arc.
/// Entries are dense polynomials in `t`, constant term first.
pub fn fox_matrix(pd: &PlanarDiagram) -> Result<Vec<Vec<Vec<i64>>>, InvariantError> {
    let signs = super::require_valid_knot(pd)?;
    let m = pd.edge_count();
    // an arc runs from one undercrossing to the next: over edges are glued
    let mut parent: Vec<usize> = (0..m).collect();
    for x in pd.crossings() {
        let (a, b) = (x.slots[1] as usize - 1, x.slots[3] as usize - 1);
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let mut arc = vec![usize::MAX; m];
    let mut arcs = 0;
    for e in 0..m {
        let r = find(&mut parent, e);
        if arc[r] == usize::MAX {
            arc[r] = arcs;
            arcs += 1;
        }
    }
    let arc_of = |label: u32, parent: &mut [usize]| arc[find(parent, label as usize - 1)];
    let n = pd.crossing_count();
    if arcs != n {
        return Err(InvariantError::Inconsistent(format!(
            "{arcs} arcs for {n} crossings"
        )));
    }
    let mut rows = vec![vec![vec![0i64; 2]; n]; n];
    for (r, (x, &sign)) in pd.crossings().iter().zip(&signs).enumerate() {
        let over = arc_of(x.slots[1], &mut parent);
        let under_in = arc_of(x.slots[0], &mut parent);
        let under_out = arc_of(x.slots[2], &mut parent);
        let terms: [(usize, [i64; 2]); 3] = if sign > 0 {
            [(over, [1, -1]), (under_in, [0, 1]), (under_out, [-1, 0])]
        } else {
            [(over, [-1, 1]), (under_in, [1, 0]), (under_out, [0, -1])]
        };
        for (col, [c0, c1]) in terms {
            rows[r][col][0] += c0;
            rows[r][col][1] += c1;
        }
    }
    Ok(rows)
}

/// Determinant of the Fox matrix with `row` and `col` deleted, in
/// canonical form.
pub fn alexander_minor(
    pd: &PlanarDiagram,
    row: usize,
    col: usize,
) -> Result<LaurentPoly, InvariantError> {
    let fox = fox_matrix(pd)?;
    let n = fox.len();
    if row >= n || col >= n {
        return Err(InvariantError::Inconsistent(format!(
            "minor ({row}, {col}) outside a {n}x{n} matrix"
        )));
    }
    let minor: Vec<Vec<Vec<i64>>> = fox
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| {
            r.into_iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, p)| p)
                .collect()
        })
        .collect();
    let det: Vec<i64> = poly_determinant(&minor).iter().map(small).collect();
    Ok(LaurentPoly::from_coefficients(0, &det).canonical())
}

/// Alexander polynomial, canonical form.
pub fn alexander(pd: &PlanarDiagram) -> Result<LaurentPoly, InvariantError> {
    let n = pd.crossing_count();
    alexander_minor(pd, n - 1, n - 1)
}
