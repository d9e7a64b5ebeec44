//! Seifert's algorithm: circles from the oriented smoothing, the Seifert
//! graph and the genus of the resulting surface.

#![allow(clippy::needless_range_loop)]

use serde::Serialize;

use crate::diagram::{DiagramError, PlanarDiagram};
use crate::invariants::{self, InvariantError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertDecomposition {
    pub circle_count: usize,
    /// Circle index of each edge, indexed by `label - 1`.
    pub circle_membership: Vec<usize>,
    /// One edge per crossing, joining the two circles that meet there.
    pub seifert_graph: Vec<(usize, usize)>,
    pub genus: u32,
}

impl SeifertDecomposition {
    pub fn circle_of(&self, label: u32) -> usize {
        self.circle_membership[label as usize - 1]
    }

    pub fn graph_is_connected(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.circle_count).collect();
        for &(a, b) in &self.seifert_graph {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        (0..self.circle_count).filter(|&i| find(&mut parent, i) == i).count() == 1
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Smooths every crossing along the orientation and counts the circles.
pub fn seifert_circles(pd: &PlanarDiagram) -> Result<SeifertDecomposition, DiagramError> {
    pd.require_knot()?;
    let orient = pd.orientation();
    let m = pd.edge_count();
    let mut parent: Vec<usize> = (0..m).collect();
    for (x, entering) in pd.crossings().iter().zip(&orient.entering) {
        let s = x.slots.map(|l| l as usize - 1);
        // outgoing over slot is whichever of 1 and 3 is not entering
        let (over_in, over_out) = if entering[1] { (1, 3) } else { (3, 1) };
        for (a, b) in [(s[0], s[over_out]), (s[over_in], s[2])] {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let mut index = vec![usize::MAX; m];
    let mut count = 0;
    let mut membership = vec![0; m];
    for e in 0..m {
        let r = find(&mut parent, e);
        if index[r] == usize::MAX {
            index[r] = count;
            count += 1;
        }
        membership[e] = index[r];
    }
    let graph = pd
        .crossings()
        .iter()
        .map(|x| {
            (
                membership[x.slots[0] as usize - 1],
                membership[x.slots[2] as usize - 1],
            )
        })
        .collect();
    let c = pd.crossing_count();
    let twice = c + 1 - count;
    if !twice.is_multiple_of(2) {
        return Err(DiagramError::Invalid(format!(
            "{c} crossings and {count} Seifert circles give a non-integral genus"
        )));
    }
    Ok(SeifertDecomposition {
        circle_count: count,
        circle_membership: membership,
        seifert_graph: graph,
        genus: (twice / 2) as u32,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateMethod {
    Alternating,
    SpanEquality,
    None,
}

impl CertificateMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            CertificateMethod::Alternating => "alternating",
            CertificateMethod::SpanEquality => "span-equality",
            CertificateMethod::None => "none",
        }
    }
}

/// Evidence that the Seifert surface of a particular diagram is of least
/// genus, hence incompressible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncompressibilityCertificate {
    /// Strongest available method: alternating, then span equality.
    pub method: CertificateMethod,
    pub alternating: bool,
    pub span_equality: bool,
    pub seifert_genus: u32,
    pub span_half: u32,
}

impl IncompressibilityCertificate {
    pub fn certified(&self) -> bool {
        self.method != CertificateMethod::None
    }
}

pub fn incompressibility_certificate(
    pd: &PlanarDiagram,
) -> Result<IncompressibilityCertificate, InvariantError> {
    let decomposition = seifert_circles(pd)?;
    let span_half = invariants::alexander(pd)?.span() / 2;
    let alternating = pd.is_alternating()?;
    let span_equality = decomposition.genus == span_half;
    let method = if alternating {
        CertificateMethod::Alternating
    } else if span_equality {
        CertificateMethod::SpanEquality
    } else {
        CertificateMethod::None
    };
    Ok(IncompressibilityCertificate {
        method,
        alternating,
        span_equality,
        seifert_genus: decomposition.genus,
        span_half,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_two_circles() {
        let d = seifert_circles(&PlanarDiagram::trefoil()).unwrap();
        assert_eq!((d.circle_count, d.genus), (2, 1));
        assert_eq!(d.seifert_graph.len(), 3);
        assert!(d.graph_is_connected());
    }

    #[test]
    fn kink_genus_zero() {
        let d = seifert_circles(&PlanarDiagram::unknot()).unwrap();
        assert_eq!((d.circle_count, d.genus), (2, 0));
    }

    #[test]
    fn figure_eight_three_circles() {
        let d = seifert_circles(&PlanarDiagram::figure_eight()).unwrap();
        assert_eq!((d.circle_count, d.genus), (3, 1));
    }

    #[test]
    fn certificates() {
        let c = incompressibility_certificate(&PlanarDiagram::trefoil()).unwrap();
        assert_eq!(c.method, CertificateMethod::Alternating);
        assert!(c.alternating && c.span_equality);
        let c = incompressibility_certificate(&PlanarDiagram::figure_eight()).unwrap();
        assert_eq!((c.seifert_genus, c.span_half), (1, 1));
    }
}
