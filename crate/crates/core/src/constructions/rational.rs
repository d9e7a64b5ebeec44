//! 4-plat diagrams built by twisting a rational tangle.

use super::{cf_to_fraction, ConstructionError};
use crate::diagram::{Port, PortGraph, PlanarDiagram};

/// Tangle crossing ports, counterclockwise from the north-east.
const NE: u8 = 0;
const NW: u8 = 1;
const SW: u8 = 2;
const SE: u8 = 3;

/// The four free ends of a tangle in a port graph.
struct Tangle {
    nw: Port,
    ne: Port,
    sw: Port,
    se: Port,
}

impl Tangle {
    /// `=`: two horizontal arcs.
    fn zero(g: &mut PortGraph) -> Tangle {
        let top = g.add_joint();
        let bottom = g.add_joint();
        Tangle {
            nw: Port::new(top, 0),
            ne: Port::new(top, 1),
            sw: Port::new(bottom, 0),
            se: Port::new(bottom, 1),
        }
    }

    /// `)(`: two vertical arcs.
    fn infinity(g: &mut PortGraph) -> Tangle {
        let left = g.add_joint();
        let right = g.add_joint();
        Tangle {
            nw: Port::new(left, 0),
            sw: Port::new(left, 1),
            ne: Port::new(right, 0),
            se: Port::new(right, 1),
        }
    }

    /// A positive crossing has the `\` strand on top, so its under-strand
    /// runs NE-SW on ports 0 and 2.
    fn crossing(g: &mut PortGraph, positive: bool) -> usize {
        g.add_crossing(positive)
    }

    fn twist_horizontal(&mut self, g: &mut PortGraph, positive: bool) {
        let x = Tangle::crossing(g, positive);
        g.connect(Port::new(x, NW), self.ne);
        g.connect(Port::new(x, SW), self.se);
        self.ne = Port::new(x, NE);
        self.se = Port::new(x, SE);
    }

    fn twist_vertical(&mut self, g: &mut PortGraph, positive: bool) {
        let x = Tangle::crossing(g, positive);
        g.connect(Port::new(x, NW), self.sw);
        g.connect(Port::new(x, NE), self.se);
        self.sw = Port::new(x, SW);
        self.se = Port::new(x, SE);
    }

    /// Numerator closure: NW to NE and SW to SE.
    fn close(self, g: &mut PortGraph) {
        g.connect(self.nw, self.ne);
        g.connect(self.sw, self.se);
    }
}

/// The 2-bridge knot whose continued fraction is `cf`; the last entry is a
/// horizontal twist region, the one before it vertical, and so on.
pub fn rational_knot(cf: &[i64]) -> Result<PlanarDiagram, ConstructionError> {
    let fraction = cf_to_fraction(cf)?;
    if !fraction.is_knot() {
        return Err(ConstructionError::Link(format!("continued fraction {cf:?} = {fraction}")));
    }
    let mut g = PortGraph::new();
    let n = cf.len();
    let horizontal = |i: usize| (n - 1 - i).is_multiple_of(2);
    let mut t = if horizontal(0) {
        Tangle::zero(&mut g)
    } else {
        Tangle::infinity(&mut g)
    };
    for (i, &a) in cf.iter().enumerate() {
        for _ in 0..a.unsigned_abs() {
            if horizontal(i) {
                t.twist_horizontal(&mut g, a > 0);
            } else {
                t.twist_vertical(&mut g, a > 0);
            }
        }
    }
    t.close(&mut g);
    Ok(g.finalize()?)
}

/// The closed 2-braid with `n` crossings of sign `sign(n)`; `n` odd.
pub fn torus_2n(n: i64) -> Result<PlanarDiagram, ConstructionError> {
    if n % 2 == 0 {
        return Err(ConstructionError::Link(format!("T(2,{n})")));
    }
    rational_knot(&[n])
}

/// The twist knot with `c` crossings, `rational_knot([2, c - 2])`.
pub fn twist_knot(c: i64) -> Result<PlanarDiagram, ConstructionError> {
    if c < 4 || c % 2 != 0 {
        return Err(ConstructionError::Parameter(format!(
            "twist knot crossing number must be even and at least 4, got {c}"
        )));
    }
    rational_knot(&[2, c - 2])
}
