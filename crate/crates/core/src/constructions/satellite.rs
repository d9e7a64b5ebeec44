//! Satellites built on the blackboard 2-parallel of a companion: 2-cables
//! and twisted Whitehead doubles.

use serde::Serialize;

use super::ConstructionError;
use crate::diagram::{NodeKind, Port, PortGraph, PlanarDiagram};

/// Ports of a grid crossing and of a clasp crossing.
const E: u8 = 0;
const N: u8 = 1;
const W: u8 = 2;
const S: u8 = 3;

/// The 2-parallel of a companion with one edge left open.
struct Ribbon {
    g: PortGraph,
    /// Free ends leaving the start of the cut edge, west then east when
    /// facing along the edge.
    bottom: (Port, Port),
    /// Free ends arriving at the end of the cut edge, west then east.
    top: (Port, Port),
}

/// For each companion crossing, the two ribbon ports at each of its ports:
/// `(left, right)` as seen looking outward.
fn ribbon(companion: &PlanarDiagram) -> Result<Ribbon, ConstructionError> {
    companion.require_knot()?;
    let report = companion.validate();
    if !report.ok {
        return Err(crate::diagram::DiagramError::Invalid(report.summary()).into());
    }
    let base = PortGraph::from_diagram(companion);
    let mut g = PortGraph::new();
    let mut sides: Vec<[(Port, Port); 4]> = Vec::new();
    for x in base.crossing_nodes() {
        let NodeKind::Crossing { under_even } = base.kind(x) else {
            unreachable!()
        };
        // companion ports at compass positions S, E, N, W; the under-strand runs S-N
        let r = if under_even { 0 } else { 1 };
        let at = |k: u8| ((k + r) % 4) as usize;
        // grid: vertical copies aw, ae pass under horizontal copies bs, bn
        let ws = g.add_crossing(false);
        let es = g.add_crossing(false);
        let wn = g.add_crossing(false);
        let en = g.add_crossing(false);
        g.connect(Port::new(ws, N), Port::new(wn, S));
        g.connect(Port::new(es, N), Port::new(en, S));
        g.connect(Port::new(ws, E), Port::new(es, W));
        g.connect(Port::new(wn, E), Port::new(en, W));
        let mut s = [(Port::new(0, 0), Port::new(0, 0)); 4];
        s[at(0)] = (Port::new(es, S), Port::new(ws, S));
        s[at(1)] = (Port::new(en, E), Port::new(es, E));
        s[at(2)] = (Port::new(wn, N), Port::new(en, N));
        s[at(3)] = (Port::new(ws, W), Port::new(wn, W));
        sides.push(s);
    }
    // cut the edge labelled 1
    let cut = Port::new(0, 0);
    let cut_end = base.partner(cut);
    let mut done = vec![[false; 4]; sides.len()];
    for x in 0..sides.len() {
        for k in 0..4u8 {
            let p = Port::new(x, k);
            let q = base.partner(p);
            if done[x][k as usize] || p == cut || p == cut_end {
                continue;
            }
            done[x][k as usize] = true;
            done[q.node][q.port as usize] = true;
            let (pl, pr) = sides[p.node][p.port as usize];
            let (ql, qr) = sides[q.node][q.port as usize];
            g.connect(pl, qr);
            g.connect(pr, ql);
        }
    }
    let (bl, br) = sides[cut.node][cut.port as usize];
    let (tl, tr) = sides[cut_end.node][cut_end.port as usize];
    Ok(Ribbon {
        g,
        bottom: (bl, br),
        top: (tr, tl),
    })
}

/// Appends `k` half-twists to a pair of parallel ends; positive twists are
/// right-handed.
fn add_twists(g: &mut PortGraph, ends: (Port, Port), k: i64) -> (Port, Port) {
    // twist crossing ports counterclockwise: SE 0, NE 1, NW 2, SW 3
    let (mut west, mut east) = ends;
    for _ in 0..k.unsigned_abs() {
        let t = g.add_crossing(k > 0);
        g.connect(west, Port::new(t, 3));
        g.connect(east, Port::new(t, 0));
        west = Port::new(t, 2);
        east = Port::new(t, 1);
    }
    (west, east)
}

/// The (2, f)-cable: two parallel copies with total twisting `f`, measured
/// against the Seifert framing. `f` must be odd.
pub fn cable2(companion: &PlanarDiagram, f: i64) -> Result<PlanarDiagram, ConstructionError> {
    if f % 2 == 0 {
        return Err(ConstructionError::Link(format!("(2,{f}) cable")));
    }
    let w = companion.writhe()? as i64;
    let mut r = ribbon(companion)?;
    let (west, east) = add_twists(&mut r.g, r.bottom, f - 2 * w);
    r.g.connect(west, r.top.0);
    r.g.connect(east, r.top.1);
    Ok(r.g.finalize()?)
}

/// Parameters of a twisted Whitehead double.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleSpec {
    pub companion: PlanarDiagram,
    /// Signed half-twists added to the blackboard 2-parallel.
    pub twists: i64,
    /// Sign of both clasp crossings, `+1` or `-1`.
    pub clasp: i8,
}

fn build_double(spec: &DoubleSpec, cap_over_west: bool) -> Result<PlanarDiagram, ConstructionError> {
    let mut r = ribbon(&spec.companion)?;
    let (west, east) = add_twists(&mut r.g, r.bottom, spec.twists);
    let g = &mut r.g;
    // a cap joins the lower ends and runs across the two legs of a cup
    // hanging from the upper ends
    let c1 = g.add_crossing(!cap_over_west);
    let c2 = g.add_crossing(cap_over_west);
    g.connect(west, Port::new(c1, W));
    g.connect(Port::new(c1, E), Port::new(c2, W));
    g.connect(Port::new(c2, E), east);
    g.connect(r.top.0, Port::new(c1, N));
    g.connect(Port::new(c1, S), Port::new(c2, S));
    g.connect(Port::new(c2, N), r.top.1);
    Ok(g.finalize()?)
}

/// Blackboard 2-parallel, `twists` extra half-twists and a clasp of the
/// requested sign. The clasp crossings are the last two of the output.
pub fn whitehead_double(spec: &DoubleSpec) -> Result<PlanarDiagram, ConstructionError> {
    if spec.clasp != 1 && spec.clasp != -1 {
        return Err(ConstructionError::Parameter(format!(
            "clasp must be +1 or -1, got {}",
            spec.clasp
        )));
    }
    let first = build_double(spec, true)?;
    let signs = first.signs()?;
    if signs[signs.len() - 1] == spec.clasp as i32 {
        return Ok(first);
    }
    build_double(spec, false)
}

/// A double whose total twisting is `half_twists` half-twists relative to
/// the Seifert framing, independent of the companion diagram's writhe.
pub fn whitehead_double_framed(
    companion: &PlanarDiagram,
    half_twists: i64,
    clasp: i8,
) -> Result<PlanarDiagram, ConstructionError> {
    let w = companion.writhe()? as i64;
    whitehead_double(&DoubleSpec {
        companion: companion.clone(),
        twists: half_twists - 2 * w,
        clasp,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub n: u32,
    #[serde(skip)]
    pub diagram: PlanarDiagram,
    /// Table name of the expected knot, `(2n+6)_1`.
    pub expected_name: String,
}

/// The `n`-th member of the twist-knot family: the positive-clasp double
/// of the unknot whose twisting comes from the (2, 2n+1) torus knot,
/// `n + 2` full twists in all.
pub fn paper_family(n: u32) -> Result<FamilyMember, ConstructionError> {
    let kink = PlanarDiagram::unknot();
    let diagram = whitehead_double_framed(&kink, 2 * (n as i64 + 2), 1)?;
    Ok(FamilyMember {
        n,
        diagram,
        expected_name: format!("{}_1", 2 * n + 6),
    })
}
