//! Reidemeister moves on PD codes, applied through the port graph.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::graph::{Port, PortGraph};
use super::{DiagramError, PlanarDiagram};

/// A single move. Crossings are 0-based indices into the current PD list,
/// edges are PD labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    /// Adds a kink on `edge`; `variant` in `0..4` picks the side of the
    /// loop and which strand is on top.
    R1Add { edge: u32, variant: u8 },
    /// Removes a kink whose loop sits at `crossing`.
    R1Remove { crossing: usize },
    /// Pushes edge `over` across edge `under` inside a face they share,
    /// creating two crossings.
    R2Add { over: u32, under: u32 },
    /// Removes the bigon between two crossings.
    R2Remove { first: usize, second: usize },
    /// Slides a strand across the crossing opposite to it in the triangle
    /// formed by three crossings.
    R3 { crossings: [usize; 3] },
}

/// How to perturb a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Perturbation {
    Moves(Vec<Move>),
    /// `steps` random moves drawn from a ChaCha stream seeded with `seed`.
    Seeded { seed: u64, steps: usize },
}

fn inapplicable(msg: impl Into<String>) -> DiagramError {
    DiagramError::InapplicableMove(msg.into())
}

/// Builder-level edits.
#[derive(Debug, Clone)]
enum Edit {
    R1Add { a: Port, variant: u8 },
    Smooth(Vec<usize>),
    R2Add { p1: Port, q1: Port, p2: Port, q2: Port, first_over: bool },
    R3 { corners: [Port; 3] },
}

fn kink_corner(g: &PortGraph, x: usize) -> Option<u8> {
    (0..4u8).find(|&k| g.partner(Port::new(x, k)) == Port::new(x, (k + 1) % 4))
}

/// A bigon face as its two corners, if it is removable by R2.
fn bigon(g: &PortGraph, face: &[(Port, Port)]) -> Option<(usize, usize)> {
    if face.len() != 2 {
        return None;
    }
    let (from_a, to_b) = face[0];
    let (a, b) = (from_a.node, to_b.node);
    if a == b {
        return None;
    }
    (g.is_over(from_a) == g.is_over(to_b)).then_some((a, b))
}

/// A triangle face with one strand on top and one at the bottom. Returns
/// the corner of each crossing as the port preceding the outgoing step.
fn triangle(g: &PortGraph, face: &[(Port, Port)]) -> Option<[Port; 3]> {
    if face.len() != 3 {
        return None;
    }
    let nodes = [face[0].0.node, face[1].0.node, face[2].0.node];
    if nodes[0] == nodes[1] || nodes[1] == nodes[2] || nodes[0] == nodes[2] {
        return None;
    }
    // strand i runs along step i: it leaves at face[i].0 and arrives at face[i].1
    let layer: Vec<(bool, bool)> = face
        .iter()
        .map(|&(from, to)| (g.is_over(from), g.is_over(to)))
        .collect();
    let top = layer.iter().any(|&(x, y)| x && y);
    let bottom = layer.iter().any(|&(x, y)| !x && !y);
    if !(top && bottom) {
        return None;
    }
    Some([0, 1, 2].map(|i| face[i].0.turn(3)))
}

fn apply(g: &mut PortGraph, edit: &Edit) -> Result<(), DiagramError> {
    match *edit {
        Edit::R1Add { a, variant } => {
            let b = g.partner(a);
            let x = g.add_crossing(variant & 2 == 0);
            let (loop_from, loop_to, out) = if variant & 1 == 0 { (2, 1, 3) } else { (2, 3, 1) };
            g.connect(a, Port::new(x, 0));
            g.connect(Port::new(x, loop_from), Port::new(x, loop_to));
            g.connect(Port::new(x, out), b);
        }
        Edit::Smooth(ref nodes) => {
            for &n in nodes {
                g.smooth_straight(n);
            }
        }
        Edit::R2Add { p1, q1, p2, q2, first_over } => {
            if [p1, q1].contains(&p2) || [p1, q1].contains(&q2) {
                return Err(inapplicable("R2 needs two distinct edges"));
            }
            // ports: E 0, N 1, W 2, S 3; the first strand uses N and S
            let x = g.add_crossing(first_over);
            let y = g.add_crossing(first_over);
            g.connect(Port::new(x, 1), p1);
            g.connect(Port::new(x, 2), q2);
            g.connect(Port::new(x, 0), Port::new(y, 2));
            g.connect(Port::new(x, 3), Port::new(y, 3));
            g.connect(Port::new(y, 0), p2);
            g.connect(Port::new(y, 1), q1);
        }
        Edit::R3 { corners } => {
            // ports k and k+1 at corner k are internal, the other two face outward
            let inner = |p: Port| corners.iter().any(|c| c.node == p.node);
            let mut rewire = Vec::new();
            for c in corners {
                for e in [c.turn(2), c.turn(3)] {
                    // the strand through e leaves the triangle again at `far`
                    let inside = e.turn(2);
                    let far = g.through(g.partner(inside));
                    let target = g.partner(far);
                    if inner(g.partner(e)) || inner(target) {
                        return Err(inapplicable("triangle is attached to itself"));
                    }
                    rewire.push((e, target));
                }
            }
            for (e, target) in rewire {
                g.connect(e, target);
            }
        }
    }
    Ok(())
}

fn port_of(pd: &PlanarDiagram, label: u32) -> Result<(Port, Port), DiagramError> {
    if label == 0 || label as usize > pd.edge_count() {
        return Err(inapplicable(format!("no edge {label}")));
    }
    let [p, q] = pd.occurrences(label);
    Ok((
        Port::new(p.crossing, (4 - p.slot) % 4),
        Port::new(q.crossing, (4 - q.slot) % 4),
    ))
}

fn check_crossing(pd: &PlanarDiagram, c: usize) -> Result<(), DiagramError> {
    if c >= pd.crossing_count() {
        return Err(inapplicable(format!("no crossing {c}")));
    }
    Ok(())
}

fn translate(pd: &PlanarDiagram, g: &PortGraph, mv: &Move) -> Result<Edit, DiagramError> {
    match *mv {
        Move::R1Add { edge, variant } => {
            if variant > 3 {
                return Err(inapplicable("R1 variant must be 0..4"));
            }
            let (a, _) = port_of(pd, edge)?;
            Ok(Edit::R1Add { a, variant })
        }
        Move::R1Remove { crossing } => {
            check_crossing(pd, crossing)?;
            kink_corner(g, crossing)
                .map(|_| Edit::Smooth(vec![crossing]))
                .ok_or_else(|| inapplicable(format!("crossing {crossing} is not a kink")))
        }
        Move::R2Add { over, under } => {
            let e1 = port_of(pd, over)?;
            let e2 = port_of(pd, under)?;
            if over == under {
                return Err(inapplicable("R2 needs two distinct edges"));
            }
            let along = |step: &(Port, Port), e: (Port, Port)| {
                (step.0, step.1) == e || (step.1, step.0) == e
            };
            for face in g.face_steps() {
                let s1 = face.iter().find(|s| along(s, e1));
                let s2 = face.iter().find(|s| along(s, e2));
                if let (Some(&(p1, q1)), Some(&(p2, q2))) = (s1, s2) {
                    return Ok(Edit::R2Add { p1, q1, p2, q2, first_over: true });
                }
            }
            Err(inapplicable(format!("edges {over} and {under} share no face")))
        }
        Move::R2Remove { first, second } => {
            check_crossing(pd, first)?;
            check_crossing(pd, second)?;
            g.face_steps()
                .iter()
                .filter_map(|f| bigon(g, f))
                .find(|&(a, b)| (a, b) == (first, second) || (b, a) == (first, second))
                .map(|_| Edit::Smooth(vec![first, second]))
                .ok_or_else(|| inapplicable(format!("no removable bigon at {first}, {second}")))
        }
        Move::R3 { crossings } => {
            for c in crossings {
                check_crossing(pd, c)?;
            }
            let mut want = crossings;
            want.sort_unstable();
            g.face_steps()
                .iter()
                .filter_map(|f| triangle(g, f))
                .find(|corners| {
                    let mut have = corners.map(|c| c.node);
                    have.sort_unstable();
                    have == want
                })
                .map(|corners| Edit::R3 { corners })
                .ok_or_else(|| inapplicable(format!("no R3 triangle at {crossings:?}")))
        }
    }
}

fn step(pd: &PlanarDiagram, mv: &Move) -> Result<PlanarDiagram, DiagramError> {
    let mut g = PortGraph::from_diagram(pd);
    let edit = translate(pd, &g, mv)?;
    apply(&mut g, &edit)?;
    g.finalize()
}

/// Draws one applicable edit at random.
fn random_edit(g: &PortGraph, rng: &mut ChaCha8Rng, may_grow: bool) -> Option<Edit> {
    let faces = g.face_steps();
    let crossings: Vec<usize> = g.crossing_nodes().collect();
    let mut options: Vec<(u32, Edit)> = Vec::new();
    if crossings.len() > 1 {
        for &x in &crossings {
            if kink_corner(g, x).is_some() {
                options.push((3, Edit::Smooth(vec![x])));
            }
        }
    }
    for face in &faces {
        if let Some((a, b)) = bigon(g, face) {
            if crossings.len() > 2 {
                options.push((3, Edit::Smooth(vec![a, b])));
            }
        }
        if let Some(corners) = triangle(g, face) {
            options.push((4, Edit::R3 { corners }));
        }
    }
    if may_grow {
        let x = *crossings.choose(rng)?;
        let a = Port::new(x, rng.gen_range(0..4));
        options.push((2, Edit::R1Add { a, variant: rng.gen_range(0..4) }));
        let big: Vec<&Vec<(Port, Port)>> = faces.iter().filter(|f| f.len() >= 2).collect();
        if let Some(face) = big.choose(rng) {
            let i = rng.gen_range(0..face.len());
            let mut j = rng.gen_range(0..face.len() - 1);
            if j >= i {
                j += 1;
            }
            let ((p1, q1), (p2, q2)) = (face[i], face[j]);
            options.push((2, Edit::R2Add { p1, q1, p2, q2, first_over: rng.gen() }));
        }
    }
    let total: u32 = options.iter().map(|o| o.0).sum();
    if total == 0 {
        return None;
    }
    let mut pick = rng.gen_range(0..total);
    for (w, edit) in options {
        if pick < w {
            return Some(edit);
        }
        pick -= w;
    }
    None
}

pub(crate) fn perturb(
    pd: &PlanarDiagram,
    perturbation: &Perturbation,
) -> Result<PlanarDiagram, DiagramError> {
    let report = pd.validate();
    if !report.ok {
        return Err(DiagramError::Invalid(report.summary()));
    }
    match perturbation {
        Perturbation::Moves(moves) => moves.iter().try_fold(pd.clone(), |d, mv| step(&d, mv)),
        Perturbation::Seeded { seed, steps } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let cap = pd.crossing_count() + 8;
            let mut current = pd.clone();
            let mut done = 0;
            let mut attempts = 0;
            while done < *steps && attempts < 20 * (*steps + 1) {
                attempts += 1;
                let mut g = PortGraph::from_diagram(&current);
                let may_grow = current.crossing_count() + 2 <= cap;
                let Some(edit) = random_edit(&g, &mut rng, may_grow) else {
                    continue;
                };
                if apply(&mut g, &edit).is_err() {
                    continue;
                }
                if let Ok(next) = g.finalize() {
                    if next.validate().ok {
                        current = next;
                        done += 1;
                    }
                }
            }
            Ok(current)
        }
    }
}
