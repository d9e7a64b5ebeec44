//! Planar knot diagrams encoded as PD codes.
//!
//! A crossing lists four edge labels counterclockwise, starting at the
//! incoming under-strand. Edge labels run `1..=2C` and increase by one along
//! the orientation of every component. Crossing signs are derived from the
//! labels, never stored: a crossing is positive when its over-strand runs
//! from slot 1 to slot 3.

mod faces;
mod graph;
mod moves;
mod pd;
mod validate;

pub use faces::{Checkerboard, Color, Corner, Face};
pub(crate) use graph::{NodeKind, Port, PortGraph};
pub use moves::{Move, Perturbation};
pub use pd::ParseError;
pub use validate::{Rule, RuleFailure, ValidationReport};

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("label arity: labels {0} must each appear exactly twice")]
    Arity(String),
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error("expected a knot diagram, found {0} components")]
    NotAKnot(usize),
    #[error("move not applicable: {0}")]
    InapplicableMove(String),
    #[error("diagram has a component without crossings")]
    CrossinglessComponent,
}

/// One crossing: four edge labels in counterclockwise order from the
/// incoming under-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub slots: [u32; 4],
}

impl Crossing {
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        Crossing { slots: [a, b, c, d] }
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.slots;
        write!(f, "X {a},{b},{c},{d}")
    }
}

/// A position in the diagram: crossing index and slot `0..4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotRef {
    pub crossing: usize,
    pub slot: u8,
}

impl SlotRef {
    pub(crate) fn new(crossing: usize, slot: u8) -> Self {
        SlotRef { crossing, slot }
    }

    pub(crate) fn opposite(self) -> Self {
        SlotRef::new(self.crossing, (self.slot + 2) % 4)
    }
}

/// Orientation data recovered by walking every component.
#[derive(Debug, Clone)]
pub(crate) struct Orientation {
    /// For each crossing and slot: true if the strand enters there.
    pub entering: Vec<[bool; 4]>,
    pub components: usize,
    /// Edge labels in traversal order, one list per component.
    pub walks: Vec<Vec<u32>>,
    /// Slots visited in traversal order (entry slots), one list per component.
    pub entries: Vec<Vec<SlotRef>>,
}

/// An oriented planar diagram with one or two components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    /// The two slots holding each edge label, indexed by `label - 1`.
    occurrences: Vec<[SlotRef; 2]>,
}

impl PlanarDiagram {
    /// Builds a diagram, checking only that every label in `1..=2C` is used
    /// exactly twice.
    pub fn from_crossings(crossings: Vec<Crossing>) -> Result<Self, DiagramError> {
        let edge_count = 2 * crossings.len();
        let mut seen: Vec<Vec<SlotRef>> = vec![Vec::new(); edge_count];
        let mut stray = Vec::new();
        for (i, x) in crossings.iter().enumerate() {
            for (s, &label) in x.slots.iter().enumerate() {
                let idx = label as usize;
                if idx == 0 || idx > edge_count {
                    stray.push(label);
                } else {
                    seen[idx - 1].push(SlotRef::new(i, s as u8));
                }
            }
        }
        let mut bad: Vec<u32> = stray;
        for (i, occ) in seen.iter().enumerate() {
            if occ.len() != 2 {
                bad.push(i as u32 + 1);
            }
        }
        if crossings.is_empty() {
            return Err(DiagramError::Invalid("diagram has no crossings".into()));
        }
        if !bad.is_empty() {
            bad.sort_unstable();
            bad.dedup();
            let list: Vec<String> = bad.iter().map(u32::to_string).collect();
            return Err(DiagramError::Arity(list.join(",")));
        }
        let occurrences = seen.into_iter().map(|v| [v[0], v[1]]).collect();
        Ok(PlanarDiagram { crossings, occurrences })
    }

    /// The one-crossing unknot `X 1,2,2,1`.
    pub fn unknot() -> Self {
        PlanarDiagram::from_crossings(vec![Crossing::new(1, 2, 2, 1)]).expect("static diagram")
    }

    /// The standard positive trefoil `X 1,4,2,5 / X 3,6,4,1 / X 5,2,6,3`.
    pub fn trefoil() -> Self {
        PlanarDiagram::from_crossings(vec![
            Crossing::new(1, 4, 2, 5),
            Crossing::new(3, 6, 4, 1),
            Crossing::new(5, 2, 6, 3),
        ])
        .expect("static diagram")
    }

    /// A standard figure-eight diagram.
    pub fn figure_eight() -> Self {
        PlanarDiagram::from_crossings(vec![
            Crossing::new(4, 2, 5, 1),
            Crossing::new(8, 6, 1, 5),
            Crossing::new(6, 3, 7, 4),
            Crossing::new(2, 7, 3, 8),
        ])
        .expect("static diagram")
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.occurrences.len()
    }

    pub(crate) fn label_at(&self, at: SlotRef) -> u32 {
        self.crossings[at.crossing].slots[at.slot as usize]
    }

    /// The other slot carrying the same edge as `at`.
    pub(crate) fn other_end(&self, at: SlotRef) -> SlotRef {
        let [p, q] = self.occurrences[self.label_at(at) as usize - 1];
        if p == at {
            q
        } else {
            p
        }
    }

    pub(crate) fn occurrences(&self, label: u32) -> [SlotRef; 2] {
        self.occurrences[label as usize - 1]
    }

    /// Walks every component. Each walk starts at an incoming under-slot when
    /// the component has one. The result records, for every slot, whether the
    /// walk enters the crossing there.
    pub(crate) fn orientation(&self) -> Orientation {
        let n = self.crossings.len();
        let mut entering = vec![[false; 4]; n];
        let mut visited = vec![[false; 4]; n];
        let mut walks = Vec::new();
        let mut entries = Vec::new();

        let starts = (0..n)
            .map(|c| SlotRef::new(c, 0))
            .chain((0..n).flat_map(|c| [1u8, 3].map(|s| SlotRef::new(c, s))));
        for start in starts {
            if visited[start.crossing][start.slot as usize] {
                continue;
            }
            let start = if start.slot == 0 {
                start
            } else {
                self.over_only_entry(start)
            };
            let mut walk = Vec::new();
            let mut entry_list = Vec::new();
            let mut at = start;
            loop {
                visited[at.crossing][at.slot as usize] = true;
                entering[at.crossing][at.slot as usize] = true;
                entry_list.push(at);
                let exit = at.opposite();
                visited[exit.crossing][exit.slot as usize] = true;
                let label = self.label_at(exit);
                walk.push(label);
                at = self.other_end(exit);
                if at == start {
                    break;
                }
            }
            walks.push(walk);
            entries.push(entry_list);
        }
        Orientation {
            entering,
            components: walks.len(),
            walks,
            entries,
        }
    }

    /// For a component passing only over other strands, pick the entry slot
    /// whose orientation makes labels increase.
    fn over_only_entry(&self, at: SlotRef) -> SlotRef {
        let here = self.label_at(at);
        let there = self.label_at(at.opposite());
        if there == self.successor_guess(here) {
            at
        } else {
            at.opposite()
        }
    }

    fn successor_guess(&self, label: u32) -> u32 {
        if label as usize == self.edge_count() {
            1
        } else {
            label + 1
        }
    }

    pub fn component_count(&self) -> usize {
        self.orientation().components
    }

    /// Crossing signs under the slot convention, requires consistent
    /// orientation (slot 0 entering at every crossing).
    pub(crate) fn signs_from(&self, orient: &Orientation) -> Vec<i32> {
        orient
            .entering
            .iter()
            .map(|e| if e[1] { 1 } else { -1 })
            .collect()
    }

    /// Fails unless the diagram validates and has exactly one component.
    pub fn require_knot(&self) -> Result<(), DiagramError> {
        let report = self.validate();
        if !report.ok {
            return Err(DiagramError::Invalid(report.summary()));
        }
        if report.components != 1 {
            return Err(DiagramError::NotAKnot(report.components));
        }
        Ok(())
    }

    /// Crossing signs (+1 / -1) of a validated diagram.
    pub fn signs(&self) -> Result<Vec<i32>, DiagramError> {
        let report = self.validate();
        if !report.ok {
            return Err(DiagramError::Invalid(report.summary()));
        }
        Ok(self.signs_from(&self.orientation()))
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> Result<i32, DiagramError> {
        Ok(self.signs()?.iter().sum())
    }

    /// Exchanges over and under at every crossing; each slot cycle is
    /// re-rooted at the new incoming under-strand. Labels are preserved.
    pub fn mirror(&self) -> Result<PlanarDiagram, DiagramError> {
        let report = self.validate();
        if !report.ok {
            return Err(DiagramError::Invalid(report.summary()));
        }
        let orient = self.orientation();
        let crossings = self
            .crossings
            .iter()
            .zip(&orient.entering)
            .map(|(x, e)| {
                let [a, b, c, d] = x.slots;
                if e[1] {
                    Crossing::new(b, c, d, a)
                } else {
                    Crossing::new(d, a, b, c)
                }
            })
            .collect();
        PlanarDiagram::from_crossings(crossings)
    }

    /// True iff the walk along every component alternates over and under.
    pub fn is_alternating(&self) -> Result<bool, DiagramError> {
        self.require_knot()?;
        let orient = self.orientation();
        let passes: Vec<bool> = orient.entries[0]
            .iter()
            .map(|at| at.slot % 2 == 1)
            .collect();
        let n = passes.len();
        Ok((0..n).all(|i| passes[i] != passes[(i + 1) % n]))
    }

    /// Gauss code: one `O<k><s>` / `U<k><s>` token per crossing pass, along
    /// the orientation starting at edge 1, crossings numbered from 1.
    pub fn gauss_code(&self) -> Result<String, DiagramError> {
        self.require_knot()?;
        let signs = self.signs()?;
        let orient = self.orientation();
        let entries = &orient.entries[0];
        let start = entries
            .iter()
            .position(|at| self.label_at(*at) == 1)
            .unwrap_or(0);
        let n = entries.len();
        let tokens: Vec<String> = (0..n)
            .map(|i| {
                let at = entries[(start + i) % n];
                let kind = if at.slot.is_multiple_of(2) { 'U' } else { 'O' };
                let s = if signs[at.crossing] > 0 { '+' } else { '-' };
                format!("{kind}{}{s}", at.crossing + 1)
            })
            .collect();
        Ok(tokens.join(" "))
    }

    /// Label-independent normal form for knot diagrams: the smallest
    /// relabeled crossing list over every choice of starting edge and
    /// orientation, crossings sorted. Two diagrams with equal normal forms
    /// are isomorphic as oriented-up-to-reversal planar diagrams.
    pub fn normal_form(&self) -> Result<Vec<Crossing>, DiagramError> {
        self.require_knot()?;
        let orient = self.orientation();
        let walk = &orient.walks[0];
        let n = walk.len() as u32;
        let mut position = vec![0u32; walk.len()];
        for (i, &label) in walk.iter().enumerate() {
            position[label as usize - 1] = i as u32;
        }
        let mut best: Option<Vec<Crossing>> = None;
        for shift in 0..n {
            for reverse in [false, true] {
                let relabel = |label: u32| -> u32 {
                    let p = position[label as usize - 1];
                    if reverse {
                        (n + shift - p) % n + 1
                    } else {
                        (p + n - shift) % n + 1
                    }
                };
                let mut list: Vec<Crossing> = self
                    .crossings
                    .iter()
                    .map(|x| {
                        let s = x.slots.map(relabel);
                        if reverse {
                            // the under-strand now enters at old slot 2
                            Crossing::new(s[2], s[3], s[0], s[1])
                        } else {
                            Crossing::new(s[0], s[1], s[2], s[3])
                        }
                    })
                    .collect();
                list.sort_unstable();
                if best.as_ref().is_none_or(|b| list < *b) {
                    best = Some(list);
                }
            }
        }
        Ok(best.expect("at least one crossing"))
    }

    /// Isomorphism test through [`PlanarDiagram::normal_form`].
    pub fn is_isomorphic(&self, other: &PlanarDiagram) -> Result<bool, DiagramError> {
        Ok(self.crossing_count() == other.crossing_count()
            && self.normal_form()? == other.normal_form()?)
    }

    /// Applies Reidemeister moves, either an explicit list or a seeded
    /// random walk.
    pub fn reidemeister_perturb(
        &self,
        perturbation: &Perturbation,
    ) -> Result<PlanarDiagram, DiagramError> {
        moves::perturb(self, perturbation)
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.crossings {
            writeln!(f, "{x}")?;
        }
        Ok(())
    }
}
