//! Port graphs: the mutable form of a diagram used by constructions and
//! Reidemeister moves.
//!
//! Ports of a crossing are numbered counterclockwise in the plane. A PD code
//! lists its slots in the opposite rotational sense, so slot `s` of an
//! imported crossing lands on port `(4 - s) % 4`. With that choice a PD
//! crossing is positive exactly when it is right-handed in the port picture.
//! Joints are two-port pass-through vertices; they disappear on
//! [`PortGraph::finalize`].

use super::{Crossing, DiagramError, PlanarDiagram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Port {
    pub node: usize,
    pub port: u8,
}

impl Port {
    pub fn new(node: usize, port: u8) -> Self {
        Port { node, port }
    }

    /// The next port counterclockwise on a crossing.
    pub fn turn(self, by: u8) -> Port {
        Port::new(self.node, (self.port + by) % 4)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum NodeKind {
    /// `under_even`: the under-strand uses ports 0 and 2.
    Crossing { under_even: bool },
    Joint,
    /// A crossing that was smoothed away.
    Removed,
}

#[derive(Debug, Clone, Default)]
pub(crate) struct PortGraph {
    kinds: Vec<NodeKind>,
    links: Vec<[Option<Port>; 4]>,
}

impl PortGraph {
    pub fn new() -> Self {
        PortGraph::default()
    }

    pub fn add_crossing(&mut self, under_even: bool) -> usize {
        self.kinds.push(NodeKind::Crossing { under_even });
        self.links.push([None; 4]);
        self.kinds.len() - 1
    }

    pub fn add_joint(&mut self) -> usize {
        self.kinds.push(NodeKind::Joint);
        self.links.push([None; 4]);
        self.kinds.len() - 1
    }


    pub fn kind(&self, node: usize) -> NodeKind {
        self.kinds[node]
    }

    pub fn is_crossing(&self, node: usize) -> bool {
        matches!(self.kinds[node], NodeKind::Crossing { .. })
    }

    pub fn crossing_nodes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.kinds.len()).filter(|&n| self.is_crossing(n))
    }



    /// True if `p` lies on the over-strand of its crossing.
    pub fn is_over(&self, p: Port) -> bool {
        match self.kinds[p.node] {
            NodeKind::Crossing { under_even } => p.port.is_multiple_of(2) != under_even,
            _ => false,
        }
    }

    pub fn connect(&mut self, a: Port, b: Port) {
        debug_assert!(a != b, "a port cannot link to itself");
        self.links[a.node][a.port as usize] = Some(b);
        self.links[b.node][b.port as usize] = Some(a);
    }

    pub fn partner(&self, p: Port) -> Port {
        self.links[p.node][p.port as usize].expect("port is linked")
    }

    /// The port where a strand entering at `p` leaves the node.
    pub fn through(&self, p: Port) -> Port {
        match self.kinds[p.node] {
            NodeKind::Crossing { .. } => p.turn(2),
            _ => Port::new(p.node, 1 - p.port),
        }
    }

    /// Replaces a crossing by two joints so that its strands pass straight
    /// through without crossing.
    pub fn smooth_straight(&mut self, node: usize) {
        let partners = self.links[node];
        let j1 = self.add_joint();
        let j2 = self.add_joint();
        let targets = [
            Port::new(j1, 0),
            Port::new(j2, 0),
            Port::new(j1, 1),
            Port::new(j2, 1),
        ];
        let resolve = |p: Port| -> Port {
            if p.node == node {
                targets[p.port as usize]
            } else {
                p
            }
        };
        for (k, partner) in partners.iter().enumerate() {
            let partner = partner.expect("crossing fully linked");
            let here = targets[k];
            let there = resolve(partner);
            self.connect(here, there);
        }
        self.kinds[node] = NodeKind::Removed;
        self.links[node] = [None; 4];
    }

    /// Imports a PD code, keeping crossing order.
    pub fn from_diagram(pd: &PlanarDiagram) -> PortGraph {
        let mut g = PortGraph::new();
        for _ in pd.crossings() {
            g.add_crossing(true);
        }
        for label in 1..=pd.edge_count() as u32 {
            let [p, q] = pd.occurrences(label);
            g.connect(
                Port::new(p.crossing, (4 - p.slot) % 4),
                Port::new(q.crossing, (4 - q.slot) % 4),
            );
        }
        g
    }

    /// Follows the link from crossing port `p` through any joints to the
    /// crossing port at the other end of the edge.
    fn edge_end(&self, p: Port) -> Port {
        let mut at = self.partner(p);
        while !self.is_crossing(at.node) {
            at = self.partner(self.through(at));
        }
        at
    }

    /// Removes the joints, orients and labels every component and emits a
    /// PD code. Crossings keep their relative node order.
    pub fn finalize(&self) -> Result<PlanarDiagram, DiagramError> {
        let crossings: Vec<usize> = self.crossing_nodes().collect();
        if crossings.is_empty() {
            return Err(DiagramError::CrossinglessComponent);
        }
        for (node, links) in self.links.iter().enumerate() {
            let ports = match self.kinds[node] {
                NodeKind::Crossing { .. } => 4,
                NodeKind::Joint => 2,
                NodeKind::Removed => 0,
            };
            if links[..ports].iter().any(Option::is_none) {
                return Err(DiagramError::Invalid(format!("node {node} has a free port")));
            }
        }
        let mut rank = vec![usize::MAX; self.kinds.len()];
        for (i, &c) in crossings.iter().enumerate() {
            rank[c] = i;
        }
        let mut label = vec![[0u32; 4]; crossings.len()];
        let mut entering = vec![[false; 4]; crossings.len()];
        let mut visited = vec![[false; 4]; crossings.len()];
        let mut next_label = 0u32;

        loop {
            // first unvisited strand in node order, under before over
            let start = crossings
                .iter()
                .flat_map(|&c| {
                    let NodeKind::Crossing { under_even } = self.kinds[c] else {
                        unreachable!()
                    };
                    let u = if under_even { 0 } else { 1 };
                    [Port::new(c, u), Port::new(c, (u + 1) % 4)]
                })
                .find(|p| !visited[rank[p.node]][p.port as usize]);
            let Some(start) = start else { break };
            let mut steps: Vec<(Port, Port)> = Vec::new();
            let mut at = start;
            loop {
                let exit = at.turn(2);
                visited[rank[at.node]][at.port as usize] = true;
                visited[rank[exit.node]][exit.port as usize] = true;
                let arrive = self.edge_end(exit);
                steps.push((exit, arrive));
                at = arrive;
                if at == start {
                    break;
                }
            }
            let len = steps.len() as u32;
            for (i, (exit, arrive)) in steps.iter().enumerate() {
                // the edge entering the start port gets the first label
                let l = next_label + (i as u32 + 1) % len + 1;
                label[rank[exit.node]][exit.port as usize] = l;
                label[rank[arrive.node]][arrive.port as usize] = l;
                entering[rank[arrive.node]][arrive.port as usize] = true;
            }
            next_label += len;
        }

        // any joint not reached lies on a loop without crossings
        let mut reached = vec![false; self.kinds.len()];
        for &c in &crossings {
            for k in 0..4 {
                let mut at = self.partner(Port::new(c, k));
                while !self.is_crossing(at.node) {
                    reached[at.node] = true;
                    at = self.partner(self.through(at));
                }
            }
        }
        if (0..self.kinds.len()).any(|n| self.kinds[n] == NodeKind::Joint && !reached[n]) {
            return Err(DiagramError::CrossinglessComponent);
        }

        let pd = crossings
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let NodeKind::Crossing { under_even } = self.kinds[c] else {
                    unreachable!()
                };
                let u = if under_even { 0u8 } else { 1 };
                let u_in = if entering[i][u as usize] { u } else { u + 2 };
                let slot = |k: u8| label[i][((u_in + 4 - k) % 4) as usize];
                Crossing::new(slot(0), slot(1), slot(2), slot(3))
            })
            .collect();
        PlanarDiagram::from_crossings(pd)
    }

    /// Face walks of a graph without joints. Each step leaves a crossing at
    /// `from` and arrives at `to`; the face lies to the right of every step.
    pub fn face_steps(&self) -> Vec<Vec<(Port, Port)>> {
        let n = self.kinds.len();
        let mut seen = vec![[false; 4]; n];
        let mut faces = Vec::new();
        for x in self.crossing_nodes() {
            for k in 0..4u8 {
                if seen[x][k as usize] {
                    continue;
                }
                let mut face = Vec::new();
                let mut at = Port::new(x, k);
                while !seen[at.node][at.port as usize] {
                    seen[at.node][at.port as usize] = true;
                    let from = at.turn(1);
                    let to = self.partner(from);
                    face.push((from, to));
                    at = to;
                }
                faces.push(face);
            }
        }
        faces
    }
}
