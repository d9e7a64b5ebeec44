use std::fmt;

use serde::Serialize;

use super::PlanarDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Connected,
    Euler,
    Orientation,
    Components,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::Connected => "connected",
            Rule::Euler => "euler",
            Rule::Orientation => "orientation",
            Rule::Components => "components",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleFailure {
    pub rule: Rule,
    pub message: String,
}

/// Outcome of [`PlanarDiagram::validate`]. `ok` holds iff `failures` is empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub failures: Vec<RuleFailure>,
    pub faces: usize,
    pub components: usize,
}

impl ValidationReport {
    pub fn has_failure(&self, rule: Rule) -> bool {
        self.failures.iter().any(|f| f.rule == rule)
    }

    pub fn summary(&self) -> String {
        self.failures
            .iter()
            .map(|f| format!("[{}] {}", f.rule, f.message))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

impl PlanarDiagram {
    /// Checks connectivity, the Euler count `F = C + 2`, orientation
    /// consistency (slot 0 enters, labels increase along each component)
    /// and that there are at most two components.
    pub fn validate(&self) -> ValidationReport {
        let mut failures = Vec::new();
        let n = self.crossing_count();

        let mut parent: Vec<usize> = (0..n).collect();
        for label in 1..=self.edge_count() as u32 {
            let [p, q] = self.occurrences(label);
            let (a, b) = (find(&mut parent, p.crossing), find(&mut parent, q.crossing));
            parent[a] = b;
        }
        let pieces = (0..n).filter(|&i| find(&mut parent, i) == i).count();
        if pieces != 1 {
            failures.push(RuleFailure {
                rule: Rule::Connected,
                message: format!("diagram splits into {pieces} pieces"),
            });
        }

        let faces = self.faces().len();
        if faces != n + 2 {
            failures.push(RuleFailure {
                rule: Rule::Euler,
                message: format!("{faces} faces, expected C + 2 = {}", n + 2),
            });
        }

        let orient = self.orientation();
        for (i, entering) in orient.entering.iter().enumerate() {
            if !entering[0] || entering[2] {
                failures.push(RuleFailure {
                    rule: Rule::Orientation,
                    message: format!(
                        "crossing {} ({}): under-strand does not enter at slot 0",
                        i + 1,
                        self.crossings()[i]
                    ),
                });
            }
        }
        for walk in &orient.walks {
            let lo = *walk.iter().min().expect("nonempty walk");
            let hi = lo + walk.len() as u32 - 1;
            let len = walk.len();
            let broken = (0..len).find(|&i| {
                let expected = if walk[i] == hi { lo } else { walk[i] + 1 };
                walk[(i + 1) % len] != expected
            });
            if let Some(i) = broken {
                failures.push(RuleFailure {
                    rule: Rule::Orientation,
                    message: format!(
                        "labels do not increase along the strand: {} is followed by {}",
                        walk[i],
                        walk[(i + 1) % len]
                    ),
                });
            }
        }

        if orient.components > 2 {
            failures.push(RuleFailure {
                rule: Rule::Components,
                message: format!("{} components, at most 2 supported", orient.components),
            });
        }

        ValidationReport {
            ok: failures.is_empty(),
            failures,
            faces,
            components: orient.components,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Crossing;

    #[test]
    fn trefoil_and_kink_validate() {
        let r = PlanarDiagram::trefoil().validate();
        assert!(r.ok, "{r:?}");
        assert_eq!(r.faces, 5);
        let r = PlanarDiagram::unknot().validate();
        assert!(r.ok);
        assert_eq!(r.faces, 3);
    }

    #[test]
    fn rotated_slots_break_orientation() {
        // first crossing rotated by two positions: the under-strand now runs 2 -> 1
        let pd = PlanarDiagram::from_crossings(vec![
            Crossing::new(2, 5, 1, 4),
            Crossing::new(3, 6, 4, 1),
            Crossing::new(5, 2, 6, 3),
        ])
        .unwrap();
        let r = pd.validate();
        assert!(!r.ok);
        assert!(r.has_failure(Rule::Orientation));
        assert!(!r.has_failure(Rule::Euler));
    }

    #[test]
    fn nonplanar_rotation_fails_euler() {
        // swapping two slots of one crossing changes the rotation system
        let pd = PlanarDiagram::from_crossings(vec![
            Crossing::new(1, 5, 2, 4),
            Crossing::new(3, 6, 4, 1),
            Crossing::new(5, 2, 6, 3),
        ])
        .unwrap();
        let r = pd.validate();
        assert!(r.has_failure(Rule::Euler), "{r:?}");
    }

    #[test]
    fn split_diagram_rejected() {
        let pd = PlanarDiagram::from_crossings(vec![
            Crossing::new(1, 2, 2, 1),
            Crossing::new(3, 4, 4, 3),
        ])
        .unwrap();
        let r = pd.validate();
        assert!(r.has_failure(Rule::Connected));
        assert!(pd.require_knot().is_err());
    }

    #[test]
    fn hopf_link_is_a_valid_two_component_diagram() {
        let pd = PlanarDiagram::from_crossings(vec![
            Crossing::new(4, 1, 3, 2),
            Crossing::new(2, 3, 1, 4),
        ])
        .unwrap();
        let r = pd.validate();
        assert!(r.ok, "{r:?}");
        assert_eq!(r.components, 2);
        assert!(matches!(
            pd.require_knot(),
            Err(crate::diagram::DiagramError::NotAKnot(2))
        ));
    }
}
