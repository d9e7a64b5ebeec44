//! A small knot table with PD codes and stored invariants, and lookup of
//! diagrams by invariants.

mod table;

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::PlanarDiagram;
use crate::invariants::{goeritz_torsion, invariant_tuple, InvariantError, InvariantTuple};

pub use table::{parse_table, serialize_table};

const BUNDLED_TABLE: &str = include_str!("../../data/table.txt");
const PAPER_LIST: &str = include_str!("../../data/paper_list.txt");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnotDbError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("record {name}: {message}")]
    Record { name: String, message: String },
    #[error("record {name}: stored {field} {stored} but the diagram gives {computed}")]
    Mismatch {
        name: String,
        field: &'static str,
        stored: String,
        computed: String,
    },
    #[error("duplicate record {0}")]
    Duplicate(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flag {
    Alternating,
    TwistKnot,
    PersistentlyLaminarPaperTable,
}

impl Flag {
    pub const ALL: [Flag; 3] = [Flag::Alternating, Flag::TwistKnot, Flag::PersistentlyLaminarPaperTable];

    pub fn as_str(self) -> &'static str {
        match self {
            Flag::Alternating => "alternating",
            Flag::TwistKnot => "twist-knot",
            Flag::PersistentlyLaminarPaperTable => "persistently-laminar-paper-table",
        }
    }

    pub fn parse(s: &str) -> Option<Flag> {
        Flag::ALL.into_iter().find(|f| f.as_str() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotRecord {
    pub name: String,
    #[serde(skip)]
    pub pd: PlanarDiagram,
    pub invariants: InvariantTuple,
    /// Nontrivial invariant factors of the reduced Goeritz matrix.
    pub torsion: Vec<u64>,
    pub flags: BTreeSet<Flag>,
}

impl KnotRecord {
    pub fn has(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }
}

/// Records in file order; immutable once loaded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnotTable {
    records: Vec<KnotRecord>,
}

impl KnotTable {
    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    /// The table shipped with the crate.
    pub fn bundled() -> KnotTable {
        parse_table(BUNDLED_TABLE).expect("bundled table is consistent")
    }
}

impl fmt::Display for KnotTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_table(self))
    }
}

/// Reads and revalidates a table file.
pub fn load_table(path: impl AsRef<Path>) -> Result<KnotTable, KnotDbError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| KnotDbError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_table(&text)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    Same,
    Mirror,
}

impl Chirality {
    pub fn as_str(self) -> &'static str {
        match self {
            Chirality::Same => "same",
            Chirality::Mirror => "mirror",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Match {
    pub name: String,
    pub chirality: Chirality,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentificationResult {
    pub matches: Vec<Match>,
    pub ambiguous: bool,
    /// Whether Goeritz torsion was needed to narrow several candidates.
    pub refined_by_torsion: bool,
}

impl IdentificationResult {
    /// The single matching name, if there is exactly one.
    pub fn unique(&self) -> Option<&Match> {
        if self.ambiguous {
            None
        } else {
            self.matches.first()
        }
    }
}

/// Looks a diagram up by Alexander polynomial, determinant, genus bound
/// and absolute signature; the sign of the signature decides chirality.
/// Candidates that still collide are separated by Goeritz torsion when it
/// differs.
pub fn identify(pd: &PlanarDiagram, table: &KnotTable) -> Result<IdentificationResult, InvariantError> {
    let t = invariant_tuple(pd)?;
    let candidates: Vec<&KnotRecord> = table
        .records
        .iter()
        .filter(|r| {
            let s = &r.invariants;
            s.alexander == t.alexander
                && s.determinant == t.determinant
                && s.genus_lower_bound == t.genus_lower_bound
                && s.signature.abs() == t.signature.abs()
        })
        .collect();
    let names = |c: &[&KnotRecord]| c.iter().map(|r| r.name.as_str()).collect::<BTreeSet<_>>().len();
    let mut chosen = candidates.clone();
    let mut refined_by_torsion = false;
    if names(&candidates) > 1 {
        let torsion = goeritz_torsion(pd)?;
        let narrowed: Vec<&KnotRecord> = candidates.iter().copied().filter(|r| r.torsion == torsion).collect();
        if !narrowed.is_empty() && narrowed.len() < candidates.len() {
            chosen = narrowed;
            refined_by_torsion = true;
        }
    }
    let ambiguous = names(&chosen) > 1;
    let matches = chosen
        .into_iter()
        .map(|r| Match {
            name: r.name.clone(),
            chirality: if r.invariants.signature == t.signature {
                Chirality::Same
            } else {
                Chirality::Mirror
            },
        })
        .collect();
    Ok(IdentificationResult {
        matches,
        ambiguous,
        refined_by_torsion,
    })
}

/// Parses a name list, one per line; blank lines and `#` comments skipped.
pub fn parse_name_list(text: &str) -> BTreeSet<String> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect()
}

/// Names in the bundled list of knots known to carry persistent laminations.
pub fn paper_list() -> BTreeSet<String> {
    parse_name_list(PAPER_LIST)
}

/// Which of `paper_family(0..=max_n)` identify uniquely to a listed name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ListCheck {
    pub n: u32,
    pub expected: String,
    pub identified: Option<String>,
    pub listed: bool,
    pub ok: bool,
}

pub fn check_paper_family(table: &KnotTable, max_n: u32) -> Result<Vec<ListCheck>, crate::constructions::ConstructionError> {
    let list = paper_list();
    let mut out = Vec::new();
    for n in 0..=max_n {
        let member = crate::constructions::paper_family(n)?;
        let identified = identify(&member.diagram, table)
            .ok()
            .and_then(|r| r.unique().map(|m| m.name.clone()));
        let listed = identified.as_ref().is_some_and(|name| list.contains(name));
        let ok = listed && identified.as_deref() == Some(member.expected_name.as_str());
        out.push(ListCheck {
            n,
            expected: member.expected_name,
            identified,
            listed,
            ok,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::paper_family;

    #[test]
    fn bundled_table_loads() {
        let t = KnotTable::bundled();
        assert_eq!(t.len(), 15);
        assert_eq!(t.get("6_1").unwrap().invariants.determinant, 9);
        assert!(t.get("8_1").unwrap().has(Flag::TwistKnot));
        assert!(!t.get("5_1").unwrap().has(Flag::PersistentlyLaminarPaperTable));
    }

    #[test]
    fn identifies_family_and_mirrors() {
        let t = KnotTable::bundled();
        for (n, name) in [(0, "6_1"), (1, "8_1"), (2, "10_1")] {
            let r = identify(&paper_family(n).unwrap().diagram, &t).unwrap();
            assert_eq!(r.unique().unwrap().name, name);
        }
        let r = identify(&PlanarDiagram::trefoil().mirror().unwrap(), &t).unwrap();
        assert_eq!(
            r.matches,
            vec![Match {
                name: "3_1".into(),
                chirality: Chirality::Mirror
            }]
        );
    }

    #[test]
    fn torsion_separates_6_1_and_9_46() {
        let t = KnotTable::bundled();
        let a = &t.get("6_1").unwrap();
        let b = &t.get("9_46").unwrap();
        assert_eq!(a.invariants, b.invariants);
        assert_eq!(a.torsion, vec![9]);
        assert_eq!(b.torsion, vec![3, 3]);
        let r = identify(&b.pd, &t).unwrap();
        assert!(r.refined_by_torsion);
        assert_eq!(r.unique().unwrap().name, "9_46");
    }

    #[test]
    fn paper_list_membership() {
        let l = paper_list();
        assert_eq!(l.len(), 114);
        for name in ["6_1", "8_1", "10_1", "9_44", "9_46", "10_67", "10_146", "10_163"] {
            assert!(l.contains(name), "{name}");
        }
        assert!(!l.contains("10_139"));
        let checks = check_paper_family(&KnotTable::bundled(), 2).unwrap();
        assert!(checks.iter().all(|c| c.ok), "{checks:?}");
    }
}
