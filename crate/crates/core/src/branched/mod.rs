//! Abstract branched surfaces: sectors glued along branch curves, with
//! enough horizontal-boundary metadata to run the persistence checks.

mod format;
mod solver;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use solver::{has_positive_solution, has_positive_solution_bounded};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BranchedError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed model: {0}")]
    Malformed(String),
}

/// How a sheet's transverse orientation compares with the merged side's.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Same,
    Opposite,
}

impl Relation {
    pub fn flipped(self) -> Relation {
        match self {
            Relation::Same => Relation::Opposite,
            Relation::Opposite => Relation::Same,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Same => "same",
            Relation::Opposite => "opposite",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sector {
    pub id: u32,
    pub euler_characteristic: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchCurve {
    pub id: u32,
    pub merged_side: u32,
    pub sheet_sides: [u32; 2],
    pub self_intersections: u32,
    pub orientation_relation: [Relation; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryComponent {
    pub id: u32,
    pub genus: u32,
    pub circles: u32,
}

impl BoundaryComponent {
    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.circles as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompressingDisk {
    pub id: u32,
    pub boundary: u32,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BranchedSurfaceModel {
    pub sectors: Vec<Sector>,
    pub branch_curves: Vec<BranchCurve>,
    pub horizontal_boundary: Vec<BoundaryComponent>,
    pub compressing_disks: Vec<CompressingDisk>,
}

/// The branched surface obtained from a genus `g` Seifert surface by
/// attaching a tube to a collar annulus and gluing the surface's boundary
/// back along it, with the transversely orientable gluing.
pub fn build_bf(g: u32) -> BranchedSurfaceModel {
    BranchedSurfaceModel {
        sectors: vec![Sector {
            id: 0,
            euler_characteristic: -1 - 2 * g as i64,
        }],
        branch_curves: vec![BranchCurve {
            id: 0,
            merged_side: 0,
            sheet_sides: [0, 0],
            self_intersections: 0,
            orientation_relation: [Relation::Same, Relation::Same],
        }],
        horizontal_boundary: vec![
            BoundaryComponent { id: 0, genus: g + 1, circles: 1 },
            BoundaryComponent { id: 1, genus: g + 1, circles: 1 },
        ],
        compressing_disks: vec![
            CompressingDisk { id: 0, boundary: 0 },
            CompressingDisk { id: 1, boundary: 1 },
        ],
    }
}

impl BranchedSurfaceModel {
    /// Checks ids are unique and every reference resolves.
    pub fn check(&self) -> Result<(), BranchedError> {
        fn unique(kind: &str, ids: impl Iterator<Item = u32>) -> Result<BTreeSet<u32>, BranchedError> {
            let mut seen = BTreeSet::new();
            for id in ids {
                if !seen.insert(id) {
                    return Err(BranchedError::Malformed(format!("duplicate {kind} id {id}")));
                }
            }
            Ok(seen)
        }
        let sectors = unique("sector", self.sectors.iter().map(|s| s.id))?;
        unique("curve", self.branch_curves.iter().map(|c| c.id))?;
        let boundary = unique("boundary", self.horizontal_boundary.iter().map(|b| b.id))?;
        unique("disk", self.compressing_disks.iter().map(|d| d.id))?;
        for c in &self.branch_curves {
            for s in [c.merged_side, c.sheet_sides[0], c.sheet_sides[1]] {
                if !sectors.contains(&s) {
                    return Err(BranchedError::Malformed(format!(
                        "curve {} references missing sector {s}",
                        c.id
                    )));
                }
            }
        }
        for d in &self.compressing_disks {
            if !boundary.contains(&d.boundary) {
                return Err(BranchedError::Malformed(format!(
                    "disk {} references missing boundary component {}",
                    d.id, d.boundary
                )));
            }
        }
        Ok(())
    }

    fn sector_index(&self) -> BTreeMap<u32, usize> {
        self.sectors.iter().enumerate().map(|(i, s)| (s.id, i)).collect()
    }

    /// Euler characteristic of the branched surface; branch curves are
    /// circles and contribute nothing.
    pub fn euler_characteristic(&self) -> i64 {
        self.sectors.iter().map(|s| s.euler_characteristic).sum()
    }

    pub fn horizontal_boundary_euler_characteristic(&self) -> i64 {
        self.horizontal_boundary.iter().map(|b| b.euler_characteristic()).sum()
    }

    pub fn euler_bookkeeping_holds(&self) -> bool {
        self.horizontal_boundary_euler_characteristic() == 2 * self.euler_characteristic()
    }
}

/// One row per branch curve over the sector weights, in sector order:
/// `w(merged) - w(sheet1) - w(sheet2)`.
pub fn branch_equations(model: &BranchedSurfaceModel) -> Vec<Vec<i64>> {
    let index = model.sector_index();
    model
        .branch_curves
        .iter()
        .map(|c| {
            let mut row = vec![0i64; model.sectors.len()];
            row[index[&c.merged_side]] += 1;
            row[index[&c.sheet_sides[0]]] -= 1;
            row[index[&c.sheet_sides[1]]] -= 1;
            row
        })
        .collect()
}

/// Whether the branch equations have a strictly positive solution.
pub fn carries_closed_surface(model: &BranchedSurfaceModel) -> bool {
    has_positive_solution(&branch_equations(model), model.sectors.len())
}

/// Whether sectors can be given transverse orientations compatible with
/// every branch curve's relations.
pub fn transversely_orientable(model: &BranchedSurfaceModel) -> bool {
    let index = model.sector_index();
    // union-find with parity to the root
    let mut parent: Vec<usize> = (0..model.sectors.len()).collect();
    let mut parity = vec![false; model.sectors.len()];
    fn find(parent: &mut [usize], parity: &mut [bool], x: usize) -> (usize, bool) {
        if parent[x] == x {
            return (x, false);
        }
        let (root, p) = find(parent, parity, parent[x]);
        parity[x] ^= p;
        parent[x] = root;
        (root, parity[x])
    }
    for c in &model.branch_curves {
        let m = index[&c.merged_side];
        for k in 0..2 {
            let s = index[&c.sheet_sides[k]];
            let odd = c.orientation_relation[k] == Relation::Opposite;
            let (rm, pm) = find(&mut parent, &mut parity, m);
            let (rs, ps) = find(&mut parent, &mut parity, s);
            if rm == rs {
                if (pm ^ ps) != odd {
                    return false;
                }
            } else {
                parent[rs] = rm;
                parity[rs] = pm ^ ps ^ odd;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    PersistentlyLaminar,
    EssentialOnlyUnknown,
    Fails,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::PersistentlyLaminar => "persistently-laminar",
            Verdict::EssentialOnlyUnknown => "essential-only-unknown",
            Verdict::Fails => "fails",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub branch_curve_embedded: bool,
    pub carries_no_closed_surface: bool,
    pub transversely_orientable: bool,
    pub disks_on_distinct_components: bool,
    pub incompressibility_certified: bool,
    pub verdict: Verdict,
    pub euler_characteristic: i64,
    pub horizontal_boundary_euler_characteristic: i64,
    pub notes: Vec<String>,
}

impl CertificateReport {
    pub fn combinatorial_checks_pass(&self) -> bool {
        self.branch_curve_embedded
            && self.carries_no_closed_surface
            && self.transversely_orientable
            && self.disks_on_distinct_components
    }
}

/// Runs the combinatorial checks and combines them with the
/// incompressibility flag of the Seifert surface.
pub fn persistence_certificate(
    model: &BranchedSurfaceModel,
    incompressibility_certified: bool,
) -> Result<CertificateReport, BranchedError> {
    model.check()?;
    let branch_curve_embedded = model.branch_curves.iter().all(|c| c.self_intersections == 0);
    let carries_no_closed_surface = !carries_closed_surface(model);
    let transversely_orientable = transversely_orientable(model);
    let on: BTreeSet<u32> = model.compressing_disks.iter().map(|d| d.boundary).collect();
    let disks_on_distinct_components = model.compressing_disks.len() >= 2 && on.len() >= 2;
    let combinatorial =
        branch_curve_embedded && carries_no_closed_surface && transversely_orientable && disks_on_distinct_components;
    let verdict = match (combinatorial, incompressibility_certified) {
        (true, true) => Verdict::PersistentlyLaminar,
        (true, false) => Verdict::EssentialOnlyUnknown,
        _ => Verdict::Fails,
    };
    let mut notes = vec![
        "no monogons and no Reeb components are implied by the absence of positive branch-equation solutions and are not checked separately".to_string(),
        "the remaining essentiality conditions and survival under non-trivial Dehn filling follow from the checked preconditions; they are not re-proved here".to_string(),
    ];
    if model.sectors.len() > 1 {
        notes.push("disks of contact are only excluded through the branch equations; general detection is not attempted for multi-sector models".to_string());
    }
    if !model.euler_bookkeeping_holds() {
        notes.push(format!(
            "horizontal boundary has Euler characteristic {}, expected twice {}",
            model.horizontal_boundary_euler_characteristic(),
            model.euler_characteristic()
        ));
    }
    Ok(CertificateReport {
        branch_curve_embedded,
        carries_no_closed_surface,
        transversely_orientable,
        disks_on_distinct_components,
        incompressibility_certified,
        verdict,
        euler_characteristic: model.euler_characteristic(),
        horizontal_boundary_euler_characteristic: model.horizontal_boundary_euler_characteristic(),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy(sectors: usize, curves: &[(u32, u32, u32)]) -> BranchedSurfaceModel {
        BranchedSurfaceModel {
            sectors: (0..sectors as u32).map(|id| Sector { id, euler_characteristic: 0 }).collect(),
            branch_curves: curves
                .iter()
                .enumerate()
                .map(|(i, &(m, a, b))| BranchCurve {
                    id: i as u32,
                    merged_side: m,
                    sheet_sides: [a, b],
                    self_intersections: 0,
                    orientation_relation: [Relation::Same; 2],
                })
                .collect(),
            ..Default::default()
        }
    }

    #[test]
    fn bf_shape() {
        for g in 0..=10 {
            let m = build_bf(g);
            m.check().unwrap();
            assert_eq!(branch_equations(&m), vec![vec![-1]]);
            assert!(!carries_closed_surface(&m));
            assert!(transversely_orientable(&m));
            assert!(m.euler_bookkeeping_holds());
            assert!(m.horizontal_boundary.iter().all(|b| b.genus == g + 1));
            let r = persistence_certificate(&m, true).unwrap();
            assert!(r.combinatorial_checks_pass());
            assert_eq!(r.verdict, Verdict::PersistentlyLaminar);
        }
        assert_eq!(build_bf(0).horizontal_boundary_euler_characteristic(), -2);
        assert_eq!(build_bf(1).horizontal_boundary_euler_characteristic(), -6);
    }

    #[test]
    fn equations_and_feasibility() {
        assert_eq!(branch_equations(&toy(2, &[(0, 1, 1)])), vec![vec![1, -2]]);
        assert!(branch_equations(&toy(2, &[])).is_empty());
        assert!(carries_closed_surface(&toy(3, &[(0, 1, 2)])));
        assert!(!carries_closed_surface(&toy(1, &[(0, 0, 0)])));
    }

    #[test]
    fn orientability() {
        let mut m = build_bf(2);
        m.branch_curves[0].orientation_relation[1] = Relation::Opposite;
        assert!(!transversely_orientable(&m));
        assert!(transversely_orientable(&toy(3, &[])));
        let mut t = toy(3, &[(0, 1, 2), (1, 2, 2)]);
        t.branch_curves[0].orientation_relation = [Relation::Opposite, Relation::Same];
        // s1 = -s0, s2 = s0, s2 = s1 contradicts
        assert!(!transversely_orientable(&t));
    }

    #[test]
    fn verdicts() {
        let m = build_bf(1);
        assert_eq!(persistence_certificate(&m, false).unwrap().verdict, Verdict::EssentialOnlyUnknown);
        let mut bad = m.clone();
        bad.branch_curves[0].self_intersections = 1;
        let r = persistence_certificate(&bad, true).unwrap();
        assert!(!r.branch_curve_embedded);
        assert_eq!(r.verdict, Verdict::Fails);
        let mut same = m.clone();
        same.compressing_disks[1].boundary = 0;
        assert_eq!(persistence_certificate(&same, true).unwrap().verdict, Verdict::Fails);
        let mut broken = m;
        broken.compressing_disks[0].boundary = 7;
        assert!(persistence_certificate(&broken, true).is_err());
    }
}
