//! Line-oriented model files:
//!
//! ```text
//! sector 0 -3
//! curve 0 0 0 0 same same 0
//! boundary 0 2 1
//! disk 0 0
//! ```

use std::fmt;
use std::str::FromStr;

use super::{
    BoundaryComponent, BranchCurve, BranchedError, BranchedSurfaceModel, CompressingDisk, Relation, Sector,
};

impl FromStr for Relation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "same" => Ok(Relation::Same),
            "opposite" => Ok(Relation::Opposite),
            other => Err(format!("expected same or opposite, got {other:?}")),
        }
    }
}

fn field<T: FromStr>(words: &[&str], i: usize) -> Result<T, String> {
    let w = words.get(i).ok_or_else(|| format!("missing field {i}"))?;
    w.parse().map_err(|_| format!("bad field {w:?}"))
}

impl BranchedSurfaceModel {
    /// Parses a model file; `#` starts a comment.
    pub fn parse(text: &str) -> Result<BranchedSurfaceModel, BranchedError> {
        let mut m = BranchedSurfaceModel::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let words: Vec<&str> = line.split_whitespace().collect();
            let arity = match words[0] {
                "sector" => 3,
                "curve" => 8,
                "boundary" => 4,
                "disk" => 3,
                other => {
                    return Err(BranchedError::Parse {
                        line: n + 1,
                        message: format!("unknown record {other:?}"),
                    })
                }
            };
            let err = |message: String| BranchedError::Parse { line: n + 1, message };
            if words.len() != arity {
                return Err(err(format!("{} expects {} fields, got {}", words[0], arity - 1, words.len() - 1)));
            }
            match words[0] {
                "sector" => m.sectors.push(Sector {
                    id: field(&words, 1).map_err(err)?,
                    euler_characteristic: field(&words, 2).map_err(err)?,
                }),
                "curve" => m.branch_curves.push(BranchCurve {
                    id: field(&words, 1).map_err(err)?,
                    merged_side: field(&words, 2).map_err(err)?,
                    sheet_sides: [field(&words, 3).map_err(err)?, field(&words, 4).map_err(err)?],
                    orientation_relation: [field(&words, 5).map_err(err)?, field(&words, 6).map_err(err)?],
                    self_intersections: field(&words, 7).map_err(err)?,
                }),
                "boundary" => m.horizontal_boundary.push(BoundaryComponent {
                    id: field(&words, 1).map_err(err)?,
                    genus: field(&words, 2).map_err(err)?,
                    circles: field(&words, 3).map_err(err)?,
                }),
                _ => m.compressing_disks.push(CompressingDisk {
                    id: field(&words, 1).map_err(err)?,
                    boundary: field(&words, 2).map_err(err)?,
                }),
            }
        }
        m.check()?;
        Ok(m)
    }
}

impl fmt::Display for BranchedSurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.sectors {
            writeln!(f, "sector {} {}", s.id, s.euler_characteristic)?;
        }
        for c in &self.branch_curves {
            writeln!(
                f,
                "curve {} {} {} {} {} {} {}",
                c.id,
                c.merged_side,
                c.sheet_sides[0],
                c.sheet_sides[1],
                c.orientation_relation[0].as_str(),
                c.orientation_relation[1].as_str(),
                c.self_intersections
            )?;
        }
        for b in &self.horizontal_boundary {
            writeln!(f, "boundary {} {} {}", b.id, b.genus, b.circles)?;
        }
        for d in &self.compressing_disks {
            writeln!(f, "disk {} {}", d.id, d.boundary)?;
        }
        Ok(())
    }
}
