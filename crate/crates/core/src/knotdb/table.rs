//! Table file format: blank-line separated blocks of
//!
//! ```text
//! name 3_1
//! flags alternating,twist-knot
//! alexander 1 -1 1
//! det 3
//! sig -2
//! pd:
//! X 1,4,2,5
//! X 3,6,4,1
//! X 5,2,6,3
//! ```

use std::collections::BTreeSet;

use super::{Flag, KnotDbError, KnotRecord, KnotTable};
use crate::diagram::PlanarDiagram;
use crate::invariants::{goeritz_torsion, invariant_tuple, LaurentPoly};

struct Raw {
    line: usize,
    name: Option<String>,
    flags: Option<BTreeSet<Flag>>,
    alexander: Option<LaurentPoly>,
    det: Option<u64>,
    sig: Option<i64>,
    pd: Option<String>,
}

impl Raw {
    fn new(line: usize) -> Raw {
        Raw {
            line,
            name: None,
            flags: None,
            alexander: None,
            det: None,
            sig: None,
            pd: None,
        }
    }
}

fn parse_blocks(text: &str) -> Result<Vec<Raw>, KnotDbError> {
    let mut blocks = Vec::new();
    let mut cur: Option<Raw> = None;
    let mut in_pd = false;
    for (i, raw) in text.lines().enumerate() {
        let n = i + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            blocks.extend(cur.take());
            in_pd = false;
            continue;
        }
        let err = |message: String| KnotDbError::Parse { line: n, message };
        let block = cur.get_or_insert_with(|| Raw::new(n));
        if in_pd {
            let pd = block.pd.get_or_insert_with(String::new);
            pd.push_str(line);
            pd.push('\n');
            continue;
        }
        let (key, value) = line.split_once(' ').map_or((line, ""), |(k, v)| (k, v.trim()));
        fn set<T>(slot: &mut Option<T>, v: T, key: &str, n: usize) -> Result<(), KnotDbError> {
            if slot.replace(v).is_some() {
                return Err(KnotDbError::Parse {
                    line: n,
                    message: format!("repeated {key}"),
                });
            }
            Ok(())
        }
        match key {
            "name" if !value.is_empty() => set(&mut block.name, value.to_string(), key, n)?,
            "flags" => {
                let mut flags = BTreeSet::new();
                for f in value.split(',').map(str::trim).filter(|f| !f.is_empty()) {
                    flags.insert(Flag::parse(f).ok_or_else(|| err(format!("unknown flag {f:?}")))?);
                }
                set(&mut block.flags, flags, key, n)?;
            }
            "alexander" => {
                let p: LaurentPoly = value.parse().map_err(|_| err(format!("bad polynomial {value:?}")))?;
                set(&mut block.alexander, p, key, n)?;
            }
            "det" => {
                let d = value.parse().map_err(|_| err(format!("bad determinant {value:?}")))?;
                set(&mut block.det, d, key, n)?;
            }
            "sig" => {
                let s = value.parse().map_err(|_| err(format!("bad signature {value:?}")))?;
                set(&mut block.sig, s, key, n)?;
            }
            "pd:" if value.is_empty() => {
                in_pd = true;
                set(&mut block.pd, String::new(), key, n)?;
            }
            _ => return Err(err(format!("unexpected line {line:?}"))),
        }
    }
    blocks.extend(cur);
    Ok(blocks)
}

fn missing(line: usize, what: &str) -> KnotDbError {
    KnotDbError::Parse {
        line,
        message: format!("record has no {what}"),
    }
}

/// Parses and revalidates every record; any failure rejects the whole table.
pub fn parse_table(text: &str) -> Result<KnotTable, KnotDbError> {
    let mut records = Vec::new();
    let mut names = BTreeSet::new();
    for b in parse_blocks(text)? {
        let name = b.name.ok_or_else(|| missing(b.line, "name"))?;
        if !names.insert(name.clone()) {
            return Err(KnotDbError::Duplicate(name));
        }
        let record_err = |message: String| KnotDbError::Record {
            name: name.clone(),
            message,
        };
        let flags = b.flags.unwrap_or_default();
        let alexander = b.alexander.ok_or_else(|| missing(b.line, "alexander"))?;
        let det = b.det.ok_or_else(|| missing(b.line, "det"))?;
        let sig = b.sig.ok_or_else(|| missing(b.line, "sig"))?;
        let pd_text = b.pd.ok_or_else(|| missing(b.line, "pd"))?;
        let pd = PlanarDiagram::parse_pd(&pd_text).map_err(|e| record_err(e.to_string()))?;
        let report = pd.validate();
        if !report.ok {
            return Err(record_err(report.summary()));
        }
        let t = invariant_tuple(&pd).map_err(|e| record_err(e.to_string()))?;
        let mismatch = |field: &'static str, stored: String, computed: String| KnotDbError::Mismatch {
            name: name.clone(),
            field,
            stored,
            computed,
        };
        if !alexander.is_canonical() || alexander != t.alexander {
            return Err(mismatch("alexander", alexander.to_string(), t.alexander.to_string()));
        }
        if det != t.determinant {
            return Err(mismatch("det", det.to_string(), t.determinant.to_string()));
        }
        if sig != t.signature {
            return Err(mismatch("sig", sig.to_string(), t.signature.to_string()));
        }
        let alternating = pd.is_alternating().map_err(|e| record_err(e.to_string()))?;
        if flags.contains(&Flag::Alternating) && !alternating {
            return Err(record_err("flagged alternating but the diagram is not".into()));
        }
        let torsion = goeritz_torsion(&pd).map_err(|e| record_err(e.to_string()))?;
        records.push(KnotRecord {
            name,
            pd,
            invariants: t,
            torsion,
            flags,
        });
    }
    Ok(KnotTable { records })
}

/// Canonical text of a table; parsing it gives the same table back.
pub fn serialize_table(table: &KnotTable) -> String {
    let blocks: Vec<String> = table
        .records
        .iter()
        .map(|r| {
            let flags: Vec<&str> = r.flags.iter().map(|f| f.as_str()).collect();
            let flags_line = if flags.is_empty() {
                "flags".to_string()
            } else {
                format!("flags {}", flags.join(","))
            };
            format!(
                "name {}\n{}\nalexander {}\ndet {}\nsig {}\npd:\n{}",
                r.name,
                flags_line,
                r.invariants.alexander,
                r.invariants.determinant,
                r.invariants.signature,
                r.pd.to_pd_string()
            )
        })
        .collect();
    blocks.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    const BUNDLED: &str = include_str!("../../data/table.txt");

    #[test]
    fn bundled_round_trip_is_byte_exact() {
        let t = parse_table(BUNDLED).unwrap();
        assert_eq!(serialize_table(&t), BUNDLED);
        assert_eq!(parse_table(&serialize_table(&t)).unwrap(), t);
    }

    #[test]
    fn empty_table() {
        assert!(parse_table("").unwrap().is_empty());
        assert!(parse_table("\n# nothing\n\n").unwrap().is_empty());
    }

    #[test]
    fn altered_determinant_names_the_record() {
        let bad = BUNDLED.replace("name 6_1\nflags alternating,twist-knot,persistently-laminar-paper-table\nalexander 2 -5 2\ndet 9", "name 6_1\nflags alternating,twist-knot,persistently-laminar-paper-table\nalexander 2 -5 2\ndet 8");
        assert_ne!(bad, BUNDLED);
        let e = parse_table(&bad).unwrap_err();
        assert!(matches!(&e, KnotDbError::Mismatch { name, field: "det", .. } if name == "6_1"), "{e}");
        assert!(e.to_string().contains("6_1"));
    }

    #[test]
    fn structural_errors() {
        let first_block = BUNDLED.split("\n\n").next().unwrap();
        let dup = format!("{first_block}\n\n{first_block}\n");
        assert_eq!(parse_table(&dup).unwrap_err(), KnotDbError::Duplicate("3_1".into()));
        assert!(matches!(
            parse_table("name 3_1\nflags shiny\n"),
            Err(KnotDbError::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_table("name 3_1\n"), Err(KnotDbError::Parse { .. })));
        let wrong_sig = first_block.replace("sig -2", "sig 2");
        assert!(matches!(
            parse_table(&wrong_sig),
            Err(KnotDbError::Mismatch { field: "sig", .. })
        ));
    }
}
