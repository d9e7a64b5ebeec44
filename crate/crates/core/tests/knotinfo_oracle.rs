//! Reference values for every prime knot with 3 to 10 crossings, taken from
//! KnotInfo (see tools/knotinfo_oracle.py), against our own computations.

use knotlab::invariants::{alexander_minor, invariant_tuple, LaurentPoly};
use knotlab::seifert::{incompressibility_certificate, seifert_circles, CertificateMethod};
use knotlab::{Crossing, PlanarDiagram};

struct Reference {
    name: String,
    alternating: bool,
    alexander: LaurentPoly,
    determinant: u64,
    signature: i64,
    genus: u32,
    pd: PlanarDiagram,
}

fn references() -> Vec<Reference> {
    include_str!("data/knotinfo_upto10.txt")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|line| {
            let f: Vec<&str> = line.split('|').collect();
            let crossings = f[6]
                .split(';')
                .map(|x| {
                    let v: Vec<u32> = x.split(',').map(|s| s.parse().unwrap()).collect();
                    Crossing::new(v[0], v[1], v[2], v[3])
                })
                .collect();
            Reference {
                name: f[0].to_string(),
                alternating: f[1] == "Y",
                alexander: f[2].parse().unwrap(),
                determinant: f[3].parse().unwrap(),
                signature: f[4].parse().unwrap(),
                genus: f[5].parse().unwrap(),
                pd: PlanarDiagram::from_crossings(crossings).unwrap(),
            }
        })
        .collect()
}

#[test]
fn fixture_covers_the_census() {
    assert_eq!(references().len(), 249);
}

#[test]
fn every_diagram_validates() {
    for r in references() {
        let report = r.pd.validate();
        assert!(report.ok, "{}: {}", r.name, report.summary());
    }
}

#[test]
fn alexander_determinant_signature_match() {
    let mut bad = Vec::new();
    for r in references() {
        let t = invariant_tuple(&r.pd).unwrap_or_else(|e| panic!("{}: {e}", r.name));
        if t.alexander != r.alexander || t.determinant != r.determinant || t.signature != r.signature {
            bad.push(format!(
                "{}: got ({}, {}, {}) want ({}, {}, {})",
                r.name, t.alexander, t.determinant, t.signature, r.alexander, r.determinant, r.signature
            ));
        }
    }
    assert!(bad.is_empty(), "{} mismatches:\n{}", bad.len(), bad.join("\n"));
}

#[test]
fn mirrors_negate_signature() {
    for r in references().iter().step_by(7) {
        let t = invariant_tuple(&r.pd).unwrap();
        let m = invariant_tuple(&r.pd.mirror().unwrap()).unwrap();
        assert_eq!(m, t.mirrored(), "{}", r.name);
    }
}

#[test]
fn all_fox_minors_agree() {
    for r in references().iter().step_by(11) {
        let n = r.pd.crossing_count();
        for row in 0..n {
            for col in 0..n {
                assert_eq!(alexander_minor(&r.pd, row, col).unwrap(), r.alexander, "{}", r.name);
            }
        }
    }
}

#[test]
fn genus_bounds_and_alternating_certificates() {
    for r in references() {
        let s = seifert_circles(&r.pd).unwrap();
        let span_half = r.alexander.span() / 2;
        assert!(span_half <= s.genus, "{}", r.name);
        assert!(r.genus <= s.genus, "{}", r.name);
        assert_eq!(r.pd.is_alternating().unwrap(), r.alternating, "{}", r.name);
        if r.alternating {
            let c = incompressibility_certificate(&r.pd).unwrap();
            assert_eq!(c.method, CertificateMethod::Alternating, "{}", r.name);
            assert!(c.span_equality, "{}", r.name);
            assert_eq!(s.genus, r.genus, "{}", r.name);
        }
    }
}
