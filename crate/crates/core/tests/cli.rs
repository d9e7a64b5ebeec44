use std::io::Write;
use std::process::{Command, Output, Stdio};

const TREFOIL: &str = "X 1,4,2,5\nX 3,6,4,1\nX 5,2,6,3\n";

fn knotlab(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_knotlab"));
    cmd.args(args)
        .env_remove("KNOTLAB_TABLE")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines()
        .map(|l| l.trim_start_matches("# "))
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
}

fn write_temp(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn invariants_of_the_trefoil() {
    let f = write_temp(TREFOIL);
    let o = knotlab(&["invariants", f.path().to_str().unwrap()], "", &[]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "status"), Some("ok"));
    assert_eq!(field(&out, "alexander"), Some("1 -1 1"));
    assert_eq!(field(&out, "determinant"), Some("3"));
    assert_eq!(field(&out, "signature"), Some("-2"));
    assert_eq!(field(&out, "genus_bound"), Some("1"));
}

#[test]
fn reports_are_deterministic() {
    let f = write_temp(TREFOIL);
    let path = f.path().to_str().unwrap();
    for args in [
        vec!["invariants", path],
        vec!["seifert", path],
        vec!["--json", "identify", path],
        vec!["construct", "double", "--companion", "4_1", "--twists", "-2"],
        vec!["bf", "--genus", "3", "--certified"],
        vec!["paperlist", "--check"],
    ] {
        let a = knotlab(&args, "", &[]);
        let b = knotlab(&args, "", &[]);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn family_pipes_into_identify() {
    for (n, name) in [("0", "6_1"), ("1", "8_1"), ("2", "10_1")] {
        let built = knotlab(&["construct", "family", "--n", n], "", &[]);
        assert_eq!(built.status.code(), Some(0));
        let o = knotlab(&["identify"], &stdout(&built), &[]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(field(&stdout(&o), "name"), Some(name));
    }
}

#[test]
fn mirror_identification_in_json() {
    let mirror = "X 1,5,2,4\nX 3,1,4,6\nX 5,3,6,2\n";
    let o = knotlab(&["--json", "identify"], mirror, &[]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "ok");
    assert_eq!(v["result"]["matches"][0]["name"], "3_1");
    assert_eq!(v["result"]["matches"][0]["chirality"], "mirror");
}

#[test]
fn bf_verdicts() {
    let o = knotlab(&["bf", "--genus", "1", "--certified"], "", &[]);
    assert_eq!(field(&stdout(&o), "verdict"), Some("persistently-laminar"));
    let o = knotlab(&["bf", "--genus", "1"], "", &[]);
    assert_eq!(field(&stdout(&o), "verdict"), Some("essential-only-unknown"));
    let model = write_temp("sector 0 -3\ncurve 0 0 0 0 same same 2\nboundary 0 2 1\nboundary 1 2 1\ndisk 0 0\ndisk 1 1\n");
    let o = knotlab(&["bf", "--model", model.path().to_str().unwrap(), "--certified"], "", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "verdict"), Some("fails"));
}

#[test]
fn exit_codes() {
    assert_eq!(knotlab(&["frobnicate"], "", &[]).status.code(), Some(2));
    assert_eq!(knotlab(&["construct", "torus"], "", &[]).status.code(), Some(2));
    assert_eq!(knotlab(&["--help"], "", &[]).status.code(), Some(0));
    let o = knotlab(&["construct", "torus", "--n", "4"], "", &[]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(field(&stdout(&o), "status"), Some("error"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("two-component link"));
    let o = knotlab(&["invariants"], "X 1,2,3,4\n", &[]);
    assert_eq!(o.status.code(), Some(1));
    let o = knotlab(&["invariants", "/nonexistent/file.pd"], "", &[]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validate_reports_failures() {
    let o = knotlab(&["validate"], TREFOIL, &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "ok"), Some("true"));
    // swapping two slots of one crossing makes the rotation system nonplanar
    let o = knotlab(&["validate"], "X 1,5,2,4\nX 3,6,4,1\nX 5,2,6,3\n", &[]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(field(&stdout(&o), "status"), Some("error"));
}

#[test]
fn table_from_environment_and_flag() {
    let bundled = include_str!("../data/table.txt");
    let only_trefoil = write_temp(&format!("{}\n", bundled.split("\n\n").next().unwrap()));
    let path = only_trefoil.path().to_str().unwrap();
    let o = knotlab(&["identify"], TREFOIL, &[("KNOTLAB_TABLE", path)]);
    assert_eq!(field(&stdout(&o), "name"), Some("3_1"));
    let fig8 = "X 4,1,5,2\nX 8,5,1,6\nX 6,4,7,3\nX 2,8,3,7\n";
    let o = knotlab(&["identify"], fig8, &[("KNOTLAB_TABLE", path)]);
    assert_eq!(field(&stdout(&o), "name"), Some("none"));
    let o = knotlab(&["identify", "-", "--table", path], fig8, &[("KNOTLAB_TABLE", "/nonexistent")]);
    assert_eq!(o.status.code(), Some(0));
    let bad = write_temp(&bundled.replace("det 9", "det 8"));
    let o = knotlab(&["identify", "--table", bad.path().to_str().unwrap()], TREFOIL, &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("6_1"));
}

#[test]
fn inputs_digest_tracks_input_bytes() {
    let a = knotlab(&["invariants"], TREFOIL, &[]);
    let b = knotlab(&["invariants"], &format!("# comment\n{TREFOIL}"), &[]);
    assert_ne!(field(&stdout(&a), "inputs_sha256"), field(&stdout(&b), "inputs_sha256"));
    assert_eq!(field(&stdout(&a), "alexander"), field(&stdout(&b), "alexander"));
}

#[test]
fn constructions_emit_valid_pd() {
    for args in [
        vec!["construct", "torus", "--n", "-5"],
        vec!["construct", "twist", "--c", "6"],
        vec!["construct", "rational", "--cf", "2,-3,3"],
        vec!["construct", "cable2", "--companion", "3_1", "--f", "7"],
        vec!["construct", "double", "--companion", "unknot", "--clasp", "-1"],
    ] {
        let o = knotlab(&args, "", &[]);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let v = knotlab(&["validate"], &stdout(&o), &[]);
        assert_eq!(v.status.code(), Some(0), "{args:?}");
    }
}
