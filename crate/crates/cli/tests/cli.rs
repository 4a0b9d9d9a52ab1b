use std::fs;
use std::process::{Command, Output};

use quadmap::map::{canonical_form, parse_map, surface_of};

fn quadmap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadmap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn census_orbit_at_four() {
    let o = quadmap(&["census", "--n", "4", "--kind", "locally-orientable", "--method", "orbit"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("count = 11"));
}

#[test]
fn census_json_counts_are_strings() {
    let o = quadmap(&["census", "--n", "5", "--kind", "orientable", "--method", "formula", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], "45");
    assert_eq!(v["beta_variant"], "proof");
}

#[test]
fn json_reports_are_byte_identical() {
    let args = ["census", "--n", "5", "--kind", "orientable", "--method", "burnside", "--format", "json"];
    assert_eq!(quadmap(&args).stdout, quadmap(&args).stdout);
}

#[test]
fn burnside_report_has_class_table() {
    let o = quadmap(&["census", "--n", "4", "--method", "burnside", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("n,kind,method,count,class,reversing"));
    // five classes of S_4, both flags
    assert_eq!(text.lines().count(), 11);
}

#[test]
fn exit_codes() {
    assert_eq!(quadmap(&["census", "--n", "5", "--kind", "torus"]).status.code(), Some(2));
    assert_eq!(quadmap(&["census", "--n", "3"]).status.code(), Some(2));
    assert_eq!(quadmap(&["census", "--n", "5", "--method", "orbit"]).status.code(), Some(3));
    let o = quadmap(&["census", "--n", "6", "--kind", "orientable"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("665188/5"));
}

#[test]
fn large_formula_is_fast() {
    let start = std::time::Instant::now();
    let o = quadmap(&["census", "--n", "30", "--kind", "orientable", "--format", "json"]);
    assert!(start.elapsed().as_secs_f64() < 1.0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["count"].as_str().unwrap().len() > 100);
}

#[test]
fn witness_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m4.map");
    let o = quadmap(&[
        "witness",
        "--n",
        "4",
        "--class",
        "1,1,2",
        "--reversing",
        "--kind",
        "non-orientable",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let cert = stdout(&o);
    assert!(cert.contains("# action: (3 4)·α"));
    assert_eq!(cert.matches("  ok").count(), 4);
    let m = parse_map(&fs::read_to_string(&path).unwrap()).unwrap();
    assert!(!surface_of(&m).unwrap().orientable);
}

#[test]
fn witness_rejects_bad_class() {
    assert_eq!(quadmap(&["witness", "--n", "4", "--class", "1,x"]).status.code(), Some(2));
    assert_eq!(quadmap(&["witness", "--n", "5", "--class", "1,1,2"]).status.code(), Some(2));
}

#[test]
fn catalog_at_four() {
    let dir = tempfile::tempdir().unwrap();
    let o = quadmap(&["catalog", "--n", "4", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("orientable: 3, non-orientable: 8"));
    let mut forms = Vec::new();
    let mut orientable = 0;
    for entry in fs::read_dir(dir.path()).unwrap() {
        let m = parse_map(&fs::read_to_string(entry.unwrap().path()).unwrap()).unwrap();
        orientable += surface_of(&m).unwrap().orientable as usize;
        forms.push(canonical_form(&m));
    }
    assert_eq!(forms.len(), 11);
    assert_eq!(orientable, 3);
    forms.sort();
    forms.dedup();
    assert_eq!(forms.len(), 11);
}

#[test]
fn iso_and_aut() {
    let dir = tempfile::tempdir().unwrap();
    let sphere = dir.path().join("sphere.map");
    let o = quadmap(&["decode", "kn v1; n=4; rot[1]=2+ 3+ 4+; rot[2]=1+ 4+ 3+; rot[3]=1+ 2+ 4+; rot[4]=1+ 3+ 2+"]);
    assert_eq!(o.status.code(), Some(0));
    fs::write(&sphere, stdout(&o)).unwrap();

    let o = quadmap(&["iso", sphere.to_str().unwrap(), sphere.to_str().unwrap(), "--mode", "preserving"]);
    assert!(stdout(&o).starts_with("mode: order-preserving"));

    let o = quadmap(&["aut", sphere.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 48);
    assert_eq!(v["preserving"], 24);

    let torus = dir.path().join("torus.map");
    let o = quadmap(&["decode", "kn v1; n=4; rot[1]=2+ 3+ 4+; rot[2]=1+ 3+ 4+; rot[3]=1+ 2+ 4+; rot[4]=1+ 2+ 3+"]);
    fs::write(&torus, stdout(&o)).unwrap();
    let o = quadmap(&["iso", sphere.to_str().unwrap(), torus.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "none");
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.map");
    fs::write(&bad, "map v1\nflags=4\nalpha: (0 1)(2 3)\nbeta: (0 2)(1 3\nP: (0 2)\n").unwrap();
    let o = quadmap(&["aut", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}

#[test]
fn verify_quick_reports_every_check() {
    let o = quadmap(&["verify", "--level", "quick", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.len() >= 15);
    let passed = v["passed"].as_bool().unwrap();
    assert_eq!(o.status.code(), Some(if passed { 0 } else { 1 }));
    let named = |name: &str| checks.iter().find(|c| c["name"] == name).unwrap()["passed"].as_bool().unwrap();
    assert!(named("orbit count n=4 locally-orientable"));
    assert!(named("formula counts at n=4"));
}
