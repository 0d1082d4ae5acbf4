use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn ehrhart(args: &[&str], stdin: Option<&str>) -> Output {
    ehrhart_env(args, stdin, &[])
}

fn ehrhart_env(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ehrhart"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(o: Output) -> String {
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn family_ehrhart_roots_pipeline() {
    let poly = ok(ehrhart(&["family", "sn", "--n", "3", "--l", "1"], None));
    let ej = ok(ehrhart(&["ehrhart"], Some(&poly)));
    let j: Value = serde_json::from_str(&ej).unwrap();
    assert_eq!(j["hstar"], serde_json::json!([1, 1, 1, 1]));
    assert_eq!(j["G"][1], serde_json::json!(["7", "3"]));
    let roots: Value = serde_json::from_str(&ok(ehrhart(&["roots"], Some(&ej)))).unwrap();
    let ims: Vec<&str> = roots["roots"].as_array().unwrap().iter().map(|r| r["im"].as_str().unwrap()).collect();
    assert!(ims.contains(&"1.6583123951776999246") && ims.contains(&"-1.6583123951776999246"));
    assert!(roots["roots"].as_array().unwrap().iter().all(|r| r["re"] == "-0.5"));
    assert_eq!(roots["critical_line"], true);
    // a polytope can be fed to `roots` directly
    let direct: Value = serde_json::from_str(&ok(ehrhart(&["roots"], Some(&poly)))).unwrap();
    assert_eq!(direct["roots"], roots["roots"]);
}

#[test]
fn outputs_are_reproducible() {
    let a = ok(ehrhart(&["family", "reeve", "--k", "7"], None));
    let b = ok(ehrhart(&["family", "reeve", "--k", "7"], None));
    assert_eq!(a, b);
    let ra = ok(ehrhart(&["roots", "--csv"], Some(&a)));
    assert_eq!(ra, ok(ehrhart(&["roots", "--csv"], Some(&b))));
    assert!(ra.starts_with("re,im,multiplicity,residual\n"));
    assert_eq!(ra.lines().count(), 4);
}

#[test]
fn count_table_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let cube = dir.path().join("cube.json");
    ok(ehrhart(&["family", "cube", "--n", "3", "--out", cube.to_str().unwrap()], None));
    let csv = ok(ehrhart(&["count", "--in", cube.to_str().unwrap(), "--kmax", "2", "--csv"], None));
    assert_eq!(csv, "k,closed,interior\n0,1,\n1,8,0\n2,27,1\n");
}

#[test]
fn missing_file_is_a_domain_error() {
    let o = ehrhart(&["count", "--in", "missing.json"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing.json"));
}

#[test]
fn bad_parameters_and_input() {
    let o = ehrhart(&["family", "sn", "--n", "0", "--l", "1"], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n must be at least 1"));
    let flat = r#"{"dim": 2, "vertices": [[0,0],[1,1],[2,2]]}"#;
    assert_eq!(ehrhart(&["ehrhart"], Some(flat)).status.code(), Some(1));
    assert_eq!(ehrhart(&["ehrhart"], Some("not json")).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(ehrhart(&["bogus"], None).status.code(), Some(64));
    assert_eq!(ehrhart(&["count", "--kmax", "x"], None).status.code(), Some(64));
    assert_eq!(ehrhart(&[], None).status.code(), Some(64));
    assert_eq!(ehrhart(&["--help"], None).status.code(), Some(0));
}

#[test]
fn work_cap_from_environment() {
    let poly = ok(ehrhart(&["family", "box", "--n", "3", "--l", "3"], None));
    let o = ehrhart_env(&["ehrhart"], Some(&poly), &[("EHRHART_WORK_CAP", "5")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("work cap"));
    // the flag overrides the environment
    ok(ehrhart_env(&["ehrhart", "--work-cap", "1000000"], Some(&poly), &[("EHRHART_WORK_CAP", "5")]));
}

#[test]
fn reflexive_check_and_scan() {
    let e2 = ok(ehrhart(&["family", "e2"], None));
    let j: Value = serde_json::from_str(&ok(ehrhart(&["reflexive", "check"], Some(&e2)))).unwrap();
    assert_eq!(j["report"]["is_reflexive"], true);
    assert_eq!(j["critical_line_criterion"]["discriminant_condition"], false);
    assert_eq!(j["critical_line_criterion"]["doubled_hibi_condition"], true);

    let dir = tempfile::tempdir().unwrap();
    for (name, args) in [("a_cross.json", vec!["cross", "--n", "3"]), ("b_reeve.json", vec!["reeve", "--k", "3"])] {
        let mut a = vec!["family"];
        a.extend(args);
        fs::write(dir.path().join(name), ok(ehrhart(&a, None))).unwrap();
    }
    fs::write(dir.path().join("c_broken.json"), "{").unwrap();
    fs::write(dir.path().join("notes.txt"), "ignored").unwrap();
    let out = ok(ehrhart(&["reflexive", "scan", "--dir", dir.path().to_str().unwrap()], None));
    let j: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(j["scanned"], 3);
    assert_eq!(j["reflexive"], 1);
    assert_eq!(j["results"][0]["file"], "a_cross.json");
    assert_eq!(j["results"][1]["report"]["is_reflexive"], false);
    assert!(j["results"][2]["error"].is_string());
}

#[test]
fn sn1_spectrum_output() {
    let j: Value = serde_json::from_str(&ok(ehrhart(&["sn1-spectrum", "--n", "3"], None))).unwrap();
    let b = j["imaginary_parts"].as_array().unwrap();
    assert_eq!(b.len(), 2);
    assert!((b[0].as_f64().unwrap() - 11f64.sqrt() / 2.0).abs() < 1e-12);
    let csv = ok(ehrhart(&["sn1-spectrum", "--n", "10", "--kmax", "2", "--csv"], None));
    assert_eq!(csv.lines().count(), 3);
    assert_eq!(ehrhart(&["sn1-spectrum", "--n", "0"], None).status.code(), Some(1));
}

#[test]
fn verify_single_claim() {
    let args = ["verify", "--suite", "volume-lower-bound", "--seed", "1", "--trials", "20", "--dim-max", "3"];
    let a = ok(ehrhart(&args, None));
    let j: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(j["failures"], 0);
    assert!(j["total"].as_u64().unwrap() > 20);
    assert!(j["reports"].as_array().unwrap().iter().all(|r| r["claim_id"] == "volume-lower-bound"));
    assert_eq!(a, ok(ehrhart(&args, None)));

    let o = ehrhart(&["verify", "--suite", "no-such-claim"], None);
    assert_eq!(o.status.code(), Some(1));
    let list = ok(ehrhart(&["verify", "--list"], None));
    assert!(list.lines().any(|l| l.starts_with("reciprocity\t")));
}
