use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use hyperinc_core::{edge_vertex_incidence, rank, uniform_cycle};
use serde_json::Value;

fn sample(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "samples", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hyperinc"));
    cmd.args(args)
        .env_remove("HYPERINC_ISO_BOUND")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(input) = stdin {
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str], stdin: Option<&str>) -> (Value, i32) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full, stdin, &[]);
    let value: Value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}{}", stdout(&out), String::from_utf8_lossy(&out.stderr)));
    assert_no_floats(&value);
    (value, out.status.code().unwrap())
}

fn assert_no_floats(v: &Value) {
    match v {
        Value::Number(n) => assert!(!n.is_f64(), "floating point number {n} in report"),
        Value::Array(items) => items.iter().for_each(assert_no_floats),
        Value::Object(map) => map.values().for_each(assert_no_floats),
        _ => {}
    }
}

#[test]
fn rank_of_worked_example() {
    let (v, code) = json(&["rank", &sample("units.txt")], None);
    assert_eq!(code, 0);
    assert_eq!(v["ok"], true);
    assert_eq!(v["edge_vertex"]["rank"], 5);
    assert_eq!(v["edge_vertex"]["nullity"], 6);
    assert_eq!(v["edge_vertex"]["kernel_basis"].as_array().unwrap().len(), 6);
    assert_eq!(v["vertex_edge"]["nullity"], 0);
    assert_eq!(v["edge_vertex"]["kernel_basis"][5]["1"], "-2/3");
}

#[test]
fn rank_of_single_edge() {
    let (v, code) = json(&["rank", "-"], Some("e1: a b c\n"));
    assert_eq!(code, 0);
    assert_eq!(v["edge_vertex"]["rank"], 1);
}

#[test]
fn generated_cycle_rank_matches_library() {
    let file = stdout(&run(&["generate", "cycle", "6", "4"], None, &[]));
    let (v, _) = json(&["rank", "-"], Some(&file));
    let expected = rank(&edge_vertex_incidence(&uniform_cycle(6, 4).unwrap()));
    assert_eq!(v["edge_vertex"]["rank"], expected);
    assert_eq!(expected, 5);
}

#[test]
fn generate_cycle_file() {
    let out = run(&["generate", "cycle", "8", "4"], None, &[]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("vertices: 0 1 2 3 4 5 6 7\ne0: 0 1 2 3\ne1: 1 2 3 4\n"));
    assert_eq!(text.lines().count(), 9);
    let c5 = stdout(&run(&["generate", "cycle", "5", "2"], None, &[]));
    assert!(c5.lines().skip(1).all(|l| l.split_whitespace().count() == 3));

    let bad = run(&["generate", "cycle", "3", "4"], None, &[]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("at least 4 vertices"));
}

#[test]
fn generate_random_is_deterministic() {
    let args = ["generate", "random", "10", "6", "--max-size", "4", "--seed", "7"];
    let a = stdout(&run(&args, None, &[]));
    let b = stdout(&run(&args, None, &[]));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 7);
    assert!(a
        .lines()
        .skip(1)
        .all(|l| (2..=5).contains(&l.split_whitespace().count())));
    let other = stdout(&run(
        &["generate", "random", "10", "6", "--max-size", "4", "--seed", "8"],
        None,
        &[],
    ));
    assert_ne!(a, other);

    let mut json_args = vec!["--json"];
    json_args.extend_from_slice(&args);
    let j = stdout(&run(&json_args, None, &[]));
    let (from_text, _) = json(&["rank", "-"], Some(&a));
    let (from_json, _) = json(&["rank", "-"], Some(&j));
    assert_eq!(from_text["edge_vertex"], from_json["edge_vertex"]);
}

#[test]
fn units_and_contraction() {
    let (v, code) = json(&["units", &sample("units.txt")], None);
    assert_eq!(code, 0);
    assert_eq!(v["unit_count"], 6);
    assert_eq!(v["units"][2]["members"], serde_json::json!(["5", "6", "7"]));
    assert_eq!(v["units"][4]["generator"], serde_json::json!(["e1", "e3", "e5"]));

    let (v, code) = json(&["contract", &sample("units.txt")], None);
    assert_eq!(code, 0);
    assert_eq!(v["contraction"]["edges"].as_object().unwrap().len(), 5);
    assert_eq!(v["nullity"]["rank"], 5);
    assert_eq!(v["nullity"]["contraction_rank"], 5);
    assert_eq!(v["representatives_isomorphic"], true);

    // the text output is itself a hypergraph file
    let text = stdout(&run(&["contract", &sample("units.txt")], None, &[]));
    let (again, _) = json(&["units", "-"], Some(&text));
    assert_eq!(again["unit_count"], 6);
    assert_eq!(again["contractible"], false);
}

#[test]
fn non_contractible_contraction() {
    let file = stdout(&run(&["generate", "cycle", "7", "3"], None, &[]));
    let (v, code) = json(&["contract", "-"], Some(&file));
    assert_eq!(code, 0);
    assert_eq!(v["contractible"], false);
    assert_eq!(v["representatives_isomorphic"], true);
}

#[test]
fn iso_bound_from_environment() {
    let out = run(
        &["--json", "contract", &sample("units.txt")],
        None,
        &[("HYPERINC_ISO_BOUND", "3")],
    );
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["representatives_isomorphic"], Value::Null);
    assert!(v["isomorphism_skipped"].as_str().unwrap().contains("bound of 3"));
}

#[test]
fn random_batch_satisfies_identities() {
    for seed in 0..50 {
        let seed = seed.to_string();
        let file = stdout(&run(
            &["generate", "random", "9", "6", "--max-size", "4", "--seed", &seed],
            None,
            &[],
        ));
        let (v, code) = json(&["contract", "-"], Some(&file));
        assert_eq!(code, 0, "seed {seed}: {v}");
        assert_eq!(v["nullity"]["rank"], v["nullity"]["contraction_rank"]);
    }
}

#[test]
fn verify_certificates() {
    let cert = sample("equal_partition_certificate.json");
    let (v, code) = json(&["verify", &sample("equal_partition.txt"), &cert], None);
    assert_eq!(code, 0);
    assert_eq!(v["valid"], true);
    assert_eq!(v["certificate"]["kind"], "equal_edge_partition");
    assert_eq!(v["certificate"]["vector"]["2"], "-1");

    let overlapping = r#"{"kind":"equal_edge_partition","u":["2","3","4"],"v":["1","2"]}"#;
    let out = run(&["verify", &sample("equal_partition.txt"), overlapping], None, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("more than one set"));

    let (v, code) = json(
        &[
            "verify",
            &sample("equal_partition.txt"),
            r#"{"kind":"equal_edge_partition","u":["1"],"v":["2"]}"#,
        ],
        None,
    );
    assert_eq!(code, 1);
    assert_eq!(v["failures"], serde_json::json!(["certificate_not_in_kernel"]));

    let (v, code) = json(
        &[
            "verify",
            &sample("k4.txt"),
            r#"{"kind":"ratio_vertex_partition","e":["e1","e2"],"f":["e3","e4","e5","e6"],"r":"1/2"}"#,
        ],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(v["certificate"]["side"], "vertex_edge");
}

#[test]
fn find_k4_ratio_partition() {
    let (v, code) = json(&["find", &sample("k4.txt"), "ratio-vertex-partition"], None);
    assert_eq!(code, 0);
    let found = v["certificates"].as_array().unwrap();
    assert!(found.iter().any(|c| c["e"] == serde_json::json!(["e1", "e2"])
        && c["f"] == serde_json::json!(["e3", "e4", "e5", "e6"])
        && c["r"] == "1/2"));

    let out = run(
        &[
            "find",
            &sample("units.txt"),
            "three-set-relation",
            "--max-vertices",
            "8",
        ],
        None,
        &[],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("above the bound of 8"));

    let out = run(&["find", &sample("k4.txt"), "no-such-kind"], None, &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn spectra_reports() {
    let (v, code) = json(&["spectra", &sample("units.txt")], None);
    assert_eq!(code, 0);
    assert_eq!(
        v["eigenvalues"],
        serde_json::json!([{"eigenvalue": "-2", "multiplicity_lower_bound": 5}])
    );

    let (v, _) = json(
        &["spectra", &sample("units.txt"), "--weights", "banerjee", "--matrix"],
        None,
    );
    let values: Vec<(String, u64)> = v["eigenpairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| {
            (
                p["eigenvalue"].as_str().unwrap().to_owned(),
                p["multiplicity_lower_bound"].as_u64().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        values,
        [("-1/2", 1), ("-5/6", 1), ("-5/12", 2), ("-7/12", 1)].map(|(a, b)| (a.to_owned(), b))
    );
    assert_eq!(v["adjacency"][2][3], "5/6");
    assert!(v["eigenpairs"]
        .as_array()
        .unwrap()
        .iter()
        .all(|p| p["verified"] == true));

    let (v, code) = json(
        &[
            "spectra",
            &sample("symmetric.txt"),
            "--weights",
            &sample("equal_weights.txt"),
            "--class",
            "2,3,4",
        ],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(v["eigenpairs"][0]["eigenvalue"], "-3/2");
    assert_eq!(v["eigenpairs"][0]["multiplicity_lower_bound"], 2);
}

#[test]
fn spectra_errors() {
    let out = run(
        &["spectra", "-", "--weights", "banerjee"],
        Some("e1: 1\ne2: 1 2\n"),
        &[],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("singleton"));

    let dir = std::env::temp_dir().join(format!("hyperinc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad_weights.txt");
    for (content, needle) in [
        ("e1: -1\ne2: 1\ne3: 1\n", "not positive"),
        ("e1: x\n", "not an exact rational"),
    ] {
        std::fs::write(&bad, content).unwrap();
        let out = run(
            &["spectra", &sample("symmetric.txt"), "--weights", bad.to_str().unwrap()],
            None,
            &[],
        );
        assert_eq!(out.status.code(), Some(2));
        assert!(
            String::from_utf8_lossy(&out.stderr).contains(needle),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    std::fs::remove_dir_all(&dir).ok();

    let out = run(&["spectra", &sample("symmetric.txt"), "--class", "2,3"], None, &[]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["spectra", &sample("symmetric.txt"), "--class", "1,2"], None, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not finer"));
}

#[test]
fn parse_errors_report_position() {
    let out = run(&["--json", "rank", "-"], Some("e1: 1 2\n\n  broken line\n"), &[]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["ok"], false);
    assert!(v["error"].as_str().unwrap().contains("line 3, column 3"));

    let out = run(&["rank", "/definitely/not/here.txt"], None, &[]);
    assert_eq!(out.status.code(), Some(2));
}
