use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidorb")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn csv_column(text: &str, name: &str) -> Vec<String> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let idx = r.headers().unwrap().iter().position(|h| h == name).expect("column");
    r.records().map(|rec| rec.unwrap()[idx].to_string()).collect()
}

#[test]
fn group_g25() {
    let v = json(&["group", "--which", "g25"]);
    assert_eq!(v["order"], 648);
    assert_eq!(v["reflections"], 24);
    assert_eq!(v["hyperplanes"], 12);
    assert_eq!(v["proper_planes"], 9);
    assert_eq!(v["hyperplanes_match_displayed"], true);
}

#[test]
fn zero_class_orbit_is_a_point() {
    let v = json(&["orbit", "--lambda", "z12,z12^5,z12^3,z12^3"]);
    assert_eq!(v["size"], 1);
    assert_eq!(v["class"], "[0]");
}

#[test]
fn tetrahedral_table() {
    let out = run(&["tables", "--which", "tetrahedral"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("case-id,lambda,tau,expected_size,computed_size,status\n"));
    let want: Vec<String> = ["4", "4", "6", "12", "4", "4", "6", "12"].iter().map(|s| s.to_string()).collect();
    assert_eq!(csv_column(&text, "expected_size"), want);
    assert_eq!(csv_column(&text, "computed_size"), want);
    assert!(csv_column(&text, "status").iter().all(|s| s == "PASS"));
}

#[test]
fn tables_write_one_file_each() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["tables", "--which", "imprimitive", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(dir.path().join("imprimitive.csv")).unwrap();
    assert_eq!(csv_column(&text, "computed_size"), ["2", "5", "5", "10", "2", "4", "4", "8"]);
}

#[test]
fn output_is_reproducible() {
    let a = run(&["tables", "--which", "icosahedral"]);
    let b = run(&["tables", "--which", "icosahedral"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let args = ["gate", "--n", "6", "--samples", "4", "--seed", "11", "--bound", "2000"];
    let (c, d) = (run(&args), run(&args));
    assert!(c.status.success());
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn gate_agrees_with_enumeration() {
    let v = json(&["gate", "--lambda", "z6,z6,z6,z6,z6^2", "--tau", "1,2,0,0", "--check"]);
    assert_eq!(v["verdict"], "FiniteWithSize");
    assert_eq!(v["size"], 72);
    assert_eq!(v["bfs_size"], 72);
    assert_eq!(v["agrees"], true);
}

#[test]
fn input_file_supplies_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.json");
    std::fs::write(&path, r#"{"lambda": ["z12", "z12^5", "z12^3", "z12^3"], "tau": "z4,0,0"}"#).unwrap();
    let from_file = json(&["orbit", "--input", path.to_str().unwrap()]);
    let from_flags = json(&["orbit", "--lambda", "z12,z12^5,z12^3,z12^3", "--tau", "z4,0,0"]);
    assert_eq!(from_file, from_flags);
    assert_eq!(from_file["size"], 4);
}

#[test]
fn coalesce_is_equivariant() {
    let v = json(&[
        "coalesce", "--lambda", "z6,z6,z6,z6,z6^2", "--tau", "1,2,0,0", "--k", "4", "--l", "2", "--word", "p(1,3)^2 p(2,4)^-1",
    ]);
    assert_eq!(v["equivariant"], true);
    assert_eq!(v["output"]["lambda"], "(1 + z3, z3, 1 + z3, z3)");
}

#[test]
fn rank_three_monodromy() {
    let v = json(&["monodromy", "--rank", "3", "--poles", "-1,0,1"]);
    assert_eq!(v["closure_size"], 648);
    assert_eq!(v["local_eigenvalues_ok"], true);
    assert_eq!(v["generators"].as_array().unwrap().len(), 3);
}

#[test]
fn failures_and_errors_set_the_exit_code() {
    // a tolerance below rounding error cannot match any product
    let out = run(&["monodromy", "--rank", "3", "--tol", "1e-30"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["orbit", "--lambda", "z12,(1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["monodromy", "--rank", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["tables", "--which", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn csv_for_scalar_reports() {
    let out = run(&["group", "--which", "g25", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("key,value\norder,648\nreflections,24\nhyperplanes,12\n"));
}
