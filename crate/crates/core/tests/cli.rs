use std::process::{Command, Output};

use serde_json::Value;

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = schubert(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn keys(v: &Value) -> Vec<&str> {
    let mut k: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    k.sort_unstable();
    k
}

fn assert_class_terms(v: &Value) {
    for term in v.as_array().unwrap() {
        assert_eq!(keys(term), ["coeff", "partition"]);
        assert!(term["coeff"].is_string());
        assert!(term["partition"].is_string());
    }
}

#[test]
fn present_text() {
    let out = stdout(&["present", "-k", "2", "-n", "4", "--p", "classical"]);
    assert_eq!(
        out,
        "k = 2, n = 4, p = X^4\n\
         relation 1: -D1^3 + 2*D1*D2\n\
         relation 2: -D1^4 + D1^2*D2 + D2^2\n\
         A*(^2 M(p)) = Z[D1, D2] / (-D1^3 + 2*D1*D2, -D1^4 + D1^2*D2 + D2^2)\n"
    );
}

#[test]
fn present_json_schema() {
    let v = json(&[
        "present", "-k", "2", "-n", "4", "--p", "quantum", "--format", "json",
    ]);
    assert_eq!(keys(&v), ["generators", "k", "n", "p", "relations", "ring"]);
    assert_eq!(v["k"], 2);
    assert_eq!(v["n"], 4);
    assert_eq!(v["p"], "X^4 + q");
    assert_eq!(v["ring"], serde_json::json!([{"name": "q", "degree": 4}]));
    assert_eq!(v["generators"], serde_json::json!(["D1", "D2"]));
    assert_eq!(
        v["relations"],
        serde_json::json!(["-D1^3 + 2*D1*D2", "-D1^4 + D1^2*D2 + D2^2 + q"])
    );
}

#[test]
fn generic_polynomial_and_ring() {
    let v = json(&[
        "present",
        "-k",
        "2",
        "-n",
        "4",
        "--ring",
        "c1:1,c2:2,c3:3,c4:4",
        "--p",
        "X^4 + c1*X^3 + c2*X^2 + c3*X + c4",
        "--format",
        "json",
    ]);
    assert_eq!(v["relations"][0], "-D1^3 + 2*D1*D2 + c2*D1 + c1*D2 + c3");
}

#[test]
fn multiply_outputs() {
    assert_eq!(
        stdout(&["multiply", "-k", "2", "-n", "4", "--lhs", "1", "--rhs", "1"]),
        "σ(1) * σ(1) = σ(2) + σ(1,1)\n"
    );
    assert_eq!(
        stdout(&["multiply", "-k", "2", "-n", "4", "--p", "quantum", "--lhs", "1", "--rhs", "2,1"]),
        "σ(1) * σ(2,1) = σ(2,2) + q*σ()\n"
    );
    let v = json(&[
        "multiply", "-k", "2", "-n", "4", "--p", "quantum", "--lhs", "2,2", "--rhs", "2,2",
        "--format", "json",
    ]);
    assert_eq!(keys(&v), ["k", "lhs", "n", "p", "result", "rhs"]);
    assert_class_terms(&v["result"]);
    assert_eq!(
        v["result"],
        serde_json::json!([{"partition": "", "coeff": "q^2"}])
    );
}

#[test]
fn pieri_and_giambelli() {
    assert_eq!(
        stdout(&["pieri", "-k", "2", "-n", "4", "--order", "2", "--class", "1"]),
        "D2 σ(1) = σ(2,1)\n"
    );
    let v = json(&[
        "giambelli",
        "-k",
        "2",
        "-n",
        "4",
        "--partition",
        "2,1",
        "--format",
        "json",
    ]);
    assert_eq!(
        keys(&v),
        ["delta", "index", "k", "n", "p", "partition", "vector"]
    );
    assert_eq!(v["delta"], "D1*D2 - D3");
    assert_eq!(
        v["vector"],
        serde_json::json!([{"indices": [2, 4], "coeff": "1"}])
    );
}

#[test]
fn constants_json_schema() {
    let v = json(&[
        "constants",
        "-k",
        "2",
        "-n",
        "4",
        "--p",
        "quantum",
        "--format",
        "json",
    ]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 36);
    for row in rows {
        assert_eq!(keys(row), ["lhs", "result", "rhs"]);
        assert_class_terms(&row["result"]);
    }
    let row = rows
        .iter()
        .find(|r| r["lhs"] == "1" && r["rhs"] == "2,1")
        .unwrap();
    assert_eq!(
        row["result"],
        serde_json::json!([{"partition": "2,2", "coeff": "1"}, {"partition": "", "coeff": "q"}])
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "constants",
        "-k",
        "3",
        "-n",
        "6",
        "--p",
        "quantum",
        "--format",
        "json",
    ];
    let first = schubert(&args);
    for _ in 0..3 {
        let again = schubert(&args);
        assert_eq!(first.stdout, again.stdout);
    }
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("schubert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let p = path.to_str().unwrap();
    let out = schubert(&["present", "-k", "1", "-n", "3", "--format", "json", "-o", p]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["relations"], serde_json::json!(["D1^3"]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    let usage = [
        vec!["multiply", "-k", "2", "-n", "4", "--lhs", "3", "--rhs", "1"],
        vec!["present", "-k", "5", "-n", "4"],
        vec!["present", "-k", "2", "-n", "4", "--p", "2*X^4"],
        vec!["present", "-k", "2", "-n", "4", "--p", "X^3"],
        vec!["present", "-k", "2", "-n", "4", "--ring", "X:1"],
        vec!["present", "-k", "2", "-n", "4", "--p", "X^4 + z"],
        vec!["present", "-k", "2"],
        vec!["frobnicate"],
    ];
    for args in &usage {
        let out = schubert(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = schubert(&[
        "present",
        "-k",
        "2",
        "-n",
        "4",
        "-o",
        "/nonexistent-dir/for/output.txt",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(schubert(&["--help"]).status.code(), Some(0));
}
