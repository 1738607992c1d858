use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn omlkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omlkit")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("omlkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn strs(v: &Value) -> Vec<&str> {
    v.as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect()
}

#[test]
fn validate_exit_codes() {
    let out = omlkit(&["validate", "mo:2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["ok"], true);

    let out = omlkit(&["validate", "o6"]);
    assert_eq!(code(&out), 2);
    assert_eq!(stdout_json(&out)["failure"], "orthomodular-law");

    let broken = json!({"name": "broken", "elements": ["0", "a", "b", "1"],
        "covers": [[0, 1], [0, 2], [1, 3], [2, 3]], "ortho": [3, 2, 2, 0]});
    let path = temp_file("broken.json", &broken.to_string());
    assert_eq!(code(&omlkit(&["validate", path.to_str().unwrap()])), 1);
    assert_eq!(code(&omlkit(&["validate", "mo:"])), 1);
    assert_eq!(code(&omlkit(&["validate", "/nonexistent/x.json"])), 1);
}

#[test]
fn analyze_examples() {
    let v = stdout_json(&omlkit(&["analyze", "mo:2"]));
    assert_eq!(strs(&v["center"]), ["0", "1"]);
    assert_eq!(v["irreducible"], true);
    assert_eq!(strs(&v["classes"]["B"]), ["0", "a1", "a1'", "a2", "a2'"]);

    let v = stdout_json(&omlkit(&["analyze", "boolean:2"]));
    assert_eq!(v["center"], v["elements"]);

    let v = stdout_json(&omlkit(&["analyze", "product(mo:2,boolean:1)"]));
    assert_eq!(v["size"], 12);
    assert_eq!(v["center"].as_array().unwrap().len(), 4);

    assert_eq!(code(&omlkit(&["analyze", "o6"])), 2);
    let pretty = omlkit(&["analyze", "mo:2", "--pretty"]);
    assert!(String::from_utf8_lossy(&pretty.stdout).contains("element"));
}

fn report(args: &[&str]) -> Value {
    let out = omlkit(args);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    stdout_json(&out)["report"].clone()
}

#[test]
fn decompose_examples() {
    let r = report(&["decompose", "mo:2", "--preset", "jw"]);
    assert_eq!((&r["cI"]["label"], &r["c11"]["label"], &r["c21"]["label"]), (&json!("1"), &json!("0"), &json!("1")));

    let r = report(&["decompose", "boolean:2", "--preset", "jw"]);
    assert_eq!(r["c11"]["label"], "11");
    for key in ["c21", "cIKt", "cII", "cIIK", "cIIKt", "cIII", "c2", "c3"] {
        assert_eq!(r[key]["label"], "00", "{key}");
    }

    let r = report(&["decompose", "mo:2", "--Q", "zero", "--K", "modular"]);
    assert_eq!(r["cII"]["label"], "1");

    let keys: Vec<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["c1", "c2", "c3", "cI", "cII", "cIII", "cIK", "cIKt", "cIIK", "cIIKt", "c11", "c21", "covers"]
    );
}

#[test]
fn decompose_preconditions_and_closure() {
    let out = omlkit(&["decompose", "mo:2", "--Q", "M", "--K", "B"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("not contained"));

    let out = omlkit(&["decompose", "mo:2", "--Q", "[\"a1\"]", "--K", "T", "--no-close"]);
    assert_eq!(code(&out), 3);

    let out = omlkit(&["decompose", "mo:2", "--Q", "[\"a1\"]", "--K", "T"]);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(strs(&v["Q"]), ["0", "a1"]);
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);

    assert_eq!(code(&omlkit(&["decompose", "mo:2", "--Q", "X"])), 1);
    assert_eq!(code(&omlkit(&["decompose", "mo:2", "--Q", "[\"nope\"]"])), 1);
    assert_eq!(code(&omlkit(&["decompose", "mo:2", "--preset", "other"])), 1);
}

fn dot_counts(input: &str) -> (usize, usize) {
    let out = omlkit(&["export-dot", input]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let nodes = text.lines().filter(|l| l.contains("[label=")).count();
    let edges = text.lines().filter(|l| l.contains("->")).count();
    (nodes, edges)
}

#[test]
fn export_dot_examples() {
    assert_eq!(dot_counts("boolean:1"), (2, 1));
    assert_eq!(dot_counts("mo:2"), (6, 8));
    assert_eq!(dot_counts("product(boolean:1,boolean:1)"), (4, 4));
    let text = String::from_utf8(omlkit(&["export-dot", "mo:2"]).stdout).unwrap();
    assert!(text.contains("n1 [label=\"a1\", fillcolor=2, ortho=n2]"));
    assert!(text.contains("n2 [label=\"a1'\", fillcolor=2, ortho=n1]"));
}

#[test]
fn json_export_round_trips() {
    for tok in ["mo:3", "product(mo:2,boolean:1)", "d16", "interval(product(d16,boolean:1),(c',1))"] {
        let out = omlkit(&["export-json", tok]);
        assert_eq!(code(&out), 0);
        let path = temp_file(&format!("{}.json", tok.replace(|c: char| !c.is_alphanumeric(), "_")), &String::from_utf8_lossy(&out.stdout));
        let p = path.to_str().unwrap();
        let again = omlkit(&["export-json", p]);
        assert_eq!(again.stdout, out.stdout, "{tok}");
        let a = stdout_json(&omlkit(&["analyze", tok]));
        let b = stdout_json(&omlkit(&["analyze", p]));
        for key in ["elements", "center", "central_cover", "projectivity_classes", "classes"] {
            assert_eq!(a[key], b[key], "{tok} {key}");
        }
    }
}

#[test]
fn outputs_are_deterministic() {
    for args in [&["analyze", "product(mo:2,mo:3)"][..], &["decompose", "d16", "--preset", "jw"], &["check", "--samples", "3"]] {
        assert_eq!(omlkit(args).stdout, omlkit(args).stdout, "{args:?}");
    }
}

#[test]
fn check_uses_the_seed() {
    let out = Command::new(env!("CARGO_BIN_EXE_omlkit"))
        .args(["check", "--samples", "5", "mo:2", "d16"])
        .env("OML_SEED", "42")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["seed"], 42);
    assert_eq!(v["lattices"], 2);
    assert_eq!(v["ok"], true);

    let out = Command::new(env!("CARGO_BIN_EXE_omlkit")).args(["check"]).env("OML_SEED", "x").output().unwrap();
    assert_eq!(code(&out), 1);
}

fn matmodel(request: Value) -> Output {
    let path = temp_file(&format!("req-{}.json", request["op"].as_str().unwrap_or("x")), &request.to_string());
    omlkit(&["matmodel", path.to_str().unwrap()])
}

#[test]
fn matmodel_requests() {
    let out = matmodel(json!({"blocks": [2, 1], "op": "jordan",
        "a": [[["0", "1"], ["1", "0"]], [["0"]]],
        "b": [[["1", "0"], ["0", "0"]], [["0"]]]}));
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["result"]["blocks"], json!([[["0", "1/2"], ["1/2", "0"]], [["0"]]]));

    let swap = json!([[["0", "1"], ["1", "0"]], [["1"]]]);
    let out = matmodel(json!({"blocks": [2, 1], "op": "exchange",
        "p": [[["1", "0"], ["0", "0"]], [["0"]]],
        "q": [[["0", "0"], ["0", "1"]], [["0"]]],
        "x": [swap.clone()]}));
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["result"]["blocks"], swap);

    let out = matmodel(json!({"blocks": [2, 1], "op": "exchange",
        "p": [[["1", "0"], ["0", "0"]], [["0"]]],
        "q": [[["1", "0"], ["0", "0"]], [["0"]]],
        "x": []}));
    assert_eq!(code(&out), 3);

    let out = matmodel(json!({"blocks": [2, 1], "op": "witness",
        "p": [[["1", "0"], ["0", "0"]], [["0"]]],
        "q": [[["0", "0"], ["0", "0"]], [["1"]]]}));
    assert_eq!(stdout_json(&out)["result"]["equivalent"], false);

    let out = matmodel(json!({"blocks": [2, 1], "op": "comparability",
        "e": {"mode": "float", "blocks": [[[1.0, 0.0], [0.0, 1.0]], [[0.0]]]},
        "f": {"mode": "float", "blocks": [[[1.0, 0.0], [0.0, 0.0]], [[1.0]]]}}));
    let v = stdout_json(&out);
    assert_eq!(v["result"]["c_blocks"], json!([false, true]));
    assert_eq!(v["result"]["inequalities"], json!([true, true, true, true]));

    let out = matmodel(json!({"blocks": [2], "op": "cover", "a": [[["0", "0"], ["0", "0"]]]}));
    assert_eq!(stdout_json(&out)["result"]["blocks"], json!([[["0", "0"], ["0", "0"]]]));

    assert_eq!(code(&matmodel(json!({"blocks": [2], "op": "frobnicate"}))), 1);
    assert_eq!(code(&matmodel(json!({"blocks": [2], "op": "join", "p": [[["1"]]], "q": [[["1"]]]}))), 1);
    assert_eq!(code(&matmodel(json!({"blocks": [2], "op": "join",
        "p": [[["1", "1"], ["0", "0"]]], "q": [[["1", "0"], ["0", "0"]]]}))), 1);
}
