use std::process::{Command, Output};

fn farep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_farep"))
        .args(args)
        .env_remove("FAREP_TRUNC")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON output")
}

#[test]
fn simple_eval_tsv_rows() {
    let o = farep(&["simple-eval", "C", "2", "--t", "3", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "degree\tpartition\tcoefficient\n3\t(3)\t1\n3\t(2,1)\t1\n");
}

#[test]
fn simple_eval_other_labels() {
    let o = farep(&["simple-eval", "L", "1", "--t", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["dimension"], 2);
    let o = farep(&["simple-eval", "k0", "--t", "0"]);
    assert_eq!(json(&o)["dimension"], 1);
}

#[test]
fn idempotent_suite_passes() {
    let o = farep(&["verify", "--suite", "idempotent", "--max-size", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let reports = json(&o);
    assert!(reports.as_array().unwrap().iter().all(|r| r["pass"] == true));
}

#[test]
fn hom_below_diagonal_vanishes() {
    let o = farep(&["hom", "--from", "pbar:2", "--to", "pbar:1", "--trunc", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["dimension"], 0);
    assert_eq!(v["stable"], true);
}

#[test]
fn hom_routes_agree() {
    let a = json(&farep(&["hom", "--from", "proj-cover:1", "--to", "pfin:2", "--trunc", "4"]));
    let b = json(&farep(&["hom", "--from", "proj-cover:1", "--to", "pfin:2", "--trunc", "4", "--route", "generic"]));
    assert_eq!(a["dimension"], 2);
    assert_eq!(a["dimension"], b["dimension"]);
    assert_eq!(a["character"], b["character"]);
}

#[test]
fn truncation_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_farep"))
        .args(["hom", "--from", "pfin:1", "--to", "pbar:1"])
        .env("FAREP_TRUNC", "3")
        .output()
        .unwrap();
    assert_eq!(json(&o)["trunc"], 3);
}

#[test]
fn decompose_and_structure() {
    let v = json(&farep(&["decompose-pfin", "2,1"]));
    assert_eq!(v["summands"].as_array().unwrap().len(), 3);
    assert_eq!(v["dimensions"][3], 8);
    let o = farep(&["structure-kfi", "2", "--format", "tsv"]);
    assert_eq!(stdout(&o), "degree\tpartition\tcoefficient\n2\tLambda^2(P)\t1\n2\tC 2\t1\n");
}

#[test]
fn multiplicities_from_file() {
    // P^FA_1 truncated at 4: k[t] = S_(t) + S_(t−1,1).
    let data = r#"{"trunc": 4, "F0_dim": 0, "degrees": {
        "1": {"n": 1, "mults": [{"partition": [1], "mult": 1}]},
        "2": {"n": 2, "mults": [{"partition": [2], "mult": 1}, {"partition": [1, 1], "mult": 1}]},
        "3": {"n": 3, "mults": [{"partition": [3], "mult": 1}, {"partition": [2, 1], "mult": 1}]},
        "4": {"n": 4, "mults": [{"partition": [4], "mult": 1}, {"partition": [3, 1], "mult": 1}]}}}"#;
    let path = std::env::temp_dir().join(format!("farep-cli-test-{}.json", std::process::id()));
    std::fs::write(&path, data).unwrap();
    let o = farep(&["multiplicities", "--input", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["multiplicities"], serde_json::json!({"L 0": 1, "L 1": 1}));
    assert_eq!(v["composition_dimensions"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn groth_identity_reports() {
    let o = farep(&["groth", "--identity", "hook-inversion", "--trunc", "8", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 1 + 9);
}

#[test]
fn invalid_input_exits_one() {
    for args in [
        vec!["simple-eval", "C", "1,1", "--t", "2"],
        vec!["decompose-pfin", "1,2"],
        vec!["hom", "--from", "pbar:x", "--to", "k"],
        vec!["hom", "--from", "k", "--to", "k", "--trunc", "1"],
        vec!["verify", "--suite", "nope"],
        vec!["groth", "--identity", "nope"],
        vec!["multiplicities", "--input", "/nonexistent/file.json"],
        vec!["frobnicate"],
    ] {
        let o = farep(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn output_is_byte_stable() {
    let args = ["verify", "--suite", "properties", "--max-size", "5", "--seed", "11"];
    assert_eq!(farep(&args).stdout, farep(&args).stdout);
}
