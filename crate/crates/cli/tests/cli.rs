//! Golden and behavioral tests for the `boxalg` binary: byte-stable JSON,
//! argument canonicalization, and the error/exit-status contract.

use std::process::{Command, Output};

fn boxalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boxalg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = boxalg(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}: {}",
        String::from_utf8_lossy(&out.stdout)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn sequence_golden() {
    assert_eq!(
        stdout(&["sequence", "--max-k", "7"]),
        "{\"schema\":\"v1\",\"max_k\":7,\"values\":[2,9,29,94,275,768,2055]}\n"
    );
}

#[test]
fn dim_golden_k2_n4() {
    assert_eq!(
        stdout(&["dim", "--k", "2", "--n", "4", "--method", "all"]),
        "{\"schema\":\"v1\",\"k\":2,\"n\":4,\"orbit\":9,\"diagram\":9,\"formula\":9,\"agree\":true}\n"
    );
}

#[test]
fn dim_defaults_to_stable_n() {
    assert_eq!(
        stdout(&["dim", "--k", "2"]),
        stdout(&["dim", "--k", "2", "--n", "4"])
    );
}

#[test]
fn dim_below_stable_range_reports_nulls() {
    assert_eq!(
        stdout(&["dim", "--k", "2", "--n", "2"]),
        "{\"schema\":\"v1\",\"k\":2,\"n\":2,\"orbit\":5,\"diagram\":null,\"formula\":null,\"agree\":true}\n"
    );
}

#[test]
fn dim_single_method() {
    let text = stdout(&["dim", "--k", "3", "--n", "6", "--method", "formula"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["formula"], serde_json::json!(29));
    assert_eq!(v["orbit"], serde_json::Value::Null);
}

#[test]
fn dim_reports_the_formula_disagreement_honestly() {
    let text = stdout(&["dim", "--k", "3", "--n", "6"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["orbit"], serde_json::json!(31));
    assert_eq!(v["diagram"], serde_json::json!(31));
    assert_eq!(v["formula"], serde_json::json!(29));
    assert_eq!(v["agree"], serde_json::json!(false));
}

#[test]
fn expand_t_golden_twelve_units() {
    let text = stdout(&["expand-t", "--k", "2", "--n", "4", "--lambda", "2,1", "--mu", "1,1"]);
    let expected = concat!(
        r#"{"schema":"v1","k":2,"n":4,"entries":["#,
        r#"{"row":[1,1],"col":[2,1],"coeff":"1"},"#,
        r#"{"row":[1,1],"col":[3,1],"coeff":"1"},"#,
        r#"{"row":[1,1],"col":[4,1],"coeff":"1"},"#,
        r#"{"row":[2,2],"col":[2,1],"coeff":"1"},"#,
        r#"{"row":[2,2],"col":[3,2],"coeff":"1"},"#,
        r#"{"row":[2,2],"col":[4,2],"coeff":"1"},"#,
        r#"{"row":[3,3],"col":[3,1],"coeff":"1"},"#,
        r#"{"row":[3,3],"col":[3,2],"coeff":"1"},"#,
        r#"{"row":[3,3],"col":[4,3],"coeff":"1"},"#,
        r#"{"row":[4,4],"col":[4,1],"coeff":"1"},"#,
        r#"{"row":[4,4],"col":[4,2],"coeff":"1"},"#,
        r#"{"row":[4,4],"col":[4,3],"coeff":"1"}]}"#,
        "\n"
    );
    assert_eq!(text, expected);
}

#[test]
fn partition_arguments_are_canonicalized() {
    let a = stdout(&["expand-t", "--k", "2", "--n", "4", "--lambda", "1,2", "--mu", "1,1"]);
    let b = stdout(&["expand-t", "--k", "2", "--n", "4", "--lambda", "2,1", "--mu", "1,1"]);
    assert_eq!(a, b);
}

#[test]
fn output_is_deterministic_across_runs() {
    for args in [
        vec!["basis", "--k", "3", "--n", "5"],
        vec!["classes", "--k", "4"],
        vec!["verify", "--k", "2", "--n", "4", "--seed", "9"],
        vec!["mult", "--k", "2", "--n", "4", "--left", "2,1:1,1", "--right", "1,1:2,1"],
    ] {
        assert_eq!(stdout(&args), stdout(&args), "{args:?}");
    }
}

#[test]
fn phi_reads_inline_json_and_files() {
    let diagram = r#"{"k":1,"blocks":[{"top":[1],"bottom":[1]}]}"#;
    let inline = stdout(&["phi", "--k", "1", "--n", "2", "--blocks", diagram]);
    let v: serde_json::Value = serde_json::from_str(&inline).unwrap();
    assert_eq!(v["class"], serde_json::json!([[1, 1]]));

    let dir = std::env::temp_dir().join("boxalg-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("diagram.json");
    std::fs::write(&path, diagram).unwrap();
    let from_file = stdout(&["phi", "--k", "1", "--n", "2", "--blocks", path.to_str().unwrap()]);
    assert_eq!(inline, from_file);
}

#[test]
fn errors_are_machine_readable_with_nonzero_exit() {
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (
            vec!["expand-t", "--k", "2", "--n", "4", "--lambda", "x", "--mu", "1,1"],
            "invalid_partition",
        ),
        (
            vec!["expand-t", "--k", "2", "--n", "4", "--lambda", "5,1", "--mu", "1,1"],
            "constraint_violation",
        ),
        (
            vec!["dim", "--k", "3", "--n", "2", "--method", "formula"],
            "stable_range_required",
        ),
        (
            vec!["dim", "--k", "3", "--n", "2", "--method", "diagram"],
            "stable_range_required",
        ),
        (
            vec!["phi", "--k", "2", "--n", "3", "--blocks", r#"{"k":2,"blocks":[{"top":[1,2],"bottom":[1,2]}]}"#],
            "stable_range_required",
        ),
        (
            vec!["phi", "--k", "2", "--n", "4", "--blocks", r#"{"k":2,"blocks":[{"top":[1],"bottom":[1,2]}]}"#],
            "invalid_diagram",
        ),
        (
            vec!["mult", "--k", "2", "--n", "4", "--left", "2,1", "--right", "1,1:1,1"],
            "invalid_partition",
        ),
    ];
    for (args, code) in cases {
        let out = boxalg(&args);
        assert!(!out.status.success(), "{args:?} should fail");
        let v: serde_json::Value =
            serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
        assert_eq!(v["schema"], "v1");
        assert_eq!(v["error"]["code"], code, "{args:?}");
    }
}

#[test]
fn exit_zero_exactly_when_no_error_object() {
    // success path: no "error" key, exit 0
    let ok = boxalg(&["dim", "--k", "1", "--n", "2"]);
    assert!(ok.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&String::from_utf8(ok.stdout).unwrap()).unwrap();
    assert!(v.get("error").is_none());

    // usage error: error object, exit 2
    let bad = boxalg(&["dim"]);
    assert_eq!(bad.status.code(), Some(2));
    let v: serde_json::Value =
        serde_json::from_str(&String::from_utf8(bad.stdout).unwrap()).unwrap();
    assert!(v.get("error").is_some());
}

#[test]
fn help_exits_zero_without_error_object() {
    let out = boxalg(&["--help"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("Usage"));
}

#[test]
fn verify_passes_at_small_sizes() {
    for (k, n) in [("1", "1"), ("1", "2"), ("2", "2"), ("2", "4"), ("3", "4")] {
        let out = boxalg(&["verify", "--k", k, "--n", n]);
        assert!(out.status.success(), "verify k={k} n={n}");
        let v: serde_json::Value =
            serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
        assert_eq!(v["passed"], serde_json::json!(true));
    }
}

#[test]
fn mult_identity_class_acts_trivially() {
    let text = stdout(&["mult", "--k", "2", "--n", "4", "--left", "1,1:1,1", "--right", "1,1:1,1"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let product = v["product"].as_array().unwrap();
    assert_eq!(product.len(), 1);
    assert_eq!(product[0]["coeff"], "1");
}
