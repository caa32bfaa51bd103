use std::path::PathBuf;
use std::process::Command;

use padiclab::cli::{dispatch, CommandResult};
use serde_json::Value;

fn run(args: &[&str]) -> CommandResult {
    dispatch(std::iter::once("padiclab").chain(args.iter().copied()))
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let r = run(&full);
    let v = serde_json::from_str(&r.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", r.stdout));
    (r.exit_code, v)
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas/v1").join(format!("{name}.schema.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(name: &str, v: &Value) {
    let validator = schema(name);
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}\n{v}");
}

#[test]
fn json_outputs_match_schemas() {
    let cases: &[(&str, &[&str])] = &[
        ("expand", &["expand", "216", "--p", "2"]),
        ("valuation", &["valuation", "0", "--p", "3"]),
        ("valuation", &["valuation", "63/550", "--p", "5"]),
        ("norm", &["norm", "-250/3", "--p", "inf"]),
        ("hensel", &["hensel", "--poly", "x^2-2", "--p", "7", "--k", "2", "--x0", "3"]),
        ("hensel", &["hensel", "--poly", "x^2-2", "--p", "7", "--k", "3"]),
        ("sqrt", &["sqrt", "2", "--p", "7", "--r", "3"]),
        ("product-formula", &["product-formula", "63/550"]),
        ("product-formula", &["product-formula", "x^2+1", "--function-field", "--p", "3"]),
        ("code", &["code", "encode", "1/3", "--p", "5", "--r", "4"]),
        ("code", &["code", "decode", "417", "--p", "5", "--r", "4"]),
        ("code", &["code", "mul", "1/3", "3", "--p", "5", "--r", "4"]),
        ("code", &["code", "add", "1", "2", "--residue", "--p", "5", "--r", "4"]),
        ("pauli-mul", &["pauli", "mul", "X", "Z"]),
        ("pauli-order", &["pauli", "order", "--n", "2"]),
        ("pauli-basis-check", &["pauli", "basis-check"]),
        ("pauli-basis-check", &["pauli", "basis-check", "--decompose", "1,0;0,0"]),
        ("pauli-normalizer-check", &["pauli", "normalizer-check", "--matrix", "1,1;1,-1"]),
        ("pauli-normalizer-check", &["pauli", "normalizer-check", "--matrix", "1,0;0,3/5+4/5i"]),
        ("lattice-check", &["lattice", "check", "--subspace", "3", "2"]),
        ("lattice-check", &["lattice", "check", "--named", "n5"]),
        ("lattice-check", &["lattice", "check", "--named", "chain", "4"]),
        ("borel", &["borel", "--t", "0.5"]),
        ("borel", &["borel", "--t", "0.5", "--a", "1"]),
        ("borel", &["borel", "--t", "1/10", "--order", "9"]),
        ("borel-table", &["borel", "--t", "0.2", "--table"]),
        ("seminorm-check", &["seminorm-check", "--p", "3"]),
        ("seminorm-check", &["seminorm-check", "--p", "3", "--norm", "sup", "--poly", "x+1", "--poly", "x-1 / 3"]),
    ];
    for (name, args) in cases {
        let (code, v) = run_json(args);
        assert_eq!(code, 0, "{args:?}: {v}");
        assert_valid(name, &v);
    }
}

#[test]
fn errors_carry_codes() {
    let cases: &[(&[&str], i32, &str)] = &[
        (&["expand", "1/5", "--p", "5"], 1, "unsupported_format"),
        (&["expand", "7", "--p", "6"], 1, "not_prime"),
        (&["valuation", "1/0", "--p", "5"], 1, "zero_argument"),
        (&["hensel", "--poly", "x^2-2", "--p", "7", "--k", "2", "--x0", "2"], 1, "not_a_root"),
        (&["hensel", "--poly", "x^2", "--p", "7", "--k", "2", "--x0", "0"], 1, "singular_root"),
        (&["code", "decode", "7", "--p", "5", "--r", "2"], 1, "decode_failure"),
        (&["pauli", "mul", "X", "XX"], 1, "mismatch"),
        (&["pauli", "normalizer-check", "--matrix", "1,1;0,1"], 1, "not_unitary"),
        (&["pauli", "order", "--n", "5"], 3, "resource_limit"),
        (&["lattice", "check", "--subspace", "2", "15"], 3, "resource_limit"),
        (&["borel", "--t", "0"], 1, "domain"),
        (&["borel", "--t", "-1/2"], 1, "domain"),
        (&["borel", "--t", "0.001", "--a", "1"], 1, "range"),
        (&["product-formula", "0"], 1, "zero_argument"),
        (&["hensel", "--poly", "x^^2", "--p", "7", "--k", "1"], 2, "parse"),
    ];
    for (args, code, id) in cases {
        let (got, v) = run_json(args);
        assert_eq!(got, *code, "{args:?}: {v}");
        assert_eq!(v["error_code"], *id, "{args:?}");
        assert_valid("error", &v);
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["frobnicate"][..], &["expand", "216"], &["lattice", "check"], &["borel", "--t"], &["expand", "1", "--p", "x"]] {
        let r = run(args);
        assert_eq!(r.exit_code, 2, "{args:?}");
        assert!(r.stdout.is_empty() && !r.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_on_every_node() {
    let nodes: &[&[&str]] = &[
        &[],
        &["expand"],
        &["valuation"],
        &["norm"],
        &["hensel"],
        &["sqrt"],
        &["product-formula"],
        &["code"],
        &["code", "encode"],
        &["code", "div"],
        &["pauli"],
        &["pauli", "normalizer-check"],
        &["lattice", "check"],
        &["borel"],
        &["seminorm-check"],
    ];
    for node in nodes {
        let mut args = node.to_vec();
        args.push("--help");
        let r = run(&args);
        assert_eq!(r.exit_code, 0, "{args:?}");
        assert!(r.stdout.contains("Usage:"), "{args:?}");
    }
}

#[test]
fn documented_examples() {
    assert_eq!(run(&["expand", "216", "--p", "5", "--r", "4"]).stdout, "1,331\n");
    let (_, v) = run_json(&["hensel", "--poly", "x^2-2", "--p", "7", "--k", "2", "--x0", "3"]);
    assert_eq!(v["residues"], serde_json::json!(["3", "10", "108"]));
    assert_eq!(v["sum"], "3 + 7·1 + 7²·2");
    let (_, v) = run_json(&["product-formula", "63/550"]);
    assert_eq!(v["product"], serde_json::json!({"num": "1", "den": "1"}));
    let (_, v) = run_json(&["lattice", "check", "--subspace", "2", "2"]);
    assert_eq!(v["distributive"]["holds"], false);
    let w = &v["distributive"]["witness"];
    let lines = [&w["a"], &w["b"], &w["c"]];
    assert!(lines.iter().all(|l| l.as_str().unwrap().starts_with("<(") && !l.as_str().unwrap().contains("),(")));
    assert!(lines[0] != lines[1] && lines[1] != lines[2] && lines[0] != lines[2]);
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["--json", "borel", "--t", "0.3", "--table"];
    assert_eq!(run(&args), run(&args));
    let args = ["seminorm-check", "--p", "7", "--samples", "20", "--seed", "9"];
    assert_eq!(run(&args), run(&args));
}

#[test]
fn binary_matches_dispatch() {
    let out = Command::new(env!("CARGO_BIN_EXE_padiclab")).args(["expand", "216", "--p", "3"]).output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0,0022\n");
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_padiclab")).args(["pauli", "order", "--n", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn precision_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_padiclab"))
        .args(["expand", "216", "--p", "5"])
        .env("PADICLAB_PRECISION", "3")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1,33\n");
}
