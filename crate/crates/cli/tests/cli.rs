use std::process::{Command, Output};

use borel_core::json::{
    complex_from_json, complex_to_json, ideal_from_json, ideal_to_json, module_from_json,
    module_to_json,
};
use borel_core::PrimeField;

fn borel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_borel"))
        .args(args)
        .env_remove("BOREL_PRIME")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

fn ok(args: &[&str]) -> String {
    let o = borel(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o)
}

fn tmp(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("borel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["dual", "--gens", "y2*y3"]), "x1^2, x2^3");
    assert_eq!(
        ok(&["degree-map", "--delta", "5,7", "--value", "2,1,0,3,1"]),
        "0,0,1,2,0,0,1,0"
    );
    assert_eq!(ok(&["member", "--monomial", "1", "--gens", "x1"]), "false");
    assert!(ok(&[
        "oracle",
        "duality-complement",
        "--gens",
        "y2*y3",
        "--box",
        "4,4"
    ])
    .contains("pass"));
    assert_eq!(
        ok(&["oracle", "involution", "--box", "3,3"]),
        "involution: pass (20 checked)"
    );
    assert!(ok(&["oracle", "ek-betti", "--gens", "x2^2"]).starts_with("pass: complex Betti [3, 2]"));
}

#[test]
fn input_errors_exit_two_with_one_line() {
    for args in [
        vec!["dual", "--gens", "x1^^2"],
        vec!["frobnicate"],
        vec!["degree-map", "--delta", "5,7", "--value", "2,1"],
        vec!["isotone", "dual", "[3,2|inf]"],
        vec!["--field", "prime:4", "betti", "--gens", "x1"],
        vec!["resolve", "--engine", "ek", "--quotient", "--gens", "x1"],
    ] {
        let o = borel(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert_eq!(err.trim_end().lines().count(), 1, "{args:?}: {err}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn guard_exceeded_is_an_input_error() {
    let o = borel(&[
        "--max-candidates",
        "3",
        "dual",
        "--gens",
        "x1^2*x2^2*x3^2, x1*x2^5*x3^3",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn failed_checks_exit_one() {
    let complex = ok(&[
        "--json",
        "resolve",
        "--engine",
        "minimal-shift",
        "--gens",
        "x1^2",
    ]);
    let path = tmp("x1sq.json", &complex);
    assert!(ok(&["verify", "--complex", &path, "--gens", "x1^2"]).starts_with("pass"));
    let o = borel(&["verify", "--complex", &path, "--gens", "x1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("fail"));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--json",
        "resolve",
        "--engine",
        "ek",
        "--gens",
        "x1^3*x2^2*x3, x1^4*x3^2",
    ];
    assert_eq!(ok(&args), ok(&args));
    let args = [
        "--json",
        "oracle",
        "double-dual",
        "--count",
        "15",
        "--seed",
        "9",
    ];
    assert_eq!(ok(&args), ok(&args));
}

#[test]
fn ideal_json_round_trips() {
    let out = ok(&["--json", "dual", "--gens", "y1*y4, y2*y3"]);
    assert_eq!(ideal_to_json(&ideal_from_json(&out).unwrap()), out);
    // the emitted dual feeds back in and dualizes to the original
    assert_eq!(
        ok(&["--json", "dual", &out]),
        r#"{"alphabet":"y","gens":["y1*y4","y2*y3"]}"#
    );
    let path = tmp("dual.json", &out);
    assert_eq!(ok(&["dual", &path]), "y1*y4, y2*y3");
}

#[test]
fn complex_json_round_trips() {
    let f = PrimeField::default();
    for engine in ["koszul", "minimal-shift", "ek"] {
        let out = ok(&[
            "--json",
            "resolve",
            "--engine",
            engine,
            "--gens",
            "x1^2*x2*x3, x1*x2^3*x3",
        ]);
        let c = complex_from_json(f, &out).unwrap();
        assert_eq!(complex_to_json(engine, &c), out);
    }
}

#[test]
fn module_json_round_trips_and_dualizes_back() {
    let f = PrimeField::default();
    let m = ok(&[
        "--json",
        "shiftmod",
        "from-ideal",
        "--gens",
        "x1*x3, x2^2",
        "--m",
        "3",
        "--n",
        "2",
    ]);
    assert_eq!(module_to_json(&module_from_json(f, &m).unwrap()), m);
    let path = tmp("module.json", &m);
    assert!(ok(&["shiftmod", "validate", &path]).starts_with("valid"));
    let w = ok(&["--json", "shiftmod", "dual", &path]);
    let wpath = tmp("dual-module.json", &w);
    assert_eq!(ok(&["--json", "shiftmod", "dual", &wpath]), m);
    let degrees = ok(&["shiftmod", "degree-map", &path]);
    assert!(degrees.contains("2,0,0,0 -> 0,0,3 (dim 1)"), "{degrees}");
}

#[test]
fn betti_tables_print_by_total_degree() {
    let table = ok(&["betti", "--engine", "ek", "--gens", "x2^2"]);
    assert_eq!(table, "        2    3\n   0    3    .\n   1    .    2");
    let json = ok(&[
        "--json",
        "betti",
        "--engine",
        "koszul",
        "--gens",
        "x1^2*x2*x3, x1*x2^3*x3, x1*x2*x3^4",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let total: u64 = v["betti"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["count"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 7);
}

#[test]
fn fixtures_verify() {
    for name in ["pd1", "pd2"] {
        let out = ok(&["verify", "--fixture", name]);
        assert!(out.ends_with("instances pass"), "{out}");
        assert!(!out.contains("FAIL"), "{out}");
    }
}

#[test]
fn rational_field() {
    let out = ok(&[
        "--field",
        "rational",
        "resolve",
        "--engine",
        "minimal-shift",
        "--gens",
        "x1^3*x2^4, x1^3*x2^3*x3",
    ]);
    assert!(out.starts_with("F0:"), "{out}");
}

#[test]
fn remaining_verbs() {
    assert_eq!(
        ok(&["gens", "--monomial", "--gens", "x2^2"]),
        "x1^2, x1*x2, x2^2"
    );
    assert_eq!(
        ok(&["gens", "--sst", "--gens", "x1^2, x1*x2, x2^3"]),
        "x1*x2, x2^3"
    );
    assert_eq!(ok(&["hilb", "--gens", "x2^2", "--max-deg", "3"]), "0,0,3,4");
    assert_eq!(
        ok(&["ulex", "--values", "1,2,3,4", "--truncate", "4"]),
        "x1^2, x1*x2^2, x1*x2*x3^2"
    );
    assert_eq!(
        ok(&["ulex", "--values", "2,3", "--side", "lambda"]),
        "y1^2, y1*y2^2"
    );
    assert_eq!(
        ok(&["isotone", "dual", "[2,2,4,5,5,7|inf]"]),
        "[1,3,3,4,6,6|7]"
    );
    assert_eq!(
        ok(&["isotone", "meet", "[1,1,2,3|inf]", "[1,2,2,2,3|inf]"]),
        "[1,1,2,2,3|inf]"
    );
    assert_eq!(ok(&["isotone", "leq", "[1,2|inf]", "[2,2|inf]"]), "true");
    assert_eq!(ok(&["isotone", "lex", "[1,3|inf]", "[2,2|inf]"]), "less");
    assert!(ok(&["dual", "--check", "--gens", "x1*x3, x2^2"]).ends_with("double dual: pass"));
}
