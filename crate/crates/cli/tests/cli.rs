//! End-to-end tests of the `rcwb` binary and the parsing layer.

use std::io::Write;
use std::process::{Command, Output};

use rcwb::model_file::{parse_calg_model, parse_model, print_model};

fn rcwb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rcwb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_file(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().expect("temp file");
    f.write_all(content.as_bytes()).expect("write");
    f
}

const DEMO: &str = "
# two atoms and a few maps
object X = { x0, x1 }
object Y = { y0 }
map f : X -> Y { x0 -> y0 }
map k : X -> Y { x1 -> y0 }
map e : X -> X { x0 -> x0 }
map pr : X * Y -> X { (x0,y0) -> x0 }
";

#[test]
fn eval_prints_graph_tables() {
    let file = write_file(DEMO);
    let path = file.path().to_str().unwrap();
    let out = rcwb(&["eval", path, "-e", "rest(f)"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "{x0 -> x0} : X -> X"
    );
    let out = rcwb(&["eval", path, "-e", "f ; id(Y)"]);
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "{x0 -> y0} : X -> Y"
    );
    let out = rcwb(&["eval", path, "-e", "cpair(f, zero(X,X))"]);
    let shown = String::from_utf8_lossy(&out.stdout);
    assert!(shown.contains("0:y0"), "{shown}");
}

#[test]
fn eval_reports_domain_errors_with_spans() {
    let file = write_file(DEMO);
    let path = file.path().to_str().unwrap();
    // incompatible join names the offending pair
    let out = rcwb(&["eval", path, "-e", "join(f, pr)"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("error at 1:1"), "{err}");
    // unknown map and parse garbage also carry locations
    let out = rcwb(&["eval", path, "-e", "rest(nope)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown map"));
    let out = rcwb(&["eval", path, "-e", "rest(f"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_passes_on_the_demo_model() {
    let out = rcwb(&[
        "check", "--demo", "--suite", "axioms", "--max-size", "2", "--max-objects", "10",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("0 failed"), "{text}");
}

#[test]
fn check_emits_records() {
    let out = rcwb(&[
        "check", "--demo", "--suite", "axioms", "--max-size", "2", "--max-objects", "8",
        "--report", "records",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid record");
        assert!(v.get("suite").is_some() && v.get("law").is_some() && v.get("status").is_some());
    }
}

#[test]
fn check_fails_on_a_mutated_fixture_with_counterexample() {
    let out = rcwb(&[
        "check", "--demo", "--suite", "axioms", "--max-size", "2", "--max-objects", "10",
        "--mutate", "restriction-zero",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("counterexample"), "{text}");
}

#[test]
fn check_rejects_bad_usage() {
    let out = rcwb(&["check", "--demo", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let out = rcwb(&["check", "/nonexistent/path.rcm"]);
    assert_eq!(out.status.code(), Some(2));
    let out = rcwb(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn parse_validates_declarations() {
    // dangling element reference
    let bad = "object X = { x0 }\nmap f : X -> X { x1 -> x0 }";
    match parse_model(bad) {
        Err(rcwb::CliError::Validation { name, .. }) => assert_eq!(name, "f"),
        other => panic!("expected a validation error, got {other:?}"),
    }
    // duplicate map name
    let bad = "object X = { x0 }\nmap f : X -> X { }\nmap f : X -> X { }";
    assert!(matches!(
        parse_model(bad),
        Err(rcwb::CliError::Validation { .. })
    ));
    // duplicate element in one object
    let bad = "object X = { x0, x0 }";
    assert!(matches!(
        parse_model(bad),
        Err(rcwb::CliError::Validation { .. })
    ));
    // parse error carries the position
    let bad = "object X = { x0 }\nmap f | X -> X { }";
    match parse_model(bad) {
        Err(rcwb::CliError::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("expected a parse error, got {other:?}"),
    }
    // empty file is a valid empty model
    let model = parse_model("").expect("empty model");
    assert!(model.atoms().is_empty());
    assert!(model.named_maps().is_empty());
}

#[test]
fn print_parse_round_trip() {
    let model = parse_model(DEMO).expect("parses");
    let printed = print_model(&model);
    let again = parse_model(&printed).expect("round trip parses");
    assert_eq!(model.atoms(), again.atoms());
    assert_eq!(model.named_maps(), again.named_maps());
}

#[test]
fn calg_files_parse_and_evaluate() {
    let text = "
object A = bring(1)
object B = bring(2)
# the inverse-image homomorphism of a partial point
map f : A -> B { 00 -> 0, 10 -> 1, 01 -> 0, 11 -> 1 }
";
    let parsed = parse_calg_model(text).expect("parses");
    assert_eq!(parsed.rings.len(), 2);
    assert_eq!(parsed.maps.len(), 1);
    let file = write_file(text);
    let path = file.path().to_str().unwrap();
    let out = rcwb(&["eval", path, "--model", "calg", "-e", "rest(f)"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let out = rcwb(&["eval", path, "--model", "calg", "-e", "classify(f)"]);
    assert!(out.status.success());
    // a non-homomorphism table is rejected
    let bad = "
object A = bring(1)
map f : A -> A { 0 -> 1, 1 -> 1 }
";
    assert!(parse_calg_model(bad).is_err());
}

#[test]
fn check_calg_model_passes() {
    let out = rcwb(&[
        "check", "--demo", "--model", "calg", "--suite", "axioms", "--max-size", "2",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}

#[test]
fn counterexamples_reevaluate_to_violations() {
    // run a broken fixture, pull the first R1 counterexample out of the
    // records, rebuild the map it names, and confirm the violation directly
    let out = rcwb(&[
        "check", "--demo", "--suite", "axioms", "--max-size", "2", "--max-objects", "10",
        "--mutate", "restriction-zero", "--report", "records",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    let record = text
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).expect("record"))
        .find(|v| v["law"] == "R1" && v["status"] == "fail")
        .expect("R1 fails under the fixture");
    let cex = record["counterexample"].as_str().expect("counterexample present");
    let decl = cex
        .split("; lhs")
        .next()
        .and_then(|s| s.splitn(2, ": ").nth(1))
        .expect("embedded map declaration");
    let source = format!("object X = {{ x0, x1 }}\nobject Y = {{ y0 }}\n{decl}\n");
    let model = parse_model(&source).expect("counterexample parses in the model format");
    let f = model.named_maps().values().next().expect("one map").clone();
    // under the fixture the restriction is the zero map, so R1 collapses
    let broken_rest = rcwb_core::finpar::PartialMap::zero(f.dom(), f.dom());
    assert_ne!(broken_rest.compose(&f).unwrap(), f, "the violation re-evaluates");
}

#[test]
fn thm2_selection_runs_only_the_equivalence_suites() {
    let out = rcwb(&[
        "check", "--demo", "--suite", "thm2", "--max-size", "2", "--max-objects", "8",
        "--report", "records",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let mut seen = 0;
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("record");
        let suite = v["suite"].as_str().unwrap();
        assert!(suite.starts_with("thm2:"), "unexpected suite {suite}");
        seen += 1;
    }
    assert!(seen > 10);
}
