use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use intcat::base::{FinMap, FinObj};
use intcat::internal::InternalFunctor;
use intcat::io::{parse_cat, parse_functor, serialize_category, serialize_functor};
use intcat::limits2d::free_arrow;
use intcat::transfer::{disc, indisc_map};
use serde_json::Value;

fn fixture() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures/free_arrow.json")
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_intcat")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn structured(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "structured"]);
    let o = run(&all);
    (o.status.code().unwrap(), serde_json::from_str(&stdout(&o)).unwrap())
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// The inclusion of the target object of the walking arrow.
fn endpoint_file(name: &str) -> PathBuf {
    let two = free_arrow().into_cat();
    let point = disc(&FinObj::new(1)).into_cat();
    let f = InternalFunctor::from_tables(&point, &two, vec![1], vec![two.identity(1)]).unwrap();
    scratch(name, &serialize_functor(&f))
}

#[test]
fn validate_accepts_the_fixture() {
    let o = run(&["validate", path_str(&fixture())]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid category: 2 objects, 3 arrows\n"));
    let (code, doc) = structured(&["validate", path_str(&fixture())]);
    assert_eq!(code, 0);
    assert_eq!(parse_cat(&doc.to_string()).unwrap(), free_arrow().into_cat());
}

#[test]
fn validate_reports_axiom_violations() {
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(fixture()).unwrap()).unwrap();
    // The identity at object 1 replaced by the non-identity arrow 0 -> 1.
    doc["i"]["table"] = serde_json::json!([0, 1]);
    let path = scratch("bad_identity.json", &doc.to_string());
    let o = run(&["validate", path_str(&path)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid: "));
}

#[test]
fn malformed_input_is_an_input_error() {
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(fixture()).unwrap()).unwrap();
    doc["d0"]["table"] = serde_json::json!([0, 1]);
    let path = scratch("short_table.json", &serde_json::to_string_pretty(&doc).unwrap());
    let o = run(&["validate", path_str(&path)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("d0.table"));

    let missing = run(&["power", "/nonexistent/category.json"]);
    assert_eq!(missing.status.code(), Some(2));
    let garbage = scratch("garbage.json", "{ not json");
    assert_eq!(run(&["validate", path_str(&garbage)]).status.code(), Some(2));
    let other = scratch("other.json", "{\"size\": 3}");
    assert_eq!(run(&["validate", path_str(&other)]).status.code(), Some(2));
}

#[test]
fn validate_reads_functors() {
    let path = endpoint_file("validate_endpoint.json");
    let o = run(&["validate", path_str(&path)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid functor"));
}

#[test]
fn oracle_compare_matches_on_the_fixture() {
    let f = path_str(&fixture()).to_string();
    let o = run(&["oracle-compare", "--hom", &f, &f]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("match: internal hom has 3 objects and 6 arrows"), "{text}");
    let (code, doc) = structured(&["oracle-compare", "--power", &f]);
    assert_eq!(code, 0);
    assert_eq!(doc["match"], Value::Bool(true));
    assert_eq!(doc["power"]["arrows"], 6);
}

#[test]
fn constructions_print_parsable_documents() {
    let f = path_str(&fixture()).to_string();
    let (code, doc) = structured(&["hom", &f, &f]);
    assert_eq!(code, 0);
    assert_eq!(parse_cat(&doc["carrier"].to_string()).unwrap().arrows(), 6);
    for cmd in ["power", "copower"] {
        let (code, doc) = structured(&[cmd, &f]);
        assert_eq!(code, 0);
        let carrier = parse_cat(&doc["carrier"].to_string()).unwrap();
        assert!(carrier.is_valid());
    }
    let g = endpoint_file("factor_endpoint.json");
    for ofs in ["epi-mono", "iso-all"] {
        let (code, doc) = structured(&["factor", path_str(&g), "--ofs", ofs]);
        assert_eq!(code, 0);
        assert!(parse_functor(&doc["left"].to_string()).unwrap().is_valid());
        assert!(parse_functor(&doc["right"].to_string()).unwrap().is_valid());
    }
}

#[test]
fn size_bound_is_enforced() {
    let f = path_str(&fixture()).to_string();
    let o = run(&["hom", &f, &f, "--size-bound", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("size bound"));
    assert_eq!(run(&["hom", &f, &f, "--size-bound", "0"]).status.code(), Some(2));
}

#[test]
fn classify_and_section_exit_codes() {
    let endpoint = endpoint_file("classify_endpoint.json");
    let (code, doc) = structured(&["classify", path_str(&endpoint)]);
    assert_eq!(code, 0);
    assert_eq!(parse_functor(&doc["chi"].to_string()).unwrap().f0().table(), &[0, 1]);
    // The endpoint is not surjective on objects.
    assert_eq!(run(&["section", path_str(&endpoint)]).status.code(), Some(1));

    let two = free_arrow().into_cat();
    let ends = InternalFunctor::from_tables(&disc(&FinObj::new(2)).into_cat(), &two, vec![0, 1], vec![0, 2]).unwrap();
    let ends = scratch("ends.json", &serialize_functor(&ends));
    let o = run(&["classify", path_str(&ends)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("refuted"));

    let e0 = FinMap::new(FinObj::new(3), FinObj::new(2), vec![0, 1, 1]).unwrap();
    let epi = scratch("ff_epi.json", &serialize_functor(&indisc_map(&e0)));
    let (code, doc) = structured(&["section", path_str(&epi)]);
    assert_eq!(code, 0);
    assert!(doc["unit"].is_object());
}

#[test]
fn audit_reports_nno_refuted() {
    let o = run(&["audit", "--seed", "7", "--max-objects", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let nno = text.lines().find(|l| l.starts_with("nno ")).unwrap();
    assert!(nno.contains("refuted"), "{nno}");
    let (_, doc) = structured(&["audit", "--seed", "7", "--suite", "nno"]);
    assert_eq!(doc["entries"][3]["axiom"], "nno");
    assert_eq!(doc["entries"][3]["verdict"], "refuted");
    assert_eq!(doc["entries"][0]["verdict"], "skipped");
}

#[test]
fn audit_output_is_byte_identical() {
    let args = ["audit", "--seed", "11", "--suite", "finiteLimits", "--suite", "wellPointed2", "--format", "structured"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn empty_corpus_audit_skips() {
    let (code, doc) = structured(&["audit", "--max-objects", "0"]);
    assert_eq!(code, 0);
    assert!(doc["entries"].as_array().unwrap().iter().all(|e| e["verdict"] == "skipped"));
}

#[test]
fn unknown_suite_is_rejected() {
    assert_eq!(run(&["audit", "--suite", "toposes"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn serialized_categories_validate() {
    let path = scratch("disc3.json", &serialize_category(&disc(&FinObj::new(3))));
    let o = run(&["validate", path_str(&path)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("valid category: 3 objects, 3 arrows"));
}
