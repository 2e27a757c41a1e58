use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use dforms_cli::document::TensorDocument;
use dforms_cli::report::{CheckStatus, Quantity, Report};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = vec![];
    let mut err = vec![];
    let mut argv = vec!["dforms"];
    argv.extend_from_slice(args);
    let code = dforms_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn report(args: &[&str]) -> Report {
    let mut argv = args.to_vec();
    argv.push("--json");
    let (code, out, err) = run(&argv);
    assert_eq!(code, 0, "{err}");
    Report::from_json(&out).unwrap()
}

fn value<'a>(r: &'a Report, key: &str) -> &'a Quantity {
    r.sections
        .iter()
        .flat_map(|s| &s.rows)
        .find(|row| row.key == key)
        .map(|row| &row.value)
        .unwrap_or_else(|| panic!("no row {key}"))
}

fn number(r: &Report, key: &str) -> (String, i32) {
    match value(r, key) {
        Quantity::Number { value, pi_pow, .. } => (value.clone(), *pi_pow),
        q => panic!("{key} is {q:?}"),
    }
}

fn flag(r: &Report, key: &str) -> bool {
    match value(r, key) {
        Quantity::Flag { value } => *value,
        q => panic!("{key} is {q:?}"),
    }
}

fn temp_doc(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn sphere_invariants() {
    let path = fixture("sphere4.json");
    let r = report(&["invariants", "--input", path.to_str().unwrap()]);
    assert_eq!(number(&r, "scal"), ("12".into(), 0));
    assert_eq!(number(&r, "h_4"), ("6".into(), 0));
    assert_eq!(number(&r, "|W|^2"), ("0".into(), 0));
    let r = report(&["pontrjagin", "--input", path.to_str().unwrap(), "--k", "1", "--oracle"]);
    assert_eq!(number(&r, "p_1"), ("0".into(), 0));
}

#[test]
fn product_invariants_and_classification() {
    let path = fixture("s2xs2.json");
    let r = report(&["invariants", "--input", path.to_str().unwrap()]);
    assert_eq!(number(&r, "scal"), ("4".into(), 0));
    assert_eq!(number(&r, "h_4"), ("2".into(), 0));
    let r = report(&["classify", "--input", path.to_str().unwrap()]);
    assert!(flag(&r, "einstein"));
    assert_eq!(number(&r, "lambda"), ("1".into(), 0));
    assert!(flag(&r, "thorpe (k = 1)"));
    let unequal = temp_doc(
        r#"{"n": 4, "tensor": {"type": "product_of_space_forms", "dims": [2, 2], "kappas": ["1", "2"]}}"#,
    );
    let r = report(&["classify", "--input", unequal.path().to_str().unwrap()]);
    assert!(!flag(&r, "thorpe (k = 1)"));
}

#[test]
fn flat_tensor_has_zero_invariants() {
    let path = fixture("flat.json");
    let r = report(&["invariants", "--input", path.to_str().unwrap()]);
    for row in r.sections.iter().flat_map(|s| &s.rows) {
        match &row.value {
            Quantity::Number { value, .. } => assert_eq!(value, "0", "{}", row.key),
            Quantity::Tensor { terms, .. } => assert!(terms.is_empty(), "{}", row.key),
            _ => {}
        }
    }
}

#[test]
fn conformally_flat_model_is_classified() {
    let doc = temp_doc(
        r#"{"n": 4, "tensor": {"type": "conformally_flat", "h": [
            {"i": 1, "j": 1, "value": "2"}, {"i": 1, "j": 3, "value": "-1/2"}, {"i": 4, "j": 4, "value": "3"}]}}"#,
    );
    let r = report(&["classify", "--input", doc.path().to_str().unwrap()]);
    assert!(flag(&r, "1-conformally flat"));
}

#[test]
fn complex_projective_plane_pins_three() {
    let path = fixture("cp2.json");
    let r = report(&["pontrjagin", "--input", path.to_str().unwrap(), "--k", "1", "--oracle"]);
    assert_eq!(number(&r, "p_1 * volume"), ("3".into(), 0));
    assert!(r.failures.is_empty());
    // an explicit flag overrides the document's volume
    let r = report(&["pontrjagin", "--input", path.to_str().unwrap(), "--k", "1", "--volume", "pi^2"]);
    assert_eq!(number(&r, "p_1 * volume"), ("6".into(), 0));
}

#[test]
fn mixed_partitions_at_dimension_eight() {
    let doc = temp_doc(r#"{"n": 8, "tensor": {"type": "random_algebraic", "seed": 3}}"#);
    for partition in ["2", "0,1"] {
        let r = report(&["pontrjagin", "--input", doc.path().to_str().unwrap(), "--partition", partition, "--oracle"]);
        assert!(flag(&r, "formula = wedge of single forms"), "{partition}");
    }
    let path = fixture("s4xs4.json");
    let r = report(&["pontrjagin", "--input", path.to_str().unwrap(), "--partition", "2", "--oracle"]);
    assert!(flag(&r, "formula = wedge of single forms"));
}

#[test]
fn forms_above_the_middle_dimension_list_coefficients() {
    let doc = temp_doc(r#"{"n": 5, "tensor": {"type": "random_algebraic", "seed": 1}}"#);
    let r = report(&["pontrjagin", "--input", doc.path().to_str().unwrap(), "--k", "1", "--oracle"]);
    match value(&r, "P_1") {
        Quantity::Form { degree, pi_pow, .. } => assert_eq!((*degree, *pi_pow), (4, -2)),
        q => panic!("{q:?}"),
    }
    assert!(r.notes.iter().any(|n| n.contains("only the 4-form")));
}

#[test]
fn documents_round_trip() {
    for name in ["sphere4.json", "s2xs2.json", "cp2.json", "s4xs4.json", "flat.json", "components.json"] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let doc = TensorDocument::parse(&text).unwrap();
        assert_eq!(TensorDocument::parse(&doc.to_json()).unwrap(), doc, "{name}");
        doc.build().unwrap();
    }
}

#[test]
fn reports_round_trip_and_are_deterministic() {
    let path = fixture("components.json");
    let p = path.to_str().unwrap();
    for args in [
        vec!["invariants", "--input", p, "--decimal"],
        vec!["classify", "--input", p],
        vec!["pontrjagin", "--input", p, "--k", "1", "--oracle", "--volume=-3/2*pi^2"],
        vec!["selftest", "--scope", "volume", "--seed", "9"],
    ] {
        let mut json = args.clone();
        json.push("--json");
        let (code, a, err) = run(&json);
        assert_eq!(code, 0, "{args:?}: {err}");
        let (_, b, _) = run(&json);
        assert_eq!(a, b);
        let r = Report::from_json(&a).unwrap();
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        let (_, t1, _) = run(&args);
        let (_, t2, _) = run(&args);
        assert_eq!(t1, t2);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bogus"]).0, 1);
    assert_eq!(run(&["pontrjagin", "--input", "x.json"]).0, 1);
    assert_eq!(run(&["invariants", "--input", "/nonexistent/doc.json"]).0, 1);
    assert_eq!(run(&["selftest", "--scope", "nope"]).0, 1);
    let bad = temp_doc(r#"{"n": 4, "tensor": {"type": "components", "entries": [{"i": [1, 2], "j": [3, 4], "value": "1"}]}}"#);
    let (code, _, err) = run(&["invariants", "--input", bad.path().to_str().unwrap()]);
    assert_eq!(code, 2, "{err}");
    let sphere = fixture("sphere4.json");
    let (code, _, err) = run(&["pontrjagin", "--input", sphere.to_str().unwrap(), "--k", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("4k"), "{err}");
    let malformed = temp_doc(r#"{"n": 4, "tensor": {"type": "constant_curvature", "kappa": "1"}, "orientation": 2}"#);
    assert_eq!(run(&["classify", "--input", malformed.path().to_str().unwrap()]).0, 2);
    assert_eq!(run(&["models"]).0, 0);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn reversed_orientation_flips_scalars() {
    let doc = temp_doc(r#"{"n": 4, "tensor": {"type": "fubini_study", "c": "4"}, "orientation": -1}"#);
    let r = report(&["pontrjagin", "--input", doc.path().to_str().unwrap(), "--k", "1", "--oracle"]);
    assert_eq!(number(&r, "p_1"), ("-6".into(), -2));
    assert!(r.failures.is_empty());
}

#[test]
fn selftest_scope_and_dimension() {
    let r = report(&["selftest", "--scope", "mu-star", "--n", "6"]);
    assert_eq!(r.sections.len(), 1);
    assert_eq!(r.sections[0].title, "mu-star");
    for row in &r.sections[0].rows {
        if let Quantity::Check { status, .. } = &row.value {
            assert_eq!(*status, CheckStatus::Holds, "{}", row.key);
        }
    }
}

#[test]
fn default_selftest_passes() {
    let (code, out, err) = run(&["selftest"]);
    assert_eq!(code, 0, "{err}\n{out}");
    assert!(out.contains("known defect, refuted"));
    assert!(!out.contains("FAILED"));
}

#[test]
fn injected_fault_is_reported_with_counterexample() {
    let (code, out, _) = run(&["selftest", "--scope", "basic-maps", "--cases", "30", "--inject-fault", "negate-adjoint-bianchi"]);
    assert_eq!(code, 3);
    assert!(out.contains("FAILURE: adjoint-bianchi-transpose"));
    assert!(out.contains("input 1: DoubleForm[n="));
}

#[test]
fn binary_reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dforms"))
        .args(["invariants", "--input", "-", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"n": 3, "tensor": {"type": "constant_curvature", "kappa": "-1"}}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let r = Report::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(number(&r, "scal"), ("-6".into(), 0));
}

#[test]
fn binary_exit_status_for_validation_failures() {
    let status = Command::new(env!("CARGO_BIN_EXE_dforms"))
        .args(["classify", "--input", fixture("missing.json").to_str().unwrap()])
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));
}
