use std::process::{Command, Output};
use ydcoh::hopf::{builders, io};

fn ydcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ydcoh")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<String> {
    stdout(o).lines().map(str::to_string).collect()
}

#[test]
fn taft_second_cohomology() {
    let o = ydcoh(&["dy-dim", "--algebra", "taft:3", "--degree", "2"]);
    assert!(o.status.success());
    assert!(lines(&o).contains(&"dim H^2 = 1".to_string()));
}

#[test]
fn bar_ui_third_cohomology_by_cover() {
    let o = ydcoh(&["dy-dim", "--algebra", "barUi", "--degree", "3", "--via", "cover"]);
    assert!(o.status.success());
    let l = lines(&o);
    assert!(l.contains(&"10 - 9 + 2 = 3".to_string()), "{l:?}");
    assert!(l.contains(&"dim H^3 = 3".to_string()));
}

#[test]
fn bk_odd_degree_vanishes() {
    let o = ydcoh(&["dy-dim", "--algebra", "bk:1", "--degree", "5"]);
    assert!(o.status.success());
    assert!(lines(&o).contains(&"dim H^5 = 0".to_string()));
}

#[test]
fn json_output_is_deterministic_and_carries_provenance() {
    let args = ["dim-formula", "-a", "barUi", "-d", "2..3", "--format", "json"];
    let a = ydcoh(&args);
    let b = ydcoh(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let degrees = doc["result"]["degrees"].as_array().unwrap();
    assert_eq!(degrees.len(), 2);
    let three = &degrees[1];
    assert_eq!(three["route"], "dimension formula (hom)");
    let dims: Vec<u64> = three["terms"].as_array().unwrap().iter().map(|t| t["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, [10, 9, 2]);
    assert_eq!(three["dim"], 3);
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["dy-dim", "-a", "taft:3", "-d", "0..3", "--format", "json"];
    let one = Command::new(env!("CARGO_BIN_EXE_ydcoh")).args(args).env("YDCOH_THREADS", "1").output().unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_ydcoh")).args(args).env("YDCOH_THREADS", "4").output().unwrap();
    assert!(one.status.success());
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn direct_and_formula_routes_agree_on_taft() {
    let direct = ydcoh(&["dy-dim", "-a", "taft:3", "-d", "2,3", "--format", "json"]);
    let formula = ydcoh(&["dy-dim", "-a", "taft:3", "-d", "2,3", "--via", "invariants", "--format", "json"]);
    let dims = |o: &Output| -> Vec<u64> {
        let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        doc["result"]["degrees"].as_array().unwrap().iter().map(|d| d["dim"].as_u64().unwrap()).collect()
    };
    assert_eq!(dims(&direct), [1, 0]);
    assert_eq!(dims(&direct), dims(&formula));
}

#[test]
fn every_builtin_validates() {
    for a in ["bk:1", "bk:2", "taft:3", "taft:4", "barUi", "uq:3"] {
        let o = ydcoh(&["validate", "-a", a]);
        assert!(o.status.success(), "{a}");
        assert!(stdout(&o).contains("all axioms hold"));
    }
}

#[test]
fn algebra_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("taft3.json");
    io::save(&builders::taft(3).unwrap(), &path).unwrap();
    let p = path.to_str().unwrap();
    let o = ydcoh(&["dy-dim", "-a", p, "-d", "2"]);
    assert!(o.status.success());
    assert!(lines(&o).contains(&"dim H^2 = 1".to_string()));
    let o = ydcoh(&["dy-dim", "-a", p, "-d", "2", "--via", "cover"]);
    assert!(lines(&o).contains(&"dim H^2 = 1".to_string()), "{}", stdout(&o));
}

fn write_mutated(dir: &tempfile::TempDir, edit: impl FnOnce(&mut serde_json::Value)) -> String {
    let mut doc: serde_json::Value = serde_json::from_str(&io::to_json(&builders::bk(1).unwrap())).unwrap();
    edit(&mut doc);
    let path = dir.path().join("mutated.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn broken_coassociativity_is_a_validation_error() {
    let dir = tempfile::tempdir().unwrap();
    // Delta(x) = 1(x)x + 2 x(x)g: the two iterated coproducts differ on x(x)g(x)g
    let path = write_mutated(&dir, |doc| {
        for t in doc["comult"].as_array_mut().unwrap() {
            if t[0] == 6 && t[1] == 1 {
                t[2] = serde_json::json!(["2"]);
            }
        }
    });
    let o = ydcoh(&["validate", "-a", &path]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("coassociativity fails at"), "{err}");
}

#[test]
fn non_canonical_coefficient_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_mutated(&dir, |doc| {
        doc["conductor"] = serde_json::json!(4);
        for key in ["unit", "counit", "mult", "comult", "antipode"] {
            for t in doc[key].as_array_mut().unwrap() {
                t[2].as_array_mut().unwrap().push(serde_json::json!("0"));
            }
        }
        doc["unit"][0][2] = serde_json::json!(["1", "0", "1"]);
    });
    let o = ydcoh(&["validate", "-a", &path]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("parse error"));
}

#[test]
fn unknown_flags_and_algebras_are_rejected() {
    assert_eq!(ydcoh(&["dy-dim", "-a", "taft:3", "-d", "2", "--colour"]).status.code(), Some(2));
    assert_eq!(ydcoh(&["dy-dim", "-a", "frobnitz", "-d", "2"]).status.code(), Some(2));
    assert!(!ydcoh(&["blocks", "-a", "taft:3"]).status.success());
    assert!(!ydcoh(&["dy-dim", "-a", "taft:3"]).status.success());
}

#[test]
fn sequences_reproduce_explicit_cocycles() {
    let o = ydcoh(&["sequence-to-cocycle", "-a", "taft:3"]);
    assert!(o.status.success());
    assert!(lines(&o).contains(&"class / [explicit 2-cocycle] = 1".to_string()));
    let o = ydcoh(&["sequence-to-cocycle", "-a", "bk:2", "--pair", "2,1"]);
    assert!(lines(&o).contains(&"class / [x_j (x) x_i g] = 1".to_string()));
}

#[test]
fn principal_block_formula_for_small_quantum_group() {
    let o = ydcoh(&["blocks", "-a", "uq:3", "-d", "2,3"]);
    assert!(o.status.success());
    let l = lines(&o);
    assert!(l.contains(&"2 - 2 = 0".to_string()));
    assert!(l.contains(&"8 - 9 + 2 = 1".to_string()));
}
