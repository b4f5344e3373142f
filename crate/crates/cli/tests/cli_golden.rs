//! End-to-end golden tests: the binary is invoked on fixture files and its
//! byte output and exit codes are pinned.

use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poset-forge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "expected success, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn homology_of_the_crown() {
    let file = data("crown4.poset");
    let text = stdout(&["poset", "homology", file.to_str().unwrap()]);
    assert_eq!(text, "H_0 = Z\nH_1 = Z\n");
}

#[test]
fn homology_of_the_sphere_with_max_degree() {
    let file = data("sphere.poset");
    let text = stdout(&["poset", "homology", file.to_str().unwrap(), "--max-degree", "2"]);
    assert_eq!(text, "H_0 = Z\nH_1 = 0\nH_2 = Z\n");
}

#[test]
fn poset_info_json_schema() {
    let file = data("crown4.poset");
    let text = stdout(&["poset", "info", file.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["elements"], serde_json::json!(["a", "b", "c", "d"]));
    assert_eq!(
        v["covers"],
        serde_json::json!([["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"]])
    );
    assert_eq!(v["connected"], serde_json::json!(true));
}

#[test]
fn cohomology_over_f5_and_symbolic() {
    let file = data("crown4.poset");
    let text = stdout(&[
        "poset", "cohomology", file.to_str().unwrap(), "--degree", "1", "--field", "5",
    ]);
    assert_eq!(text, "H^1 = Z/4\n");
    let text = stdout(&[
        "poset", "cohomology", file.to_str().unwrap(), "--degree", "1", "--field", "Q",
    ]);
    assert_eq!(text, "H^1 = Q*\n");
    let text = stdout(&[
        "poset", "cohomology", file.to_str().unwrap(), "--degree", "1", "--field", "closed:2",
    ]);
    assert_eq!(text, "H^1 = K*\n");
}

#[test]
fn matrix_canon_reproduces_the_worked_example() {
    let file = data("paper44.mat");
    let text = stdout(&["matrix", "canon", file.to_str().unwrap(), "--field", "Q", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["tree"], serde_json::json!([[3, 1], [3, 4], [4, 2]]));
    assert_eq!(v["c"][0][1], serde_json::json!("39/667"));
    assert_eq!(v["d"], serde_json::json!(["1", "667/13", "1/13", "23/13"]));
    assert_eq!(v["invariant"].as_array().unwrap().len(), 8);
}

#[test]
fn matrix_conj_detects_holonomy() {
    let file = data("paper44.mat");
    let text = stdout(&[
        "matrix",
        "conj",
        file.to_str().unwrap(),
        file.to_str().unwrap(),
        "--field",
        "Q",
    ]);
    assert!(text.starts_with("conjugate: true"));
}

#[test]
fn thin_classify_chain2_lists_five_classes() {
    let file = data("chain2.poset");
    let text = stdout(&["thin", "classify", file.to_str().unwrap(), "--field", "5"]);
    assert!(text.ends_with("total: 5\n"), "got: {text}");
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn thin_iso_separates_holonomy_classes() {
    let h1 = data("crown_h1.rep");
    let h2 = data("crown_h2.rep");
    let text = stdout(&[
        "thin", "iso", h1.to_str().unwrap(), h2.to_str().unwrap(), "--field", "5",
    ]);
    assert_eq!(text, "isomorphic: false\n");
    let text = stdout(&[
        "thin", "iso", h2.to_str().unwrap(), h2.to_str().unwrap(), "--field", "5",
    ]);
    assert!(text.starts_with("isomorphic: true"));
}

#[test]
fn thin_tensor_multiplies_holonomy() {
    let h2 = data("crown_h2.rep");
    let text = stdout(&[
        "thin", "tensor", h2.to_str().unwrap(), h2.to_str().unwrap(), "--field", "5",
    ]);
    assert_eq!(text, "support {a b c d} rel {a<c a<d b<c b<d} alpha {a c 4}\n");
}

#[test]
fn thin_access_walks_the_crown() {
    let h1 = data("crown_h1.rep");
    let text = stdout(&["thin", "access", h1.to_str().unwrap(), "--field", "5"]);
    assert_eq!(text.lines().count(), 4, "start plus three steps");
    assert!(text.lines().last().unwrap().contains("support {"));
}

#[test]
fn thin_sublattice_of_the_crown() {
    let file = data("crown4.poset");
    let text = stdout(&["thin", "sublattice", file.to_str().unwrap(), "c"]);
    assert!(text.contains("submodules: 5"));
    assert!(text.contains("distributive: true"));
}

#[test]
fn deform_trivial_and_nontrivial() {
    let poset = data("sphere.poset");
    let trivial = data("sphere_trivial.coc");
    let nontrivial = data("sphere_nontrivial.coc");
    let text = stdout(&[
        "deform",
        "trivial",
        poset.to_str().unwrap(),
        trivial.to_str().unwrap(),
        "--field",
        "5",
    ]);
    assert!(text.starts_with("trivial: true"));
    let text = stdout(&[
        "deform",
        "trivial",
        poset.to_str().unwrap(),
        nontrivial.to_str().unwrap(),
        "--field",
        "5",
    ]);
    assert_eq!(text, "trivial: false\n");
}

#[test]
fn deform_build_reports_dimension() {
    let poset = data("sphere.poset");
    let coc = data("sphere_nontrivial.coc");
    let text = stdout(&[
        "deform",
        "build",
        poset.to_str().unwrap(),
        coc.to_str().unwrap(),
        "--field",
        "5",
    ]);
    assert!(text.contains("dimension: 18"));
    assert!(text.contains("associative: true"));
}

#[test]
fn deform_iso_same_and_different_classes() {
    let poset = data("sphere.poset");
    let trivial = data("sphere_trivial.coc");
    let nontrivial = data("sphere_nontrivial.coc");
    let text = stdout(&[
        "deform",
        "iso",
        poset.to_str().unwrap(),
        nontrivial.to_str().unwrap(),
        nontrivial.to_str().unwrap(),
        "--field",
        "5",
    ]);
    assert!(text.starts_with("isomorphic: true"));
    let text = stdout(&[
        "deform",
        "iso",
        poset.to_str().unwrap(),
        trivial.to_str().unwrap(),
        nontrivial.to_str().unwrap(),
        "--field",
        "5",
    ]);
    assert_eq!(text, "isomorphic: false\n");
}

#[test]
fn deform_recognize_round_trips_a_table() {
    let table = data("chain2_table.json");
    let text = stdout(&["deform", "recognize", table.to_str().unwrap(), "--field", "5"]);
    assert!(text.starts_with("recognized: poset"));
    assert!(text.contains("elements: ea eb"));
    assert!(text.contains("relations: ea<eb"));
}

#[test]
fn k0_table_of_chain_and_vee() {
    let chain = data("chain3.poset");
    let text = stdout(&["k0", "table", chain.to_str().unwrap()]);
    assert_eq!(text, "elements: a b c\na: a a a\nb: a b b\nc: a b c\n");
    let vee = data("vee.poset");
    let text = stdout(&["k0", "table", vee.to_str().unwrap()]);
    assert!(text.contains("b: a b a"));
}

#[test]
fn poset_semigroup_table_of_chain2() {
    let file = data("chain2.poset");
    let text = stdout(&["poset", "semigroup", file.to_str().unwrap()]);
    assert!(text.starts_with("closed subposets: 5"));
}

#[test]
fn domain_errors_exit_one() {
    let out = run(&["poset", "homology", data("cycle.poset").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with("error: cycle detected"), "got: {err}");

    let out = run(&["k0", "table", data("crown4.poset").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a meet-semilattice"));

    // a finite-field command fed a symbolic field
    let out = run(&[
        "thin",
        "classify",
        data("chain2.poset").to_str().unwrap(),
        "--field",
        "closed:5",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["poset", "homology"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_byte_deterministic() {
    let file = data("sphere.poset");
    let a = stdout(&["poset", "semigroup", file.to_str().unwrap(), "--json"]);
    let b = stdout(&["poset", "semigroup", file.to_str().unwrap(), "--json"]);
    assert_eq!(a, b);
    let m = data("paper44.mat");
    let a = stdout(&["matrix", "canon", m.to_str().unwrap(), "--field", "Q", "--json"]);
    let b = stdout(&["matrix", "canon", m.to_str().unwrap(), "--field", "Q", "--json"]);
    assert_eq!(a, b);
}

#[test]
fn env_guard_override_is_honored() {
    // the sphere has 6 elements; a guard of 4 must refuse enumeration
    let file = data("sphere.poset");
    let out = Command::new(env!("CARGO_BIN_EXE_poset-forge"))
        .args(["poset", "semigroup", file.to_str().unwrap()])
        .env("POSET_FORGE_MAX_ELEMENTS", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds limit"));
}
