use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn uvbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uvbraid")).args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let out = uvbraid(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn vcd_example() {
    let v = json_of(&["vcd", "--n", "6", "--c", "1"]);
    assert_eq!(v["clique_number"], 3);
    assert_eq!(v["vcd"], 3);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["maximum_clique"].as_array().unwrap().len(), 3);
}

#[test]
fn howson_example() {
    let v = json_of(&["howson", "--n", "4", "--c", "1"]);
    assert_eq!(v["howson"], false);
    assert_eq!(v["p3_witness"].as_array().unwrap().len(), 3);
    let v = json_of(&["howson", "--n", "3", "--c", "2"]);
    assert_eq!(v["howson"], true);
    assert!(v["p3_witness"].is_null());
}

#[test]
fn mixed_relator_is_trivial() {
    let v = json_of(&["trivial", "--n", "4", "--c", "1", "--word", "r1 r2 s1.1 R2 R1 S2.1"]);
    assert_eq!(v["trivial"], true);
    let v = json_of(&["trivial", "--n", "4", "--c", "1", "--word", "r1 s1.1"]);
    assert_eq!(v["trivial"], false);
}

#[test]
fn nf_and_eq() {
    let v = json_of(&["nf", "--n", "3", "--c", "1", "--word", "s1.1 r1 r2"]);
    assert_eq!(v["delta_nf"], json!(["d1.2.1"]));
    assert_eq!(v["perm"], "(1 2 3)");
    let v = json_of(&["eq", "--n", "4", "--c", "2", "s1.1 s3.2", "s3.2 s1.1"]);
    assert_eq!(v["equal"], true);
    let v = json_of(&["eq", "--n", "4", "--c", "1", "s1.1 s2.1", "s2.1 s1.1"]);
    assert_eq!(v["equal"], false);
}

#[test]
fn pure_and_perm() {
    let v = json_of(&["pure", "--n", "3", "--c", "1", "--word", "s1.1 s1.1"]);
    assert_eq!(v["pure"], true);
    let v = json_of(&["perm", "--n", "3", "--c", "1", "--word", "s1.1 r2"]);
    assert_eq!(v["pi_k"], json!([1, 3, 2]));
    assert_eq!(v["pi_p"], json!([2, 3, 1]));
    assert_eq!(v["iota_pi_k"], "r2");
}

#[test]
fn graph_views() {
    let out = uvbraid(&["graph", "dot", "--n", "4", "--c", "1", "--format", "text"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph Gamma_4_1 {"));
    assert!(dot.contains("\"d1.2.1\" -- \"d3.4.1\""));
    let v = json_of(&["graph", "stats", "--n", "4", "--c", "1"]);
    assert_eq!(v["vertices"], 12);
    assert_eq!(v["clique_number"], 2);
}

#[test]
fn lerf_and_centre() {
    let v = json_of(&["lerf-witness", "--n", "4", "--c", "1"]);
    assert_eq!(v["subgroup_separable"], false);
    assert!(v["f2xf2_witness"].is_object());
    let v = json_of(&["lerf-witness", "--n", "3", "--c", "1"]);
    assert!(v["f2xf2_witness"].is_null());
    let v = json_of(&["center-witness", "--n", "5", "--c", "2"]);
    assert_eq!(v["dominating_vertices"], json!([]));
    assert_eq!(v["noncommuting_pair"]["equal"], false);
}

#[test]
fn homomorphisms() {
    let v = json_of(&["hom", "phi", "--n", "4", "--c", "2", "--eps", "1,0,1", "--word", "s1.1 s2.2"]);
    assert_eq!(v["homomorphism"], true);
    assert_eq!(v["admissible"], true);
    assert_eq!(v["image"], json!([2, 1, 3, 4]));

    let spec = serde_json::to_string(&v["homspec"]).unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_uvbraid"))
        .args(["hom", "check", "--n", "4", "--c", "2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(spec.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let checked: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(checked["homomorphism"], true);
    assert_eq!(checked["abelian_image"], false);

    let v = json_of(&["hom", "enumerate", "--n", "4", "--c", "1", "--m", "2"]);
    assert_eq!(v["non_abelian"], 0);
    assert!(v["count"].as_u64().unwrap() > 0);
}

#[test]
fn abelian_invariants() {
    let v = json_of(&["ab", "--n", "3", "--c", "2", "--word", "s1.1 s2.1 S1.2 r1"]);
    assert_eq!(v["sigma_exponents"], json!([2, -1]));
    assert_eq!(v["rho_parity"], 1);
    let v = json_of(&["chi", "--n", "3", "--c", "2", "--t", "2", "--word", "s1.1 s2.1 S1.2 r1"]);
    assert_eq!(v["chi"], 1);
}

#[test]
fn quotients() {
    let v = json_of(&["quot", "order", "--n", "5", "--c", "2", "--d", "2"]);
    assert_eq!(v["order"], 480);
    assert_eq!(v["exceeds_n_factorial"], true);
    assert_eq!(v["surjective"], true);
    let v = json_of(&["quot", "order", "--n", "30", "--c", "4", "--d", "7"]);
    assert!(v["order"].as_str().unwrap().len() > 20);
    let v = json_of(&["quot", "eval", "--n", "4", "--c", "2", "--d", "2", "--word", "s1.1 r2"]);
    assert_eq!(v["vec"], json!([1, 0]));
    assert_eq!(v["perm"], json!([2, 3, 1, 4]));
    assert_eq!(v["order"], 96);
}

#[test]
fn oracle_proves_commutation() {
    let v = json_of(&[
        "oracle",
        "eq",
        "--n",
        "4",
        "--c",
        "1",
        "--depth",
        "4",
        "--width",
        "1000",
        "r2 s1.1 r2 r3 s2.1 r3",
        "r3 s2.1 r3 r2 s1.1 r2",
    ]);
    assert_eq!(v["verdict"], "proven_equal");
    assert!(!v["path"].as_array().unwrap().is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["graph", "stats", "--n", "5", "--c", "2"];
    assert_eq!(uvbraid(&args).stdout, uvbraid(&args).stdout);
    let args = ["hom", "enumerate", "--n", "3", "--c", "1", "--m", "3"];
    assert_eq!(uvbraid(&args).stdout, uvbraid(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(uvbraid(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(uvbraid(&["--help"]).status.code(), Some(0));
    let bad_word = uvbraid(&["nf", "--n", "3", "--c", "1", "--word", "x1"]);
    assert_eq!(bad_word.status.code(), Some(2));
    assert!(!bad_word.stderr.is_empty());
    assert_eq!(uvbraid(&["vcd", "--c", "1"]).status.code(), Some(2));
    assert_eq!(uvbraid(&["vcd", "--n", "0", "--c", "1"]).status.code(), Some(2));
    assert_eq!(uvbraid(&["quot", "order", "--n", "3", "--c", "1", "--d", "1"]).status.code(), Some(2));
    assert_eq!(uvbraid(&["vcd", "--n", "4", "--c", "1", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn verify_paper_exit_code_tracks_report() {
    let out = uvbraid(&["verify-paper"]);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let claims = report["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 15);
    let all = claims.iter().all(|c| c["passed"] == true);
    assert_eq!(report["passed"], all);
    assert_eq!(out.status.success(), all);
}
