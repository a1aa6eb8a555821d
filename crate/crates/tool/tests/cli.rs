use std::io::Write;
use std::process::{Command, Output};

use kunz_core::analysis::multiplicity_three_semigroups;

fn kunz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kunz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn reconstruct_from(json: &[u8]) -> Output {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(json).unwrap();
    kunz(&["reconstruct", "--input", file.path().to_str().unwrap()])
}

#[test]
fn hasse_json_round_trips_through_reconstruct() {
    for s in multiplicity_three_semigroups(12) {
        let gens = s.generators_string();
        let hasse = kunz(&["hasse", &gens, "--format", "json"]);
        assert!(hasse.status.success());
        let back = reconstruct_from(&hasse.stdout);
        assert_eq!(back.status.code(), Some(0), "{gens}");
        assert_eq!(stdout(&back), format!("{gens}\n"));
    }
}

#[test]
fn reconstruct_3_13_17() {
    let hasse = kunz(&["hasse", "3,13,17", "--format", "json"]);
    assert_eq!(stdout(&reconstruct_from(&hasse.stdout)), "3,13,17\n");
}

#[test]
fn reconstruct_rejects_chains_and_garbage() {
    let chain = kunz(&["hasse", "2,9", "--format", "json"]);
    let out = reconstruct_from(&chain.stdout);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotMultiplicityThreePoset"));

    let out = reconstruct_from(b"{ not json");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("InvalidJson"));

    let out = kunz(&["reconstruct", "--input", "/nonexistent/poset.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Io"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["analyze", "3,13,17"][..],
        &["ideals", "4,7,9,10"],
        &["hasse", "3,13,17"],
        &["hasse", "4,5,6,7", "--order", "subseteq", "--format", "json"],
        &["quarks", "3,13,17"],
        &["verify", "--max-genus", "8", "--format", "json"],
    ] {
        let a = kunz(args);
        let b = kunz(args);
        assert!(a.status.success(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(kunz(&["analyze", "3,13,17"]).status.code(), Some(0));
    assert_eq!(kunz(&["analyze", "6,9"]).status.code(), Some(1));
    assert_eq!(kunz(&["analyze", "1"]).status.code(), Some(1));
    assert_eq!(kunz(&["analyze", "3,13,17", "--bogus"]).status.code(), Some(2));
    assert_eq!(kunz(&["verify", "--checks", "all-of-them"]).status.code(), Some(1));
    assert_eq!(kunz(&["verify", "--max-genus", "5"]).status.code(), Some(0));
    assert_eq!(kunz(&["--help"]).status.code(), Some(0));
}

#[test]
fn hasse_dot_shape() {
    let out = stdout(&kunz(&["hasse", "3,4,5"]));
    assert!(out.contains("rankdir=BT;"));
    assert_eq!(out.matches(" -> ").count(), 4);
    assert_eq!(out.matches("fillcolor=gray").count(), 3);
    let sub = stdout(&kunz(&["hasse", "4,5,6,7", "--order", "subseteq"]));
    let pre = stdout(&kunz(&["hasse", "4,5,6,7", "--order", "preceq"]));
    assert_ne!(sub, pre);
}
