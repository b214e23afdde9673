//! End-to-end exit-code and output-format checks on the binary.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bandcalc"))
}

#[test]
fn invariants_torus_output() {
    let out = bin().args(["invariants", "--torus", "9", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(text.contains("determinant: 9"), "{text}");
    assert!(text.contains("signature: -16"), "{text}");
    // byte-identical across runs
    let again = bin().args(["invariants", "--torus", "9", "4"]).output().unwrap();
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn input_errors_exit_1() {
    // torus link, not a knot
    let out = bin().args(["invariants", "--torus", "6", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    // unknown subcommand
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
    // malformed braid
    let out = bin().args(["invariants", "--braid", "3: 1 9"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    // missing input group
    let out = bin().arg("invariants").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exhausted_search_exits_2() {
    let dir = std::env::temp_dir().join("bandcalc-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let budget = dir.join("tiny.budget");
    std::fs::write(&budget, "path_len = 0\ntwists = 0\n").unwrap();
    let out = bin()
        .args(["band", "search", "--torus", "3", "2", "--target", "6_1"])
        .arg("--budget")
        .arg(&budget)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "{:?}", out);
}

#[test]
fn band_apply_pinch_trefoil() {
    let out = bin()
        .args([
            "band",
            "apply",
            "--torus",
            "3",
            "2",
            "--band",
            "band attach=(e1,0.5) attach=(e2,0.5) path=[] twists=0",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("coherence: non-coherent"), "{text}");
    assert!(text.contains("alexander: 1"), "{text}");
}

#[test]
fn table_is_deterministic() {
    let a = bin().args(["table", "--p-max", "10", "--q-max", "10"]).output().unwrap();
    let b = bin().args(["table", "--p-max", "10", "--q-max", "10"]).output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.contains("9 4 2 seq=(9,4)->(5,2)->U"), "{text}");
}
