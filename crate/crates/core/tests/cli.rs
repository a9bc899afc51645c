use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistflow"))
        .args(args)
        .output()
        .expect("spawn CLI")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn classify_text() {
    assert!(stdout(&["classify", "0", "1", "5", "2"]).starts_with("case 1: L(5,2) # RP3\n"));
    assert!(stdout(&["classify", "1", "0", "1", "1"]).starts_with("case 6: S3\n"));
    let text = stdout(&["classify", "2", "1", "3", "2"]);
    assert_eq!(
        text,
        "case 7: SFS(S2; (2,1),(2,1),(3,2))\nH1: Z/20\nprime: true\nintermediate Seifert: SFS(S2; (2,1),(2,1),(3,2))\n"
    );
    assert!(stdout(&["classify", "-3", "1", "5", "-2"]).starts_with("case 7: "));
}

#[test]
fn classify_json_is_byte_stable() {
    let a = stdout(&["classify", "2", "1", "3", "2", "--json"]);
    let b = stdout(&["classify", "2", "1", "3", "2", "--json"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["case"], 7);
    assert_eq!(v["canonical"], "SFS(S2; (2,1),(2,1),(3,2))");
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        [
            "canonical",
            "case",
            "h1",
            "input",
            "intermediate_seifert",
            "kind",
            "prime"
        ]
    );
}

#[test]
fn homeo_and_h1() {
    assert_eq!(stdout(&["homeo", "L(7,2)", "L(7,5)"]), "true\n");
    assert_eq!(stdout(&["homeo", "L(7,2)", "L(7,3)"]), "false\n");
    assert_eq!(stdout(&["homeo", "--unoriented", "L(7,2)", "L(7,3)"]), "true\n");
    assert_eq!(stdout(&["h1", "L(5,2) # RP3"]), "Z/10\n");
    assert_eq!(stdout(&["h1", "S2xS1 # S2xS1 # RP3"]), "Z^2 + Z/2\n");
    assert_eq!(stdout(&["h1", "S3"]), "0\n");
}

#[test]
fn enumerate_is_deterministic() {
    let a = stdout(&["enumerate", "--bound", "2", "--group"]);
    assert_eq!(a, stdout(&["enumerate", "--bound", "2", "--group"]));
    assert!(a.contains("S3  ["));
    let flat = stdout(&["enumerate", "--bound", "1"]);
    assert!(flat.lines().all(|l| l.contains("\tcase ")));
    assert!(flat.contains("1 0 1 1\tcase 6\tS3"));
}

#[test]
fn exit_code_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (&["classify", "2", "4", "1", "0"], 2),
        (&["classify", "1", "0", "4", "2"], 2),
        (&["classify", "0", "0", "1", "0"], 2),
        (&["classify", "0", "-2", "1", "0"], 2),
        (&["classify", "1", "2"], 1),
        (&["classify", "a", "1", "1", "1"], 1),
        (&["classify", "99999999999999999999", "1", "1", "1"], 1),
        (&["h1", "L(5"], 1),
        (&["h1", "L(6,4)"], 1),
        (&["h1", "SFS(S2; (4,2))"], 1),
        (&["h1", ""], 1),
        (&["homeo", "RP3", "X"], 1),
        (&["homeo", "RP3"], 1),
        (&["enumerate"], 1),
        (&["enumerate", "--bound", "-1"], 1),
        (&["selfcheck", "--bound", "0"], 1),
        (&["frobnicate"], 1),
        (&[], 1),
        (&["--help"], 0),
        (&["selfcheck", "--bound", "2"], 0),
    ];
    for (args, code) in cases {
        assert_eq!(run(args).status.code(), Some(*code), "{args:?}");
    }
}

#[test]
fn invalid_invariant_names_the_rule() {
    let out = run(&["classify", "1", "0", "4", "2"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("(l2,m2) must be coprime"), "{err}");
}
