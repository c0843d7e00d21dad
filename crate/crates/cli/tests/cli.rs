use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gl2tensor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn tensor_json_schema() {
    let o = run(&["tensor", "--q", "5", "st:0", "st:0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["q"], 5);
    assert_eq!(v["inputs"], serde_json::json!(["st:0", "st:0"]));
    assert_eq!(v["constituents"].as_array().unwrap().len(), 6);
    assert_eq!(v["total_dim"], 25);
    assert_eq!(v["multiplicity_free"], true);
    assert_eq!(
        v["constituents"][3],
        serde_json::json!({"label": "ps:1,3", "dim": 6, "mult": 1})
    );
}

#[test]
fn methods_give_identical_json() {
    for (q, a, b) in [
        ("5", "st:0", "ps:0,2"),
        ("5", "ps:0,2", "cusp:1"),
        ("7", "cusp:1", "cusp:9"),
        ("9", "st:1", "st:3"),
        ("3", "1d:1", "cusp:2"),
    ] {
        let outs: Vec<_> = ["formula", "pantoja", "oracle"]
            .iter()
            .map(|m| {
                let o = run(&["tensor", "--q", q, a, b, "--method", m, "--format", "json"]);
                assert_eq!(o.status.code(), Some(0), "{m}: {}", stderr(&o));
                o.stdout
            })
            .collect();
        assert_eq!(outs[0], outs[1], "q={q} {a} {b}");
        assert_eq!(outs[0], outs[2], "q={q} {a} {b}");
    }
}

#[test]
fn validation_errors_exit_2() {
    let o = run(&["tensor", "--q", "4", "st:0", "st:0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("q must be an odd prime power"));
    for label in ["ps:2,2", "cusp:6", "xx:1", "ps:1"] {
        let o = run(&["tensor", "--q", "5", label, "st:0"]);
        assert_eq!(o.status.code(), Some(2), "{label}");
    }
    let o = run(&["induce", "--q", "5", "--from", "t1", "--char", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["tensor", "--q", "5", "st:0"]).status.code(), Some(1));
    assert_eq!(
        run(&["verify", "--q", "3", "--suite", "nope"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn noncanonical_labels_are_reported() {
    let o = run(&[
        "tensor", "--q", "5", "ps:3,1", "cusp:11", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let err = stderr(&o);
    assert!(err.contains("ps:3,1 canonicalized to ps:1,3"), "{err}");
    assert!(err.contains("cusp:11 canonicalized to cusp:7"), "{err}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["inputs"], serde_json::json!(["ps:1,3", "cusp:7"]));
}

#[test]
fn verify_passes_at_q3() {
    let o = run(&["verify", "--q", "3", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAILED"));
    let o = run(&["verify", "--q", "5", "--suite", "induction", "--sequential"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn irreps_and_selfdual_listings() {
    let o = run(&["irreps", "--q", "3"]);
    assert_eq!(stdout(&o).lines().count(), 9);
    let o = run(&["selfdual", "--q", "3"]);
    assert_eq!(stdout(&o), "1d:0\n1d:1\nst:0\nst:1\nps:0,1\ncusp:2\n");
}

#[test]
fn induce_outputs() {
    let o = run(&[
        "induce", "--q", "5", "--from", "t1", "--char", "0,3", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total_dim"], 30);
    assert_eq!(v["constituents"][0]["mult"], 2);
    let o = run(&[
        "induce", "--q", "5", "--from", "tm1", "--char", "1", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total_dim"], 20);
    let o = run(&["induce", "--q", "3", "--from", "zu", "--char", "-1"]);
    assert!(stdout(&o).starts_with("Ind[zu](1) = ps:0,1 + cusp:1 + cusp:5"));
}

#[test]
fn table_formats() {
    let o = run(&["table", "--q", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["modulus"], 8);
    assert_eq!(v["classes"].as_array().unwrap().len(), 8);
    assert_eq!(v["rows"][0]["label"], "1d:0");
    assert_eq!(v["rows"][0]["values"][0], serde_json::json!([[0, 1]]));
    let o = run(&["table", "--q", "3", "--format", "csv"]);
    let csv = stdout(&o);
    assert_eq!(csv.lines().count(), 9);
    assert!(csv.starts_with("irrep,\"cen:0\""));
}

#[test]
fn seed_does_not_change_answers() {
    let a = run(&[
        "tensor", "--q", "7", "st:0", "cusp:1", "--method", "oracle", "--format", "json",
    ]);
    let b = run(&[
        "--seed", "99", "tensor", "--q", "7", "st:0", "cusp:1", "--method", "oracle", "--format",
        "json",
    ]);
    assert_eq!(a.stdout, b.stdout);
}
