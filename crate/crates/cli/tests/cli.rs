use std::process::{Command, Output};

use serde_json::Value;

fn pade(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pade"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn poly_examples() {
    assert_eq!(
        stdout(&pade(&["poly", "P", "4", "5"])),
        "3024 1344 252 24 1\n"
    );
    assert_eq!(stdout(&pade(&["poly", "e", "2"])), "2 2 1\n");
    assert_eq!(stdout(&pade(&["poly", "P", "1", "2"])), "3 1\n");
    assert_eq!(
        stdout(&pade(&["poly", "Q", "1", "2", "--format", "tsv"])),
        "6\t-4\t1\n"
    );
    assert_eq!(stdout(&pade(&["poly", "L", "2", "3"])), "20 8 1\n");
}

#[test]
fn poly_json_is_decimal_strings() {
    let out = pade(&["poly", "P", "12", "13", "--format", "json"]);
    // 25!/13!
    let coeffs: Vec<String> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(coeffs.len(), 13);
    assert_eq!(coeffs[0], "2490952020480000");
    assert_eq!(coeffs[12], "1");
}

#[test]
fn certify_examples() {
    let out = pade(&["certify", "P", "8", "9", "--json"]);
    assert_eq!(code(&out), 0);
    let cert: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert["conclusion"], "A_8");
    assert_eq!(cert["degree"], 8);
    assert_eq!(cert["square_class"], "1");
    for key in ["family", "u", "v", "irreducibility", "an_containment"] {
        assert!(cert.get(key).is_some(), "missing {key}");
    }

    let out = pade(&["certify", "Q", "8", "9", "--format", "json"]);
    let cert: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert["conclusion"], "A_9");

    let out = pade(&["certify", "P", "2", "3", "--json"]);
    let cert: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        (cert["degree"].as_u64(), cert["conclusion"].as_str()),
        (Some(2), Some("S_2"))
    );
    assert_eq!(cert["square_class"], "-1");
}

#[test]
fn reducible_input_is_unresolved() {
    // L_2^<-5> = (x - 2)(x - 6)
    let out = pade(&["certify", "L", "2", "-5", "--json"]);
    assert_eq!(code(&out), 2);
    let cert: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(cert["irreducibility"]["kind"], "NONE");
    assert_eq!(cert["conclusion"], "UNRESOLVED");
}

#[test]
fn table_rows() {
    let out = pade(&["table", "--delta", "1", "--m", "4..20", "--format", "tsv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text
        .lines()
        .skip(1)
        .map(|l| l.split('\t').collect())
        .collect();
    assert_eq!(rows.len(), 17);
    let row = |m: &str| rows.iter().find(|r| r[0] == m).unwrap();
    assert_eq!(&row("4")[1..3], ["A_4", "S_5"]);
    assert_eq!(&row("12")[1..3], ["A_12", "S_13"]);
    assert_eq!(&row("16")[1..3], ["A_16", "S_17"]);
    assert_eq!(&row("19")[1..3], ["S_19", "S_20"]);

    let out = pade(&["table", "--delta", "0", "--m", "6..9", "--format", "json"]);
    let rows: Value = serde_json::from_str(&stdout(&out)).unwrap();
    for row in rows.as_array().unwrap() {
        let m = row["m"].as_u64().unwrap();
        let expected = format!("S_{m}");
        let p = row["p"]["conclusion"].as_str().unwrap();
        let q = row["q"]["conclusion"].as_str().unwrap();
        assert!(p == expected || p == format!("CONDITIONAL({expected})"));
        assert!(q == expected || q == format!("CONDITIONAL({expected})"));
    }
}

#[test]
fn newton_polygon_dump() {
    let out = pade(&["np", "P", "3", "4", "--prime", "3", "--format", "json"]);
    let np: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(np["prime"], 3);
    assert_eq!(np["vertices"], serde_json::json!([[0, 1], [3, 0]]));
    assert_eq!(
        np["segments"],
        serde_json::json!([{"slope": "-1/3", "length": 3}])
    );
    assert_eq!(np["flatness"], 0);
    assert_eq!(np["steepness"], "1/3");
    let out = pade(&["np", "P", "3", "4", "--prime", "4"]);
    assert_eq!(code(&out), 64);
}

#[test]
fn verify_suites_pass() {
    let out = pade(&[
        "verify",
        "eisenstein",
        "--p",
        "3",
        "--n",
        "2",
        "--side",
        "P",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "PASS eisenstein (4 checks)\n");

    let out = pade(&["verify", "prime-gap", "--lo", "21", "--hi", "100000"]);
    assert_eq!(code(&out), 0);

    let out = pade(&["verify", "discriminant", "--max", "12"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("negative-control"));
    assert!(text.contains("gives 16, true discriminant -16"));

    for suite in [
        "pade-identity",
        "square-class",
        "schur-mod-p",
        "near-eisenstein",
        "coleman",
    ] {
        assert_eq!(code(&pade(&["verify", suite])), 0, "{suite}");
    }
}

#[test]
fn verify_failure_exit_code() {
    let out = pade(&[
        "verify",
        "prime-gap",
        "--lo",
        "2",
        "--hi",
        "20",
        "--format",
        "json",
    ]);
    assert_eq!(code(&out), 1);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["passed"], false);
    let failing: Vec<String> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["name"] == "interval-has-prime")
        .map(|c| c["params"]["m"].as_str().unwrap().to_owned())
        .collect();
    assert!(failing.contains(&"20".to_owned()));
}

#[test]
fn usage_errors() {
    assert_eq!(code(&pade(&["poly", "X", "1", "2"])), 64);
    assert_eq!(code(&pade(&["poly", "P", "1"])), 64);
    assert_eq!(code(&pade(&["poly", "P", "-1", "2"])), 64);
    assert_eq!(
        code(&pade(&["poly", "P", "300", "301", "--budget", "100"])),
        64
    );
    assert_eq!(
        code(&pade(&[
            "verify",
            "eisenstein",
            "--p",
            "7",
            "--n",
            "3",
            "--budget",
            "100"
        ])),
        64
    );
    assert_eq!(code(&pade(&["table", "--m", "9..3"])), 64);
    assert_eq!(code(&pade(&["verify", "no-such-suite"])), 64);
    assert_eq!(code(&pade(&["--help"])), 0);
}

#[test]
fn output_is_reproducible() {
    let args = ["table", "--delta", "1", "--m", "2..14", "--format", "json"];
    let a = pade(&args);
    let b = pade(&args);
    assert_eq!(a.stdout, b.stdout);
    let seeded = pade(&[
        "verify",
        "near-eisenstein",
        "--seed",
        "7",
        "--format",
        "json",
    ]);
    let default = pade(&["verify", "near-eisenstein", "--format", "json"]);
    assert_eq!(seeded.stdout, default.stdout);
}
