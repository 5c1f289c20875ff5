use std::process::{Command, Output};

use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize)]
struct Row {
    n: usize,
    c0: u64,
    c2: u64,
}

#[derive(Serialize, Deserialize)]
struct Table {
    rows: Vec<Row>,
}

fn eo_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eo-lab"))
        .args(args)
        .env_remove("EO_LAB_ORDER")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_exit_codes() {
    let ok = eo_lab(&["verify", "--identity", "eq1", "--order", "40"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).starts_with("PASS eq1"));
    assert_eq!(
        eo_lab(&["verify", "--identity", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(eo_lab(&["verify"]).status.code(), Some(2));
    assert_eq!(
        eo_lab(&[
            "verify",
            "--identity",
            "heine3",
            "--c-exp",
            "1",
            "--z-exp",
            "0"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn verify_all_passes() {
    let o = eo_lab(&["verify", "--all", "--order", "24"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o)
        .lines()
        .filter(|l| !l.starts_with("  "))
        .all(|l| l.starts_with("PASS")));
}

#[test]
fn order_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_eo-lab"))
        .args(["verify", "--identity", "eq2", "--format", "json"])
        .env("EO_LAB_ORDER", "12")
        .output()
        .unwrap();
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["reports"][0]["order"], 12);
    assert_eq!(doc["reports"][0]["outcome"]["status"], "PASS");
}

#[test]
fn explicit_parameters() {
    let q = eo_lab(&[
        "verify",
        "--identity",
        "qbinomial",
        "--a-exp",
        "2",
        "--z-sign",
        "-1",
        "--z-exp",
        "2",
        "--base",
        "4",
        "--order",
        "20",
    ]);
    assert_eq!(q.status.code(), Some(0), "{}", stdout(&q));
    let b = eo_lab(&[
        "verify",
        "--identity",
        "bailey-daum",
        "--z",
        "generic",
        "--order",
        "16",
    ]);
    assert_eq!(b.status.code(), Some(0));
    let h = eo_lab(&[
        "verify",
        "--identity",
        "heine3",
        "--a-exp",
        "1",
        "--b-exp",
        "2",
        "--c-exp",
        "3",
        "--z-exp",
        "1",
    ]);
    assert_eq!(h.status.code(), Some(0));
}

#[test]
fn table_csv_round_trips() {
    let o = eo_lab(&["table", "eo", "--max-n", "8", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "6,2,2"));
    assert!(text.lines().any(|l| l == "8,4,1"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(3,3,2)"));
    let rows: Vec<Vec<u64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    let mut again = String::from("n,c0,c2\n");
    for r in &rows {
        again.push_str(&format!("{},{},{}\n", r[0], r[1], r[2]));
    }
    assert_eq!(again, text);
}

#[test]
fn table_json_round_trips() {
    for kind in ["eo", "eobar"] {
        let o = eo_lab(&["table", kind, "--max-n", "4", "--format", "json"]);
        let text = stdout(&o);
        let doc: Table = serde_json::from_str(&text).unwrap();
        let row4 = &doc.rows[4];
        let expected = if kind == "eo" { (2, 0) } else { (4, 0) };
        assert_eq!((row4.c0, row4.c2), expected);
        assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", text);
    }
}

#[test]
fn crank_distribution() {
    let o = eo_lab(&["crank", "8", "--format", "csv"]);
    assert_eq!(stdout(&o), "eoc,count\n8,1\n4,1\n0,1\n-4,1\n-8,1\n");
    assert_eq!(
        stdout(&eo_lab(&["crank", "0", "--format", "csv"])),
        "eoc,count\n0,1\n"
    );
    assert_eq!(
        stdout(&eo_lab(&["crank", "1", "--format", "csv"])),
        "eoc,count\n"
    );
}

#[test]
fn bijection_traces() {
    let o = eo_lab(&[
        "bijection",
        "phi",
        "--r",
        "0",
        "--trace",
        "--lambda",
        "2",
        "--pi",
        "2,2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("CASE3"));
    assert!(
        text.trim_end()
            .ends_with("result: ((), (3,3)) [CASE3(s=1)]"),
        "{text}"
    );

    let o = eo_lab(&[
        "bijection",
        "crank",
        "--r",
        "0",
        "--trace",
        "--lstar",
        "1,1",
        "--pstar",
        "3,3",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["output"], serde_json::json!([[], [3, 3, 2]]));

    // inverse direction is picked from the flags
    let o = eo_lab(&[
        "bijection",
        "phi",
        "--trace",
        "--mu",
        "empty",
        "--nu",
        "3,3",
    ]);
    assert!(stdout(&o)
        .trim_end()
        .ends_with("result: ((2), (2,2)) [CASE3(s=1)]"));
}

#[test]
fn bijection_errors() {
    let o = eo_lab(&["bijection", "phi", "--trace", "--lambda", "1", "--pi", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("FAIL"));
    assert_eq!(
        eo_lab(&["bijection", "phi", "--trace", "--lambda", "x", "--pi", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        eo_lab(&["bijection", "phi", "--trace", "--lambda", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn exhaustive_harness() {
    let o = eo_lab(&[
        "bijection",
        "phi",
        "--r",
        "0",
        "--exhaustive",
        "--max-weight",
        "20",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("PASS phi"));
    for case in ["CASE1", "CASE2", "CASE3"] {
        assert!(text.contains(case));
    }
    let o = eo_lab(&[
        "bijection",
        "lemma3",
        "--r",
        "1",
        "--exhaustive",
        "--max-weight",
        "6",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["failure_count"], 0);
}
