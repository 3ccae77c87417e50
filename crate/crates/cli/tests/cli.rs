use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn equik(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equik"))
        .args(args)
        .env_remove("EQUIK_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn notation(doc: &Value) -> Vec<String> {
    doc["wedge"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w["notation"].as_str().unwrap().to_string())
        .collect()
}

fn ranks(doc: &Value, key: &str) -> Vec<u64> {
    doc["graded_ranks"][key]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect()
}

#[test]
fn compute_su2() {
    let out = equik(&[
        "compute", "--family", "A", "--rank", "1", "--pair", "AI", "--action", "gamma",
    ]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(notation(&doc), ["S^0", "S^A"]);
    assert_eq!(ranks(&doc, "k0"), vec![3; 11]);
    assert_eq!(ranks(&doc, "k1"), vec![0; 11]);
    assert_eq!(doc["checks"]["status"], "pass");
}

#[test]
fn compute_su3_text_and_json_agree() {
    let base = [
        "compute", "--family", "A", "--rank", "2", "--pair", "AI", "--bound", "3",
    ];
    let doc = json(&equik(&base));
    assert_eq!(notation(&doc), ["S^0", "ΣZ/2_+", "S^{1+A}"]);
    assert_eq!(ranks(&doc, "k0"), [2, 2, 4, 4]);
    assert_eq!(ranks(&doc, "k1"), [2, 2, 4, 4]);

    let mut args = base.to_vec();
    args.extend(["--format", "text"]);
    let text = String::from_utf8(equik(&args).stdout).unwrap();
    assert!(text.contains("K^0 [2, 2, 4, 4]"), "{text}");
    assert!(text.contains("K^1 [2, 2, 4, 4]"), "{text}");
    for n in notation(&doc) {
        assert!(text.contains(&n), "{n} missing from {text}");
    }
}

#[test]
fn compute_inner_e6_alpha() {
    let out = equik(&[
        "compute", "--family", "E", "--rank", "6", "--pair", "EII", "--action", "alpha", "--bound",
        "2",
    ]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["involution"], "inner");
    let sigma: Vec<u64> = doc["sigma"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(sigma, [1, 2, 3, 4, 5, 6]);
    let wedge = doc["wedge"].as_array().unwrap();
    assert_eq!(wedge.len(), 64);
    assert!(wedge
        .iter()
        .all(|w| w["shape"] == "sphere" && w["epsilon"] == 0));
}

#[test]
fn compute_rejects_bad_input() {
    let out = equik(&["compute", "--family", "A", "--rank", "2", "--pair", "EI"]);
    assert_eq!(out.status.code(), Some(2));
    let e: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(e["error"]["kind"], "pair-mismatch");

    let out = equik(&["compute", "--family", "E", "--rank", "5", "--pair", "EI"]);
    assert_eq!(out.status.code(), Some(2));

    let out = equik(&[
        "compute", "--family", "D", "--rank", "5", "--pair", "BDI", "--p", "3", "--q", "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compute_orders_agree() {
    let mut tables = Vec::new();
    for order in ["size-lex", "binary", "reverse-size-lex"] {
        let doc = json(&equik(&[
            "compute", "--family", "D", "--rank", "5", "--pair", "BDI", "--p", "3", "--order",
            order,
        ]));
        assert_eq!(doc["request"]["subset_order"], order);
        tables.push((ranks(&doc, "k0"), ranks(&doc, "k1")));
    }
    assert!(tables.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn atlas_files_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("atlas");
    let out_str = out_dir.to_str().unwrap();
    let out = equik(&[
        "atlas",
        "--max-rank",
        "2",
        "--grading-bound",
        "4",
        "--out",
        out_str,
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let index: Value =
        serde_json::from_str(&fs::read_to_string(out_dir.join("index.json")).unwrap()).unwrap();
    assert_eq!(index["complete"], true);
    let files = index["files"].as_array().unwrap();
    assert_eq!(files.len(), 12);
    let mut on_disk: Vec<String> = fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    on_disk.sort();
    assert_eq!(on_disk.len(), 13);
    assert!(on_disk.contains(&"A2-AI-gamma.json".to_string()));

    let snapshot = |d: &std::path::Path| -> Vec<(String, Vec<u8>)> {
        let mut v: Vec<_> = fs::read_dir(d)
            .unwrap()
            .map(|e| {
                let e = e.unwrap();
                (
                    e.file_name().into_string().unwrap(),
                    fs::read(e.path()).unwrap(),
                )
            })
            .collect();
        v.sort();
        v
    };
    let first = snapshot(&out_dir);
    assert!(equik(&[
        "atlas",
        "--max-rank",
        "2",
        "--grading-bound",
        "4",
        "--out",
        out_str
    ])
    .status
    .success());
    assert_eq!(first, snapshot(&out_dir));
}

#[test]
fn atlas_out_dir_from_env() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_equik"))
        .args(["atlas", "--max-rank", "0"])
        .env("EQUIK_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    let names: Vec<_> = fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    assert_eq!(names, ["index.json"]);
}

#[test]
fn verify_exit_codes() {
    let out = equik(&["verify", "--max-rank", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["overall"], "pass");
    assert_eq!(report["failed"], 0);

    let out = equik(&["verify", "--max-rank", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_export() {
    let out = equik(&["catalog", "--max-rank", "2"]);
    assert!(out.status.success());
    let table = json(&out);
    assert_eq!(table["entries"].as_array().unwrap().len(), 6);
}
