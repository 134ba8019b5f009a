use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_prymcorr"))
        .args(args)
        .env_remove("PRYMCORR_MAX_GROUP_ORDER")
        .output()
        .unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out) = run(args);
    assert_eq!(code, 0, "{args:?}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn datum_export_uses_long_root_normalization() {
    let v = json(&["datum", "--type", "G", "--rank", "2"]);
    assert_eq!(v["weyl_order"], 12);
    assert_eq!(v["root_lengths"], serde_json::json!(["2/3", "2/1"]));
    assert_eq!(v["cartan"], serde_json::json!([[2, -3], [-1, 2]]));
    assert!(v["normalization"].as_str().unwrap().contains("squared length 2"));
}

#[test]
fn b2_short_orbit_has_four_points() {
    let v = json(&["orbit", "--type", "B", "--rank", "2", "--weight", "w2"]);
    assert_eq!(v["size"], 4);
    assert_eq!(v["stabilizer_order"], 2);
    assert_eq!(v["points"].as_array().unwrap().len(), 4);
}

#[test]
fn a2_self_correspondence_is_identity() {
    let v = json(&["delta-export", "--type", "A", "--rank", "2", "--w1", "w1", "--w2", "w1"]);
    assert_eq!(v["kind"], "kanev");
    assert_eq!(v["scale"], 1);
    let rows = v["entries"].as_array().unwrap();
    for (i, row) in rows.iter().enumerate() {
        for (j, x) in row.as_array().unwrap().iter().enumerate() {
            assert_eq!(x, if i == j { "1/1" } else { "0/1" });
        }
    }
}

#[test]
fn exports_are_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 4] = [
        &["delta-export", "--type", "B", "--rank", "3", "--w1", "w1", "--w2", "w3"],
        &["snf", "--type", "C", "--rank", "3", "--weight", "w2"],
        &["exponent-table", "--type", "D", "--rank", "4", "--format", "csv"],
        &["orbit", "--type", "F", "--rank", "4", "--weight", "w4"],
    ];
    for (n, args) in cases.iter().enumerate() {
        let (_, stdout) = run(args);
        let mut written = Vec::new();
        for pass in 0..2 {
            let path = dir.path().join(format!("{n}-{pass}.out"));
            let mut with_out = args.to_vec();
            with_out.extend(["--out", path.to_str().unwrap()]);
            let (code, _) = run(&with_out);
            assert_eq!(code, 0, "{args:?}");
            written.push(std::fs::read_to_string(&path).unwrap());
        }
        assert_eq!(written[0], written[1], "{args:?}");
        assert_eq!(written[0], stdout, "{args:?}");
    }
}

#[test]
fn b2_table_flags_spin_row() {
    let (code, csv) = run(&["exponent-table", "--type", "B", "--rank", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().starts_with("i,j,scale"));
    let row = lines.find(|l| l.starts_with("1,2,")).unwrap();
    assert!(row.ends_with(",8,8,32,divergent"), "{row}");
}

#[test]
fn verify_json_reports_totals() {
    let v = json(&["verify", "--type", "A", "--rank", "2", "--suite", "trace"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["failures"], 0);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(v["total"], checks.len());
    assert!(checks.iter().all(|c| c["verdict"] == "pass"));
}

#[test]
fn group_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_prymcorr"))
        .args(["verify", "--type", "A", "--rank", "3"])
        .env("PRYMCORR_MAX_GROUP_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn snf_has_no_csv_form() {
    assert_eq!(run(&["snf", "--type", "A", "--rank", "2", "--weight", "w1", "--format", "csv"]).0, 2);
}
