use std::process::Command;

use ebr::cli::run;
use ebr::document::{CellValue, TableDocument};

fn ebr(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("ebr").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = ebr(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn multiply_with_m() {
    assert_eq!(ok(&["--no-cache", "multiply", "S4", "S3", "S3", "--with-m"]), "[S3] + [C2a]\nm=5\n");
    assert_eq!(ok(&["--no-cache", "multiply", "S4", "[S4]", "2*[A4] - [V2']"]), "-[V2'] + 2*[A4]\n");
    assert_eq!(ok(&["--no-cache", "multiply", "S4", "[V2']", "-1*[S4]"]), "-[V2']\n");
    assert_eq!(ok(&["--no-cache", "multiply", "S4", "[A4']", "[A4']"]), "2*[A4]\n");
    assert_eq!(ok(&["m", "S4", "[A4']"]), "3\n");
}

#[test]
fn multiplier_of_a_subgroup() {
    assert_eq!(ok(&["multiplier", "S4", "--subgroup", "D8"]), "[2]\n");
    assert_eq!(ok(&["multiplier", "S3"]), "[]\n");
    assert_eq!(ok(&["multiplier", "perm:6:(1 2),(3 4),(5 6)"]), "[2, 2, 2]\n");
}

#[test]
fn exit_codes() {
    assert_eq!(ebr(&["verify", "S4", "--all"]).0, 0);
    assert_eq!(ebr(&["group", "X9"]).0, 1);
    assert_eq!(ebr(&["m", "S4", "[Q8]"]).0, 1);
    let (code, _, err) = ebr(&["multiplier", "S4", "--subgroup", "Q8"]);
    assert_eq!(code, 2);
    assert!(err.contains("valid labels"));
    assert_eq!(ebr(&["frobnicate"]).0, 2);
    assert_eq!(ebr(&["marks"]).0, 2);
    assert_eq!(ebr(&["marks", "S4", "--format", "xml"]).0, 2);
    assert_eq!(ebr(&["--threads", "0", "group", "S4"]).0, 2);
    assert_eq!(ebr(&["--help"]).0, 0);
}

#[test]
fn unknown_label_lists_valid_labels() {
    let (_, _, err) = ebr(&["m", "S4", "[Q8]"]);
    assert!(err.contains("unknown label `Q8`"), "{err}");
    assert!(err.contains("D8'"));
}

#[test]
fn json_round_trip_and_csv_agree() {
    let json = ok(&["ext-marks", "S4", "--format", "json", "--with-m"]);
    let doc = TableDocument::from_json(&json).unwrap();
    assert_eq!(doc.schema_version, "1");
    assert_eq!(doc.basis.len(), 16);
    assert_eq!(doc.homs.len(), 16);
    assert_eq!(doc.to_json(), json);

    let csv = ok(&["ext-marks", "S4", "--format", "csv", "--with-m"]);
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header.first().map(String::as_str), Some("label"));
    assert_eq!(header.last().map(String::as_str), Some("m"));
    let hom_labels: Vec<&str> = doc.homs.iter().map(|h| h.label.as_str()).collect();
    assert_eq!(&header[1..header.len() - 1], hom_labels.as_slice());
    for (record, (basis, row)) in reader.records().zip(doc.basis.iter().zip(&doc.values)) {
        let record = record.unwrap();
        assert_eq!(&record[0], basis.label);
        for (j, cell) in row.iter().enumerate() {
            let CellValue::Integer(v) = cell else { panic!("S4 marks are integers") };
            assert_eq!(record[j + 1].parse::<i64>().unwrap(), *v);
        }
        assert_eq!(record[record.len() - 1].parse::<usize>().unwrap(), basis.m.unwrap());
    }

    let plain = ok(&["ext-marks", "S4", "--format", "json"]);
    let doc = TableDocument::from_json(&plain).unwrap();
    assert!(doc.basis.iter().all(|b| b.m.is_none()));
}

#[test]
fn marks_formats() {
    let json = ok(&["marks", "S4", "--format", "json"]);
    let doc = TableDocument::from_json(&json).unwrap();
    assert_eq!(doc.basis.len(), 11);
    assert_eq!(doc.values[0][0], CellValue::Integer(24));
    let table = ok(&["marks", "S4"]);
    assert_eq!(table.lines().count(), 12);
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let uncached = ok(&["--no-cache", "ext-marks", "S4", "--format", "json", "--with-m"]);
    let first = ok(&["--cache", d, "ext-marks", "S4", "--format", "json", "--with-m"]);
    let second = ok(&["--cache", d, "ext-marks", "S4", "--format", "json", "--with-m"]);
    assert_eq!(uncached, first);
    assert_eq!(first, second);
    assert!(std::fs::read_dir(dir.path()).unwrap().count() >= 1);

    let sub_a = ok(&["--cache", d, "subgroups", "S4"]);
    let sub_b = ok(&["--cache", d, "subgroups", "S4"]);
    assert_eq!(sub_a, sub_b);
    assert_eq!(sub_a, ok(&["--no-cache", "subgroups", "S4"]));
    assert_eq!(ok(&["--cache", d, "multiplier", "S4", "--subgroup", "V2"]), "[2]\n");
    assert_eq!(ok(&["--cache", d, "multiplier", "S4", "--subgroup", "V2"]), "[2]\n");
    assert_eq!(ok(&["--cache", d, "multiplier", "S4", "--subgroup", "C3"]), "[]\n");

    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), "garbage").unwrap();
    }
    let (code, out, err) = ebr(&["--cache", d, "ext-marks", "S4", "--format", "json", "--with-m"]);
    assert_eq!(code, 0);
    assert_eq!(out, uncached);
    let _ = err;
}

#[test]
fn binary_honours_environment_cache() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_ebr");
    let out = Command::new(bin)
        .args(["subgroups", "S3"])
        .env("EBR_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);

    let out = Command::new(bin)
        .args(["--no-cache", "subgroups", "S3"])
        .env("EBR_CACHE", dir.path().join("unused"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(!dir.path().join("unused").exists());

    let out = Command::new(bin).args(["group", "S0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn group_and_subgroups_output() {
    let g = ok(&["group", "S4"]);
    assert!(g.contains("order: 24"));
    let s = ok(&["subgroups", "S5"]);
    assert_eq!(s.lines().count(), 20);
    for label in ["H6", "H10", "H20", "S3xS2", "C6"] {
        assert!(s.lines().any(|l| l.starts_with(label)), "{label}");
    }
}

#[test]
fn verify_suites_individually() {
    for flag in ["--hom", "--rank", "--det", "--lemma-sign", "--bfo"] {
        let out = ok(&["verify", "S4", flag]);
        assert_eq!(out.lines().count(), 1, "{flag}");
        assert!(out.starts_with("PASS"));
    }
    let bfo = ok(&["verify", "S4", "--bfo"]);
    assert!(bfo.contains("{S3, S4, S4'}"), "{bfo}");
}
