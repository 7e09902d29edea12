use std::collections::BTreeMap;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ratshuffle"))
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

/// (partition, q, t) -> coefficient
type Table = BTreeMap<(String, u32, u32), String>;

#[test]
fn compute_fmn_text() {
    let o = run(&["compute-fmn", "--m", "2", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(q^2+q*t+t^2)*s[5] + (q+t)*s[4,1] + s[3,2]\n");
}

#[test]
fn compute_fd_per_path() {
    let o = run(&["compute-fd", "--m", "2", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "[] area=2: s[5]\n[1] area=1: t*s[5] + s[4,1]\n[1,1] area=0: t^2*s[5] + t*s[4,1] + s[3,2]\n"
    );
    let single = run(&["compute-fd", "--m", "2", "--n", "5", "--path", "1"]);
    assert_eq!(stdout(&single), "[1] area=1: t*s[5] + s[4,1]\n");
}

#[test]
fn verify_exits_zero() {
    let o = run(&["verify", "--m", "3", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).ends_with("verify 3/4: 5 paths, 0 failures, PASS\n"));
}

#[test]
fn non_coprime_is_invalid_input() {
    let o = run(&["compute-fmn", "--m", "2", "--n", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("m and n must be coprime"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn budget_exceeded_is_invalid_input() {
    let o = run(&["parkfns", "--m", "7", "--n", "5", "--budget", "100"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("2401"), "{}", stderr(&o));
}

#[test]
fn bad_path_is_invalid_input() {
    for path in ["3", "x,1", "1,2"] {
        let o = run(&["compute-fd", "--m", "2", "--n", "5", "--path", path]);
        assert_eq!(o.status.code(), Some(2), "path {path}");
    }
}

#[test]
fn paths_and_parkfns_counts() {
    let o = run(&["paths", "--m", "3", "--n", "5"]);
    assert_eq!(stdout(&o).lines().count(), 7);
    let o = run(&["parkfns", "--m", "3", "--n", "4", "--format", "csv"]);
    // header plus 3^3 rows
    assert_eq!(stdout(&o).lines().count(), 28);
}

fn table_from_json(doc: &Value) -> Table {
    let mut out = Table::new();
    for entry in doc["results"][0]["schur"].as_array().unwrap() {
        let lam: Vec<String> = entry["partition"].as_array().unwrap().iter().map(|v| v.to_string()).collect();
        for term in entry["terms"].as_array().unwrap() {
            let key = (
                format!("[{}]", lam.join(",")),
                term["q"].as_u64().unwrap() as u32,
                term["t"].as_u64().unwrap() as u32,
            );
            out.insert(key, term["coeff"].to_string());
        }
    }
    out
}

fn table_from_csv(text: &str) -> Table {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut out = Table::new();
    for rec in rdr.records() {
        let rec = rec.unwrap();
        assert_eq!((&rec[0], &rec[1]), ("", ""));
        out.insert((rec[2].to_string(), rec[3].parse().unwrap(), rec[4].parse().unwrap()), rec[5].to_string());
    }
    out
}

#[test]
fn formats_agree() {
    let base = ["compute-fmn", "--m", "3", "--n", "5", "--format"];
    let json_out = run(&[&base[..], &["json"]].concat());
    let csv_out = run(&[&base[..], &["csv"]].concat());
    let text_out = run(&[&base[..], &["text"]].concat());

    let doc: Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    assert_eq!(doc["m"], 3);
    assert_eq!(doc["n"], 5);
    assert_eq!(doc["command"], "compute-fmn");
    assert!(doc["results"][0]["path"].is_null());

    let from_json = table_from_json(&doc);
    let from_csv = table_from_csv(&stdout(&csv_out));
    assert!(!from_json.is_empty());
    assert_eq!(from_json, from_csv);

    // every Schur function named in the table appears in the text form
    let text = stdout(&text_out);
    for (lam, _, _) in from_json.keys() {
        assert!(text.contains(&format!("s{lam}")), "{lam} missing from {text}");
    }
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("ratshuffle-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("fmn.json");
    let args = ["compute-fmn", "--m", "2", "--n", "7", "--format", "json"];
    let direct = stdout(&run(&args));
    let o = run(&[&args[..], &["--out", file.to_str().unwrap()]].concat());
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&file).unwrap(), direct);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn deterministic_output() {
    let args = ["compute-fd", "--m", "3", "--n", "5", "--format", "json"];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn symmetries_report() {
    let o = run(&["symmetries", "--m", "3", "--n", "4", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("qt_symmetric,true"));
    assert!(text.contains("swap_hooks_equal,true"));
}
