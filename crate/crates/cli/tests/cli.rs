use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn osdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_osdual")).args(args).env_remove("OSDUAL_NODES").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("osdual-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn su11_spectrum_example() {
    let out = osdual(&["su11", "spectrum", "--s", "0.5", "--n", "6", "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["command"], "su11 spectrum");
    assert_eq!(r["elapsed_ms"], 0);
    let ev: Vec<f64> = r["data"]["eigenvalues"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    let want = [0.5, 2.5, 4.5, 6.5, 8.5, 10.5];
    assert_eq!(ev.len(), want.len());
    for (a, b) in ev.iter().zip(want) {
        assert!((a - b).abs() < 1e-6);
    }
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn tube_table_is_csv_with_nine_rows() {
    let out = osdual(&["tube", "table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(headers, ["family", "rank_param", "r", "d", "R", "l_pos", "rho", "l_pos_plus_rho"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 9);
    let table: Vec<i64> = rows.iter().map(|r| r[7].parse().unwrap()).collect();
    assert_eq!(table, [3, 2, 2, 2, 3, 2, 2, 2, 3]);
    for r in &rows {
        let big_r: i64 = r[4].parse().unwrap();
        let l: i64 = r[5].parse().unwrap();
        let rho: i64 = r[6].parse().unwrap();
        assert_eq!(l + rho, r[7].parse::<i64>().unwrap());
        assert!(big_r <= l + rho);
    }
    let js = osdual(&["tube", "table", "--json", "--no-timing"]);
    assert_eq!(json(&js)["table"]["rows"].as_array().unwrap().len(), 9);
}

#[test]
fn path_reflection_example() {
    let out = osdual(&["path", "reflection", "--times", "0.5,1,2", "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let rank = r["checks"].as_array().unwrap().iter().find(|c| c["name"] == "rank").unwrap();
    assert_eq!(rank["value"], 1);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["su11", "jform", "--s", "0.4", "--seed", "7", "--no-timing"][..],
        &["path", "suite", "--seed", "3", "--count", "10", "--no-timing"][..],
        &["counter", "heisenberg", "--seed", "5", "--no-timing"][..],
    ] {
        let a = osdual(args);
        let b = osdual(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
    let a = osdual(&["su11", "jform", "--s", "0.4", "--seed", "7", "--no-timing"]);
    let b = osdual(&["su11", "jform", "--s", "0.4", "--seed", "8", "--no-timing"]);
    assert_ne!(a.stdout, b.stdout);
    assert_eq!(json(&a)["params"]["seed"], 7);
}

#[test]
fn exit_codes() {
    assert_eq!(osdual(&["nonsense"]).status.code(), Some(2));
    assert_eq!(osdual(&["su11", "spectrum"]).status.code(), Some(2));
    assert_eq!(osdual(&["su11", "spectrum", "--s", "0.999"]).status.code(), Some(2));
    assert_eq!(osdual(&["tube", "constants", "--family", "SO_k2", "--rank", "2"]).status.code(), Some(2));
    assert_eq!(osdual(&["path", "reflection", "--times", "0,1"]).status.code(), Some(2));
    // the cyclic translation model breaks invariance of K₀
    assert_eq!(osdual(&["os", "axioms", "--example", "translation", "--times", "1"]).status.code(), Some(1));
    assert_eq!(osdual(&["counter", "falsifier", "--lambda", "0"]).status.code(), Some(1));
    // too coarse a grid for the composed Bargmann route
    assert_eq!(osdual(&["bargmann", "transform", "--nodes", "30"]).status.code(), Some(3));
    assert_eq!(osdual(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_formats_and_files() {
    let path = scratch("report.json");
    let out = osdual(&["counter", "falsifier", "--no-timing", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["command"], "counter falsifier");

    let csv_out = osdual(&["path", "gram", "--times", "0,1,2", "--csv"]);
    let text = String::from_utf8(csv_out.stdout).unwrap();
    assert!(text.starts_with("name,pass,value,expected,tolerance"));
    assert!(text.contains("psd,true"));

    let w = scratch("witness.csv");
    assert_eq!(osdual(&["counter", "falsifier", "--witness", w.to_str().unwrap()]).status.code(), Some(0));
    let wt = std::fs::read_to_string(&w).unwrap();
    assert_eq!(wt.lines().count(), 65);
}

#[test]
fn csv_inputs() {
    let times = scratch("times.csv");
    std::fs::write(&times, "t\n0.25\n0.5\n1.5\n3\n").unwrap();
    let out = osdual(&["path", "reflection", "--times-file", times.to_str().unwrap(), "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["params"]["times"].as_array().unwrap().len(), 4);

    let f = scratch("f.csv");
    let rows: String = (0..=80)
        .map(|i| {
            let x = -0.8 + 0.02 * i as f64;
            format!("{x},{},{}\n", (0.64f64 - x * x).max(0.0).powi(4), 0.5 * x)
        })
        .collect();
    std::fs::write(&f, format!("node,re,im\n{rows}")).unwrap();
    let out = osdual(&["su11", "jform", "--s", "0.5", "--f", f.to_str().unwrap(), "--g", f.to_str().unwrap(), "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out)["data"]["value"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).collect::<Vec<_>>();
    assert!(v[0] > 0.0 && v[1].abs() < 1e-12 * v[0]);
}

#[test]
fn nodes_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_osdual"))
        .args(["su11", "jform", "--s", "0.5", "--no-timing"])
        .env("OSDUAL_NODES", "64")
        .output()
        .unwrap();
    assert_eq!(json(&out)["params"]["nodes"], 64);
    let out = osdual(&["su11", "jform", "--s", "0.5", "--nodes", "32", "--no-timing"]);
    assert_eq!(json(&out)["params"]["nodes"], 32);
}

#[test]
fn every_group_runs_its_default_checks() {
    for args in [
        &["os", "quotient"][..],
        &["os", "generator"][..],
        &["os", "lemma", "--count", "10"][..],
        &["su11", "intertwine", "--s", "0.5", "--pairs", "2"][..],
        &["su11", "rkhs", "--s", "0.3"][..],
        &["bargmann", "heat"][..],
        &["bargmann", "sqrt-rrstar"][..],
        &["counter", "sublaplacian", "--grid", "16"][..],
        &["counter", "projection"][..],
    ] {
        let out = osdual(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    }
}
