use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

const HAMMING: &str = r#"{"kind":"parity","rows":[[1,0,1,0,1,0,1],[0,1,1,0,0,1,1],[0,0,0,1,1,1,1]]}"#;
const C533: &str = r#"{"kind":"parity","m":2,"rows":[[1,0,1,1,1],[0,1,1,2,3]]}"#;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn tensorq(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_tensorq")).args(args).output().expect("spawn");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into(),
        stderr: String::from_utf8_lossy(&out.stderr).into(),
    }
}

fn file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn build(dir: &TempDir, name: &str, spec: &str) -> (Run, PathBuf) {
    let sp = file(dir, &format!("{name}.spec.json"), spec);
    let out = dir.path().join(format!("{name}.json"));
    (tensorq(&["build", "--spec", s(&sp), "--out", s(&out)]), out)
}

fn read_json(p: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

#[test]
fn build_and_verify_round_trip() {
    let dir = TempDir::new().unwrap();
    let ex1 = format!(r#"{{"kind":"tensor-dual-containing","inner":{C533},"outer":{{"kind":"rs","n":9,"k":7}}}}"#);
    let (r, art) = build(&dir, "ex1", &ex1);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let a = read_json(&art);
    assert_eq!((a["n"].as_u64(), a["k"].as_u64()), (Some(45), Some(37)));
    assert_eq!(a["d"]["value"].as_u64(), Some(3));
    assert_eq!(a["d"]["exact"].as_bool(), Some(true));
    let v = tensorq(&["verify", "--spec", s(&art)]);
    assert_eq!(v.code, 0, "{}", v.stdout);

    let (r, art) = build(&dir, "t3", r#"{"kind":"repetition-burst","n1":3,"n2":4}"#);
    assert_eq!(r.code, 0);
    let a = read_json(&art);
    assert_eq!((a["n"].as_u64(), a["k"].as_u64(), a["d"]["value"].as_u64()), (Some(12), Some(4), Some(3)));
    assert_eq!(a["burst"]["l"].as_u64(), Some(1));
    assert_eq!(tensorq(&["verify", "--spec", s(&art)]).code, 0);
}

#[test]
fn input_and_hypothesis_errors() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.json", "{not json");
    assert_eq!(tensorq(&["build", "--spec", s(&bad)]).code, 2);
    let unknown = file(&dir, "u.json", r#"{"kind":"nonsense"}"#);
    assert_eq!(tensorq(&["build", "--spec", s(&unknown)]).code, 2);
    assert_eq!(tensorq(&["build"]).code, 2);
    let even = file(&dir, "even.json", r#"{"kind":"repetition-burst","n1":4,"n2":9}"#);
    let r = tensorq(&["build", "--spec", s(&even)]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("odd"), "{}", r.stderr);
    let singular = format!(r#"{{"kind":"tensor-reversible","inner":{HAMMING},"outer":{{"kind":"mds","n":7,"d":3}}}}"#);
    let p = file(&dir, "sing.json", &singular);
    let r = tensorq(&["build", "--spec", s(&p)]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("H1·H1ᵀ"), "{}", r.stderr);
}

#[test]
fn verify_catches_mutation() {
    let dir = TempDir::new().unwrap();
    let (_, art) = build(&dir, "steane", &format!(r#"{{"kind":"css","c1":{HAMMING},"c2":{HAMMING}}}"#));
    let v = tensorq(&["verify", "--spec", s(&art)]);
    assert_eq!(v.code, 0, "{}", v.stdout);
    let mut a = read_json(&art);
    let row = a["stab_ab"][0].as_str().unwrap().to_string();
    // flip the first bit of the first row
    let first = u8::from_str_radix(&row[..2], 16).unwrap() ^ 0x80;
    a["stab_ab"][0] = Value::String(format!("{first:02x}{}", &row[2..]));
    let bad = file(&dir, "mut.json", &a.to_string());
    let v = tensorq(&["verify", "--spec", s(&bad)]);
    assert_eq!(v.code, 1);
    assert!(v.stdout.contains("FAIL  stabilizer rows commute"), "{}", v.stdout);
}

#[test]
fn empty_stabilizer_passes() {
    let dir = TempDir::new().unwrap();
    let full = r#"{"kind":"parity","rows":[[0,0,0]]}"#;
    let (r, art) = build(&dir, "full", &format!(r#"{{"kind":"css","c1":{full},"c2":{full}}}"#));
    assert_eq!(r.code, 0, "{}", r.stderr);
    let a = read_json(&art);
    assert_eq!((a["n"].as_u64(), a["k"].as_u64()), (Some(3), Some(3)));
    assert_eq!(a["stab_ab"].as_array().map(|v| v.len()), Some(0));
    assert_eq!(tensorq(&["verify", "--spec", s(&art)]).code, 0);
}

#[test]
fn table_rows() {
    let dir = TempDir::new().unwrap();
    let req = file(
        &dir,
        "rows.json",
        r#"{"rows":[{"m":5,"delta":7,"eta1":2,"eta2":3,"n2":[23,40]},{"m":6,"delta":5,"eta1":2,"eta2":2,"n2":[5,9,3]}]}"#,
    );
    let out = dir.path().join("t.json");
    let r = tensorq(&["table", "--spec", s(&req), "--out", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let rows = read_json(&out);
    for row in rows.as_array().unwrap() {
        let n2 = row["n2"].as_i64().unwrap();
        let (q, c) = (&row["qtpc"], &row["cqc"]);
        match row["m"].as_u64().unwrap() {
            5 => {
                assert_eq!((q["n"].as_i64(), q["k"].as_i64(), q["d"].as_i64()), (Some(31 * n2), Some(31 * n2 - 180), Some(7)));
                assert_eq!((c["k"].as_i64(), c["d"].as_i64()), (Some(28 * n2 - 112), Some(6)));
            }
            _ => {
                assert_eq!((q["n"].as_i64(), q["k"].as_i64(), q["d"].as_i64()), (Some(63 * n2), Some(63 * n2 - 72), Some(5)));
                assert_eq!((c["k"].as_i64(), c["d"].as_i64()), (Some(60 * n2 - 120), Some(4)));
                assert_eq!(row["in_range"].as_bool(), Some(n2 >= 5));
            }
        }
    }
    let csv = dir.path().join("t.csv");
    assert_eq!(tensorq(&["table", "--out", s(&csv)]).code, 0);
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 15);
    let r = tensorq(&["table", "--n2", "1"]);
    assert!(r.stdout.contains("OUT"));
    let cmp = file(&dir, "c.json", r#"{"m":5,"delta":7,"eta1":2,"eta2":3,"n2":23}"#);
    let r = tensorq(&["compare", "--spec", s(&cmp)]);
    assert!(r.stdout.contains("[[713, 533, 7]]") && r.stdout.contains("[[713, 532, 6]]"), "{}", r.stdout);
}

#[test]
fn decode_sim_exit_codes_and_determinism() {
    let dir = TempDir::new().unwrap();
    let (_, art) = build(&dir, "t3", r#"{"kind":"repetition-burst","n1":3,"n2":4}"#);
    let rep = dir.path().join("r.json");
    let r = tensorq(&["decode-sim", "--spec", s(&art), "--seed", "5", "--t", "1", "--l", "1", "--out", s(&rep)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let j = read_json(&rep);
    assert_eq!((j["mode"].as_str(), j["patterns"].as_u64(), j["failures"].as_u64()), (Some("exhaustive"), Some(37), Some(0)));
    assert!(j["first_failure"].is_null());

    let r = tensorq(&["decode-sim", "--spec", s(&art), "--seed", "5", "--t", "2", "--l", "1", "--out", s(&rep)]);
    assert_eq!(r.code, 1);
    assert!(!read_json(&rep)["first_failure"].is_null());

    let r = tensorq(&["decode-sim", "--spec", s(&art), "--seed", "5", "--trials", "0", "--out", s(&rep)]);
    assert_eq!(r.code, 0);
    assert_eq!(read_json(&rep)["patterns"].as_u64(), Some(0));

    assert_eq!(tensorq(&["decode-sim", "--spec", s(&art)]).code, 2, "seed is required");

    let (_, big) = build(&dir, "t5", r#"{"kind":"repetition-burst","n1":5,"n2":9}"#);
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let csv = dir.path().join("rates.csv");
    for p in [&a, &b] {
        let r = tensorq(&["decode-sim", "--spec", s(&big), "--seed", "9", "--trials", "300", "--budget", "0", "--out", s(p), "--csv", s(&csv)]);
        assert_eq!(r.code, 0, "{}", r.stdout);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(read_json(&a)["mode"].as_str(), Some("mc"));
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 1 + 3);
}

#[test]
fn distance_and_variants() {
    let dir = TempDir::new().unwrap();
    let spec = format!(r#"{{"kind":"tpc","inner":{HAMMING},"outer":{{"kind":"rs","n":9,"k":7}}}}"#);
    let p = file(&dir, "tpc.json", &spec);
    let mut docs = Vec::new();
    for v in ["psi", "companion_t", "companion"] {
        let out = dir.path().join(format!("{v}.json"));
        let r = tensorq(&["build", "--spec", s(&p), "--variant", v, "--out", s(&out)]);
        assert_eq!(r.code, 0, "{}", r.stderr);
        docs.push(read_json(&out));
    }
    assert_eq!(docs[0]["h"], docs[1]["h"]);
    assert!(docs.iter().all(|d| d["k"].as_u64() == Some(57)));
    assert_eq!(tensorq(&["build", "--spec", s(&p), "--variant", "bogus"]).code, 2);
    let out = dir.path().join("d.json");
    let r = tensorq(&["distance", "--spec", s(&p), "--out", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let d = read_json(&out);
    assert_eq!((d["d"]["value"].as_u64(), d["d"]["exact"].as_bool()), (Some(3), Some(true)));
}
