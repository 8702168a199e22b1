use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use sha2::{Digest, Sha256};

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn shadowsum(args: &[&str]) -> Output {
    let args: Vec<String> = args
        .iter()
        .map(|a| {
            if a.ends_with(".json") && !Path::new(a).is_absolute() {
                corpus().join(a).to_string_lossy().into_owned()
            } else {
                a.to_string()
            }
        })
        .collect();
    Command::new(env!("CARGO_BIN_EXE_shadowsum"))
        .args(&args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = shadowsum(&a);
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"))
}

fn value_of(v: &Value) -> (f64, f64) {
    let a = v["value"].as_array().expect("value present");
    (a[0].as_f64().unwrap(), a[1].as_f64().unwrap())
}

#[test]
fn golden_table() {
    let table = std::fs::read_to_string(corpus().join("golden.tsv")).unwrap();
    let mut rows = 0;
    let mut codes = std::collections::BTreeSet::new();
    for line in table.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 4, "{line}");
        let args: Vec<&str> = cols[0].split_whitespace().collect();
        let code: i32 = cols[1].parse().unwrap();
        let out = shadowsum(&args);
        assert_eq!(out.status.code(), Some(code), "{line}: {}", String::from_utf8_lossy(&out.stderr));
        codes.insert(code);
        if cols[2] != "-" {
            let (re, im) = value_of(&json(&args));
            let want: (f64, f64) = (cols[2].parse().unwrap(), cols[3].parse().unwrap());
            let scale = want.0.abs().max(want.1.abs()).max(1.0);
            assert!((re - want.0).abs() <= 1e-9 * scale, "{line}: re {re}");
            assert!((im - want.1).abs() <= 1e-9 * scale, "{line}: im {im}");
        }
        rows += 1;
    }
    assert!(rows >= 12);
    assert_eq!(codes.into_iter().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);
}

#[test]
fn json_value_matches_text_exactly() {
    for args in [
        &["eval", "shadow_figure_eight.json", "--level", "3"][..],
        &["wlo", "nested_pair.json", "--mode", "dpfree"],
        &["wlo", "hopf.json", "--mode", "abelian", "--level", "5"],
        &["wlo", "--mode", "vertical", "--level", "7", "--dims", "2,3,4", "--genus", "2"],
    ] {
        let v = json(args);
        let text = String::from_utf8(shadowsum(args).stdout).unwrap();
        let line = text.lines().find(|l| l.starts_with("value: ")).unwrap();
        let inner = line.trim_start_matches("value: [").trim_end_matches(']');
        let parts: Vec<f64> = inner.split(", ").map(|s| s.parse().unwrap()).collect();
        let (re, im) = value_of(&v);
        assert_eq!(re.to_bits(), parts[0].to_bits(), "{args:?}");
        assert_eq!(im.to_bits(), parts[1].to_bits(), "{args:?}");
        assert_eq!(v["command"].as_str().unwrap(), text.lines().next().unwrap().trim_start_matches("command: "));
    }
}

#[test]
fn json_record_survives_a_second_roundtrip() {
    let out = shadowsum(&["wlo", "disjoint_pair.json", "--mode", "dpfree", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let w: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, w);
    let (a, b) = (value_of(&v), value_of(&w));
    assert_eq!((a.0.to_bits(), a.1.to_bits()), (b.0.to_bits(), b.1.to_bits()));
}

#[test]
fn output_is_byte_identical_across_runs_and_threads() {
    for args in [
        &["eval", "shadow_figure_eight.json", "--level", "4"][..],
        &["check", "hopf.json", "--what", "lem2"],
        &["wlo", "nested_pair.json", "--mode", "dpfree", "--format", "json"],
    ] {
        let a = shadowsum(args).stdout;
        let b = shadowsum(args).stdout;
        assert_eq!(a, b, "{args:?}");
        for threads in ["1", "3"] {
            let mut t = args.to_vec();
            t.extend(["--threads", threads]);
            assert_eq!(shadowsum(&t).stdout, a, "{args:?} with {threads} threads");
        }
    }
}

#[test]
fn digest_is_sha256_of_input_bytes() {
    let path = corpus().join("hopf.json");
    let bytes = std::fs::read(&path).unwrap();
    let v = json(&["wlo", "hopf.json", "--mode", "abelian"]);
    assert_eq!(v["digest"].as_str().unwrap(), hex::encode(Sha256::digest(&bytes)));

    let copy = Path::new(env!("CARGO_TARGET_TMPDIR")).join("hopf_spaced.json");
    std::fs::write(&copy, [bytes.as_slice(), b"\n"].concat()).unwrap();
    let w = json(&["wlo", copy.to_str().unwrap(), "--mode", "abelian"]);
    assert_ne!(w["digest"], v["digest"]);
    assert_eq!(w["value"], v["value"]);
}

#[test]
fn dpfree_reports_pair_sum_and_difference() {
    let v = json(&["wlo", "circle_w0.json", "--mode", "dpfree"]);
    let pair: Vec<f64> = v["diagnostics"]["pair_sum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    let (re, im) = value_of(&v);
    let diff = v["diagnostics"]["difference"].as_f64().unwrap();
    assert!((diff - ((re - pair[0]).powi(2) + (im - pair[1]).powi(2)).sqrt()).abs() < 1e-15);
    assert_eq!(v["diagnostics"]["admissible_pairs"], v["diagnostics"]["admissible_colorings"]);

    let n = json(&["wlo", "nested_pair.json", "--mode", "dpfree"]);
    assert_eq!(n["diagnostics"]["loop_parity"], 0);
    assert!(n["diagnostics"]["difference"].as_f64().unwrap() < 1e-9);
}

#[test]
fn check_reports_cardinalities() {
    let v = json(&["check", "nested_pair.json", "--what", "bijection"]);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["diagnostics"]["admissible_pairs"], v["diagnostics"]["admissible_colorings"]);
    assert!(v.get("value").is_none());

    let l = json(&["check", "hopf.json", "--what", "lem2", "--samples", "3", "--seed", "9"]);
    assert_eq!(l["diagnostics"]["t0"].as_array().unwrap().len(), 4);
    let table = &l["diagnostics"]["linking"];
    assert_eq!(table[0][1], table[1][0]);
    assert_eq!(table[0][1].as_i64().unwrap().abs(), 1);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(shadowsum(&["eval", "shadow_circle.json"]).status.code(), Some(2));
    assert_eq!(shadowsum(&["wlo", "--mode", "dpfree"]).status.code(), Some(2));
    assert_eq!(shadowsum(&["wlo", "--mode", "vertical"]).status.code(), Some(2));
    assert_eq!(shadowsum(&["eval", "no_such_file.json", "--level", "1"]).status.code(), Some(2));
    assert_eq!(shadowsum(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        shadowsum(&["wlo", "hopf.json", "--mode", "dpfree", "--level", "0"]).status.code(),
        Some(4)
    );
}

#[test]
fn errors_name_the_violated_invariant() {
    let out = shadowsum(&["eval", "malformed_shadow.json", "--level", "2"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("invalid shadow") && err.contains("face"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn timing_is_opt_in() {
    let args = ["eval", "shadow_circle.json", "--level", "2"];
    assert!(json(&args).get("wall_time_ms").is_none());
    let mut t = args.to_vec();
    t.push("--timing");
    assert!(json(&t)["wall_time_ms"].as_f64().unwrap() >= 0.0);
}
