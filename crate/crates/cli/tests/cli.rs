use std::process::{Command, Output};

use serde_json::Value;

fn rootdisk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rootdisk"))
        .args(args)
        .env_remove("ROOTDISK_CONFIG")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn csv(out: &Output) -> Vec<std::collections::HashMap<String, String>> {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let mut lines = text.lines();
    let header: Vec<String> = lines.next().unwrap().split(',').map(String::from).collect();
    lines
        .map(|l| header.iter().cloned().zip(l.split(',').map(String::from)).collect())
        .collect()
}

#[test]
fn fixture_bound_is_radius_seven() {
    let out = rootdisk(&[
        "bound",
        "--coeffs",
        "4;1;1;1",
        "--theorem",
        "thm17",
        "--t1",
        "1",
        "--t2",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["center"], serde_json::json!([0.0, 0.0]));
    assert_eq!(v["radius"], 7.0);
    assert_eq!(v["ok"], true);
}

#[test]
fn classical_verify_reports_tightness() {
    let out = rootdisk(&["verify", "--coeffs", "1;2;3", "--theorem", "ek"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["contained"], true);
    let t = v["tightness"].as_f64().unwrap();
    assert!((t - 1.0 / 3f64.sqrt()).abs() < 1e-10, "tightness {t}");
}

#[test]
fn degree_gate_exits_one() {
    let out = rootdisk(&["check", "--coeffs", "1;2;3", "--theorem", "thm17", "--t1", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["ok"], false);
    let violations: Vec<&str> = v["violations"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap())
        .collect();
    assert!(
        violations.iter().any(|s| s.contains("n ≥ 3 required")),
        "{violations:?}"
    );
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(
        rootdisk(&["bound", "--coeffs", "1;oops", "--theorem", "ek"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rootdisk(&["bound", "--coeffs", "1;2", "--theorem", "nope"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rootdisk(&["bound", "--coeffs", "1;2", "--theorem", "thm17"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(rootdisk(&["bound", "--theorem", "ek"]).status.code(), Some(2));
}

/// A complex instance produced by `gen --checker thm17 --n 5 --k 1 --alpha 0.6 --seed 4`.
const COMPLEX: &str = "0.3675649522045208,0.17118413216598416;0.8719154050110378,-0.4896565393257175;\
0.8428378465785215,-0.01967148883151756;0.3017309761267929,0.04535637575554853;\
0.10434769156225727,0.05999463313979502;0.07638495585147158,0.03683592695102075";

#[test]
fn csv_and_json_carry_identical_numbers() {
    let base = ["bound", "--coeffs", COMPLEX, "--theorem", "thm17", "--t1", "1"];
    let j = rootdisk(&[&base[..], &["--format", "json"]].concat());
    let c = rootdisk(&[&base[..], &["--format", "csv"]].concat());
    assert_eq!(j.status.code(), Some(0), "{}", String::from_utf8_lossy(&j.stderr));
    let j = json(&j);
    assert!(j["alpha"].as_f64().unwrap() > 0.0 && j["center"][1].as_f64().unwrap() != 0.0);
    compare_bound(&j, &csv(&c)[0]);
}

fn csv_and_json_on_fixture() {
    let base = [
        "bound",
        "--coeffs",
        "4;1;1;1",
        "--theorem",
        "thm110",
        "--t1",
        "0.9",
        "--t2",
        "0.1",
    ];
    let j = rootdisk(&[&base[..], &["--format", "json"]].concat());
    let c = rootdisk(&[&base[..], &["--format", "csv"]].concat());
    assert_eq!(j.status.code(), Some(0));
    compare_bound(&json(&j), &csv(&c)[0]);
}

fn compare_bound(j: &Value, row: &std::collections::HashMap<String, String>) {
    let num = |s: &str| s.parse::<f64>().unwrap();
    assert_eq!(row["theorem"], j["theorem"].as_str().unwrap());
    assert_eq!(num(&row["center_re"]), j["center"][0].as_f64().unwrap());
    assert_eq!(num(&row["center_im"]), j["center"][1].as_f64().unwrap());
    for key in ["t1", "t2", "radius", "enclosing", "alpha", "beta"] {
        match j[key].as_f64() {
            Some(x) => assert_eq!(num(&row[key]).to_bits(), x.to_bits(), "{key}"),
            None => assert_eq!(row[key], "", "{key}"),
        }
    }
}

#[test]
fn csv_and_json_agree_on_fixture() {
    csv_and_json_on_fixture();
}

#[test]
fn compare_rows_match_between_formats() {
    let j = rootdisk(&["compare", "--coeffs", "4;1;1;1", "--grid-points", "16"]);
    let c = rootdisk(&[
        "compare",
        "--coeffs",
        "4;1;1;1",
        "--grid-points",
        "16",
        "--format",
        "csv",
    ]);
    assert_eq!(j.status.code(), Some(0));
    let rows = csv(&c);
    let items = json(&j);
    let items = items.as_array().unwrap();
    assert_eq!(rows.len(), items.len());
    for (row, item) in rows.iter().zip(items) {
        compare_bound(item, row);
        assert_eq!(row["contained"], "true");
        assert_eq!(
            row["tightness"].parse::<f64>().unwrap(),
            item["tightness"].as_f64().unwrap()
        );
        if let Some(n) = item["nested"].as_bool() {
            assert!(n, "{}", row["theorem"]);
        }
    }
    assert_eq!(
        String::from_utf8_lossy(&c.stdout).lines().next().unwrap(),
        "theorem,t1,t2,k,m,alpha,beta,center_re,center_im,radius,enclosing,tightness,contained,nested,input"
    );
}

#[test]
fn search_reads_config_file_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"grid_points": 8, "refine_iterations": 1}"#).unwrap();
    let poly = dir.path().join("p.json");
    std::fs::write(&poly, r#"{"coeffs": [1, 1, 1]}"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_rootdisk"))
        .args(["search", poly.to_str().unwrap(), "--theorem", "aziz_real"])
        .env("ROOTDISK_CONFIG", &cfg)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let small = v["evaluations"].as_u64().unwrap();
    assert!((v["best"]["t1"].as_f64().unwrap() - 1.0).abs() <= 1e-4);
    let out = Command::new(env!("CARGO_BIN_EXE_rootdisk"))
        .args([
            "search",
            poly.to_str().unwrap(),
            "--theorem",
            "aziz_real",
            "--grid-points",
            "32",
        ])
        .env("ROOTDISK_CONFIG", &cfg)
        .output()
        .unwrap();
    assert!(json(&out)["evaluations"].as_u64().unwrap() > small);
    std::fs::write(&cfg, r#"{"grid_points": 1}"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_rootdisk"))
        .args(["search", poly.to_str().unwrap(), "--theorem", "aziz_real"])
        .env("ROOTDISK_CONFIG", &cfg)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_infeasible_exits_one() {
    let out = rootdisk(&[
        "search",
        "--coeffs",
        "1;2;3",
        "--theorem",
        "thm17",
        "--grid-points",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["infeasible"], true);
}

#[test]
fn gen_writes_instances_with_sidecars() {
    let dir = tempfile::tempdir().unwrap();
    let out = rootdisk(&[
        "gen",
        "--checker",
        "thm110",
        "--n",
        "5",
        "--k",
        "2",
        "--m",
        "1",
        "--seed",
        "3",
        "--count",
        "3",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let listed = json(&out);
    assert_eq!(listed.as_array().unwrap().len(), 3);
    for item in listed.as_array().unwrap() {
        let poly = item["polynomial"].as_str().unwrap();
        let meta: Value =
            serde_json::from_str(&std::fs::read_to_string(item["sidecar"].as_str().unwrap()).unwrap()).unwrap();
        assert_eq!(meta["checker"], "thm110");
        assert_eq!(meta["ok"], true);
        assert_eq!(meta["spec"]["n"], 5);
        let check = rootdisk(&["check", poly, "--theorem", "thm110", "--t1", "1"]);
        assert_eq!(check.status.code(), Some(0));
    }
    let bad = rootdisk(&[
        "gen",
        "--checker",
        "thm17",
        "--n",
        "2",
        "--k",
        "0",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn text_format_is_readable() {
    let out = rootdisk(&[
        "verify",
        "--coeffs",
        "4;1;1;1",
        "--theorem",
        "thm17",
        "--t1",
        "1",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("thm17"));
    assert!(text.contains("radius 7") && text.contains("contained"));
}
