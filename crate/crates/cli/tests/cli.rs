use std::fs;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn invhom(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_invhom"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let (code, out, err) = invhom(&all);
    assert!(code == 0 || code == 1, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn homology_of_i2() {
    let (code, out, _) = invhom(&[
        "homology",
        "--monoid",
        "i:2",
        "--module",
        "trivial-ke",
        "--field",
        "q",
        "--max-degree",
        "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("betti: [3, 0, 0]"), "{out}");
}

#[test]
fn steinberg_pair_groupoid_passes() {
    let v = json(&[
        "verify",
        "steinberg-homology",
        "--groupoid",
        "pair:2",
        "--module",
        "regular",
        "--max-degree",
        "2",
    ]);
    assert_eq!(v["result"], "PASS");
    assert_eq!(v["lhs"], serde_json::json!([1, 0, 0]));
    assert_eq!(v["rhs"], serde_json::json!([1, 0, 0]));
}

#[test]
fn non_associative_table_is_an_input_error() {
    let p = scratch("bad.json");
    fs::write(&p, r#"{"size":3,"table":[0,1,2,1,1,0,2,0,2],"unit":0}"#).unwrap();
    let arg = format!("file:{}", p.display());
    let (code, out, err) = invhom(&["homology", "--monoid", &arg, "--module", "trivial-ke"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("not associative at (1,1,2)"), "{err}");
}

#[test]
fn malformed_input_exits_2_with_position() {
    let p = scratch("truncated.json");
    fs::write(&p, "{\"size\": 1,\n \"table\": [0,\n").unwrap();
    let arg = format!("file:{}", p.display());
    let (code, _, err) = invhom(&["homology", "--monoid", &arg, "--module", "constant"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    for args in [
        vec!["homology", "--monoid", "i:99", "--module", "constant"],
        vec![
            "homology", "--monoid", "z:2", "--module", "constant", "--field", "fp:4",
        ],
        vec!["homology", "--monoid", "z:2"],
        vec![
            "homology",
            "--monoid",
            "z:2",
            "--module",
            "constant",
            "--max-degree",
            "99",
        ],
        vec![
            "verify",
            "collapse-homology",
            "--monoid",
            "trivial",
            "--algebra",
            "dual",
            "--action",
            "trivial",
            "--bimodule",
            "regular",
        ],
        vec!["frobnicate"],
    ] {
        assert_eq!(invhom(&args).0, 2, "{args:?}");
    }
}

#[test]
fn characteristic_two_group_algebra() {
    // KZ/2 over F_2 is not separable, but the Steinberg collapse only needs ℒ(X)
    let (code, out, _) = invhom(&[
        "verify",
        "steinberg-homology",
        "--groupoid",
        "group:z2",
        "--module",
        "regular",
        "--field",
        "fp:2",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("rhs: [2, 2, 2]"));
}

#[test]
fn collapse_and_crossed_product_commands() {
    let v = json(&[
        "verify",
        "collapse-homology",
        "--monoid",
        "i:1",
        "--algebra",
        "ke",
        "--action",
        "conj",
        "--bimodule",
        "regular",
    ]);
    assert_eq!(v["result"], "PASS");
    let v = json(&[
        "verify",
        "collapse-cohomology",
        "--monoid",
        "chain:2*z:2",
        "--algebra",
        "diag:2",
        "--action",
        "trivial",
        "--bimodule",
        "regular",
    ]);
    assert_eq!(v["result"], "PASS");
    let v = json(&[
        "crossed-product",
        "--monoid",
        "chain:2*z:2",
        "--algebra",
        "k",
        "--action",
        "trivial",
        "--seed",
        "7",
    ]);
    assert_eq!(v["result"], "PASS");
    assert_eq!(v["class_sum_converse"], true);
    assert_eq!(v["phi"]["bijective"], true);
    let v = json(&["verify", "ks-crossed-product", "--monoid", "chain:2*z:2"]);
    assert_eq!(v["result"], "PASS");
    let v = json(&["steinberg", "--groupoid", "pair:2+discrete:1"]);
    assert_eq!(v["result"], "PASS");
    assert_eq!(v["bisections"], 14);
    let v = json(&["resolution-check", "--monoid", "i:2", "--max-degree", "1"]);
    assert_eq!(v["result"], "PASS");
}

#[test]
fn reports_are_byte_identical() {
    let runs = [
        vec![
            "homology",
            "--monoid",
            "i:2",
            "--module",
            "regular",
            "--max-degree",
            "1",
        ],
        vec![
            "cohomology",
            "--monoid",
            "z:3",
            "--module",
            "trivial-ke",
            "--field",
            "fp:3",
            "--format",
            "json",
        ],
        vec![
            "crossed-product",
            "--monoid",
            "i:2",
            "--algebra",
            "ke",
            "--action",
            "conj",
            "--format",
            "json",
            "--seed",
            "3",
        ],
        vec![
            "verify",
            "steinberg-cohomology",
            "--groupoid",
            "pair:2",
            "--module",
            "regular",
        ],
    ];
    for args in runs {
        let a = invhom(&args);
        let b = invhom(&args);
        assert_eq!(a.0, 0, "{}", a.2);
        assert_eq!(a, b, "{args:?}");
    }
}

fn exact_numbers(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_u64() || n.is_i64(),
        Value::Array(a) => a.iter().all(exact_numbers),
        Value::Object(m) => m.values().all(exact_numbers),
        _ => true,
    }
}

#[test]
fn json_reports_round_trip_exactly() {
    let v = json(&[
        "crossed-product",
        "--monoid",
        "i:1",
        "--algebra",
        "ke",
        "--action",
        "conj",
    ]);
    assert!(exact_numbers(&v));
    for x in v["unit"].as_array().unwrap() {
        let s = x.as_str().unwrap();
        assert_eq!(
            inverse_hom::field::parse_rational(s).unwrap().to_string(),
            s
        );
    }
    let v = json(&[
        "crossed-product",
        "--monoid",
        "i:1",
        "--algebra",
        "ke",
        "--action",
        "conj",
        "--field",
        "fp:5",
    ]);
    assert!(v["unit"]
        .as_array()
        .unwrap()
        .iter()
        .all(|x| x.as_u64().is_some_and(|n| n < 5)));
    let text = serde_json::to_string_pretty(&v).unwrap() + "\n";
    let again = invhom(&[
        "crossed-product",
        "--monoid",
        "i:1",
        "--algebra",
        "ke",
        "--action",
        "conj",
        "--field",
        "fp:5",
        "--format",
        "json",
    ])
    .1;
    assert_eq!(text, again);
}

#[test]
fn job_files_with_inline_and_file_inputs() {
    let module = scratch("module.json");
    fs::write(
        &module,
        r#"{"monoid_ref":"monoid","field":"q","dim":1,"act":[["1"],["1"]],"side":"left"}"#,
    )
    .unwrap();
    let job = scratch("job.json");
    fs::write(
        &job,
        r#"{"command":"homology","field":"q","max_degree":3,
            "inputs":{"monoid":{"size":2,"table":[0,1,1,0],"unit":0},"module":"file:module.json"},
            "output_format":"json"}"#,
    )
    .unwrap();
    let (code, out, err) = invhom(&["job", job.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["betti"], serde_json::json!([1, 0, 0, 0]));
    let job2 = scratch("job2.json");
    fs::write(&job2, r#"{"command":"verify","check":"steinberg-homology","inputs":{"groupoid":"discrete:3","module":"regular"}}"#).unwrap();
    let (code, out, _) = invhom(&["job", job2.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("lhs: [3, 0, 0]"));
    let bad = scratch("job3.json");
    fs::write(&bad, r#"{"command":"verify","inputs":{}}"#).unwrap();
    assert_eq!(invhom(&["job", bad.to_str().unwrap()]).0, 2);
    let wrong_ref = scratch("job4.json");
    fs::write(
        &wrong_ref,
        r#"{"command":"homology","inputs":{"monoid":"z:2","module":{"monoid_ref":"other","dim":1,"act":[["1"],["1"]]}}}"#,
    )
    .unwrap();
    assert_eq!(invhom(&["job", wrong_ref.to_str().unwrap()]).0, 2);
}

#[test]
fn timing_is_opt_in() {
    let args = ["homology", "--monoid", "z:2", "--module", "constant"];
    assert!(!invhom(&args).1.contains("elapsed_ms"));
    let mut with = args.to_vec();
    with.push("--timing");
    assert!(invhom(&with).1.contains("elapsed_ms"));
}
