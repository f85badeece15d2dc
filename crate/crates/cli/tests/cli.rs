use std::fs;
use std::process::{Command, Output};

fn laver(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_laver"))
        .args(args)
        .env_remove("LAVER_MAX_N")
        .env_remove("LAVER_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn eval_prints_the_product() {
    let out = laver(&["eval", "-n", "3", "1", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "6\n");
}

#[test]
fn out_of_range_is_a_usage_error() {
    let out = laver(&["eval", "-n", "3", "9", "1"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("9"));
    assert_eq!(code(&laver(&["--max-n", "4", "eval", "-n", "5", "1", "1"])), 2);
    assert_eq!(code(&laver(&["threshold", "-n", "3", "5", "--from-cocycle"])), 2);
    assert_eq!(code(&laver(&["cocycle2", "-n", "2", "--family", "phi"])), 2);
    assert_eq!(code(&laver(&["braid", "-n", "2", "-s", "3", "-w", "1 4"])), 2);
    assert_eq!(code(&laver(&["frobnicate"])), 2);
}

#[test]
fn verify_all_passes_on_a3() {
    let out = laver(&["verify", "-n", "3", "--suite", "all"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.lines().all(|l| l.starts_with("PASS ")), "{text}");
    assert!(text.lines().count() >= 15);
}

#[test]
fn verify_json_lines_and_skips() {
    let out = laver(&["verify", "-n", "2", "--suite", "identities", "--json"]);
    assert_eq!(code(&out), 0);
    for line in stdout(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["failure_count"], 0);
    }
    let out = laver(&["verify", "-n", "5", "--suite", "cocycles"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("SKIP cocycle-space-k3"));
}

#[test]
fn poset_dot_for_a2() {
    let out = laver(&["poset", "-n", "2", "--dot", "-"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("digraph A2 {"));
    for edge in ["1 -> 3;", "3 -> 2;", "2 -> 4;"] {
        assert!(text.contains(edge), "{edge} missing from {text}");
    }
    assert_eq!(text.matches("->").count(), 3);
}

#[test]
fn poset_bounds_on_a5() {
    let out = laver(&["poset", "-n", "5", "--bounds", "18", "19"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("lub(18,19) = none"));
}

#[test]
fn psi2_csv_matches_reference() {
    let reference =
        fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/data/reference.txt")).unwrap();
    let block: Vec<&str> = reference
        .lines()
        .skip_while(|l| *l != "[psi 2 3]")
        .skip(1)
        .take_while(|l| !l.is_empty())
        .collect();
    assert_eq!(block.len(), 8);

    let out = laver(&["cocycle2", "-n", "3", "--family", "psi", "--q", "2", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,1,2,3,4,5,6,7,8"));
    for (p, (got, want)) in lines.zip(block).enumerate() {
        assert_eq!(got, format!("{},{}", p + 1, want.replace(' ', ",")));
    }
}

#[test]
fn table_json_for_a1() {
    let out = laver(&["table", "-n", "1", "--format", "json"]);
    assert_eq!(stdout(&out), "{\"n\":1,\"periods\":[1,2],\"rows\":[[2],[1,2]]}\n");
}

#[test]
fn binary_output_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("a4.lavr");
    let out = laver(&["table", "-n", "4", "--format", "binary", "-o", file.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let bytes = fs::read(&file).unwrap();
    assert_eq!(&bytes[..6], b"LAVR\x01\x04");

    let cache = dir.path().join("cache");
    let cache_arg = cache.to_str().unwrap();
    let first = laver(&["--cache-dir", cache_arg, "eval", "-n", "4", "3", "2"]);
    assert!(cache.join("A4.lavr").exists());
    let second = laver(&["--cache-dir", cache_arg, "eval", "-n", "4", "3", "2"]);
    assert_eq!(stdout(&first), "8\n");
    assert_eq!(stdout(&second), "8\n");
}

#[test]
fn decompose_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("psi.json");
    let out = laver(&["cocycle2", "-n", "3", "--family", "psi", "--q", "2", "--format", "json"]);
    fs::write(&path, out.stdout).unwrap();
    let out = laver(&["decompose", "-n", "3", "--input", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "{\"lambdas\":[1,1,0,0,1,0,0],\"constant\":0}\n");

    // a non-cocycle is a failed check, not a crash
    fs::write(&path, r#"{"n":1,"k":2,"values":[0,1,0,0]}"#).unwrap();
    let out = laver(&["decompose", "-n", "1", "--input", path.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
}

#[test]
fn cohomology_and_caps() {
    let out = laver(&["cohomology", "-n", "2", "-k", "2"]);
    assert_eq!(stdout(&out), "H^2(A_2) = Z\n");
    assert_eq!(code(&laver(&["cohomology", "-n", "4", "-k", "3"])), 2);
}

#[test]
fn braid_rewrites_pass() {
    let out = laver(&[
        "braid",
        "-n",
        "2",
        "-s",
        "3",
        "-w",
        "1 2 1",
        "-c",
        "1,2,3",
        "--psi",
        "2",
        "--rewrites",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS braid-rewrites"));
    let out = laver(&[
        "braid", "-n", "2", "-s", "3", "-w", "1 2 1", "--phi3", "2", "1", "--trace", "-",
    ]);
    let first = stdout(&out).lines().next().unwrap().to_string();
    let trace: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(trace["crossings"].as_array().unwrap().len(), 3);
}
