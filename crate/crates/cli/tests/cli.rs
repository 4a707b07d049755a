use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn expind(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_expind"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let o = expind(&[&["gen"], args].concat(), None);
    assert!(o.status.success());
    stdout(&o)
}

#[test]
fn gen_path_then_compute() {
    let p5 = gen(&["path", "--n", "5"]);
    let o = expind(&["compute", "alpha-e", "-"], Some(&p5));
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["value"], 2);
    assert_eq!(v["invariant"], "alpha_e");
    assert_eq!(v["witness"], serde_json::json!([0, 2]));

    let o = expind(&["compute", "alpha", "-"], Some(&p5));
    assert_eq!(json(&o)["value"], 3);
}

#[test]
fn all_max_on_p6() {
    let p6 = gen(&["path", "--n", "6"]);
    let o = expind(&["compute", "all-max", "-"], Some(&p6));
    assert_eq!(json(&o)["witnesses"], serde_json::json!([[0, 2, 5], [0, 3, 5]]));
}

#[test]
fn family_check_roundtrip() {
    let t3 = gen(&["t3", "--k", "3"]);
    let o = expind(&["family-check", "-"], Some(&t3));
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["name"], "T3(3)");
    assert_eq!(v["descriptor"]["kind"], "T3");

    let p5 = gen(&["path", "--n", "5"]);
    let o = expind(&["family-check", "-"], Some(&p5));
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["member"], false);
}

#[test]
fn check_eis_reports_violation() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(gen(&["path", "--n", "5"]).as_bytes()).unwrap();
    let path = file.path().to_str().unwrap();
    let o = expind(&["check", "eis", path, "--set", "0,2,4"], None);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["holds"], false);
    assert_eq!(v["violation"]["vertex"], 2);
    assert_eq!(v["violation"]["weight"], serde_json::json!({"num": "1", "shift": 0}));

    let o = expind(&["check", "eis", path, "--set", "0,2"], None);
    assert!(o.status.success());
    let o = expind(&["check", "eds", path, "--set", "0,2,4"], None);
    assert!(o.status.success());
}

#[test]
fn weight_of_a_star_leaf() {
    let star = gen(&["star", "--n", "6"]);
    let o = expind(&["weight", "-", "--set", "2,3,4,5,6", "--vertex", "1"], Some(&star));
    assert_eq!(json(&o)["weight"], serde_json::json!({"num": "5", "shift": 1}));
}

#[test]
fn graph6_input() {
    let o = expind(&["--graph6", "compute", "alpha-e", "-"], Some("Dhc\n"));
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    // Dhc is C5
    assert_eq!(json(&o)["value"], 2);
    let g6 = gen(&["--graph6", "bull"]);
    let o = expind(&["--graph6", "free-check", "-"], Some(&g6));
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["induced"]["pattern"], "bull");
}

#[test]
fn classify_p10() {
    let p10 = gen(&["path", "--n", "10"]);
    let v = json(&expind(&["classify", "-"], Some(&p10)));
    assert_eq!(v["meets_lower"], true);
    assert_eq!(v["is_path_5k"], true);
    assert_eq!(v["lower_bound"], serde_json::json!({"num": 4, "den": 1}));
}

#[test]
fn exit_codes() {
    assert_eq!(expind(&["compute", "alpha-e", "-"], Some("2 1\n0 5\n")).status.code(), Some(2));
    assert_eq!(expind(&["compute", "beta", "-"], Some("")).status.code(), Some(2));
    assert_eq!(expind(&["verify", "nope"], None).status.code(), Some(2));
    assert_eq!(expind(&["gen", "t4", "--k", "2"], None).status.code(), Some(2));
    let p30 = gen(&["path", "--n", "30"]);
    assert_eq!(
        expind(&["compute", "alpha-e", "-", "--budget", "10"], Some(&p30)).status.code(),
        Some(3)
    );
}

#[test]
fn verify_is_reproducible() {
    let run = || {
        let o = expind(&["verify", "thm1iii", "--max-n", "6", "--seed", "3", "--threads", "1"], None);
        assert!(o.status.success());
        stdout(&o)
            .lines()
            .map(|l| {
                let mut v: Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("elapsed_ms");
                v
            })
            .collect::<Vec<_>>()
    };
    let a = run();
    assert_eq!(a, run());
    assert_eq!(a[0]["type"], "header");
    assert_eq!(a[0]["seed"], 3);
    assert_eq!(a.last().unwrap()["instances_checked"], 200);
    assert_eq!(a.last().unwrap()["passed"], true);
}

#[test]
fn verify_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    let o = expind(&["verify", "thm3i", "--max-n", "25", "--output", out.to_str().unwrap()], None);
    assert!(o.status.success());
    let text = std::fs::read_to_string(out).unwrap();
    let summary: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(summary["instances_checked"], 25);
}

#[test]
fn enumerate_lines() {
    let o = expind(&["enumerate", "trees", "--n", "6"], None);
    assert_eq!(stdout(&o).lines().count(), 6);
    let o = expind(&["enumerate", "fbt", "--n", "11"], None);
    assert_eq!(stdout(&o).lines().count(), 6);
    let o = expind(&["enumerate", "fbt", "--n", "4"], None);
    assert_eq!(o.status.code(), Some(2));
}
