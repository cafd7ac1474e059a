use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pathmodel")).args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn root_info_g2() {
    let o = run(&["root-info", "G2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("k_R = 6"));
    assert!(s.contains("θ = 3α1+2α2"));
}

#[test]
fn root_info_json() {
    let o = run(&["--json", "root-info", "E8"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["saturation_factor"], 60);
    assert_eq!(v["weyl_order"], "696729600");
}

#[test]
fn fixture_is_hecke_not_ls() {
    let f = fixture("a2_hecke_not_ls.json");
    assert_eq!(run(&["check-path", &f, "--hecke"]).status.code(), Some(0));
    assert_eq!(run(&["check-path", &f, "--chain"]).status.code(), Some(0));
    assert_eq!(run(&["check-path", &f, "--ls"]).status.code(), Some(1));
}

#[test]
fn check_path_json_reports_breaks() {
    let o = run(&["--json", "check-path", &fixture("a2_hecke_not_ls.json"), "--hecke"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], true);
    assert_eq!(v["breaks"][0]["time"], "1/2");
    assert_eq!(v["breaks"][0]["point"], serde_json::json!(["-1/2", "-1/2"]));
}

#[test]
fn decompose_both_flags_equality() {
    let o = run(&["--json", "decompose", "A2", "1,0", "0,1", "--both"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["equal"], true);
    assert_eq!(v["oracle"], serde_json::json!([{"gamma": [0, 0], "mult": 1}, {"gamma": [1, 1], "mult": 1}]));
}

#[test]
fn dim_and_ls_paths_agree() {
    let o = run(&["dim", "G2", "0,1"]);
    assert_eq!(stdout(&o).trim(), "7");
    let o = run(&["--json", "ls-paths", "G2", "0,1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 7);
}

#[test]
fn hecke_exists_verdicts() {
    assert_eq!(run(&["hecke-exists", "A1", "1", "2", "1"]).status.code(), Some(0));
    assert_eq!(run(&["hecke-exists", "A1", "0", "1", "0", "--denom-bound", "12"]).status.code(), Some(1));
    let o = run(&["--json", "hecke-exists", "A2", "1,1", "1,1", "0,0"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exists"], true);
    assert_eq!(v["denominator_bound"], 6);
    assert_eq!(v["witness"]["system"], "A2");
}

#[test]
fn dilation_sweep_clean() {
    let o = run(&["dilation-sweep", "B2", "1,0", "0,1", "--coord-bound", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("counterexamples: 0"));
}

#[test]
fn saturation_scan_csv() {
    let path = std::env::temp_dir().join(format!("pathmodel-scan-{}.csv", std::process::id()));
    let o = run(&[
        "--workers",
        "2",
        "saturation-scan",
        "A2",
        "--coord-bound",
        "1",
        "--k",
        "1",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("system,alpha,beta,gamma,first_live_N,nonzero_at_k"));
    assert!(lines.next().unwrap().starts_with("A2,\"(0,0)\",\"(0,0)\",\"(0,0)\",1,true"));
}

#[test]
fn refusal_and_usage_exit_codes() {
    let o = run(&["hecke-exists", "E8", "1,0,0,0,0,0,0,0", "1,0,0,0,0,0,0,0", "0,0,0,0,0,0,0,0"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["--weyl-order-bound", "6", "hecke-exists", "B2", "1,0", "1,0", "0,0"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(run(&["dim", "A2", "1"]).status.code(), Some(2));
    assert_eq!(run(&["dim", "Q7", "1"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["check-path", &fixture("a2_hecke_not_ls.json")]).status.code(), Some(2));
}
