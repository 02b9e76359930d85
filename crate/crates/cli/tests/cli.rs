use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_packing"))
}

fn run(args: &[&str], dir: &Path) -> Output {
    bin().args(args).current_dir(dir).output().expect("binary runs")
}

fn fixtures() -> (tempfile::TempDir, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["fixtures", "all", "--out-dir", "fx"], dir.path());
    assert!(out.status.success());
    let fx = dir.path().join("fx");
    (dir, fx)
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_exit_codes() {
    let (dir, _) = fixtures();
    let d = dir.path();
    let o = run(&["solve", "fx/petersen.txt", "--spec", "1,2,2,2,2,2,2", "--out", "p.col"], d);
    assert_eq!(code(&o), 0);
    let v = run(&["verify", "fx/petersen.txt", "p.col", "--spec", "1,2,2,2,2,2,2"], d);
    assert_eq!(code(&v), 0);
    assert_eq!(code(&run(&["solve", "fx/petersen.txt", "--spec", "1,2,2,2,2,2"], d)), 1);
    assert_eq!(code(&run(&["solve", "fx/k4.txt", "--spec", "1,2,2,2"], d)), 0);
    assert_eq!(code(&run(&["solve", "fx/k4.txt", "--spec", "1,0"], d)), 2);
    assert_eq!(code(&run(&["solve", "missing.txt", "--spec", "1,2"], d)), 2);
}

#[test]
fn solve_with_partial() {
    let (dir, _) = fixtures();
    let d = dir.path();
    std::fs::write(d.join("part.col"), "0 0 0 0 0 0 0 0 0 7\n").unwrap();
    let o = run(&["--json", "solve", "fx/petersen.txt", "--spec", "1,2,2,2,2,2,2", "--partial", "part.col"], d);
    assert_eq!(code(&o), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["result"]["coloring"][9], 7);
    assert_eq!(report["inputs"].as_array().unwrap().len(), 2);
    assert_eq!(report["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn verify_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(d.join("c4.txt"), "4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    std::fs::write(d.join("bad.col"), "2 1 2 1\n").unwrap();
    std::fs::write(d.join("short.col"), "2 1 2\n").unwrap();
    std::fs::write(d.join("k3.txt"), "3 3\r\n0 1\r\n1 2\r\n0 2\r\n").unwrap();
    std::fs::write(d.join("k3.col"), "1 2 3\n").unwrap();
    let o = run(&["verify", "c4.txt", "bad.col", "--spec", "1,2"], d);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("color 2 on 0 and 2 at distance 2"));
    assert_eq!(code(&run(&["verify", "c4.txt", "short.col", "--spec", "1,2"], d)), 2);
    assert_eq!(code(&run(&["verify", "k3.txt", "k3.col", "--spec", "1,1,1"], d)), 0);
}

#[test]
fn refute_and_info() {
    let (dir, _) = fixtures();
    let d = dir.path();
    assert_eq!(code(&run(&["refute", "fx/petersen.txt", "--spec", "1,2,2,2,2,2", "--break-symmetry"], d)), 0);
    assert_eq!(code(&run(&["refute", "fx/petersen.txt", "--spec", "1,2,2,2,2,2,2"], d)), 1);
    let o = run(&["--json", "info", "fx/petersen.txt"], d);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["result"]["structure"]["girth"], 5);
    assert_eq!(report["result"]["edge_cuts"].as_array().unwrap().len(), 0);
}

#[test]
fn check_config_outcomes() {
    let (dir, _) = fixtures();
    let d = dir.path();
    let o = run(&["check-config", "fx/synthetic_configs.cfg", "--quiet"], d);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    assert!(text.starts_with("'ring6_t2' Reducible\n"));
    assert!(text.contains("'petersen_t1' Precoloring "));
    std::fs::write(d.join("garbage.cfg"), "name\n1\n0 1 2\n3\n1 1 3\n").unwrap();
    assert_eq!(code(&run(&["check-config", "garbage.cfg"], d)), 2);
    std::fs::write(d.join("empty.cfg"), "").unwrap();
    assert_eq!(code(&run(&["check-config", "empty.cfg"], d)), 0);
}

#[test]
fn check_config_resume_skips_earlier_work() {
    let (dir, _) = fixtures();
    let d = dir.path();
    let full = run(&["--json", "check-config", "fx/synthetic_configs.cfg", "--quiet", "--engine", "faithful"], d);
    let full: serde_json::Value = serde_json::from_str(&stdout(&full)).unwrap();
    let records = full["result"]["records"].as_array().unwrap();
    let index = records.iter().position(|r| r["name"] == "petersen_t2").unwrap();
    let last = &records[index];
    // resuming at the reported witness finds the same witness first
    let w: Vec<String> = last["witness"]["patterns"].as_array().unwrap().iter().map(|x| x.to_string()).collect();
    let cursor = format!("{index}:{}", w.join(","));
    let resumed = run(&["--json", "check-config", "fx/synthetic_configs.cfg", "--quiet", "--resume", &cursor], d);
    let resumed: serde_json::Value = serde_json::from_str(&stdout(&resumed)).unwrap();
    let records = resumed["result"]["records"].as_array().unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["witness"], last["witness"]);
    assert!(
        records[0]["stats"]["precolorings_total"].as_u64().unwrap()
            < last["stats"]["precolorings_total"].as_u64().unwrap()
    );
    assert_eq!(code(&run(&["check-config", "fx/synthetic_configs.cfg", "--resume", "7:99,0"], d)), 2);
}

#[test]
fn discharge_exit_codes() {
    let (dir, _) = fixtures();
    let d = dir.path();
    let o = run(&["--json", "discharge", "fx/cube.txt", "fx/cube.rot"], d);
    assert_eq!(code(&o), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["result"]["euler_total"], "-48/4");
    assert_eq!(report["result"]["unhappy"].as_array().unwrap().len(), 6);
    assert_eq!(code(&run(&["discharge", "fx/chorded_ring.txt", "fx/chorded_ring.rot"], d)), 0);
    std::fs::write(d.join("k5.txt"), "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n").unwrap();
    std::fs::write(d.join("k5.rot"), "1 2 3 4\n0 2 3 4\n0 1 3 4\n0 1 2 4\n0 1 2 3\n").unwrap();
    assert_eq!(code(&run(&["discharge", "k5.txt", "k5.rot"], d)), 2);
    std::fs::write(d.join("bad.rot"), "1 2\n").unwrap();
    assert_eq!(code(&run(&["discharge", "fx/cube.txt", "bad.rot"], d)), 2);
}

#[test]
fn fixtures_round_trip() {
    let (_dir, fx) = fixtures();
    let sample = std::fs::read_to_string(fx.join("sample_config.txt")).unwrap();
    assert_eq!(sample, packing_core::reducibility::SAMPLE_CONFIG);
    for (file, g) in [
        ("petersen.txt", packing_core::graph::named::petersen()),
        ("cube.txt", packing_core::graph::named::cube()),
        ("sharpness_doubled.txt", packing_core::graph::named::sharpness_doubled()),
    ] {
        let bytes = std::fs::read(fx.join(file)).unwrap();
        assert_eq!(packing_core::graph::parse_edge_list(&bytes).unwrap(), g);
    }
    let head = std::fs::read_to_string(fx.join("petersen.txt")).unwrap();
    assert!(head.starts_with("10 15\n"));
    let cfgs = packing_core::reducibility::parse_config_file(&std::fs::read(fx.join("synthetic_configs.cfg")).unwrap()).unwrap();
    assert_eq!(cfgs, packing_core::reducibility::synthetic_corpus());
}

#[test]
fn gadget_command() {
    let (dir, _) = fixtures();
    let d = dir.path();
    assert_eq!(code(&run(&["gadget", "fx/sharpness_gadget.txt", "--v1", "0"], d)), 0);
    assert_eq!(code(&run(&["gadget", "fx/petersen.txt"], d)), 1);
}
