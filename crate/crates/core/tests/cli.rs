use std::path::Path;
use std::process::{Command, Output};

use groupwigner::io::{from_json, GroupJson, IrrepSetJson, WignerJson};

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_groupwigner"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn catalog_lists_nine_groups() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["catalog", "list"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.iter().any(|r| r.starts_with("F21") && r.ends_with("no")));
    assert!(rows.iter().any(|r| r.starts_with("C3xC5") && r.contains("15") && r.ends_with("yes")));
}

#[test]
fn position_eigenstate_on_c3() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("e.json"), "[[1,0],[0,0],[0,0]]").unwrap();
    let o = run(&["wigner", "compute", "--group", "C3", "--state", "e.json", "--variant", "I", "--csv", "w.csv"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let w = from_json::<WignerJson>(&stdout(&o)).unwrap().into_tensor().unwrap();
    for g in 0..3 {
        for j in 0..3 {
            let expect = if g == 0 { 1.0 } else { 0.0 };
            assert!((w.value(g, j, 0, 0).re - expect).abs() < 1e-15);
            assert!(w.value(g, j, 0, 0).im.abs() < 1e-15);
        }
    }
    let csv = std::fs::read_to_string(dir.path().join("w.csv")).unwrap();
    assert_eq!(csv.lines().count(), 10);
}

#[test]
fn files_chain_through_commands() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    assert_eq!(run(&["group", "make", "--spec", "sd(C7,C3,[0,2,4,6,1,3,5])", "--out", "g.json"], p).status.code(), Some(0));
    let g = from_json::<GroupJson>(&std::fs::read_to_string(p.join("g.json")).unwrap()).unwrap();
    assert_eq!(g.order, 21);
    assert_eq!(run(&["group", "verify", "g.json"], p).status.code(), Some(0));
    let o = run(&["group", "sqrt", "g.json", "--element", "4"], p);
    let root: usize = stdout(&o).split_whitespace().next().unwrap().parse().unwrap();
    assert_eq!(g.mul[root][root], 4);

    assert_eq!(run(&["irreps", "compute", "g.json", "--out", "i.json"], p).status.code(), Some(0));
    let set = from_json::<IrrepSetJson>(&std::fs::read_to_string(p.join("i.json")).unwrap()).unwrap();
    assert_eq!(set.irreps.len(), 5);
    assert_eq!(run(&["irreps", "verify", "i.json"], p).status.code(), Some(0));
    // an irrep file also works as a group argument
    let o = run(&["wigner", "ppo", "--group", "i.json", "--g", "0", "--j", "0"], p);
    assert_eq!(o.status.code(), Some(0));

    let state: Vec<[f64; 2]> = (0..21).map(|k| [k as f64 * 0.1 - 1.0, (k % 4) as f64]).collect();
    std::fs::write(p.join("s.json"), serde_json::to_string(&state).unwrap()).unwrap();
    let o = run(&["wigner", "compute", "--group", "g.json", "--state", "s.json", "--variant", "extended", "--out", "x.json"], p);
    assert_eq!(o.status.code(), Some(0));
    let ext = from_json::<WignerJson>(&std::fs::read_to_string(p.join("x.json")).unwrap()).unwrap();
    assert_eq!(ext.variant, "extended");
    assert_eq!(ext.values[&0][&3].len(), 81);
    let o = run(&["wigner", "marginals", "--group", "F21", "--state", "s.json", "--variant", "II"], p);
    assert!(stdout(&o).contains("momentum norm 1.000000000000"));
}

#[test]
fn verification_commands_report() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["wigner", "verify", "--group", "C3xC3", "--trials", "5", "--seed", "7", "--json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seed"], 7);
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["pass"] == true));
    // an impossible tolerance turns the same run into a verification failure
    let o = run(&["wigner", "verify", "--group", "F21", "--trials", "2", "--tolerance", "0"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn verify_all_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify-all", "--seed", "3", "--trials", "4", "--extended-trials", "2", "--json"];
    let a = run(&args, dir.path());
    let b = run(&args, dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    std::fs::write(p.join("e.json"), "[[1,0],[0,0],[0,0]]").unwrap();
    std::fs::write(p.join("bad.json"), r#"{"order":2,"names":[],"mul":[[0,1],[1,1]]}"#).unwrap();
    assert_eq!(run(&["frobnicate"], p).status.code(), Some(2));
    assert_eq!(run(&["wigner", "compute", "--group", "C3"], p).status.code(), Some(2));
    assert_eq!(run(&["wigner", "compute", "--group", "C5", "--state", "e.json"], p).status.code(), Some(2));
    assert_eq!(run(&["wigner", "compute", "--group", "C4", "--state", "e.json"], p).status.code(), Some(2));
    assert_eq!(run(&["group", "verify", "bad.json"], p).status.code(), Some(2));
    assert_eq!(run(&["wigner", "compute", "--group", "C3", "--state", "nope.json"], p).status.code(), Some(3));
    assert_eq!(run(&["group", "verify", "nope.json"], p).status.code(), Some(3));
    let o = run(&["wigner", "compute", "--group", "C3", "--state", "e.json", "--out", "no/such/dir/w.json"], p);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn in_process_entry_point() {
    let mut buf = Vec::new();
    let code = groupwigner::cli::run_cli(["groupwigner", "catalog", "list"], &mut buf);
    assert_eq!(code, 0);
    assert!(String::from_utf8(buf).unwrap().contains("Heis27"));
}
