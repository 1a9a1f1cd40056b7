use std::io::Write;
use std::process::{Command, Output, Stdio};

fn mbd(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mbd"))
        .args(args)
        .env_remove("MBD_TABLE_MB")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or("").to_string()
}

#[test]
fn solve_k2_from_edge_list() {
    let o = mbd(&["solve", "--edges", "2 1\\n0 1", "--game", "d", "--objective", "mb"], "");
    assert!(o.status.success());
    assert_eq!(first_line(&o), "1");
    assert!(stdout(&o).contains("nodes: "));
}

#[test]
fn solve_fig1_graph() {
    let o = mbd(&["solve", "--gen", "fig1_H", "--game", "d", "--objective", "mb"], "");
    assert_eq!(first_line(&o), "3");
    assert!(stdout(&o).contains("move: h3"));
}

#[test]
fn solve_staller_loses_on_gadget() {
    let o = mbd(&["solve", "--gen", "Hm:3", "--game", "d", "--objective", "smb"], "");
    assert_eq!(first_line(&o), "inf");
}

#[test]
fn solve_json_renders_infinity_as_string() {
    let o = mbd(&["solve", "--gen", "empty:2", "--objective", "mb", "--format", "json"], "");
    let v: serde_json::Value = serde_json::from_str(&first_line(&o)).unwrap();
    assert_eq!(v["value"], "inf");
}

#[test]
fn solve_with_predominated_vertices() {
    // P3 with both leaves dominated: the centre alone wins
    let o = mbd(&["solve", "--gen", "path:3", "--game", "s", "--predominated", "0,2"], "");
    assert_eq!(first_line(&o), "1");
}

#[test]
fn solve_exit_codes() {
    assert_eq!(mbd(&["solve", "--g6", "!!"], "").status.code(), Some(2));
    assert_eq!(mbd(&["solve", "--gen", "comb:6", "--node-limit", "5"], "").status.code(), Some(3));
    assert_eq!(mbd(&["solve", "--gen", "path:40"], "").status.code(), Some(4));
    assert_eq!(mbd(&["solve", "--gen", "path:3", "--node-limit", "0"], "").status.code(), Some(2));
    assert_eq!(mbd(&["solve", "--gen", "path:3", "--predominated", "9"], "").status.code(), Some(2));

    let o = Command::new(env!("CARGO_BIN_EXE_mbd"))
        .args(["solve", "--gen", "path:2"])
        .env("MBD_TABLE_MB", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(String::from_utf8(o.stderr).unwrap().lines().count(), 1);
}

#[test]
fn corona_of_p2_and_k1_is_p4() {
    let o = mbd(&["corona", "--g", "gen:path:2", "--h", "gen:empty:1"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    let g = mbd_core::from_graph6(lines.next().unwrap()).unwrap();
    assert_eq!(g.order(), 4);
    assert!(mbd_core::enumerate::is_isomorphic(&g, &mbd_core::generate("path:4").unwrap()).unwrap());
    let lab: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(lab, serde_json::json!({"base_vertices": [0, 1], "copy_vertices": [[2], [3]]}));
}

#[test]
fn corona_writes_sidecar() {
    let dir = std::env::temp_dir().join(format!("mbd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("p.g6");
    let o = mbd(&["corona", "--g", "gen:path:3", "--h", "gen:fig1_H", "--out", out.to_str().unwrap()], "");
    assert!(o.status.success());
    let g6 = std::fs::read_to_string(&out).unwrap();
    assert_eq!(mbd_core::from_graph6(g6.trim()).unwrap().order(), 27);
    let lab: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.join("p.g6.labels.json")).unwrap()).unwrap();
    assert_eq!(lab["copy_vertices"].as_array().unwrap().len(), 3);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn corona_size_limit() {
    let o = mbd(&["corona", "--g", "gen:complete:8", "--h", "gen:complete:8"], "");
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8(o.stderr).unwrap().contains("72"));
}

#[test]
fn batch_rows_follow_input() {
    let o = mbd(&["batch"], "A_\nnot graph6\nBw\n");
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "graph6,n,gamma,outcome,mb,mb_prime,smb,smb_prime,error");
    assert_eq!(lines[1], "A_,2,1,D,1,1,inf,inf,");
    assert!(lines[2].ends_with(",ParseError"));
    // K3
    assert_eq!(lines[3], "Bw,3,1,D,1,1,inf,inf,");
    assert_eq!(lines.len(), 4);
}

#[test]
fn batch_of_nothing_is_header_only() {
    let o = mbd(&["batch"], "");
    assert_eq!(stdout(&o), "graph6,n,gamma,outcome,mb,mb_prime,smb,smb_prime,error\n");
}

#[test]
fn verify_tree_pm_instance() {
    let o = mbd(&["verify", "--theorem", "tree-pm", "--g", "gen:path:3", "--t", "gen:path:2"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("Pass tree-pm"));
    assert!(text.contains(r#"predicted={"mb":3,"mb_prime":3} computed={"mb":3,"mb_prime":3}"#));
}

#[test]
fn verify_outcome_on_default_corpus() {
    let o = mbd(&["verify", "--theorem", "outcome", "--corpus", "default"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 163);
    assert!(text.lines().last().unwrap().contains("Fail: 0"));
}

#[test]
fn verify_stretch_product() {
    let o = mbd(
        &["verify", "--theorem", "bounds-n", "--g", "gen:path:3", "--h", "gen:fig1_H", "--stretch", "--format", "json"],
        "",
    );
    assert!(o.status.success());
    let r: serde_json::Value = serde_json::from_str(&first_line(&o)).unwrap();
    assert_eq!(r["computed"]["mb"], 6);
    assert_eq!(r["predicted"]["mb"], serde_json::json!([6, 7]));
    assert_eq!(r["status"], "Pass");
}

#[test]
fn verify_exits_one_on_failure() {
    // K1 ⊙ 2K1 = P3 disagrees with the closed form for Staller in the S-game
    let o = mbd(&["verify", "--theorem", "k1-corona", "--g", "gen:empty:2"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("Fail: 1"));
}

#[test]
fn verify_reads_corpus_from_stdin() {
    let o = mbd(&["verify", "--theorem", "ordering", "--corpus", "-", "--format", "csv"], "A_\nBw A_\n");
    assert!(o.status.success());
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(&rows[1][0], "ordering");
    assert_eq!(&rows[1][6], "Pass");
}

#[test]
fn play_k2_as_staller() {
    let o = mbd(&["play", "--edges", "2 1\\n0 1", "--role", "staller", "--game", "d"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("Dominator plays 0"));
    assert!(text.contains("Dominator wins in 1"));
}

#[test]
fn play_fig1_engine_opens_with_h3() {
    let o = mbd(&["play", "--gen", "fig1_H", "--role", "staller", "--game", "d"], "");
    assert!(o.status.success());
    assert!(stdout(&o).contains("Dominator plays h3"));
    assert!(stdout(&o).contains("session ended"));
}

#[test]
fn play_rejects_illegal_moves() {
    // P3, human Dominator moving first; the centre wins at once
    let o = mbd(&["play", "--gen", "path:3", "--role", "dominator", "--game", "d"], "99\nfoo\n1\n");
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.matches("illegal").count(), 2);
    assert!(text.contains("Dominator wins in 1"));
}

#[test]
fn play_rejects_claimed_vertex() {
    // replaying the engine's opening vertex is refused
    let o = mbd(&["play", "--gen", "path:4", "--role", "dominator", "--game", "s"], "");
    assert!(o.status.success());
    let text = stdout(&o);
    let engine = text.lines().find(|l| l.starts_with("Staller plays")).unwrap();
    let v = engine.split_whitespace().nth(2).unwrap().to_string();
    let o = mbd(&["play", "--gen", "path:4", "--role", "dominator", "--game", "s"], &format!("{v}\n"));
    assert!(stdout(&o).contains("already claimed"));
}
