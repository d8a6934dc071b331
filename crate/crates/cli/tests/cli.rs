use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn twoclub(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twoclub"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

const K2: &str = "p edge 2 1\ne 1 2\n";
const EMPTY2: &str = "c no edges\np edge 2 0\n";

#[test]
fn reduce_writes_gadget_and_roles() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.col", K2);
    let g = dir.path().join("g.col");
    let roles = dir.path().join("g.roles");
    let out = twoclub(&[
        "reduce",
        "--in",
        &h,
        "--out",
        g.to_str().unwrap(),
        "--roles",
        roles.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{out:?}");
    let gadget = fs::read_to_string(&g).unwrap();
    assert!(gadget.starts_with("p edge 19 42\ne 1 2\n"));
    let parsed = twoclub::parse_graph_auto(&gadget).unwrap();
    assert_eq!(parsed, twoclub::reduce(&twoclub::Graph::complete(2)).unwrap().graph);
    let roles = fs::read_to_string(&roles).unwrap();
    assert_eq!(roles.lines().count(), 19);
    assert!(roles.contains("\n6 a\n7 b\n8 u\n"));
}

#[test]
fn reduce_edgelist_output_and_input_sniffing() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.txt", "3\n0 1\n1 2\n");
    let g = dir.path().join("g.txt");
    let out = twoclub(&["reduce", "--in", &h, "--out", g.to_str().unwrap(), "--format", "edgelist"]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&g).unwrap();
    assert!(text.starts_with("48\n0 1\n"));
}

#[test]
fn verify_k2_agrees_and_reports() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.col", K2);
    let json = dir.path().join("r.json");
    let out = twoclub(&["verify", "--in", &h, "--k", "2", "--json", json.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let report = read_json(&json);
    assert_eq!(report["command"], "verify");
    assert_eq!(report["certificates"], serde_json::json!([[6, 7]]));
    let row = &report["rows"][0];
    assert_eq!(row["target"], 18);
    assert_eq!(row["max_2club"], 18);
    assert_eq!(row["agree"], true);
    assert_eq!(report["stats"]["elapsed_ms"], 0);
    assert!(report["stats"]["nodes_explored"].as_u64().unwrap() > 0);
}

#[test]
fn verify_no_instance_and_out_of_range_k() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.col", EMPTY2);
    let json = dir.path().join("r.json");
    let out = twoclub(&["verify", "--in", &h, "--k", "2", "--json", json.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let row = &read_json(&json)["rows"][0];
    assert_eq!(row["clique_yes"], false);
    assert_eq!(row["max_2club"], 15);

    for k in ["0", "-3", "3", "7"] {
        let out = twoclub(&["verify", "--in", &h, "--k", k]);
        assert_eq!(code(&out), 0, "k={k}: {}", stdout(&out));
    }
}

#[test]
fn sweep_brute_n2() {
    let dir = TempDir::new().unwrap();
    let json = dir.path().join("s.json");
    let out = twoclub(&["sweep", "--n", "2", "--engine", "brute", "--json", json.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let rows = read_json(&json)["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 4);
    let maxes: Vec<u64> = rows.iter().map(|r| r["max_2club"].as_u64().unwrap()).collect();
    assert_eq!(maxes, vec![15, 15, 18, 18]);
    assert!(rows.iter().all(|r| r["agree"] == true));
}

#[test]
fn sweep_reports_are_byte_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let c = dir.path().join("c.json");
    assert_eq!(code(&twoclub(&["sweep", "--n", "3", "--json", a.to_str().unwrap()])), 0);
    assert_eq!(code(&twoclub(&["sweep", "--n", "3", "--json", b.to_str().unwrap()])), 0);
    assert_eq!(
        code(&twoclub(&["sweep", "--n", "3", "--threads", "3", "--json", c.to_str().unwrap()])),
        0
    );
    let first = fs::read(&a).unwrap();
    assert_eq!(first, fs::read(&b).unwrap());
    assert_eq!(read_json(&a)["rows"], read_json(&c)["rows"]);
}

#[test]
fn off_by_one_target_makes_sweep_fail() {
    let out = twoclub(&["sweep", "--n", "2", "--target-offset", "1"]);
    assert_eq!(code(&out), 1);
    // One below the target still separates yes from no instances: targets
    // for consecutive k are n + 1 apart.
    let out = twoclub(&["sweep", "--n", "2", "--target-offset", "-1"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn sweep_guard() {
    assert_eq!(code(&twoclub(&["sweep", "--n", "3", "--engine", "brute"])), 2);
    assert_eq!(code(&twoclub(&["sweep", "--n", "4"])), 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&twoclub(&["frobnicate"])), 2);
    assert_eq!(code(&twoclub(&["sweep", "--n", "2", "--bogus"])), 2);
    assert_eq!(code(&twoclub(&[])), 2);
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.col", "p edge 3 5\ne 1 2\n");
    assert_eq!(code(&twoclub(&["solve-clique", "--in", &bad])), 2);
    assert_eq!(code(&twoclub(&["solve-clique", "--in", "/nonexistent/h.col"])), 2);
    assert_eq!(code(&twoclub(&["--help"])), 0);
}

#[test]
fn solvers_and_distance() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.txt", "4\n0 1\n1 2\n2 3\n");
    let out = twoclub(&["solve-clique", "--in", &p4]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("max clique: 2"));

    let json = dir.path().join("c.json");
    let out = twoclub(&["solve-2club", "--in", &p4, "--json", json.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("max 2-club: 3"));
    assert_eq!(read_json(&json)["solutions"][0]["size"], 3);

    let out = twoclub(&["solve-2club", "--in", &p4, "--s", "3", "--engine", "brute"]);
    assert!(stdout(&out).contains("max 3-club: 4"));

    let json = dir.path().join("d.json");
    let out = twoclub(&["distance", "--in", &p4, "--s", "2", "--dmax", "2", "--json", json.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(read_json(&json)["certificates"], serde_json::json!([[0]]));

    let out = twoclub(&["distance", "--in", &p4, "--dmax", "9"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn gadget_distance_via_cli() {
    let dir = TempDir::new().unwrap();
    let h = write(&dir, "h.col", "p edge 3 2\ne 1 2\ne 2 3\n");
    let g = dir.path().join("g.col");
    assert_eq!(code(&twoclub(&["reduce", "--in", &h, "--out", g.to_str().unwrap()])), 0);
    let out = twoclub(&["distance", "--in", g.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("distance to 2-club cluster: 2 via {12, 13}"));
}

#[test]
fn oracle_check_modes() {
    let out = twoclub(&["oracle-check", "--exhaustive", "4"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("64 graphs checked"));
    let out = twoclub(&["oracle-check", "--count", "30", "--seed", "7", "--threads", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("0 mismatches"));
    assert_eq!(code(&twoclub(&["oracle-check", "--exhaustive", "7"])), 2);
}
