use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn forge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_forge")).args(args).output().expect("forge runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn p(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(path: &Path) -> &str {
    path.to_str().unwrap()
}

/// Builds a construction and saves its extender file (and base) in `dir`.
fn save_ext(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = p(dir, name);
    let mut full = vec!["build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--save-extender", s(&path)]);
    let o = forge(&full);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

#[test]
fn build_validate_and_check_a_toroid() {
    let dir = TempDir::new().unwrap();
    let out = p(&dir, "t.mpx");
    let o = forge(&["build", "toroid44", "3", "2", "-o", s(&out)]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["derived"]["flags"], 48);
    assert_eq!(v["derived"]["maniplex"], true);

    let o = forge(&["validate", s(&out)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["maniplex"], true);

    let o = forge(&["polytopal", s(&out), "--oracle"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["oracle"], true);

    let o = forge(&["stg", s(&out)]);
    assert_eq!(code(&o), 0);
    // Without the diagonal reflection a 3x2 toroid has two flag orbits.
    assert_eq!(stdout_json(&o)["orbits"], 2);
}

#[test]
fn two_hat_of_the_square_is_the_4x4_toroid() {
    let dir = TempDir::new().unwrap();
    let ext = save_ext(&dir, "hat.ext", &["two-hat", "--seed", "square"]);
    let hat = p(&dir, "hat.mpx");
    let o = forge(&["extend", s(&ext), "-o", s(&hat)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["derived"]["flags"], 128);
    let tor = p(&dir, "tor.mpx");
    assert_eq!(code(&forge(&["build", "toroid44", "4", "4", "-o", s(&tor)])), 0);
    let o = forge(&["iso", s(&hat), s(&tor)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["isomorphic"], true);

    let other = p(&dir, "other.mpx");
    assert_eq!(code(&forge(&["build", "toroid44", "3", "2", "-o", s(&other)])), 0);
    assert_eq!(code(&forge(&["iso", s(&hat), s(&other)])), 1);
}

#[test]
fn input_errors_exit_2_with_a_line_number() {
    let dir = TempDir::new().unwrap();
    let bad = p(&dir, "bad.mpx");
    std::fs::write(&bad, "mpx 1\nrank 2\nflags 4\nadj 0: 1 0 3 2\nadj 1: 3 2 x 0\n").unwrap();
    let o = forge(&["validate", s(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 5"));
    assert_eq!(code(&forge(&["validate", s(&p(&dir, "missing.mpx"))])), 2);
    assert_eq!(code(&forge(&["build", "nonsense"])), 2);
    assert_eq!(code(&forge(&["bogus-command"])), 2);
}

#[test]
fn commutation_violations_exit_1_with_a_witness() {
    let dir = TempDir::new().unwrap();
    // Rank 3 on four flags where colors 0 and 2 do not commute.
    let bad = p(&dir, "bad.mpx");
    std::fs::write(&bad, "mpx 1\nrank 3\nflags 4\nadj 0: 1 0 3 2\nadj 1: 0 1 2 3\nadj 2: 2 3 0 1\n").unwrap();
    assert_eq!(code(&forge(&["validate", s(&bad)])), 0);
    std::fs::write(&bad, "mpx 1\nrank 3\nflags 4\nadj 0: 1 0 3 2\nadj 1: 0 1 2 3\nadj 2: 3 2 1 0\n").unwrap();
    assert_eq!(code(&forge(&["validate", s(&bad)])), 0);
    std::fs::write(&bad, "mpx 1\nrank 3\nflags 4\nadj 0: 1 0 2 3\nadj 1: 0 1 2 3\nadj 2: 2 3 0 1\n").unwrap();
    let o = forge(&["validate", s(&bad)]);
    assert_eq!(code(&o), 1);
    let v = stdout_json(&o);
    let w = &v["commutation_failures"][0];
    assert_eq!((w[0].as_u64(), w[1].as_u64()), (Some(0), Some(2)));
    // Re-validate: the (0,2,0,2) walk from the witness flag is open.
    let adj0 = [1, 0, 2, 3];
    let adj2 = [2, 3, 0, 1];
    let f = w[2].as_u64().unwrap() as usize;
    assert_ne!(adj2[adj0[adj2[adj0[f]]]], f);
}

#[test]
fn non_polytopal_witness_exits_1() {
    let dir = TempDir::new().unwrap();
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data");
    for f in ["hexagon.mpx", "nonpolytopal-hexagon.ext"] {
        std::fs::copy(data.join(f), p(&dir, f)).unwrap();
    }
    let out = p(&dir, "np.mpx");
    assert_eq!(code(&forge(&["extend", s(&p(&dir, "nonpolytopal-hexagon.ext")), "-o", s(&out)])), 0);
    let o = forge(&["polytopal", s(&out), "--oracle"]);
    assert_eq!(code(&o), 1);
    let v = stdout_json(&o);
    assert_eq!(v["polytopal"], false);
    assert_eq!(v["oracle"], false);
    assert!(v["witness"]["flags"].is_array());
}

#[test]
fn friendly_universal_and_stg_commands() {
    let dir = TempDir::new().unwrap();
    let tor = save_ext(&dir, "tor.ext", &["toroid44", "3", "3"]);
    let o = forge(&["friendly", "--pre", s(&tor), "--oracle"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["oracle_agrees"], true);
    assert_eq!(v["order"], v["oracle_order"]);

    let sq = save_ext(&dir, "sq.ext", &["ditope", "--seed", "square"]);
    let o = forge(&["universal", "--pre", s(&sq), "--radius", "2", "--stats"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["census"], serde_json::json!([1, 4, 12]));
    assert_eq!(v["flags"], 8 * 17);
    assert_eq!(v["rn_order"], "infinite");

    let o = forge(&["stg-universal", "--pre", s(&sq), "--dot", s(&p(&dir, "u.dot"))]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["stg"]["nodes"], 1);
    assert!(std::fs::read_to_string(p(&dir, "u.dot")).unwrap().starts_with("graph stg"));

    let o = forge(&["univ-iso", "--pre1", s(&sq), "--pre2", s(&tor)]);
    assert_eq!(code(&o), 2, "different bases are an input error");

    let tor2 = save_ext(&dir, "tor2.ext", &["toroid44", "4", "2"]);
    let o = forge(&["univ-iso", "--pre1", s(&tor), "--pre2", s(&tor2)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["isomorphic"], true);
}

#[test]
fn unique_universal_extensions() {
    let dir = TempDir::new().unwrap();
    save_ext(&dir, "pyr.ext", &["ditope", "--seed", "pyramid"]);
    save_ext(&dir, "cube.ext", &["ditope", "--seed", "cube3"]);
    let o = forge(&["unique-universal", s(&p(&dir, "cube.base.mpx"))]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["unique"], true);
    let o = forge(&["unique-universal", s(&p(&dir, "pyr.base.mpx"))]);
    assert_eq!(code(&o), 1);
    assert!(stdout_json(&o)["witness"]["flags"].is_array());
}

#[test]
fn amalgamation_of_the_square() {
    let dir = TempDir::new().unwrap();
    let ext = save_ext(&dir, "d.ext", &["ditope", "--seed", "square"]);
    let co = p(&dir, "c.ext");
    std::fs::write(&co, "coextender\nbase d.base.mpx\ngroup cyclic 2\nxi 0 c\nxi 1 c\nxi 3 c\nxi 5 c\n").unwrap();
    let out = p(&dir, "a.mpx");
    let o = forge(&["amalgamate", "--coext", s(&co), "--ext", s(&ext), "-o", s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v = stdout_json(&o);
    assert_eq!(v["derived"]["flags"], 32);
    assert_eq!(v["flat"], true);
    assert_eq!(v["polytopal"], true);
}

#[test]
fn exports_and_reports() {
    let dir = TempDir::new().unwrap();
    save_ext(&dir, "sq.ext", &["ditope", "--seed", "square"]);
    let base = p(&dir, "sq.base.mpx");
    let o = forge(&["export", s(&base)]);
    assert_eq!(code(&o), 0);
    let dot = String::from_utf8(o.stdout).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 8);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=") && !l.contains("--")).count(), 8);

    let o = forge(&["export", s(&base), "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["flags"], 8);

    let report = p(&dir, "r.json");
    let o = forge(&["--report", s(&report), "stg", s(&base)]);
    assert_eq!(code(&o), 0);
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(r["operation"], "stg");
    let digest = r["inputs"][s(&base)].as_str().unwrap();
    assert_eq!(digest.len(), 64);
    assert!(r["wall_time_ms"].is_u64());
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let tor = save_ext(&dir, "tor.ext", &["toroid44", "4", "2"]);
    let a = forge(&["friendly", "--pre", s(&tor)]);
    let b = forge(&["friendly", "--pre", s(&tor)]);
    assert_eq!(a.stdout, b.stdout);
    let x = forge(&["catalog", "list"]);
    let y = forge(&["catalog", "list"]);
    assert_eq!(x.stdout, y.stdout);
    assert_eq!(stdout_json(&x).as_array().unwrap().len(), 16);
}

#[test]
fn accept_passes() {
    let dir = TempDir::new().unwrap();
    let json = p(&dir, "accept.json");
    let o = forge(&["accept", "--json", s(&json)]);
    let text = String::from_utf8_lossy(&o.stdout);
    print!("{text}");
    assert_eq!(code(&o), 0);
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 11);
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(r["results"]["all_passed"], true);
}
