use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lincent"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn lincent")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn run_ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn generate(dir: &TempDir, name: &str, family: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut args = vec!["gen"];
    args.extend_from_slice(family);
    args.extend_from_slice(&["-o", path.to_str().unwrap()]);
    run_ok(&args);
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn hub_cycle_matrix_first_row() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "h.txt", &["hub-cycle", "5"]);
    let text = run_ok(&["matrix", s(&g)]);
    assert_eq!(text.lines().next(), Some("1\t4\t0\t0\t0"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn harmonic_ranks_hub_first() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "h.txt", &["hub-cycle", "5"]);
    let text = run_ok(&["centrality", s(&g), "--coeffs", "harmonic", "--rank"]);
    assert_eq!(text.lines().next(), Some("0\t0"));
}

#[test]
fn represent_answers_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "h.txt", &["hub-cycle", "5"]);
    let yes = run_ok(&["represent", s(&g), "--perm", "0,4,1,2,3"]);
    assert_eq!(yes.lines().next(), Some("YES"));

    let no = run(&["represent", s(&g), "--perm", "0,1,2,3,4"]);
    assert_eq!(no.status.code(), Some(0));
    assert_eq!(stdout(&no).lines().next(), Some("NO"));

    let strict = run(&["represent", s(&g), "--perm", "0,1,2,3,4", "--fail-on-no"]);
    assert_eq!(strict.status.code(), Some(1));

    let bad = run(&["represent", s(&g), "--perm", "0,1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["matrix", "/nonexistent/graph.txt"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "g.txt", &["gprime", "5"]);
    for args in [
        vec!["representativeness", s(&g), "--check", "pn"],
        vec!["centrality", s(&g), "--coeffs", "exp:1/2"],
        vec!["axioms", "harmonic", "--empirical", "4", "4", "20", "3"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}

#[test]
fn witness_round_trips_through_stdin() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "t.txt", &["triangular", "5"]);
    let perm = "3,0,4,2,1";
    let text = run_ok(&["represent", s(&g), "--perm", perm]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("YES"));
    let witness: String = lines.map(|l| format!("{l}\n")).collect();

    let mut child = bin()
        .args(["centrality", s(&g), "--coeffs", "-", "--rank"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(witness.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let order: Vec<String> = stdout(&out)
        .lines()
        .map(|l| l.split('\t').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(order.join(","), perm);
}

#[test]
fn representativeness_check_agrees() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "h.txt", &["hub-cycle", "5"]);
    let text = run_ok(&["representativeness", s(&g), "--check", "thm5"]);
    assert!(text.contains("count\t40\n"));
    assert!(text.contains("ratio\t1/3\n"));
    assert!(text.contains("verdict\tagree\n"));
}

#[test]
fn robust_detects_contradiction() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "h.txt", &["hub-cycle", "5"]);
    let no = run(&["robust", s(&g), "--require", "0>1", "--require", "1>0", "--fail-on-no"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout(&no).lines().next(), Some("NO"));
    let yes = run_ok(&["robust", s(&g), "--require", "0>1", "--require", "0>4"]);
    assert_eq!(yes.lines().next(), Some("YES"));
}

#[test]
fn distinguish_writes_a_separating_graph() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("d.txt");
    let text = run_ok(&["distinguish", "harmonic", "exp:1/2", "-o", s(&out)]);
    assert!(text.contains("classification\tcase-c h=1 k=3"));
    assert!(text.contains("a(x)\t5/2\na(y)\t5/2\nb(x)\t9/8\nb(y)\t5/4\n"));

    // the written graph re-evaluates to the same scores
    let a = run_ok(&["centrality", s(&out), "--coeffs", "harmonic"]);
    let b = run_ok(&["centrality", s(&out), "--coeffs", "exp:1/2"]);
    assert_ne!(a, b);
    assert!(a.lines().any(|l| l == "0\t5/2"));
    assert!(b.lines().any(|l| l == "0\t9/8"));
}

#[test]
fn distinguish_reports_proportional_pairs() {
    let text = run_ok(&["distinguish", "0,2,1", "5,4,2"]);
    assert!(text.starts_with("classification\tproportional"), "{text}");
}

#[test]
fn axioms_verdicts() {
    let text = run_ok(&["axioms", "harmonic"]);
    for line in ["density\tyes", "size\tyes", "score-monotone\tyes"] {
        assert!(text.contains(line), "{line}");
    }
    let exp = run(&["axioms", "exp:1/2", "--fail-on-no"]);
    assert_eq!(exp.status.code(), Some(1));
    assert!(stdout(&exp).contains("size\tno"));

    let bad = run_ok(&["axioms", "1,-1,2", "--empirical", "2", "2", "5", "1"]);
    assert!(bad.contains("score-monotone\tno"));
    assert!(bad.contains("counterexample"));
}

#[test]
fn json_output_parses() {
    let dir = TempDir::new().unwrap();
    let g = generate(&dir, "h.txt", &["hub-cycle", "5"]);
    let text = run_ok(&["--json", "represent", s(&g), "--perm", "0,1,2,3,4"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["answer"], "NO");
    assert_eq!(v["certificate"][0], "1");
}
