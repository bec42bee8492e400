use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_even-graphs"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_prints_decimal() {
    let o = run(&["count", "--kind", "graphs", "--n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1044\n");
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(run(&["count", "--kind", "cats", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--kind", "graphs", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--kind", "graphs", "--n", "61"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn classify_from_stdin() {
    let o = run_stdin(&["classify"], "2 1\n1 2\n");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("odd"), "{}", stdout(&o));

    let o = run_stdin(&["classify"], "3 2\n1 2\n2 3\n");
    assert_eq!(stdout(&o), "even\n");

    let o = run_stdin(&["classify"], "4 4\n1 2\n2 3\n3 4\n4 1\n");
    assert_eq!(stdout(&o), "even\n");
}

#[test]
fn classify_from_file_and_rejects_garbage() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k3.txt");
    std::fs::write(&path, "3 3\n1 2\n2 3\n1 3\n").unwrap();
    let o = run(&["classify", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("odd"));

    let o = run_stdin(&["classify"], "3 1\n1 1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn enumerate_lines() {
    let o = run(&["enumerate", "--kind", "tournaments", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 12);
    assert!(text.lines().all(|l| l.starts_with("5:") && l.len() == 2 + 10));
}

#[test]
fn table_and_cache_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("counts.tsv");
    let cache = cache.to_str().unwrap();
    let first = run(&["table", "--max-n", "6", "--cache", cache]);
    assert_eq!(first.status.code(), Some(0));
    let second = run(&["table", "--max-n", "6", "--cache", cache]);
    assert_eq!(stdout(&first), stdout(&second));
    assert!(stdout(&first).lines().all(|l| l.ends_with("\tok")));
}

#[test]
fn selfcheck_passes() {
    let o = run(&["selfcheck", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}
