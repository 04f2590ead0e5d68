use std::io::Write;
use std::process::{Command, Output};

fn sbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sbraid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = sbraid(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn table_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn eq_and_cmp() {
    assert_eq!(stdout(&["eq", "s1 s2 s1", "s2 s1 s2"]), "true\n");
    assert_eq!(stdout(&["eq", "s1", "x1"]), "false\n");
    assert_eq!(stdout(&["cmp", "", "s1"]), "LT\n");
    assert_eq!(stdout(&["cmp", "s1", ""]), "GT\n");
    assert_eq!(stdout(&["cmp", "x2 x1", "x1 x1"]), "EQ\n");
}

#[test]
fn normal_forms() {
    assert_eq!(stdout(&["canon", "x2 x1"]), "x1 x1 | S=(3)\n");
    assert_eq!(stdout(&["canon", ""]), " | S=()\n");
    assert_eq!(stdout(&["sx", "x1 s1"]), "s2 s1 | x2\n");
    assert_eq!(stdout(&["sx", "s1 x1"]), "s1 | x1\n");
}

#[test]
fn action_and_terms() {
    assert_eq!(stdout(&["act", "s1", "e1"]), "e1^-1 e2\n");
    assert_eq!(stdout(&["act", "s1^-1", "e1"]), "e2 e1^-1\n");
    assert_eq!(stdout(&["act", "x2 x1", "e1"]), "e3\n");
    assert_eq!(stdout(&["ld", "(j . j)"]), "s1\n");
    assert_eq!(stdout(&["ld", "(j o j)"]), "x1\n");
    assert_eq!(stdout(&["laver", "j", "(j . j)"]), "LT\n");
}

#[test]
fn coloring() {
    assert_eq!(
        stdout(&["color", "2", "s1"]),
        "e1 -> e1 e2 e1^-1\ne2 -> e1\n"
    );
    assert_eq!(stdout(&["color", "2", "s1 x1"]), "e1 -> e1 e2\n");
    assert_eq!(
        stdout(&["color", "3", ""]),
        "e1 -> e1\ne2 -> e2\ne3 -> e3\n"
    );
}

#[test]
fn envelope() {
    let f = table_file("3\n1 3 2\n3 2 1\n2 1 3\n");
    let path = f.path().to_str().unwrap();
    assert_eq!(stdout(&["env", path, "1", "2,3"]), "3,2\n");
    assert_eq!(
        stdout(&["env", path, "1,2", "3", "--op", "circ"]),
        "1,2,3\n"
    );
    assert_eq!(stdout(&["env", path, "3,1", "1,2", "--op", "eq"]), "Yes\n");
    assert_eq!(stdout(&["env", path, "1", "1,1", "--op", "eq"]), "No\n");
}

#[test]
fn exit_codes() {
    let parse = sbraid(&["eq", "s1 q2", ""]);
    assert_eq!(parse.status.code(), Some(1));
    let msg = String::from_utf8(parse.stderr).unwrap();
    assert!(msg.contains("byte 3") && msg.contains("q2"), "{msg}");

    assert_eq!(sbraid(&["ld", "(j x j)"]).status.code(), Some(1));
    assert_eq!(sbraid(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(sbraid(&["cmp", "s1"]).status.code(), Some(1));
    assert_eq!(sbraid(&["--help"]).status.code(), Some(0));

    assert_eq!(sbraid(&["canon", "x1 s1"]).status.code(), Some(2));
    assert_eq!(sbraid(&["color", "2", "x1 x1"]).status.code(), Some(2));

    let bad = table_file("2\n2 1\n1 1\n");
    let out = sbraid(&["env", bad.path().to_str().unwrap(), "1", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("a=1, b=1, c=2"));
    let good = table_file("1\n1\n");
    assert_eq!(
        sbraid(&["env", good.path().to_str().unwrap(), "1", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sbraid(&["env", "/nonexistent/table", "1", "1"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn output_is_deterministic() {
    let args = ["color", "4", "s1 s2^-1 x2 s1"];
    assert_eq!(stdout(&args), stdout(&args));
}
