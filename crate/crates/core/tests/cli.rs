use std::io::Write;
use std::process::{Command, Output, Stdio};

use koszul_core::builders::Fixture;
use koszul_core::format::PosetFile;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_koszul"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    // the binary may exit before reading, e.g. on a usage error
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture_text(f: Fixture) -> String {
    let o = run(&["fixture", f.name()], "");
    assert_eq!(o.status.code(), Some(0));
    stdout(&o)
}

const WINDOW: &str = "elements: 1 x1 x2 x1x2
covers: 1<x1<x1x2 1<x2<x1x2
equiv: semigroup
coords:
  1 = 0,0
  x1 = 1,0
  x2 = 0,1
  x1x2 = 1,1
";

#[test]
fn fixtures_round_trip() {
    for f in Fixture::ALL {
        let text = fixture_text(f);
        let parsed = PosetFile::parse(&text).unwrap();
        let original = f.poset();
        assert_eq!(parsed.poset.names(), original.names());
        assert_eq!(parsed.poset.cover_relations(), original.cover_relations());
        let body: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
        assert_eq!(parsed.to_string(), body, "{}", f.name());
    }
}

#[test]
fn reports_are_byte_deterministic() {
    let p8 = fixture_text(Fixture::Poset8);
    let commands: [&[&str]; 8] = [
        &["check", "-"],
        &["axioms", "-"],
        &["koszul", "-"],
        &["tor", "--backend", "both", "-"],
        &["matrices", "--field", "2", "-"],
        &["--tsv", "quadratic", "-"],
        &["seqcm", "--facets", "1 2; 2 3; 4"],
        &["sr", "--facets", "1 2; 3 4", "--vertices", "4"],
    ];
    for args in commands {
        let first = run(args, &p8);
        let second = run(args, &p8);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert!(!first.stdout.is_empty());
    }
}

#[test]
fn poset8_matrices() {
    let o = run(&["matrices", "-"], &fixture_text(Fixture::Poset8));
    let out = stdout(&o);
    assert!(out.contains("2t^2+t^3"));
    assert!(out.contains("IDENTITY: PASS"));
    assert!(out.contains("Q-FROM-H-DIAGONALS: MATCH"));
}

#[test]
fn verdict_lines() {
    let cases = [
        (Fixture::Poset8, "koszul", "VERDICT: KOSZUL"),
        (Fixture::DoubleChain, "koszul", "VERDICT: NOT-KOSZUL"),
        (Fixture::QuadraticNotKoszul, "koszul", "VERDICT: NOT-KOSZUL"),
        (Fixture::QuadraticNotKoszul, "quadratic", "VERDICT: QUADRATIC"),
        (Fixture::DoubleChain, "quadratic", "VERDICT: NOT-QUADRATIC"),
        (Fixture::N5, "check", "GRADED: FALSE"),
    ];
    for (f, command, line) in cases {
        let out = stdout(&run(&[command, "-"], &fixture_text(f)));
        assert!(out.lines().any(|l| l == line), "{} {command}: {out}", f.name());
    }
    for f in Fixture::ALL {
        let out = stdout(&run(&["tor", "--backend", "both", "--field", "2", "-"], &fixture_text(f)));
        assert!(out.contains("AGREEMENT: PASS"), "{}", f.name());
    }
}

#[test]
fn tsv_uses_tabs() {
    let out = stdout(&run(&["--tsv", "quadratic", "-"], &fixture_text(Fixture::DoubleChain)));
    assert!(out.lines().all(|l| l.contains('\t') && !l.contains(": ")));
    assert!(out.contains("TOR2-OFF-DIAGONAL\t0^ 1^ j=3 dim=1"));
}

#[test]
fn ideal_reports() {
    let text = format!("{}ideal: [1,6]\n", fixture_text(Fixture::Poset8));
    let out = stdout(&run(&["koszul", "--ideal", "-"], &text));
    assert!(out.contains("ACTION-DISAGREEMENT: [1,6] [6,8] [1,8]"));
    let tor = run(&["tor", "--module", "ideal", "--backend", "both", "-"], &text);
    assert_eq!(tor.status.code(), Some(0));
    assert!(stdout(&tor).contains("AGREEMENT: PASS"));
}

#[test]
fn semigroup_windows() {
    let out = stdout(&run(&["matrices", "-"], WINDOW));
    assert!(out.contains("[ 1+2t+t^2 ]"));
    assert!(out.contains("IDENTITY: SKIPPED"));
    assert_eq!(run(&["tor", "--backend", "bar", "-"], WINDOW).status.code(), Some(4));
}

#[test]
fn sr_and_seqcm() {
    let out = stdout(&run(&["sr", "--facets", "1 2; 3 4", "--vertices", "4"], ""));
    assert!(out.contains("VERDICT: NOT-COMPONENTWISE-LINEAR"));
    assert!(out.contains("WITNESS-CLASS: x1x2x3x4"));
    assert!(out.contains("AGREEMENT: PASS"));
    let out = stdout(&run(&["sr", "--facets", "1 2; 1 3; 2 3", "--vertices", "3", "--dual"], ""));
    assert!(out.contains("VERDICT: COMPONENTWISE-LINEAR"));
    let out = stdout(&run(&["seqcm", "--facets", "1 2 3; 3 4"], ""));
    assert!(out.contains("VERDICT: SEQUENTIALLY-CM"));
    let out = stdout(&run(&["seqcm", "--facets", "1 2; 3 4"], ""));
    assert!(out.contains("VERDICT: NOT-SEQUENTIALLY-CM"));
}

#[test]
fn exit_codes() {
    let n5 = fixture_text(Fixture::N5);
    assert_eq!(run(&["koszul", "--field", "4", "-"], &n5).status.code(), Some(2));
    assert_eq!(run(&["check", "-"], "elements: a b\ncovers: a<b b<a\n").status.code(), Some(2));
    assert_eq!(run(&["fixture", "NOPE"], "").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
    let invalid = "elements: 1 2 3\ncovers: 1<2<3\nequiv: classes\nclass: [1,2] [2,3]\n";
    assert_eq!(run(&["axioms", "-"], invalid).status.code(), Some(0));
    assert_eq!(run(&["koszul", "-"], invalid).status.code(), Some(3));
    assert_eq!(run(&["koszul", "--ideal", "-"], &n5).status.code(), Some(4));
    let zero = run(&["sr", "--facets", "1 2 3", "--vertices", "3", "--dual"], "");
    assert_eq!(zero.status.code(), Some(4));
    assert!(String::from_utf8(zero.stderr).unwrap().contains("zero"));
}
