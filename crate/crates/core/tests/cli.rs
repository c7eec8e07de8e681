//! The binary: exit codes, output formats and reproducible golden files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn netdensity(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netdensity")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("netdensity-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    dir
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn density_assertions_set_the_exit_code() {
    let ok = netdensity(&["density", "--family", "N", "--set", "n % 2 == 0", "--expect-density", "0.5"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = stdout(&ok);
    assert!(text.contains("exists: exists"));
    assert!(text.contains("assertion: pass"));

    let bad = netdensity(&["density", "--family", "N", "--set", "n % 2 == 0", "--expect-density", "0.3"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    for args in [
        &["density", "--family", "N", "--set", "n %% 2"][..],
        &["density", "--family", "Q", "--set", "n > 1"],
        &["density", "--family", "N", "--set", "n + 1"],
        &["density", "--family", "N^2", "--set", "x3 > 1"],
        &["converge", "--family", "N", "--net", "1/n", "--limit", "0,0"],
        &["frobnicate"],
    ] {
        let o = netdensity(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn resource_limit_exits_3() {
    let o = netdensity(&["density", "--family", "N^3", "--horizon", "100000", "--set", "x1 == x2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn density_csv_has_header_rows_and_summary() {
    let o = netdensity(&["density", "--family", "N", "--horizon", "10", "--set", "n % 2 == 0", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x1,numerator,denominator,ratio");
    assert_eq!(lines[2], "2,1,2,0.500000000000");
    assert!(lines.last().unwrap().starts_with("summary,lower_est="));
    assert!(!text.contains('\r'));
}

#[test]
fn net_subcommands() {
    let o = netdensity(&["converge", "--family", "N", "--net", "1/n", "--limit", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("converges: true"));

    let o = netdensity(&["classify", "--family", "N", "--net", "if n % 2 == 0 then 1 else -1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("in_m: true") && text.contains("in_m_ct: false"));

    let o = netdensity(&["classify", "--family", "N", "--net", "0"]);
    assert!(stdout(&o).contains("gauge: inf"));

    let o = netdensity(&["star", "--family", "div1", "--gamma", "3"]);
    assert!(stdout(&o).contains("holds: true"));

    let o = netdensity(&["cauchy", "--family", "N", "--net", "2 + 1/n"]);
    assert!(stdout(&o).contains("cauchy: true"));

    let o = netdensity(&["axioms", "--family", "div"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("passed: true"));
}

#[test]
fn paper_examples_are_reproducible() {
    let (a, b) = (scratch("a"), scratch("b"));
    for dir in [&a, &b] {
        let o = netdensity(&["paper-examples", "--out", dir.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).lines().filter(|l| !l.starts_with("note:")).all(|l| l.starts_with("pass ")));
    }
    let mut names: Vec<_> = std::fs::read_dir(&a).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert!(names.len() >= 3);
    for name in names {
        let x = std::fs::read(a.join(&name)).unwrap();
        let y = std::fs::read(b.join(&name)).unwrap();
        assert_eq!(x, y, "{name:?} differs between runs");
    }
    let _ = std::fs::remove_dir_all(&a);
    let _ = std::fs::remove_dir_all(&b);
}
