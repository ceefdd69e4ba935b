use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nonoverlap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn seq_prints_table_columns() {
    let out = run(&["seq", "--kind", "r", "--k", "3", "--n-max", "15"]);
    assert_eq!(code(&out), 0);
    let expected: Vec<u64> = vec![1, 0, 1, 2, 2, 4, 7, 10, 17, 28, 44, 72, 117, 188, 305, 494];
    let lines: Vec<String> = stdout(&out).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 16);
    for (n, v) in expected.iter().enumerate() {
        assert_eq!(lines[n], format!("{n}\t{v}"));
    }

    let out = run(&["seq", "--kind", "b", "--k", "8", "--n-max", "15"]);
    let text = stdout(&out);
    let mut tail = text.lines().rev();
    assert_eq!(tail.next().unwrap(), "15\t31616");
    assert_eq!(tail.next().unwrap(), "14\t15872");

    let out = run(&["seq", "--kind", "d", "--k", "4", "--n-max", "5"]);
    let text = stdout(&out);
    let values: Vec<&str> = text
        .lines()
        .map(|l| l.split_once('\t').unwrap().1)
        .collect();
    assert_eq!(values, ["1", "-1", "0", "0", "1", "-1"]);
}

#[test]
fn seq_formats_and_validation() {
    let out = run(&[
        "seq", "--kind", "f", "--k", "2", "--n-max", "9", "--format", "csv",
    ]);
    assert!(stdout(&out).lines().last().unwrap() == "9,89");

    // b needs k >= 3, r accepts the k = 2 special case.
    let out = run(&["seq", "--kind", "b", "--k", "2", "--n-max", "5"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("k must be at least 3"));
    let out = run(&["seq", "--kind", "r", "--k", "2", "--n-max", "4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out).lines().collect::<Vec<_>>(),
        ["0\t1", "1\t0", "2\t1", "3\t0", "4\t1"]
    );

    // Unknown flags and values are clap usage errors.
    let out = run(&["seq", "--kind", "q", "--k", "3", "--n-max", "4"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn seq_output_is_deterministic() {
    let a = run(&["seq", "--kind", "z", "--k", "4", "--n-max", "40"]);
    let b = run(&["seq", "--kind", "z", "--k", "4", "--n-max", "40"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn count_methods_and_agreement() {
    let out = run(&["count", "--k", "3", "--m", "3", "--n", "7", "--all"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(
        text.lines().collect::<Vec<_>>(),
        ["product\t84", "fib\t84", "enumerate\t84", "AGREE"]
    );

    let out = run(&[
        "count", "--k", "3", "--m", "6", "--n", "10", "--method", "product",
    ]);
    assert_eq!(stdout(&out).trim(), "4391956870");

    let out = run(&[
        "count", "--k", "3", "--m", "2", "--n", "6", "--method", "fib",
    ]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn count_error_paths() {
    // k = 2 is not a valid family parameter.
    let out = run(&["count", "--k", "2", "--m", "2", "--n", "6"]);
    assert_eq!(code(&out), 2);

    // The Fibonacci form is h = 0 only.
    let out = run(&[
        "count", "--k", "3", "--m", "2", "--n", "8", "--h", "1", "--method", "fib",
    ]);
    assert_eq!(code(&out), 2);

    // Enumeration refuses to exceed the budget.
    let out = run(&[
        "count",
        "--k",
        "3",
        "--m",
        "3",
        "--n",
        "7",
        "--method",
        "enumerate",
        "--max-comparisons",
        "10",
    ]);
    assert_eq!(code(&out), 3);

    // --all still reports, marking enumeration as skipped.
    let out = run(&[
        "count",
        "--k",
        "3",
        "--m",
        "3",
        "--n",
        "7",
        "--all",
        "--max-comparisons",
        "10",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("enumerate\tskipped"));
    assert!(text.ends_with("AGREE\n"));
}

#[test]
fn gen_produces_exact_text() {
    let out = run(&["gen", "--k", "3", "--m", "2", "--n", "6"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2 6\n110100\n111000\n");

    let out = run(&["gen", "--k", "3", "--m", "6", "--n", "10", "--limit", "1"]);
    let text = stdout(&out);
    let first_row = text.lines().nth(1).unwrap();
    assert!(first_row.starts_with("110"));
    assert!(first_row.ends_with("100"));

    let out = run(&["gen", "--k", "3", "--m", "3", "--n", "7", "--limit", "5"]);
    let text = stdout(&out);
    assert_eq!(text.matches("3 7\n").count(), 5);
    let again = run(&["gen", "--k", "3", "--m", "3", "--n", "7", "--limit", "5"]);
    assert_eq!(out.stdout, again.stdout);

    let out = run(&[
        "gen",
        "--k",
        "3",
        "--m",
        "3",
        "--n",
        "7",
        "--max-comparisons",
        "10",
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn gen_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("family.txt");
    let out = run(&[
        "gen",
        "--k",
        "3",
        "--m",
        "3",
        "--n",
        "7",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "OK 84 matrices");

    // A padded family round-trips too.
    let padded = dir.path().join("padded.txt");
    let out = run(&[
        "gen",
        "--k",
        "3",
        "--m",
        "2",
        "--n",
        "9",
        "--h",
        "1",
        "--output",
        padded.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let out = run(&["verify", padded.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "OK 8 matrices");
}

fn write_fixture(path: &Path, text: &str) {
    fs::write(path, text).unwrap();
}

#[test]
fn verify_reports_witnesses() {
    let dir = tempfile::tempdir().unwrap();

    let pair = dir.path().join("pair.txt");
    write_fixture(
        &pair,
        "3 5\n10011\n01011\n01110\n\n3 5\n01100\n11000\n10111\n",
    );
    let out = run(&["verify", pair.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("pair 0 1 dr=1 dc=2 window=2x3"));

    let zeros = dir.path().join("zeros.txt");
    write_fixture(&zeros, "2 2\n00\n00\n");
    let out = run(&["verify", zeros.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("self 0 "));
}

#[test]
fn verify_error_paths() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    write_fixture(&bad, "2 2\n10\n1\n");
    let out = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    let missing = dir.path().join("missing.txt");
    let out = run(&["verify", missing.to_str().unwrap()]);
    assert_eq!(code(&out), 2);

    let fam = dir.path().join("fam.txt");
    let gen = run(&[
        "gen",
        "--k",
        "3",
        "--m",
        "3",
        "--n",
        "7",
        "--output",
        fam.to_str().unwrap(),
    ]);
    assert_eq!(code(&gen), 0);
    let out = run(&["verify", fam.to_str().unwrap(), "--max-comparisons", "100"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn witness_probes_families() {
    // Adjacent padding: exhaustive scan finds nothing.
    let out = run(&[
        "witness", "--k1", "3", "--m1", "3", "--n1", "8", "--h1", "0", "--k2", "3", "--m2", "3",
        "--n2", "8", "--h2", "1",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "none");

    // Padding gap of two: overlap found.
    let out = run(&[
        "witness", "--k1", "3", "--m1", "3", "--n1", "8", "--h1", "0", "--k2", "3", "--m2", "3",
        "--n2", "8", "--h2", "2",
    ]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.starts_with("pair "), "{text}");
    assert!(text.contains("window="));

    // Mixed dimensions use the generalized scan.
    let out = run(&[
        "witness", "--k1", "3", "--m1", "2", "--n1", "7", "--k2", "3", "--m2", "3", "--n2", "7",
    ]);
    assert_eq!(code(&out), 1);

    // Budget refusal.
    let out = run(&[
        "witness",
        "--k1",
        "3",
        "--m1",
        "3",
        "--n1",
        "8",
        "--k2",
        "3",
        "--m2",
        "3",
        "--n2",
        "8",
        "--h2",
        "1",
        "--max-comparisons",
        "100",
    ]);
    assert_eq!(code(&out), 3);
}

#[test]
fn check_tables_passes_and_detects_corruption() {
    let out = run(&["check-tables"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "tables: 96+96 cells OK; identities OK");

    let out = run(&["check-tables", "--n-max", "200"]);
    assert_eq!(code(&out), 0);

    let out = run(&["check-tables", "--corrupt-cell", "r:3:6"]);
    assert_eq!(code(&out), 1);
    assert!(
        stdout(&out).contains("table r cell k=3 n=6"),
        "{}",
        stdout(&out)
    );

    let out = run(&["check-tables", "--corrupt-cell", "b:4:10"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("table b cell k=4 n=10"));

    let out = run(&["check-tables", "--corrupt-cell", "x:9:9"]);
    assert_eq!(code(&out), 2);
}
