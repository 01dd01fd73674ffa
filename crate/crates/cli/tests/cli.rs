use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn paracr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paracr"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

/// Compares with `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, args: &[&str]) {
    let out = paracr(args);
    assert!(out.status.success(), "{}", stderr(&out));
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap();
    assert_eq!(stdout(&out), want, "golden {name}");
}

#[test]
fn golden_e6_tables() {
    golden("tables_e6.txt", &["--tables", "E6"]);
}

#[test]
fn golden_f4_g2_tables() {
    golden("tables_f4.txt", &["--tables", "F4"]);
    golden("tables_g2.txt", &["--tables", "g2"]);
}

#[test]
fn golden_classify_su33() {
    golden(
        "classify_su33.txt",
        &[
            "--algebra",
            "A5",
            "--realform",
            "su(3,3)",
            "--pi1",
            "1,3,5",
            "--all-decompositions",
        ],
    );
}

#[test]
fn golden_enumerate_b3_json() {
    golden(
        "enumerate_b3.json",
        &["--algebra", "B3", "--mode", "enumerate", "--format", "json"],
    );
}

#[test]
fn input_file_and_stdin_agree() {
    let spec = "# E6 example\nalgebra E6\npi1 {1,4,6}\nmode classify\n";
    let path = scratch("e6.spec", spec);
    let from_file = paracr(&["--input", path.to_str().unwrap()]);
    assert!(from_file.status.success(), "{}", stderr(&from_file));
    assert!(stdout(&from_file).contains("admissible   no (root"));

    let mut child = Command::new(env!("CARGO_BIN_EXE_paracr"))
        .args(["--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(spec.as_bytes())
        .unwrap();
    let from_stdin = child.wait_with_output().unwrap();
    assert_eq!(from_stdin.stdout, from_file.stdout);

    let inline = paracr(&["--algebra", "E6", "--pi1", "{1,4,6}"]);
    assert_eq!(inline.stdout, from_file.stdout);
}

#[test]
fn assert_paracr_exit_codes() {
    let yes = paracr(&[
        "--algebra",
        "A3",
        "--pi1",
        "1,3",
        "--plus",
        "1",
        "--minus",
        "3",
        "--assert-paracr",
    ]);
    assert_eq!(yes.status.code(), Some(0), "{}", stderr(&yes));

    let no = paracr(&[
        "--algebra",
        "E6",
        "--realform",
        "E6 III",
        "--pi1",
        "1,2,6",
        "--assert-paracr",
    ]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&no).contains("para-CR      no"));

    // a negative verdict without the flag is still a success
    let plain = paracr(&["--algebra", "E6", "--realform", "E6 III", "--pi1", "1,2,6"]);
    assert_eq!(plain.status.code(), Some(0));

    let split_fails = paracr(&[
        "--algebra",
        "A5",
        "--pi1",
        "1,3,5",
        "--plus",
        "1,3",
        "--minus",
        "5",
        "--assert-paracr",
    ]);
    assert_eq!(split_fails.status.code(), Some(1));
}

#[test]
fn input_errors_exit_with_two() {
    let cases: &[(&[&str], &str)] = &[
        (
            &["--algebra", "B2", "--pi1", "1,2,3"],
            "<flags>:2:10: index 3 out of range 1..=2",
        ),
        (
            &["--algebra", "A3", "--realform", "su(5,5)"],
            "unknown real form `su(5,5)`",
        ),
        (
            &["--algebra", "Q4", "--mode", "enumerate"],
            "unknown algebra `Q4`",
        ),
        (
            &["--algebra", "C2", "--mode", "enumerate"],
            "invalid rank 2 for family C",
        ),
        (
            &["--algebra", "A9", "--mode", "enumerate"],
            "raise it with --max-rank",
        ),
        (
            &["--tables", "E6", "--format", "xml"],
            "unsupported output format `xml`",
        ),
        (&["--tables", "nonsense"], "unknown tables target"),
        (
            &["--input", "/nonexistent/spec"],
            "cannot read /nonexistent/spec",
        ),
        (
            &["--algebra", "A3", "--pi1", "1,2", "--realform", "su(2,2)"],
            "arrow (1, 3) joins labels 1 and 0",
        ),
        (&[], "nothing to do"),
    ];
    for (args, message) in cases {
        let out = paracr(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stderr(&out).contains(message), "{args:?}: {}", stderr(&out));
    }
    // clap usage errors share the code
    assert_eq!(paracr(&["--bogus"]).status.code(), Some(2));
}

#[test]
fn max_rank_raises_the_bound() {
    let out = paracr(&["--algebra", "A9", "--mode", "tables", "--max-rank", "9"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("A9\n  sets with at least two vertices: 502"));
}

#[test]
fn family_tables_cover_every_rank() {
    let out = paracr(&["--tables", "D", "--max-rank", "6"]);
    let text = stdout(&out);
    for rank in 4..=6 {
        assert!(text.contains(&format!("D{rank}\n")), "{text}");
    }
    assert!(!text.contains("D7"));
}

#[test]
fn tables_for_a_real_form() {
    let out = paracr(&["--tables", "E6 II"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).starts_with("E6 (E6 II)\n"));
}

#[test]
fn custom_catalog_replaces_the_bundled_one() {
    let path = scratch(
        "catalog.txt",
        "realform toy\nalgebra A3\nsatake black {2} arrows {(1,3)}\n",
    );
    let p = path.to_str().unwrap();
    let out = paracr(&[
        "--satake-catalog",
        p,
        "--algebra",
        "A3",
        "--realform",
        "toy",
        "--mode",
        "enumerate",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("A3 (toy)"));
    let missing = paracr(&[
        "--satake-catalog",
        p,
        "--algebra",
        "A3",
        "--realform",
        "su(2,2)",
    ]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).contains("available for A3: toy"));

    let bad = scratch(
        "bad_catalog.txt",
        "realform toy\nalgebra A3\nsatake black {2} arrows {(1,2)}\n",
    );
    let out = paracr(&[
        "--satake-catalog",
        bad.to_str().unwrap(),
        "--list-realforms",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("3:"), "{}", stderr(&out));
}

#[test]
fn inline_satake_diagram() {
    let out = paracr(&[
        "--algebra",
        "A5",
        "--satake",
        "black {} arrows {(1,5),(2,4)}",
        "--pi1",
        "1,3,5",
        "--plus",
        "1,5",
        "--minus",
        "3",
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let d = &v["reports"][0]["decompositions"][0];
    assert_eq!(d["alternation"]["alternating"], true);
    assert_eq!(d["paracr"], true);
    assert_eq!(
        v["reports"][0]["real_form"]["name"],
        serde_json::Value::Null
    );
}

#[test]
fn list_realforms_filters_by_algebra() {
    let out = paracr(&["--list-realforms", "--algebra", "E6"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5, "{text}");
    assert!(text.contains("E6 III"));
}

#[test]
fn jobs_do_not_change_output() {
    let args = ["--algebra", "E7", "--mode", "enumerate", "--format", "json"];
    let a = paracr(&[&["--jobs", "1"][..], &args[..]].concat());
    let b = paracr(&[&["--jobs", "4"][..], &args[..]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
