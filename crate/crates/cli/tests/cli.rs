use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ifmod_cli::parse_spec;
use ifmod_laws::paper;

fn specs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("specs")
}

fn spec(name: &str) -> String {
    specs().join(name).display().to_string()
}

fn ifmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ifmod")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn shipped_specs_round_trip_and_match_builtin_examples() {
    let mut seen = 0;
    for entry in fs::read_dir(specs()).unwrap() {
        let path = entry.unwrap().path();
        let text = fs::read_to_string(&path).unwrap();
        let doc = parse_spec(&text).unwrap();
        let printed = doc.to_string();
        assert_eq!(parse_spec(&printed).unwrap(), doc, "{}", path.display());
        assert_eq!(parse_spec(&printed).unwrap().to_string(), printed);
        assert!(!doc.header.is_empty(), "{} documents its model", path.display());
        seen += 1;
    }
    assert_eq!(seen, 3);
    let pairs = [
        ("z4_paper.ifspec", paper::z4_example()),
        ("z12_paper.ifspec", paper::z12_example()),
        ("z6_counterexample.ifspec", paper::z6_example()),
    ];
    for (file, a) in pairs {
        let doc = parse_spec(&fs::read_to_string(specs().join(file)).unwrap()).unwrap();
        assert_eq!(doc.ifs("A").unwrap(), &a, "{file}");
    }
}

#[test]
fn compute_goldens() {
    let z4 = spec("z4_paper.ifspec");
    let z12 = spec("z12_paper.ifspec");
    let cases: [(&[&str], &str); 8] = [
        (&["compute", "radical", "--spec", &z4, "--ifs", "A"], "0: 1,0 | 1: 0,1 | 2: 1,0 | 3: 0,1\n"),
        (&["compute", "cut", "--spec", &z4, "--ifs", "A", "--alpha", "1/2", "--beta", "1/2"], "{0, 2}\n"),
        (&["compute", "cut", "--spec", &z4, "--ifs", "A", "--alpha", "1/2", "--beta", "1/2", "--strict"], "{0}\n"),
        (&["compute", "support", "--spec", &z4, "--ifs", "A"], "{0, 2}\n"),
        (
            &["compute", "bar", "--spec", &z12, "--ifs", "A"],
            "0: 1,0 | 1: 0,1 | 2: 1/2,1/2 | 3: 0,1 | 4: 1,0 | 5: 0,1 | 6: 1/2,1/2 | 7: 0,1 | 8: 1,0 | 9: 0,1 | 10: 1/2,1/2 | 11: 0,1\n",
        ),
        (&["compute", "image", "--spec", &z12, "--ifs", "A", "--hom", "f"], "0: 1,0 | 1: 0,1 | 2: 1/2,1/2 | 3: 0,1\n"),
        (&["compute", "radical", "--spec", &z12, "--sub", "N6"], "{0, 6}\n"),
        (&["compute", "bar", "--spec", &z12, "--sub", "N6"], "{0, 6}\n"),
    ];
    for (args, expected) in cases {
        let o = ifmod(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
        assert_eq!(stdout(&o), expected, "{args:?}");
    }
}

#[test]
fn preimage_needs_a_hom_onto_the_carrier() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pre.ifspec");
    fs::write(
        &path,
        "ring cyclic 4\nhom f to 2\n 0: 0\n 1: 1\n 2: 0\n 3: 1\nend\nifs B over module 2\n 0: 1, 0\n 1: 1/2, 1/4\nend\n",
    )
    .unwrap();
    let p = path.display().to_string();
    let o = ifmod(&["compute", "preimage", "--spec", &p, "--ifs", "B", "--hom", "f"]);
    assert_eq!(stdout(&o), "0: 1,0 | 1: 1/2,1/4 | 2: 1,0 | 3: 1/2,1/4\n", "{}", stderr(&o));
    let o = ifmod(&["compute", "image", "--spec", &p, "--ifs", "B", "--hom", "f"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn check_verdicts_and_exit_codes() {
    let z4 = spec("z4_paper.ifspec");
    let z6 = spec("z6_counterexample.ifspec");
    let z12 = spec("z12_paper.ifspec");

    let o = ifmod(&["check", "primary", "--spec", &z4, "--ifs", "A"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "primary (joint): holds\n"));

    let o = ifmod(&["check", "primary", "--spec", &z6, "--ifs", "A"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "primary (joint): fails\nwitness: [primary] r=2 m=3 | A(r·m)=1,0 A(m)=0,1 √A(r)=3/10,1/2\n");
    let o = ifmod(&["check", "primary", "--spec", &z6, "--ifs", "A", "--pairing", "componentwise"]);
    assert_eq!(o.status.code(), Some(1));

    let o = ifmod(&["check", "crisp-primary", "--spec", &z12, "--sub", "N6"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "crisp-primary: fails\nwitness: r=2 m=3\n"));
    let o = ifmod(&["check", "crisp-prime", "--spec", &z12, "--sub", "N6"]);
    assert_eq!(o.status.code(), Some(1));

    for (pred, code) in [("if-submodule", 0), ("if-ideal", 0), ("weakly-primary", 0), ("prime", 1)] {
        let o = ifmod(&["check", pred, "--spec", &z12, "--ifs", "A"]);
        assert_eq!(o.status.code(), Some(code), "{pred}: {}{}", stdout(&o), stderr(&o));
    }
    let o = ifmod(&["check", "prime", "--spec", &z12, "--ifs", "A", "--prime-definition", "level-cuts"]);
    assert!(matches!(o.status.code(), Some(0 | 1)));
    assert!(stdout(&o).starts_with("prime (level-cuts): "));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = [
        ("missing.ifspec", "ring cyclic 4\nifs A\n  0: 1, 0\n  1: 0, 1\n  2: 0, 1\nend\n", "element 3"),
        ("degree.ifspec", "ring cyclic 4\nifs A\n  0: 1, 0\n  1: 2/3, 2/3\nend\n", "degree invariant"),
        ("syntax.ifspec", "ring cyclic 4\nifs A\n  0 1, 0\nend\n", ":3:"),
        ("empty.ifspec", "", "missing `ring cyclic N`"),
        ("binary.ifspec", "ring cyclic 0\n", ":1:13:"),
    ];
    for (name, text, needle) in bad {
        let path = dir.path().join(name);
        fs::write(&path, text).unwrap();
        let o = ifmod(&["print", "--spec", &path.display().to_string()]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(stderr(&o).contains(needle), "{name}: {}", stderr(&o));
        assert!(!stderr(&o).contains("panicked"), "{name}");
    }
    let z4 = spec("z4_paper.ifspec");
    for args in [
        &["compute", "radical", "--spec", &z4, "--ifs", "Nope"][..],
        &["compute", "cut", "--spec", &z4, "--ifs", "A", "--alpha", "3/2", "--beta", "0"],
        &["compute", "frobnicate", "--spec", &z4],
        &["check", "primary", "--spec", &z4, "--ifs", "A", "--pairing", "loose"],
        &["check", "if-ideal", "--spec", &z4],
        &["laws", "--grid", "1/2"],
        &["laws", "--law", "L-P99"],
        &["laws", "--modules", "q7"],
    ] {
        let o = ifmod(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&o).contains("panicked"), "{args:?}");
    }
}

#[test]
fn single_law_run() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    let o = ifmod(&["laws", "--law", "L-P6", "--modules", "z12", "--out", &out]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("[L-P6]"));
    assert!(text.contains("  verdict: pass\n"));
    assert!(text.contains("  instances: 6 attempted, 6 passed, 0 vacuous, 0 failed\n"), "{text}");
    assert_eq!(fs::read_to_string(dir.path().join("report.txt")).unwrap(), text);
    assert!(fs::read_to_string(dir.path().join("report.structured")).unwrap().contains("\"L-P6\""));
}

#[test]
fn crisp_degenerate_grid() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().display().to_string();
    let o = ifmod(&["laws", "--grid", "0,1", "--modules", "z4,z6,z2xz2", "--no-paper", "--out", &out]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("grid: 0,1\n"));
}

#[test]
fn paper_goldens_and_a_perturbed_table() {
    let o = ifmod(&["paper"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("model z6: the Z-example is constant on cosets of 6Z"));
    assert!(text.contains("z6.radical.2"));
    assert!(text.ends_with("48 values, 0 mismatched\n"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("expected.txt");
    let perturbed = ifmod_cli::golden::EXPECTED.replace("z12.bar.6 = 1/2, 1/2", "z12.bar.6 = 1, 0");
    fs::write(&path, perturbed).unwrap();
    let o = ifmod(&["paper", "--expected", &path.display().to_string()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let diffs: Vec<&str> = text.lines().filter(|l| l.contains("DIFF")).collect();
    assert_eq!(diffs.len(), 1, "{text}");
    assert!(diffs[0].starts_with("z12.bar.6") && diffs[0].ends_with("1, 0 | 1/2,1/2"), "{}", diffs[0]);
}
