use std::path::PathBuf;
use std::process::Command;

use liecohom_cli::report::{Payload, Report};
use liecohom_cli::{run_with_env, Outcome};
use tempfile::TempDir;

const HEIS2: &str = r#"{"format": 1, "orders": [2, 2, 2], "bracket": {"1,2": [0, 0, 1]}}"#;
const C2: &str = r#"{"format": 1, "orders": [2], "bracket": {}}"#;

struct Fixtures {
    dir: TempDir,
}

impl Fixtures {
    fn new() -> Self {
        let dir = tempfile::tempdir().unwrap();
        let f = Fixtures { dir };
        f.write("heis2.json", HEIS2);
        f.write("c2.json", C2);
        f.write("z4.json", r#"{"format": 1, "orders": [4], "bracket": {}}"#);
        f.write(
            "bad_order.json",
            r#"{"format": 1, "orders": [2, 4], "bracket": {"1,2": [0, 1]}}"#,
        );
        f.write("no_format.json", r#"{"orders": [2], "bracket": {}}"#);
        f.write(
            "extra.json",
            r#"{"format": 1, "orders": [2], "bracket": {}, "name": "x"}"#,
        );
        f.write("syntax.json", r#"{"format": 1, "orders": [2"#);
        f.write(
            "range.json",
            r#"{"format": 1, "orders": [2, 2], "bracket": {"1,3": [1, 0]}}"#,
        );
        f.write(
            "length.json",
            r#"{"format": 1, "orders": [2, 2], "bracket": {"1,2": [1]}}"#,
        );
        f.write(
            "coc.json",
            r#"{"format": 1, "lie": "c2.json", "coeff": [2],
                "f": [[[0], [0]], [[0], [0]]], "g": [[[0], [0]], [[0], [1]]]}"#,
        );
        f.write(
            "inline.json",
            &format!(
                r#"{{"format": 1, "lie": {C2}, "coeff": [2],
                    "f": [[[0], [0]], [[0], [0]]], "g": [[[0], [1]], [[0], [0]]]}}"#
            ),
        );
        f.write(
            "short.json",
            r#"{"format": 1, "lie": "c2.json", "coeff": [2], "f": [[[0]]], "g": [[[0]]]}"#,
        );
        f
    }

    fn write(&self, name: &str, text: &str) {
        std::fs::write(self.dir.path().join(name), text).unwrap();
    }

    fn path(&self, name: &str) -> String {
        self.dir.path().join(name).display().to_string()
    }

    fn run(&self, args: &[&str]) -> Outcome {
        self.run_env(args, None)
    }

    fn run_env(&self, args: &[&str], env: Option<&str>) -> Outcome {
        let mut argv = vec!["liecohom".to_string()];
        for a in args {
            let p = self.dir.path().join(a);
            argv.push(if a.ends_with(".json") {
                p.display().to_string()
            } else {
                a.to_string()
            });
        }
        run_with_env(argv, env)
    }
}

fn assert_error(out: &Outcome, code: i32) {
    assert_eq!(out.code, code, "{out:?}");
    assert!(out.stdout.is_empty(), "{out:?}");
    assert!(out.stderr.starts_with("error: "), "{out:?}");
    assert_eq!(out.stderr.lines().count(), 1, "{out:?}");
    assert!(out.stderr.ends_with('\n'));
}

#[test]
fn documented_examples() {
    let f = Fixtures::new();
    let v = f.run(&["validate", "heis2.json"]);
    assert_eq!(
        (v.code, v.stdout.as_str()),
        (0, "valid Lie ring, order 8, center order 2\n")
    );
    let v = f.run(&["validate", "c2.json"]);
    assert_eq!(v.stdout, "valid Lie ring, order 2, center order 2\n");
    let h = f.run(&["h2", "c2.json", "--coeff", "2"]);
    assert_eq!(h.code, 0);
    assert_eq!(h.stdout.lines().next(), Some("H2 = Z/2"));
    let t = f.run(&[
        "five-term",
        "heis2.json",
        "--ideal",
        "center",
        "--coeff",
        "2",
    ]);
    assert_eq!(t.code, 0);
    assert_eq!(t.stdout.matches("  exact").count(), 4, "{}", t.stdout);
    assert!(t.stdout.ends_with("sequence: exact\n"));
    let s = f.run(&["schur", "heis2.json"]);
    assert!(s.stdout.starts_with("M(L) = Z/2 + Z/2\n"));
    assert!(s.stdout.ends_with("stable: yes\n"));
    let c = f.run(&["classify", "c2.json", "--coeff", "2", "--oracle"]);
    assert_eq!(c.code, 0);
    assert!(c.stdout.contains("B = Z/2 + Z/2, split"));
    assert!(c.stdout.contains("B = Z/4\n"));
    let i = f.run(&["info", "heis2.json"]);
    assert!(i
        .stdout
        .contains("center: order 2, Z/2, generated by (0,0,1)"));
    assert!(i.stdout.contains("abelian: no"));
}

#[test]
fn cocycle_files() {
    let f = Fixtures::new();
    let ok = f.run(&["cocycle-check", "coc.json"]);
    assert_eq!(ok.code, 0, "{ok:?}");
    assert_eq!(ok.stdout, "cocycle, class (1) in H2 = Z/2\n");
    let bad = f.run(&["cocycle-check", "inline.json"]);
    assert_eq!(bad.code, 1);
    assert!(bad.stdout.starts_with("not a cocycle: condition (4)"));
    assert_eq!(bad.stderr.lines().count(), 1);
    assert_error(&f.run(&["cocycle-check", "short.json"]), 1);
    let json = f.run(&["--json", "cocycle-check", "inline.json"]);
    let r: Report = serde_json::from_str(&json.stdout).unwrap();
    match r.result {
        Payload::CocycleCheck {
            cocycle, violation, ..
        } => {
            assert!(!cocycle);
            assert_eq!(violation.unwrap().condition, 4);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn error_paths() {
    let f = Fixtures::new();
    for file in [
        "bad_order.json",
        "no_format.json",
        "extra.json",
        "syntax.json",
        "range.json",
        "length.json",
        "missing.json",
    ] {
        assert_error(&f.run(&["validate", file]), 1);
    }
    let e = f.run(&["validate", "syntax.json"]);
    assert!(e.stderr.contains("line 1 column"), "{e:?}");
    let e = f.run(&["validate", "bad_order.json"]);
    assert!(e.stderr.contains("order incompatibility"));
    assert_error(
        &f.run(&[
            "five-term",
            "heis2.json",
            "--ideal",
            "1,0,0",
            "--coeff",
            "2",
        ]),
        1,
    );
    assert_error(
        &f.run(&["five-term", "heis2.json", "--ideal", "1,0", "--coeff", "2"]),
        1,
    );

    assert_error(&f.run(&["h2", "c2.json"]), 2);
    assert_error(&f.run(&["h2", "c2.json", "--coeff", "0"]), 2);
    assert_error(&f.run(&["h2", "c2.json", "--coeff", "two"]), 2);
    assert_error(&f.run(&["frobnicate"]), 2);
    assert_error(&f.run(&[]), 2);
    let help = f.run(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("five-term"));
}

#[test]
fn order_guard() {
    let f = Fixtures::new();
    let args = ["h2", "heis2.json", "--coeff", "2"];
    assert_eq!(f.run_env(&args, None).code, 0);
    let e = f.run_env(&args, Some("4"));
    assert_error(&e, 1);
    assert!(e.stderr.contains("exceeds the limit 4"));
    assert_error(&f.run_env(&args, Some("lots")), 2);
    let mut with_flag = args.to_vec();
    with_flag.extend(["--max-order", "8"]);
    assert_eq!(f.run_env(&with_flag, Some("4")).code, 0);
    assert_error(&f.run(&["--max-order", "1", "schur", "c2.json"]), 1);
}

fn json_commands() -> Vec<Vec<&'static str>> {
    vec![
        vec!["validate", "heis2.json"],
        vec!["info", "heis2.json"],
        vec!["h2", "heis2.json", "--coeff", "2,4"],
        vec!["classify", "z4.json", "--coeff", "2", "--oracle"],
        vec![
            "five-term",
            "heis2.json",
            "--ideal",
            "center",
            "--coeff",
            "4",
        ],
        vec!["five-term", "z4.json", "--ideal", "2", "--coeff", "2"],
        vec!["schur", "heis2.json"],
        vec!["cocycle-check", "coc.json"],
    ]
}

#[test]
fn json_round_trip_and_determinism() {
    let f = Fixtures::new();
    for cmd in json_commands() {
        let mut args = vec!["--json"];
        args.extend(&cmd);
        let a = f.run(&args);
        assert_eq!(a.code, 0, "{cmd:?} {a:?}");
        let parsed: Report = serde_json::from_str(&a.stdout).unwrap();
        assert_eq!(parsed.to_json(), a.stdout, "{cmd:?}");
        assert_eq!(parsed.format, 1);
        assert_eq!(parsed.input_sha256.len(), 64);
        assert_eq!(f.run(&args), a, "{cmd:?}");
    }
}

#[test]
fn digest_covers_referenced_ring() {
    let f = Fixtures::new();
    let first = f.run(&["--json", "cocycle-check", "coc.json"]);
    f.write("c2.json", &format!("{C2}\n"));
    let second = f.run(&["--json", "cocycle-check", "coc.json"]);
    let d = |o: &Outcome| {
        serde_json::from_str::<Report>(&o.stdout)
            .unwrap()
            .input_sha256
    };
    assert_ne!(d(&first), d(&second));
}

fn binary() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_liecohom"))
}

#[test]
fn binary_matches_library() {
    let f = Fixtures::new();
    let (heis, bad) = (f.path("heis2.json"), f.path("bad_order.json"));
    for (args, code) in [
        (vec!["validate", heis.as_str()], 0),
        (vec!["validate", bad.as_str()], 1),
        (vec!["nonsense"], 2),
    ] {
        let out = Command::new(binary())
            .args(&args)
            .env_remove(liecohom_cli::MAX_ORDER_ENV)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(code));
        let mut argv = vec!["liecohom"];
        argv.extend(&args);
        let lib = run_with_env(argv, None);
        assert_eq!(String::from_utf8(out.stdout).unwrap(), lib.stdout);
        assert_eq!(String::from_utf8(out.stderr).unwrap(), lib.stderr);
    }
    let out = Command::new(binary())
        .args(["h2", &f.path("heis2.json"), "--coeff", "2"])
        .env(liecohom_cli::MAX_ORDER_ENV, "7")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
