//! End-to-end CLI behavior: exit codes, determinism, command wiring.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_alex"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn alexander_of_shipped_files() {
    let cases = [
        ("unknot.toml", "1"),
        ("spun_trefoil.toml", "t^2 - t + 1"),
        ("spun_figure_eight.toml", "-t^2 + 3*t - 1"),
        ("spun_six_one.toml", "-2*t^2 + 5*t - 2"),
        ("presentation_ball.toml", "1"),
        ("presentation_torus_k2.toml", "-t + 2"),
        ("blocks_example.toml", "2*t^2 - 2*t + 1"),
    ];
    for (file, expected) in cases {
        let out = run(&["alexander", "--input", &data(file)]);
        assert!(out.status.success(), "{file}");
        assert_eq!(stdout(&out).trim(), expected, "{file}");
    }
}

#[test]
fn alexander_structured_format() {
    let out = run(&["alexander", "--input", &data("spun_six_one.toml"), "--format", "structured"]);
    assert_eq!(stdout(&out).trim(), "alexander = -2*t^2 + 5*t - 2");
}

#[test]
fn exit_code_parse_error() {
    let out = run_stdin(&["alexander"], b"not toml at all [");
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["alexander", "--input", "/nonexistent/file.toml"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_nonzero_linking_matrix() {
    let pres = "type = \"presentation\"\nn = 1\neps = [1]\n\
                boundary_positions = [[{ region = \"ball\", k = 1 }]]\n\
                interior_positions = [[{ region = \"ball\", k = 1 }]]\n\
                lk_matrix = [[2]]\n";
    let out = run_stdin(&["alexander"], pres.as_bytes());
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn exit_code_zero_determinant() {
    let pair = "type = \"seifert_pair\"\nv_plus = [[0]]\nv_minus = [[0]]\n";
    let out = run_stdin(&["alexander"], pair.as_bytes());
    assert_eq!(out.status.code(), Some(4));
    let module = "type = \"module_presentation\"\nmatrix = [[\"0\"]]\n";
    let out = run_stdin(&["obstruct"], module.as_bytes());
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn factorize_exit_codes() {
    assert_eq!(run(&["factorize", "-2*t^2 + 5*t - 2"]).status.code(), Some(0));
    assert_eq!(run(&["factorize", "2*t^2 - 2*t + 1"]).status.code(), Some(1));
    assert_eq!(run(&["factorize", "not a polynomial"]).status.code(), Some(2));
}

#[test]
fn spun_matches_direct_path() {
    let spun = run(&["spun", "six_one"]);
    let direct = run(&["alexander", "--input", &data("spun_six_one.toml")]);
    let piped = run_stdin(&["alexander"], &spun.stdout);
    assert_eq!(stdout(&piped), stdout(&direct));
}

#[test]
fn spun_unknown_name() {
    assert_eq!(run(&["spun", "granny"]).status.code(), Some(2));
}

#[test]
fn mirror_twice_is_byte_identical() {
    let once = run(&["mirror", "--input", &data("spun_six_one.toml")]);
    let twice = run_stdin(&["mirror"], &once.stdout);
    let thrice = run_stdin(&["mirror"], &twice.stdout);
    assert_eq!(once.stdout, thrice.stdout);
    assert_ne!(once.stdout, twice.stdout);
}

#[test]
fn connsum_with_unknot_preserves_alexander() {
    let sum = run(&["connsum", &data("spun_six_one.toml"), &data("unknot.toml")]);
    assert!(sum.status.success());
    let delta = run_stdin(&["alexander"], &sum.stdout);
    assert_eq!(stdout(&delta).trim(), "-2*t^2 + 5*t - 2");
}

#[test]
fn commands_are_deterministic() {
    for args in [
        vec!["alexander", "--input", &*data("spun_six_one.toml")],
        vec!["check", "--input", &*data("presentation_torus_k2.toml")],
        vec!["obstruct", "--input", &*data("spun_six_one.toml"), "--format", "structured"],
        vec!["spun", "figure_eight"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn check_reports() {
    let holds = stdout(&run(&["check", "--input", &data("presentation_ball.toml")]));
    assert!(holds.contains("linkings condition: holds"));
    assert!(holds.contains("concentricity: holds"));
    assert!(holds.contains("H1 = Z^2"));

    let fails = stdout(&run(&[
        "check",
        "--input",
        &data("presentation_torus_k2.toml"),
        "--format",
        "structured",
    ]));
    assert!(fails.contains("linkings = false"));
    assert!(fails.contains("linkings_matrix = false"));
    assert!(fails.contains("concentricity = unevaluated"));
}

#[test]
fn obstruct_reports() {
    let obstructed = run(&["obstruct", "--input", &data("spun_six_one.toml")]);
    assert!(stdout(&obstructed).starts_with("OBSTRUCTED"));
    let inconclusive = run(&["obstruct", "--input", &data("spun_trefoil.toml")]);
    assert!(stdout(&inconclusive).starts_with("INCONCLUSIVE"));
    let unknot = run(&["obstruct", "--input", &data("unknot.toml")]);
    assert!(stdout(&unknot).starts_with("INCONCLUSIVE"));
}

#[test]
fn eval_points_are_configurable() {
    let out = stdout(&run(&[
        "obstruct",
        "--input",
        &data("spun_six_one.toml"),
        "--eval=-1,1",
        "--format",
        "structured",
    ]));
    assert!(out.contains("eval.-1.e2 = 1"));
    assert!(out.contains("eval.1."));
}

#[test]
fn max_degree_is_enforced() {
    let out = run(&["factorize", "--max-degree", "2", "t^4 + t + 1"]);
    assert_eq!(out.status.code(), Some(5));
}
