//! End-to-end checks of the command-line surface through `cli::run`.

use treeduce::cli::run;

fn run_ok(args: &[&str]) -> String {
    let result = run(args.iter().copied());
    assert_eq!(
        result.exit_code, 0,
        "args {args:?}, stderr: {}",
        result.stderr
    );
    assert!(result.stderr.is_empty(), "unexpected stderr for {args:?}");
    result.stdout
}

#[test]
fn sequence_commands_print_listed_values() {
    assert_eq!(
        run_ok(&["seq", "at", "--from", "0", "--to", "9"]),
        "1 3 1 1 9 1 1 3 1\n"
    );
    assert_eq!(run_ok(&["seq", "l", "--to", "7"]), "0 1 4 3 4 13 12\n");
    assert_eq!(
        run_ok(&["seq", "walpha", "--to", "9"]),
        "1 1 -1 1 1 -1 1 -1 -1\n"
    );
    assert_eq!(run_ok(&["seq", "gray2", "--to", "8"]), "0 1 3 2 6 7 5 4\n");
    assert_eq!(
        run_ok(&["seq", "kgray3", "--to", "18"]),
        "0 1 2 5 4 3 6 7 8 17 16 15 12 13 14 11 10 9\n"
    );
    assert_eq!(
        run_ok(&["seq", "bdir", "--to", "9"]),
        "1 1 -1 1 1 -1 1 -1 -1\n"
    );
    assert_eq!(
        run_ok(&["seq", "bstep", "--to", "9"]),
        "2 6 2 2 18 2 2 6 2\n"
    );
    assert_eq!(
        run_ok(&["seq", "a055661-odd", "--to", "8"]),
        "0 1 7 8 17 15 12 13\n"
    );
    assert_eq!(
        run_ok(&["seq", "a055661-even", "--to", "8"]),
        "0 2 5 4 22 21 24 26\n"
    );
}

#[test]
fn bfile_output_carries_indices() {
    assert_eq!(
        run_ok(&["seq", "at", "--to", "3", "--format", "bfile"]),
        "0 1\n1 3\n2 1\n"
    );
    assert_eq!(
        run_ok(&["seq", "at", "--from", "4", "--to", "6", "--format", "bfile", "--origin", "1"]),
        "5 9\n6 1\n"
    );
}

#[test]
fn recognition_exit_codes() {
    let accepted = run([
        "recognize",
        "--from-peg",
        "0",
        "--to-peg",
        "1",
        "--config",
        "20021",
    ]);
    assert_eq!(accepted.exit_code, 0);
    assert_eq!(accepted.stdout, "22\n");

    let inverse = run([
        "recognize",
        "--from-peg",
        "1",
        "--to-peg",
        "0",
        "--config",
        "20021",
    ]);
    assert_eq!(inverse.stdout, "9\n");

    let rejected = run([
        "recognize",
        "--from-peg",
        "0",
        "--to-peg",
        "1",
        "--config",
        "10021",
    ]);
    assert_eq!(rejected.exit_code, 1);
    assert_eq!(rejected.stderr, "rejected after 4 symbols\n");
    assert!(rejected.stdout.is_empty());

    let usage = run(["recognize", "--from-peg", "0", "--config", "10021"]);
    assert_eq!(usage.exit_code, 2);
}

#[test]
fn apply_and_graph_round_out_the_surface() {
    assert_eq!(
        run_ok(&[
            "apply",
            "--automaton",
            "builtin:AH",
            "--state",
            "b",
            "10221"
        ]),
        "12221\n"
    );
    assert_eq!(
        run_ok(&["apply", "--automaton", "builtin:AL", "210000"]),
        "111000\n"
    );
    let dot = run_ok(&["graph", "schreier", "--level", "3"]);
    assert!(dot.contains("\"011\" -- \"111\" [label=\"a\"]"));
    assert!(dot.contains("\"000\" -- \"000\" [label=\"c\"]"));
    assert_eq!(
        dot.matches("--").count(),
        42,
        "level 3 has 39 proper edges and 3 loops"
    );
}

#[test]
fn semigroup_surface() {
    assert_eq!(
        run_ok(&[
            "semigroup",
            "verify",
            "--automaton",
            "builtin:AL",
            "alpha alpha",
            "alpha"
        ]),
        "true\n"
    );
    assert_eq!(
        run([
            "semigroup",
            "verify",
            "--automaton",
            "builtin:AL",
            "beta·alpha",
            "beta"
        ])
        .exit_code,
        1
    );
    assert_eq!(
        run_ok(&[
            "semigroup",
            "order",
            "--automaton",
            "builtin:AH",
            "--bound",
            "100",
            "c·a"
        ]),
        "none\n"
    );
    assert_eq!(
        run_ok(&["semigroup", "order", "--automaton", "builtin:AH", "b"]),
        "2\n"
    );
    assert_eq!(
        run_ok(&[
            "semigroup",
            "growth",
            "--automaton",
            "builtin:AL",
            "--generators",
            "alpha,beta",
            "--max-len",
            "8"
        ]),
        "2 4 6 8 10 12 14 16\n"
    );
}

#[test]
fn verify_all_depth_six_exits_zero() {
    let result = run(["verify", "all", "--depth", "6"]);
    assert_eq!(result.exit_code, 0, "stdout:\n{}", result.stdout);
    assert_eq!(
        result
            .stdout
            .lines()
            .filter(|l| l.starts_with("ok "))
            .count(),
        21
    );
    assert!(result.stdout.ends_with("21 checks, 0 failed (depth 6)\n"));
}

#[test]
fn byte_identical_reruns() {
    for args in [
        vec!["seq", "l", "--to", "30", "--format", "bfile"],
        vec!["graph", "schreier", "--level", "4"],
        vec!["verify", "gray", "--depth", "4"],
        vec![
            "semigroup",
            "growth",
            "--automaton",
            "builtin:AL",
            "--max-len",
            "6",
        ],
    ] {
        let first = run(args.iter().copied());
        let second = run(args.iter().copied());
        assert_eq!(first, second, "args {args:?}");
    }
}

#[test]
fn machine_files_load_from_disk() {
    let dir = std::env::temp_dir().join("treeduce-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("double.t");
    std::fs::write(
        &path,
        "# doubling-free machine\ntransducer 2 2\nstate p\nstate q\np 0 -> p 0\np 1 -> q 1\nq 0 -> p 1\nq 1 -> q 0\n",
    )
    .unwrap();
    let out = run_ok(&[
        "apply",
        "--automaton",
        path.to_str().unwrap(),
        "--state",
        "p",
        "0110",
    ]);
    assert_eq!(out, "0101\n");
    let missing_state = run(["apply", "--automaton", path.to_str().unwrap(), "0110"]);
    assert_eq!(missing_state.exit_code, 2);
    std::fs::remove_file(&path).unwrap();
}
