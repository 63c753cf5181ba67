use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use diam2col::instance::parse_instance;
use diam2col::oracle::verify_coloring;
use diam2col::palette::Color;
use diam2col::two_list::Coloring;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diam2col"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn gen(dir: &Path, family: &str) -> PathBuf {
    let p = dir.join(format!("{family}.col"));
    let o = run(&["gen", "--family", family, "--out", p.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    p
}

/// Reads the coloring lines of a YES answer and checks it against the file.
fn check_certificate(file: &Path, out: &str) {
    let inst = parse_instance(&std::fs::read_to_string(file).unwrap()).unwrap();
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("YES"));
    let mut colors = vec![None; inst.graph.n()];
    for line in lines.take_while(|l| l.starts_with("v ")) {
        let [_, v, c] = line.split(' ').collect::<Vec<_>>()[..] else {
            panic!("{line}")
        };
        let v: usize = v.parse().unwrap();
        colors[v - 1] = Color::from_letter(c.chars().next().unwrap());
    }
    let c = Coloring(
        colors
            .into_iter()
            .map(|c| c.expect("every vertex colored"))
            .collect(),
    );
    assert!(verify_coloring(&inst.graph, &inst.lists, &c));
}

#[test]
fn petersen_solves_under_c3c7() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen(dir.path(), "petersen");
    let text = std::fs::read_to_string(&p).unwrap();
    assert!(text.starts_with("p edge 10 15\n"));
    let o = run(&["solve", "--solver", "c3c7", "--input", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 11);
    check_certificate(&p, &out);
}

#[test]
fn k4_is_no_with_fallback_flagged() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen(dir.path(), "k4");
    let o = run(&[
        "solve",
        "--solver",
        "c4cs",
        "--s",
        "6",
        "--input",
        p.to_str().unwrap(),
        "--telemetry",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "NO\ninstances=0 fallback=true\n");
}

#[test]
fn induced_c4_is_a_class_violation() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "c4.col",
        "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n",
    );
    let o = run(&[
        "solve",
        "--solver",
        "c4cs",
        "--s",
        "7",
        "--input",
        p.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o).trim(), "HasInducedC4: (1,2,3,4)");
    assert!(stdout(&o).is_empty());
}

#[test]
fn distance_three_is_reported_with_its_pair() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "path4.col",
        "c path on four vertices\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n",
    );
    let o = run(&[
        "check",
        "--input",
        p.to_str().unwrap(),
        "--properties",
        "diam2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "diam2: fails: d(1,4)=3\n");
    let o = run(&["solve", "--solver", "c3c7", "--input", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o).trim(), "NotDiameterTwo: d(1,4)=3");
}

#[test]
fn check_reports_each_property() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen(dir.path(), "petersen");
    let o = run(&[
        "check",
        "--input",
        p.to_str().unwrap(),
        "--properties",
        "c3,c4,diam2,c5,cs=6,cs=7",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[..3], ["c3: holds", "c4: holds", "diam2: holds"]);
    assert!(lines[3].starts_with("c5: fails: induced C5 ("));
    assert!(lines[4].starts_with("cs=6: fails: induced C6 ("));
    assert_eq!(lines[5], "c7: holds");
    let c5 = gen(dir.path(), "c5");
    assert_eq!(
        stdout(&run(&[
            "check",
            "--input",
            c5.to_str().unwrap(),
            "--properties",
            "diam2"
        ])),
        "diam2: holds\n"
    );
}

#[test]
fn grotzsch_file_has_twenty_edges() {
    let o = run(&["gen", "--family", "grotzsch"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("p edge 11 20\n"));
}

#[test]
fn random_generation_round_trips_and_passes_check() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.col");
    let args = [
        "gen",
        "--family",
        "random_diam2",
        "--n",
        "9",
        "--p",
        "0.4",
        "--seed",
        "7",
        "--constraints",
        "c3free,c7free",
    ];
    let o = run(&[&args[..], &["--out", p.to_str().unwrap()]].concat());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let again = stdout(&run(&args));
    assert_eq!(std::fs::read_to_string(&p).unwrap(), again);
    let o = run(&[
        "check",
        "--input",
        p.to_str().unwrap(),
        "--properties",
        "diam2,c3,c7",
    ]);
    assert_eq!(stdout(&o), "diam2: holds\nc3: holds\nc7: holds\n");
}

#[test]
fn exhausted_rejection_budget_exits_two() {
    let o = run(&[
        "gen",
        "--family",
        "random_diam2",
        "--n",
        "9",
        "--p",
        "0.05",
        "--seed",
        "1",
        "--budget",
        "50",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("RejectionBudgetExhausted"));
}

#[test]
fn solve_output_is_deterministic_and_respects_lists() {
    let dir = tempfile::tempdir().unwrap();
    let text = "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\nl 1 b\nl 3 bc\n";
    let p = write(dir.path(), "c5l.col", text);
    for solver in ["c4cs", "c3c7", "oracle", "auto"] {
        let mut args = vec![
            "solve",
            "--solver",
            solver,
            "--input",
            p.to_str().unwrap(),
            "--telemetry",
        ];
        if solver == "c4cs" {
            args.extend(["--s", "6"]);
        }
        let first = run(&args);
        assert_eq!(first.status.code(), Some(0), "{solver}: {}", stderr(&first));
        assert_eq!(first.stdout, run(&args).stdout);
        check_certificate(&p, &stdout(&first));
    }
    let two = write(
        dir.path(),
        "c5ab.col",
        "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\nl 1 ab\nl 2 ab\nl 3 ab\nl 4 ab\nl 5 ab\n",
    );
    assert_eq!(
        stdout(&run(&[
            "solve",
            "--solver",
            "c3c7",
            "--input",
            two.to_str().unwrap()
        ])),
        "NO\n"
    );
}

#[test]
fn auto_falls_back_to_the_oracle_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    // A 4-cycle plus a hub: triangles and an induced C4, so neither solver applies.
    let p = write(
        dir.path(),
        "w.col",
        "p edge 5 8\ne 1 2\ne 2 3\ne 3 4\ne 4 1\ne 5 1\ne 5 2\ne 5 3\ne 5 4\n",
    );
    let o = run(&["solve", "--input", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning"));
    check_certificate(&p, &stdout(&o));
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = gen(dir.path(), "c5");
    let path = p.to_str().unwrap();
    assert_eq!(
        run(&["solve", "--solver", "c4cs", "--input", path])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["solve", "--solver", "c3c7", "--s", "6", "--input", path])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["solve", "--input", "/nonexistent/x.col"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["check", "--input", path, "--properties", "c6"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    let bad = write(dir.path(), "bad.col", "p edge 2 1\ne 1 2\nl 2 xyz\n");
    let o = run(&[
        "solve",
        "--solver",
        "oracle",
        "--input",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"));
}
