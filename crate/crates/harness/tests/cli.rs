use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use pebblab::{Report, Status};

fn pebblab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pebblab")).args(args).output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn gen(dir: &Path, spec: &str) -> String {
    let o = pebblab(&["gen", spec]);
    assert_eq!(o.status.code(), Some(0));
    write(dir, &spec.replace([':', '(', ')', ','], "_"), &stdout(&o))
}

#[test]
fn gen_writes_the_graph_format() {
    let o = pebblab(&["gen", "petersen"]);
    let text = stdout(&o);
    let header = text.lines().find(|l| !l.starts_with('#')).unwrap();
    assert_eq!(header, "10 15");
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 16);
    let o = pebblab(&["gen", "grid:2x2"]);
    assert!(stdout(&o).contains("4 4\n"));
    assert_eq!(pebblab(&["gen", "f:1,0,1"]).status.code(), Some(2));
    assert_eq!(pebblab(&["gen", "nonsense:3"]).status.code(), Some(2));
    let a = stdout(&pebblab(&["--seed", "3", "gen", "--tree", "9"]));
    let b = stdout(&pebblab(&["--seed", "3", "gen", "--tree", "9"]));
    assert_eq!(a, b);
    assert!(a.contains("9 8\n"));
}

#[test]
fn solve_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2", "2 1\n0 1\n");
    let c = write(dir.path(), "c", "2 0\n");
    let o = pebblab(&["solve", &k2, &c, "--target", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0->1\ntarget 1 reached\n");

    let p3 = gen(dir.path(), "path:3");
    let c = write(dir.path(), "c3", "1 0 0\n");
    let o = pebblab(&["solve", &p3, &c]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "UNSOLVABLE v=1,2\n");

    let c4 = gen(dir.path(), "cycle:4");
    let c = write(dir.path(), "c4", "2 0 1 0\n");
    assert_eq!(pebblab(&["solve", &c4, &c]).status.code(), Some(0));

    let short = write(dir.path(), "short", "2 0\n");
    assert_eq!(pebblab(&["solve", &c4, &short]).status.code(), Some(2));
    let broken = write(dir.path(), "broken", "3 5\n0 1\n");
    assert_eq!(pebblab(&["solve", &broken, &c]).status.code(), Some(2));
}

#[test]
fn invariants_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    let pet = gen(dir.path(), "petersen");
    let o = pebblab(&["invariant", &pet, "pistar_t:2"]);
    assert!(stdout(&o).starts_with("value 5\n"));
    let p7 = gen(dir.path(), "path:7");
    assert!(stdout(&pebblab(&["invariant", &p7, "gamma_r"])).starts_with("value 5\n"));
    let k1 = gen(dir.path(), "complete:1");
    assert!(stdout(&pebblab(&["invariant", &k1, "pistar"])).starts_with("value 1\n"));
    let o = pebblab(&["--budget", "10", "invariant", &pet, "pistar_t:2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("BUDGET-EXCEEDED"));
    assert_eq!(pebblab(&["invariant", &pet, "chromatic"]).status.code(), Some(2));
}

#[test]
fn classify_reports_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let pet = gen(dir.path(), "petersen");
    let o = pebblab(&["classify", &pet, "--check"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("predicted five\ncertificate cert:distinct:"));
    assert!(text.contains("pi2 5\nAGREE\n"));
    let star = gen(dir.path(), "star:5");
    assert!(stdout(&pebblab(&["classify", &star])).contains("certificate cert:distinct:dominating:"));
}

#[test]
fn verify_is_deterministic_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for jobs in ["1", "4"] {
        let out = dir.path().join(format!("r{jobs}.tsv"));
        let o = pebblab(&[
            "--jobs",
            jobs,
            "--out",
            out.to_str().unwrap(),
            "verify",
            "grids",
            "--range",
            "2..5",
            "--no-timing",
        ]);
        assert_eq!(o.status.code(), Some(0));
        texts.push(fs::read_to_string(&out).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
    let report = Report::parse(&texts[0]).unwrap();
    assert!(report.records.iter().all(|r| r.status == Status::Pass));
    for claim in ["pi2-grid-x2", "pi2-grid-x3"] {
        assert_eq!(report.records.iter().filter(|r| r.claim_id == claim).count(), 4);
    }
    let path = dir.path().join("r1.tsv");
    let o = pebblab(&["verify", "--replay", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with(", 0 failures\n"));
}

#[test]
fn tampered_witness_fails_replay() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.tsv");
    let o = pebblab(&["--out", out.to_str().unwrap(), "verify", "roman", "--range", "6..6", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    // P6 with an unsolvable configuration claimed as the optimum
    let tampered = text.replace("solvable%3At%3D2%3A0%202%200%200%202%200", "solvable%3At%3D2%3A2%200%200%200%200%202");
    assert_ne!(tampered, text);
    let bad = write(dir.path(), "bad.tsv", &tampered);
    let o = pebblab(&["verify", "--replay", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("REPLAY-FAIL\tpi2-paths\tpath:6"));
}

#[test]
fn trees_surface_disagreements() {
    let o = pebblab(&["--seed", "7", "verify", "trees", "--no-timing"]);
    assert_eq!(o.status.code(), Some(4));
    let report = Report::parse(&stdout(&o)).unwrap();
    let bound: Vec<_> = report.records.iter().filter(|r| r.claim_id == "tree-pi2-bound").collect();
    assert_eq!(bound.len(), 200);
    assert!(bound.iter().all(|r| r.status == Status::Pass));
    assert!(report.header.iter().any(|h| h.contains("seed=7")));
}

#[test]
fn explore_flags_upper_bounds() {
    let o = pebblab(&["--budget", "2000", "explore", "5", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let weight: u64 = text.lines().find_map(|l| l.strip_prefix("weight ")).unwrap().parse().unwrap();
    assert!(weight <= 17);
    let o = pebblab(&["--budget", "2000", "explore", "6", "5"]);
    assert!(stdout(&o).contains("bound UPPER-BOUND"));
    let o = pebblab(&["explore", "3", "3"]);
    assert!(stdout(&o).contains("weight 4\nbound EXACT"));
}
