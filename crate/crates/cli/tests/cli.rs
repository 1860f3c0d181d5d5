use std::process::{Command, Output};

use turanlab::canon::certificate;
use turanlab::construct::named::{parse_named, REGISTRY};
use turanlab::construct::{complete, turan};
use turanlab::{parse_graph6, Graph};

fn turanlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_turanlab"))
        .args(args)
        .env_remove("TURANLAB_BUDGET_MS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn construct_prints_one_graph6_line() {
    let o = turanlab(&["construct", "join(K(2),T(12,3))", "--out", "g6"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    let g = parse_graph6(out.trim()).unwrap();
    let want = Graph::join(&[&complete(2).unwrap(), &turan(12, 3).unwrap()]).unwrap();
    assert_eq!(g, want);
}

#[test]
fn extremal_report_for_p4() {
    let o = turanlab(&["extremal", "--n", "6", "--forbid", "path:4"]);
    assert_eq!(code(&o), 0);
    let two_triangles = Graph::disjoint_union(&[&complete(3).unwrap(), &complete(3).unwrap()]).unwrap();
    assert_eq!(stdout(&o), format!("6 6 1\n{}\n", certificate(&two_triangles)));
}

#[test]
fn turan_suite_passes() {
    let o = turanlab(&["verify-suite", "turan", "--nmax", "8"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 11);
    assert!(out.lines().all(|l| l.starts_with("PASS turan n=")));
}

#[test]
fn identical_runs_are_byte_identical() {
    let runs: [&[&str]; 5] = [
        &["verify-suite", "observation1", "--cases", "60", "--seed", "5"],
        &["verify-suite", "d-identity", "--seed", "9", "--format", "jsonl"],
        &["extremal", "--n", "9", "--forbid", "clique:4", "--threads", "1"],
        &["symmetry", "gnr(12,2)", "--k", "2", "--format", "jsonl"],
        &["decompose", "--forbid", "cycle:5"],
    ];
    for args in runs {
        let (a, b) = (turanlab(args), turanlab(args));
        assert_eq!(code(&a), 0, "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let one = turanlab(&["extremal", "--n", "9", "--forbid", "clique:4", "--threads", "1"]);
    let many = turanlab(&["extremal", "--n", "9", "--forbid", "clique:4", "--threads", "4"]);
    assert_eq!(one.stdout, many.stdout);
    let s1 = turanlab(&["verify-suite", "observation1", "--cases", "20", "--seed", "1"]);
    let s2 = turanlab(&["verify-suite", "observation1", "--cases", "20", "--seed", "2"]);
    assert_ne!(s1.stdout, s2.stdout);
}

#[test]
fn every_registry_entry_builds_at_its_smallest_parameters() {
    for spec in REGISTRY {
        let params: Vec<String> = spec.smallest.iter().map(usize::to_string).collect();
        let arg = if params.is_empty() {
            format!("family:{}", spec.name)
        } else {
            format!("family:{}({})", spec.name, params.join(","))
        };
        let o = turanlab(&["construct", &arg]);
        assert_eq!(code(&o), 0, "{arg}: {}", String::from_utf8_lossy(&o.stderr));
        let want = parse_named(&arg["family:".len()..]).unwrap().graphs().unwrap();
        let got: Vec<Graph> = stdout(&o).lines().map(|l| parse_graph6(l).unwrap()).collect();
        assert_eq!(got, want.into_iter().map(|(_, g)| g).collect::<Vec<_>>(), "{arg}");
    }
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(code(&turanlab(&["construct", "K(3)", "--bogus"])), 2);
    assert_eq!(code(&turanlab(&["frobnicate"])), 2);
    assert_eq!(code(&turanlab(&["check", "K(3)", "--forbid", "tree:3"])), 2);
    assert_eq!(code(&turanlab(&["construct", "T(3"])), 2);
    // verdicts
    assert_eq!(code(&turanlab(&["check", "T(8,2)", "--forbid", "clique:3"])), 0);
    let o = turanlab(&["check", "K(4)", "--forbid", "clique:3"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains(" contains clique:3 witness="));
    assert_eq!(code(&turanlab(&["check", "T(8,2)", "--forbid", "clique:3", "--edges", "15"])), 1);
    assert_eq!(code(&turanlab(&["check", "T(8,2)", "--forbid", "clique:3", "--edges", "16", "--exhaustive"])), 0);
    assert_eq!(code(&turanlab(&["shape", "C(7)", "--q", "1", "--r", "2", "--t", "1"])), 1);
    assert_eq!(code(&turanlab(&["shape", "join(E(2),T(11,2))", "--q", "3", "--r", "2", "--t", "1"])), 0);
    assert_eq!(code(&turanlab(&["symmetry", "C(6)", "--k", "1"])), 1);
    // undecided once the budget is spent
    let o = Command::new(env!("CARGO_BIN_EXE_turanlab"))
        .args(["symmetry", "T(30,4)", "--k", "2"])
        .env("TURANLAB_BUDGET_MS", "0")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
}

#[test]
fn graph6_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hosts.g6");
    let lines = [turan(6, 2).unwrap().to_graph6(), complete(4).unwrap().to_graph6()];
    std::fs::write(&path, lines.join("\n") + "\n").unwrap();
    let arg = format!("@{}", path.display());
    let o = turanlab(&["check", &arg, "--forbid", "clique:3"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    let verdicts: Vec<&str> = out.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert_eq!(verdicts, ["free", "contains"]);
}

#[test]
fn help_documents_the_pattern_grammar() {
    let out = stdout(&turanlab(&["--help"]));
    for kind in ["path:L", "cycle:L", "clique:K", "g6:STRING", "expr:EXPR", "family:NAME(P,...)"] {
        assert!(out.contains(kind), "{kind}");
    }
}
