use std::process::{Command, Output};

use gf3lie_cli::format::{basis_lines, constant_lines};
use gf3lie_cli::report::{from_json, to_json, Status};

fn gf3lie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gf3lie")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_counts() {
    let witt = stdout(&gf3lie(&["build", "witt", "--n", "1"]));
    assert_eq!((basis_lines(&witt), constant_lines(&witt)), (3, 6));
    let frank = stdout(&gf3lie(&["build", "frank", "--n", "1"]));
    assert_eq!(basis_lines(&frank), 18);
    let o = stdout(&gf3lie(&["build", "o", "--n", "1"]));
    assert_eq!(constant_lines(&o), 6);
    let k = stdout(&gf3lie(&["build", "contact-k", "--n", "1"]));
    assert!(k.lines().any(|l| l.contains("parity=1")));
    let x = stdout(&gf3lie(&["build", "jternary", "--n", "1"]));
    assert!(x.lines().any(|l| l.starts_with('<')));
}

#[test]
fn build_is_commutative_for_o() {
    let o = stdout(&gf3lie(&["build", "o", "--n", "2"]));
    let pairs: Vec<(String, String, String)> = o
        .lines()
        .filter_map(|l| l.strip_prefix('['))
        .map(|l| {
            let (lhs, rhs) = l.split_once("] = ").unwrap();
            let (a, b) = lhs.split_once(", ").unwrap();
            (a.to_string(), b.to_string(), rhs.to_string())
        })
        .collect();
    for (a, b, r) in &pairs {
        assert!(pairs.contains(&(b.clone(), a.clone(), r.clone())));
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(gf3lie(&["build", "witt", "--n", "4"]).status.code(), Some(2));
    assert_eq!(gf3lie(&["verify", "no-such-claim", "--n", "1"]).status.code(), Some(2));
    assert_eq!(gf3lie(&[]).status.code(), Some(2));
    assert_eq!(gf3lie(&["report", "--n", "1", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn verify_passes_with_zero_exit() {
    for claim in ["lemma-contact-iso", "prop-frank-semisimplification", "witt-simple"] {
        let o = gf3lie(&["verify", claim, "--n", "1"]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    let o = gf3lie(&["verify", "hein-counterexample", "--n", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let reports = from_json(&stdout(&o)).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].status, Status::Pass);
    assert!(reports[0].witness.as_ref().unwrap().note.contains("trivial left and right radical"));
}

#[test]
fn json_report_round_trips() {
    let o = gf3lie(&["report", "--n", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let reports = from_json(&text).unwrap();
    assert_eq!(to_json(&reports), text);
    let ids: Vec<&str> = reports.iter().map(|r| r.claim_id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    assert!(reports.iter().all(|r| r.seed == 0 && r.n == 1));
}

#[test]
fn list_claims_and_out_file() {
    let list = stdout(&gf3lie(&["--list-claims"]));
    assert_eq!(list.lines().count(), 12);
    assert!(list.contains("hein-counterexample"));

    let path = std::env::temp_dir().join(format!("gf3lie-cli-test-{}.txt", std::process::id()));
    let o = gf3lie(&["build", "witt", "--n", "1", "--out", path.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(basis_lines(&written), 3);
}

#[test]
fn seed_is_echoed() {
    let o = gf3lie(&["verify", "representative-independence", "--n", "1", "--seed", "17", "--format", "json"]);
    let reports = from_json(&stdout(&o)).unwrap();
    assert_eq!(reports[0].seed, 17);
}
