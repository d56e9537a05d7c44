use std::path::Path;
use std::process::{Command, Output};

fn shufflenet(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shufflenet"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

/// The check that each family is built to pass.
fn matching_checks(family: &str) -> &'static [&'static str] {
    match family {
        "u2" => &["pair:1,2"],
        "hypercube" | "strong1" => &["strong1"],
        "reach2" => &["reach"],
        "division" => &["division", "strong1"],
        "strong2" => &["strong2"],
        _ => unreachable!(),
    }
}

#[test]
fn build_then_verify_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&str, &[u32])] = &[
        ("u2", &[2, 3, 7, 16, 64]),
        ("hypercube", &[2, 8, 32]),
        ("strong1", &[1, 5, 12, 64]),
        ("reach2", &[2, 9, 40, 64]),
        ("division", &[2, 6, 10, 24]),
        ("strong2", &[2, 3, 11, 16]),
    ];
    for &(family, sizes) in cases {
        for &n in sizes {
            let file = format!("{family}_{n}.json");
            let out = shufflenet(dir.path(), &["build", family, "--n", &n.to_string(), "--out", &file]);
            assert!(out.status.success(), "{family} {n}: {}", String::from_utf8_lossy(&out.stderr));
            let summary = json(&out);
            assert_eq!(summary["n"], n);
            for check in matching_checks(family) {
                let out = shufflenet(dir.path(), &["verify", check, &file]);
                assert_eq!(out.status.code(), Some(0), "{family} {n} {check}");
                assert_eq!(json(&out)["pass"], true);
            }
        }
    }
}

#[test]
fn placement_is_not_pair_uniform() {
    let dir = tempfile::tempdir().unwrap();
    shufflenet(dir.path(), &["build", "placement", "--n", "5", "--out", "p.json"]);
    let out = shufflenet(dir.path(), &["verify", "pair:1,2", "p.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["pass"], false);
}

#[test]
fn failing_check_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    shufflenet(dir.path(), &["build", "hypercube", "--n", "4"]);
    let out = shufflenet(dir.path(), &["verify", "division", "hypercube_4.shuffle.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stderr.is_empty() || !String::from_utf8_lossy(&out.stderr).contains('{'));
}

#[test]
fn usage_and_io_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["build", "division", "--n", "3"],
        &["build", "nonsense", "--n", "3"],
        &["verify", "strong1", "missing.json"],
        &["verify", "bogus", "missing.json"],
        &["search", "--n", "9"],
        &["table", "--max-n", "65"],
        &["--no-such-flag"],
    ];
    for args in cases {
        let out = shufflenet(dir.path(), args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    let out = shufflenet(dir.path(), &["build", "division", "--n", "3"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("requires even n"));
}

#[test]
fn build_reports_length_and_bound() {
    let dir = tempfile::tempdir().unwrap();
    let s = json(&shufflenet(dir.path(), &["build", "strong1", "--n", "8"]));
    assert_eq!(s["length"], 12);
    let s = json(&shufflenet(dir.path(), &["build", "u2", "--n", "10"]));
    assert_eq!((s["length"].clone(), s["paper_bound"].clone()), (17.into(), 17.into()));
    assert!(dir.path().join("u2_10.shuffle.json").exists());
}

#[test]
fn certificates_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    shufflenet(d, &["build", "u2", "--n", "8"]);
    let t = json(&shufflenet(d, &["certify", "rank", "u2_8.shuffle.json"]));
    assert_eq!(t["endpoints"]["initial"], 3);
    assert_eq!(t["endpoints"]["final"], 16);
    assert_eq!(t["implied_lower_bound"], 13);

    shufflenet(d, &["build", "hypercube", "--n", "8"]);
    let t = json(&shufflenet(d, &["certify", "transversal", "hypercube_8.shuffle.json"]));
    assert_eq!(t["implied_lower_bound"], 12);

    shufflenet(d, &["build", "reach2", "--n", "4"]);
    let t = json(&shufflenet(d, &["certify", "clique", "reach2_4.reach.json"]));
    assert_eq!(t["endpoints"]["initial"], 2.0);
    assert_eq!(t["endpoints"]["final"], 6.0);
    assert_eq!(t["implied_lower_bound"], 4);

    shufflenet(d, &["build", "division", "--n", "8"]);
    let out = shufflenet(d, &["certify", "rank", "division_8.shuffle.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rational"));
}

#[test]
fn search_and_table() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let r = json(&shufflenet(d, &["search", "--n", "6"]));
    assert_eq!(r["verdict"], "minimal");
    assert_eq!(r["target_length"], 7);
    let r = json(&shufflenet(d, &["--jobs", "2", "search", "--n", "4", "--length", "4"]));
    assert_eq!(r["outcome"]["kind"], "found");
    let out = shufflenet(d, &["search", "--n", "6", "--length", "6", "--max-nodes", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["outcome"]["kind"], "inconclusive");

    let out = shufflenet(d, &["table", "--max-n", "16", "--out", "t.csv"]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(d.join("t.csv")).unwrap();
    assert_eq!(csv.as_bytes(), out.stdout.as_slice());
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows[0], "family,n,length,paper_bound,verdict");
    assert!(rows.contains(&"u2,16,29,29,pass"));
    assert!(rows.iter().skip(1).all(|r| r.ends_with(",pass")));
    let families: std::collections::BTreeSet<&str> =
        rows.iter().skip(1).map(|r| r.split(',').next().unwrap()).collect();
    assert_eq!(families.len(), 5);
}
