use std::process::{Command, Output};

fn convexity(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_convexity"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

// The A-graph: a=0, b=1, u1=2, u2=3, u3=4, u4=5.
const A_GRAPH: &str = "EPDg";

#[test]
fn interval_kinds() {
    let o = convexity(&["interval", "--graph", A_GRAPH, "--kind", "m", "--vertices", "0,1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "0,1,2,5\n");
    let o = convexity(&["interval", "--graph", A_GRAPH, "--kind", "g", "--vertices", "2,4"]);
    assert_eq!(stdout(&o), "2,3,4,5\n");
    let o = convexity(&["interval", "--graph", A_GRAPH, "--kind", "mset", "--vertices", "0,1,3"]);
    assert!(o.status.success());
    let o = convexity(&["interval", "--graph", A_GRAPH, "--kind", "steiner", "--vertices", "0,1,3"]);
    assert_eq!(stdout(&o), "0,1,2,3,5\n");
}

#[test]
fn edge_list_files_and_hulls() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    std::fs::write(&path, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let p = path.to_str().unwrap();
    let o = convexity(&["hull", "--graph", p, "--kind", "m", "--set", "0,3"]);
    assert_eq!(stdout(&o), "0,1,2,3\n");
    let o = convexity(&["hull", "--graph", p, "--kind", "m3", "--set", "0,2"]);
    assert_eq!(stdout(&o), "0,2\n");
    let o = convexity(&["hull", "--graph", p, "--kind", "gk:3", "--set", "0,1,3"]);
    assert_eq!(stdout(&o), "0,1,2,3\n");
}

#[test]
fn analyze_profile() {
    let o = convexity(&["analyze", "--graph", A_GRAPH]);
    let text = stdout(&o);
    assert!(text.contains("hhd_free: true"));
    assert!(text.contains("a_free: false"));
    assert!(text.contains("geometry m33: false"));
    assert_eq!(text.lines().filter(|l| l.starts_with("geometry ")).count(), 6);
}

#[test]
fn catalog_emits_every_member() {
    let o = convexity(&["catalog", "--emit-g6"]);
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split('\t').collect()).collect();
    assert!(rows.iter().all(|r| r.len() == 3));
    assert_eq!(rows.iter().filter(|r| r[0] == "R_C4").count(), 4);
    assert!(rows.iter().any(|r| r[0] == "A" && r[2] == A_GRAPH));
    let names: Vec<&str> = rows.iter().map(|r| r[0]).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

#[test]
fn scan_reports_are_identical_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for jobs in ["1", "4"] {
        let json = dir.path().join(format!("r{jobs}.json"));
        let csv = dir.path().join(format!("r{jobs}.csv"));
        let o = convexity(&[
            "scan",
            "--n",
            "1..6",
            "--checks",
            "all",
            "--jobs",
            jobs,
            "--out",
            json.to_str().unwrap(),
            "--csv",
            csv.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        reports.push((std::fs::read(&json).unwrap(), std::fs::read(&csv).unwrap()));
    }
    assert_eq!(reports[0], reports[1]);
    let value: serde_json::Value = serde_json::from_slice(&reports[0].0).unwrap();
    assert_eq!(value["results"].as_array().unwrap().len(), 1 + 1 + 2 + 6 + 21 + 112);
    assert_eq!(value["summary"]["theorem3"]["fail"], 0);
    assert_eq!(value["meta"]["corpus"]["source"], "enumerated");
}

#[test]
fn scan_reads_graph6_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.g6");
    std::fs::write(&path, format!("{A_GRAPH}\nDhc\n")).unwrap();
    let o = convexity(&["scan", "--graph6-file", path.to_str().unwrap(), "--checks", "lemma6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("lemma6: pass=1 fail=0 skipped=1"));
}

#[test]
fn errors_use_exit_code_2() {
    let o = convexity(&["scan", "--n", "3", "--checks", "theorem9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("known checks"));
    let o = convexity(&["scan", "--n", "9..9", "--checks", "theorem3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = convexity(&["interval", "--graph", "B", "--kind", "m", "--vertices", "0,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte"));
    let o = convexity(&["hull", "--graph", "Cl", "--kind", "gk:1", "--set", "0"]);
    assert_eq!(o.status.code(), Some(2));
}
