//! End-to-end tests of the binary: pipelines, exit codes, determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tricanon"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).display().to_string()
}

fn write(dir: &TempDir, name: &str, content: &str) -> String {
    let p = path(dir, name);
    fs::write(&p, content).unwrap();
    p
}

const K4: &str = r#"{"n":4,"rotation":[[1,3,2],[2,3,0],[0,3,1],[2,0,1]],"outer":[0,2,1]}"#;

#[test]
fn validate_exit_codes() {
    let dir = TempDir::new().unwrap();
    let octa = path(&dir, "octa.json");
    let out = run(&["gen", "double-wheel", "--cycle-len", "4", "-o", &octa]);
    assert!(out.status.success());

    let out = run(&["validate", &octa]);
    assert_eq!(out.status.code(), Some(0));
    let diag: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("diagnostics are JSON");
    assert_eq!(diag["four_connected"], true);

    // K4 is a triangulation but not 4-connected
    let k4 = write(&dir, "k4.json", K4);
    let out = run(&["validate", &k4]);
    assert_eq!(out.status.code(), Some(3));

    // a stacked vertex creates a separating triangle: rejected with exit 3
    // and the triangle named in the diagnostics
    let stacked = write(
        &dir,
        "stacked.json",
        r#"{"n":7,"rotation":[[1,4,3,2],[2,5,4,0],[0,3,5,1],[6,5,2,0,4],[5,6,3,0,1],[2,3,6,4,1],[3,4,5]],"outer":[0,2,1]}"#,
    );
    let out = run(&["validate", &stacked]);
    assert_eq!(out.status.code(), Some(3));
    let diag: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(diag["separating_triangle"], serde_json::json!([3, 4, 5]));

    // asymmetric adjacency is a parse-level rejection
    let bad_graph = write(
        &dir,
        "bad_graph.json",
        r#"{"n":2,"rotation":[[1],[]],"outer":[0,1]}"#,
    );
    let out = run(&["validate", &bad_graph]);
    assert_eq!(out.status.code(), Some(1));

    // malformed JSON is an I/O-class error
    let broken = write(&dir, "broken.json", "{not json");
    let out = run(&["validate", &broken]);
    assert_eq!(out.status.code(), Some(1));

    // missing file
    let out = run(&["validate", "does-not-exist.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn order_pipeline_is_closed_for_rd_and_ri() {
    let dir = TempDir::new().unwrap();
    for (name, gen_args) in [
        ("octa", vec!["gen", "double-wheel", "--cycle-len", "4"]),
        ("wheel6", vec!["gen", "double-wheel", "--cycle-len", "6"]),
        ("rand20", vec!["gen", "random", "--n", "20", "--seed", "11"]),
    ] {
        let g = path(&dir, &format!("{name}.json"));
        let mut args = gen_args.clone();
        args.extend(["-o", &g]);
        assert!(run(&args).status.success(), "{name}: gen failed");

        let o = path(&dir, &format!("{name}_order.json"));
        assert!(run(&["order", &g, "-o", &o]).status.success());
        let ord = path(&dir, &format!("{name}_check_order"));
        drop(ord);
        assert_eq!(run(&["check-order", &g, &o]).status.code(), Some(0));

        let l = path(&dir, &format!("{name}_rd.json"));
        assert!(run(&["rd", &g, "--ordering", &o, "-o", &l])
            .status
            .success());
        assert_eq!(run(&["check-rd", &g, &l]).status.code(), Some(0));

        let p = path(&dir, &format!("{name}_ri.json"));
        assert!(run(&["ri", &g, "--ordering", &o, "-o", &p])
            .status
            .success());
        assert_eq!(run(&["check-ri", &g, &p]).status.code(), Some(0));
    }
}

#[test]
fn ordering_output_matches_golden_cells() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "octa.json");
    assert!(run(&["gen", "double-wheel", "--cycle-len", "4", "-o", &g])
        .status
        .success());
    let out = run(&["order", &g]);
    assert!(out.status.success());
    let o: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let cells = o["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 3);
    assert_eq!(cells[0]["kind"], "base");
    assert_eq!(cells[1]["kind"], "fan");
    assert_eq!(cells[1]["vertices"].as_array().unwrap().len(), 2);
    assert_eq!(cells[2]["kind"], "top");
}

#[test]
fn check_commands_fail_with_exit_2() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g.json");
    assert!(run(&["gen", "double-wheel", "--cycle-len", "5", "-o", &g])
        .status
        .success());
    let p = path(&dir, "ri.json");
    assert!(run(&["ri", &g, "-o", &p]).status.success());

    // collapse one vertex onto another: duplicate points must be rejected
    let drawing: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&p).unwrap()).unwrap();
    let mut points = drawing["points"].as_object().unwrap().clone();
    let stolen = points["0"].clone();
    points.insert("2".into(), stolen);
    let bad = write(
        &dir,
        "ri_bad.json",
        &serde_json::json!({ "points": points }).to_string(),
    );
    let out = run(&["check-ri", &g, &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));

    // pass/fail mix over multiple pairs, in parallel
    let out = run(&["check-ri", &g, &p, &g, &bad, "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS") && text.contains("FAIL"));

    // odd number of files is a usage error
    let out = run(&["check-ri", &g, &p, &g]);
    assert_eq!(out.status.code(), Some(1));

    // layout with a hole: shrink a rectangle
    let l = path(&dir, "rd.json");
    assert!(run(&["rd", &g, "-o", &l]).status.success());
    let layout = fs::read_to_string(&l).unwrap();
    let shrunk = layout.replacen("[\"3\",\"1\"]", "[\"5\",\"2\"]", 1);
    assert_ne!(layout, shrunk);
    let bad_l = write(&dir, "rd_bad.json", &shrunk);
    let out = run(&["check-rd", &g, &bad_l]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn svg_emission() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g.json");
    assert!(
        run(&["gen", "random", "--n", "16", "--seed", "5", "-o", &g])
            .status
            .success()
    );
    let l = path(&dir, "rd.json");
    let svg_rd = path(&dir, "rd.svg");
    assert!(run(&["rd", &g, "-o", &l, "--svg", &svg_rd])
        .status
        .success());
    let svg = fs::read_to_string(&svg_rd).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<rect").count(), 16);

    let p = path(&dir, "ri.json");
    let svg_ri = path(&dir, "ri.svg");
    assert!(run(&["ri", &g, "-o", &p, "--svg", &svg_ri, "--rects"])
        .status
        .success());
    let svg = fs::read_to_string(&svg_ri).unwrap();
    assert!(svg.contains("<circle") && svg.contains("<line") && svg.contains("dasharray"));
}

#[test]
fn outputs_are_byte_deterministic() {
    let dir = TempDir::new().unwrap();
    let mut bytes: Vec<Vec<u8>> = Vec::new();
    for round in 0..2 {
        let g = path(&dir, &format!("g{round}.json"));
        assert!(
            run(&["gen", "random", "--n", "24", "--seed", "9", "-o", &g])
                .status
                .success()
        );
        let o = path(&dir, &format!("o{round}.json"));
        let l = path(&dir, &format!("l{round}.json"));
        let p = path(&dir, &format!("p{round}.json"));
        assert!(run(&["order", &g, "-o", &o]).status.success());
        assert!(run(&["rd", &g, "--ordering", &o, "-o", &l])
            .status
            .success());
        assert!(run(&["ri", &g, "--ordering", &o, "-o", &p])
            .status
            .success());
        let mut blob = fs::read(&g).unwrap();
        blob.extend(fs::read(&o).unwrap());
        blob.extend(fs::read(&l).unwrap());
        blob.extend(fs::read(&p).unwrap());
        bytes.push(blob);
    }
    assert_eq!(bytes[0], bytes[1]);
}

#[test]
fn json_errors_flag_emits_machine_readable_diagnostics() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4.json", K4);
    let out = bin()
        .args(["--json-errors", "order", &k4])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    // last stdout line is the JSON error payload
    let text = String::from_utf8_lossy(&out.stdout);
    let line = text.lines().last().unwrap();
    let v: serde_json::Value = serde_json::from_str(line).expect("JSON payload");
    assert_eq!(v["error"]["exit"], 3);
}

#[test]
fn gen_corpus_writes_valid_files() {
    let dir = TempDir::new().unwrap();
    let out_dir = path(&dir, "corpus");
    let out = run(&[
        "gen",
        "corpus",
        "--min",
        "6",
        "--max",
        "12",
        "--count",
        "5",
        "--seed",
        "1",
        "--output-dir",
        &out_dir,
    ]);
    assert!(out.status.success());
    let mut files: Vec<_> = fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert_eq!(files.len(), 5);
    for f in files {
        let out = run(&["validate", f.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{f:?} failed validation");
    }
}

#[test]
fn rd_rejects_foreign_ordering() {
    let dir = TempDir::new().unwrap();
    let g1 = path(&dir, "g1.json");
    let g2 = path(&dir, "g2.json");
    assert!(run(&["gen", "double-wheel", "--cycle-len", "4", "-o", &g1])
        .status
        .success());
    assert!(run(&["gen", "double-wheel", "--cycle-len", "7", "-o", &g2])
        .status
        .success());
    let o1 = path(&dir, "o1.json");
    assert!(run(&["order", &g1, "-o", &o1]).status.success());
    // an ordering for another graph is rejected before building
    let out = run(&["rd", &g2, "--ordering", &o1]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn check_order_detects_semantic_violations() {
    let dir = TempDir::new().unwrap();
    let g = path(&dir, "g.json");
    assert!(run(&["gen", "double-wheel", "--cycle-len", "4", "-o", &g])
        .status
        .success());
    // swap top and a fan vertex: V_L is no longer u3
    let bad = write(
        &dir,
        "bad_order.json",
        r#"{"cells":[{"kind":"base","vertices":[0,1,5]},{"kind":"fan","vertices":[3,4],"apex":5},{"kind":"top","vertex":2}]}"#,
    );
    let out = run(&["check-order", &g, &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL"));
}

#[test]
fn validate_is_quiet_about_the_graph_on_parse_errors() {
    // usage error: unknown subcommand exits nonzero via clap (code 2 from
    // clap is fine for usage; we only pin our own codes elsewhere)
    let out = run(&["frobnicate"]);
    assert!(!out.status.success());
    assert!(Path::new(env!("CARGO_BIN_EXE_tricanon")).exists());
}
