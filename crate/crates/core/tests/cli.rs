use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use wspan::graph::load_graph;

fn wspan(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wspan"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn gen(dir: &Path, name: &str, n: usize, p: f64, seed: u64) -> PathBuf {
    let out = wspan(
        dir,
        &["gen", "--model", "gnp", "--n", &n.to_string(), "--p", &p.to_string(),
          "--wmin", "1", "--wmax", "10", "--seed", &seed.to_string(), "--out", name],
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    dir.join(name)
}

#[test]
fn gen_is_deterministic_and_writes_a_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let a = gen(dir.path(), "a.txt", 100, 0.2, 7);
    let b = gen(dir.path(), "b.txt", 100, 0.2, 7);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let manifest: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("a.txt.manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["command"], "gen");
    assert_eq!(manifest["seed"], 7);
    assert_eq!(manifest["params"]["n"], 100);
    assert_eq!(manifest["outputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = wspan(dir.path(), &["gen", "--n", "0", "--p", "0.5", "--out", "g.txt"]);
    assert_eq!(code(&out), 2);
    gen(dir.path(), "g.txt", 20, 0.3, 1);
    let out = wspan(dir.path(), &["build", "--alg", "6eps-wmax", "--input", "g.txt", "--out", "h.txt"]);
    assert_eq!(code(&out), 2);
    let out = wspan(dir.path(), &["build", "--alg", "2w-subset", "--input", "g.txt", "--out", "h.txt"]);
    assert_eq!(code(&out), 2);
    let out = wspan(dir.path(), &["build", "--alg", "7w", "--input", "g.txt", "--out", "h.txt"]);
    assert_eq!(code(&out), 2);
    let out = wspan(dir.path(), &["frobnicate"]);
    assert_eq!(code(&out), 2);
    assert_eq!(code(&wspan(dir.path(), &["--help"])), 0);
}

#[test]
fn io_and_format_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let out = wspan(dir.path(), &["build", "--alg", "6w", "--input", "missing.txt", "--out", "h.txt"]);
    assert_eq!(code(&out), 3);
    fs::write(dir.path().join("bad.txt"), "3 2\n0 1 1\n1 1 2\n").unwrap();
    let out = wspan(dir.path(), &["build", "--alg", "6w", "--input", "bad.txt", "--out", "h.txt"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("bad.txt:3"));
}

#[test]
fn build_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let g_path = gen(dir.path(), "g.txt", 100, 0.2, 3);
    let out = wspan(
        dir.path(),
        &["build", "--alg", "6w", "--input", "g.txt", "--seed", "1", "--out", "h.txt", "--report", "r.json"],
    );
    assert_eq!(code(&out), 0);
    let g = load_graph(&g_path).unwrap();
    let h = load_graph(dir.path().join("h.txt")).unwrap();
    let embedded = wspan::cli::embed_spanner(&g, &h).unwrap();
    assert_eq!(embedded.len(), h.m());

    let out = wspan(
        dir.path(),
        &["verify", "--graph", "g.txt", "--spanner", "h.txt", "--bound", "6w", "--report", "v.json"],
    );
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("v.json")).unwrap()).unwrap();
    assert_eq!(v["pairs_checked"].as_u64().unwrap(), 100 * 99 / 2);
    assert!(v["violations"].as_array().unwrap().is_empty());
    assert!(v["max_excess_over_w_st"].as_f64().unwrap() <= 6.0);
}

#[test]
fn verify_graph_against_itself() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "g.txt", 40, 0.2, 5);
    let out = wspan(dir.path(), &["verify", "--graph", "g.txt", "--spanner", "g.txt", "--bound", "6w"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("violations=0"));
}

#[test]
fn verify_reports_violations_and_foreign_edges() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("g.txt"), "3 2\n0 1 1\n1 2 1\n").unwrap();
    fs::write(dir.path().join("h.txt"), "3 1\n0 1 1\n").unwrap();
    fs::write(dir.path().join("x.txt"), "3 1\n0 2 1\n").unwrap();
    fs::write(dir.path().join("w.txt"), "3 1\n0 1 2\n").unwrap();
    let out = wspan(dir.path(), &["verify", "--graph", "g.txt", "--spanner", "h.txt", "--bound", "6w"]);
    assert_eq!(code(&out), 1);
    for foreign in ["x.txt", "w.txt"] {
        let out = wspan(dir.path(), &["verify", "--graph", "g.txt", "--spanner", foreign, "--bound", "6w"]);
        assert_eq!(code(&out), 3);
        assert!(String::from_utf8_lossy(&out.stderr).contains("not a subgraph"));
    }
    let out = wspan(dir.path(), &["verify", "--graph", "g.txt", "--spanner", "g.txt", "--bound", "2w-subset"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn subset_build_echoes_resolved_parameters() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "g.txt", 60, 0.2, 9);
    fs::write(dir.path().join("s.txt"), "# hubs\n0\n5\n\n9\n12\n30\n31\n40\n41\n50\n59\n").unwrap();
    let out = wspan(
        dir.path(),
        &["build", "--alg", "2w-subset", "--subset", "s.txt", "--input", "g.txt", "--out", "h.txt", "--report", "r.json"],
    );
    assert_eq!(code(&out), 0);
    let r: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(r["params"]["subset_size"], 10);
    assert_eq!(r["params"]["d"], 4);
    let out = wspan(
        dir.path(),
        &["verify", "--graph", "g.txt", "--spanner", "h.txt", "--bound", "2w-subset", "--subset", "s.txt"],
    );
    assert!(String::from_utf8_lossy(&out.stdout).contains("pairs=45"));
}

#[test]
fn bench_rows_and_repeatability() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, seeds: &str| {
        let out = wspan(
            dir.path(),
            &["bench", "--algs", "6w-fast", "--n", "64", "--p", "0.2", "--seeds", seeds, "--out", name],
        );
        assert_eq!(code(&out), 0);
        fs::read_to_string(dir.path().join(name)).unwrap()
    };
    let one = run("a.csv", "4");
    let lines: Vec<&str> = one.lines().collect();
    assert_eq!(lines[0], "algorithm,n,m,edges,millis,seed");
    assert_eq!(lines.len(), 2);
    let twice = run("b.csv", "4,4");
    let edges: Vec<&str> = twice.lines().skip(1).map(|l| l.split(',').nth(3).unwrap()).collect();
    assert_eq!(edges.len(), 2);
    assert_eq!(edges[0], edges[1]);
    assert_eq!(edges[0], lines[1].split(',').nth(3).unwrap());
}

#[test]
fn replay_reproduces_outputs() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "g.txt", 80, 0.2, 2);
    let out = wspan(
        dir.path(),
        &["build", "--alg", "6eps-wmax", "--epsilon", "0.5", "--input", "g.txt", "--seed", "4", "--out", "h.txt", "--report", "r.json"],
    );
    assert_eq!(code(&out), 0);
    let before = fs::read(dir.path().join("h.txt")).unwrap();
    fs::remove_file(dir.path().join("h.txt")).unwrap();
    // Replay from another directory: paths resolve against the recorded cwd.
    let elsewhere = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("h.txt.manifest.json");
    let out = wspan(elsewhere.path(), &["replay", "--manifest", manifest.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(fs::read(dir.path().join("h.txt")).unwrap(), before);

    // A tampered output hash is reported.
    let mut m: serde_json::Value = serde_json::from_str(&fs::read_to_string(&manifest).unwrap()).unwrap();
    m["outputs"][0]["sha256"] = "00".repeat(32).into();
    fs::write(&manifest, m.to_string()).unwrap();
    let out = wspan(elsewhere.path(), &["replay", "--manifest", manifest.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
}
