use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn clawpack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clawpack"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn color_fig3() {
    let o = clawpack(&["color", path(&fixture("fig3.el"))]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 25);
    assert_eq!(out.lines().last(), Some("VERIFIED"));
}

#[test]
fn color_petersen_reports_claw() {
    let o = clawpack(&["color", path(&fixture("petersen.el"))]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not claw-free: center 0 with leaves [1, 4, 5]"));
}

#[test]
fn malformed_input_is_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.el");
    std::fs::write(&p, "4\n0 1\n1 two\n").unwrap();
    assert_eq!(clawpack(&["color", path(&p)]).status.code(), Some(1));
    let missing = dir.path().join("missing.el");
    assert_eq!(clawpack(&["color", path(&missing)]).status.code(), Some(1));
}

#[test]
fn solve_outcomes() {
    let o = clawpack(&["solve", path(&fixture("petersen.el")), "--spec", "1,1,2,2"]);
    assert_eq!(
        (o.status.code(), stdout(&o)),
        (Some(0), "UNSAT\n".to_string())
    );
    let o = clawpack(&["solve", path(&fixture("k4.el"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("SAT\n"));
    let o = clawpack(&["solve", path(&fixture("k4.el")), "--spec", "1"]);
    assert_eq!(stdout(&o), "UNSAT\n");
    let o = clawpack(&["solve", path(&fixture("fig2.el")), "--cap", "20"]);
    assert_eq!(o.status.code(), Some(3));
    let o = clawpack(&["solve", path(&fixture("k4.el")), "--spec", "2,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reference_and_broken() {
    let g = fixture("fig2.el");
    let c = fixture("fig2.coloring");
    let o = clawpack(&["verify", path(&g), path(&c)]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "OK\n".to_string()));

    let text = std::fs::read_to_string(&c).unwrap();
    let dir = tempfile::tempdir().unwrap();
    // Swap the labels of vertices 1 (1b) and 3 (2a): vertex 1 then shares
    // 2a with its neighbor 0.
    let swapped = text
        .replace("\n1 1b\n", "\n1 2a\n")
        .replace("\n3 2a\n", "\n3 1b\n");
    let p = dir.path().join("swapped.coloring");
    std::fs::write(&p, swapped).unwrap();
    let o = clawpack(&["verify", path(&g), path(&p)]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("class 2a vertices 0 and 1 at distance 1"));

    let partial: String = text.lines().take(10).map(|l| format!("{l}\n")).collect();
    let p = dir.path().join("partial.coloring");
    std::fs::write(&p, partial).unwrap();
    let o = clawpack(&["verify", path(&g), path(&p)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("coloring covers 9 of 34 vertices"));
}

#[test]
fn json_report_round_trips_through_verify() {
    let g = fixture("fig3.el");
    let o = clawpack(&["color", "--json", path(&g)]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["outcome"], "colored");
    assert_eq!(report["verified"], true);
    assert_eq!(report["coloring"].as_array().unwrap().len(), 24);

    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("report.json");
    std::fs::write(&p, &o.stdout).unwrap();
    assert_eq!(
        clawpack(&["verify", path(&g), path(&p)]).status.code(),
        Some(0)
    );
}

#[test]
fn stdin_and_jobs() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_clawpack"))
        .args(["color", "-", "--format", "graph6"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"C~\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("VERIFIED\n"));

    let files: Vec<PathBuf> = ["k4.el", "prism.el", "fig2.el", "fig3.el"]
        .map(fixture)
        .to_vec();
    let mut args = vec!["color", "--jobs", "3"];
    args.extend(files.iter().map(|p| path(p)));
    let o = clawpack(&args);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("VERIFIED").count(), 4);
}

#[test]
fn generate_ring_and_decompose() {
    let o = clawpack(&["generate", "ring", "--k", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("16"));
    assert_eq!(text.lines().count(), 1 + 24);

    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("ring.el");
    assert_eq!(
        clawpack(&["generate", "ring", "--k", "4", "-o", path(&p)])
            .status
            .code(),
        Some(0)
    );
    let o = clawpack(&["decompose", path(&p)]);
    assert!(stdout(&o).contains("ring of 4 diamonds"));

    let o = clawpack(&[
        "generate",
        "bridged",
        "--blocks",
        "t1,diamond,diamond,diamond",
        "--seed",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn decompose_figures() {
    let o = clawpack(&["decompose", path(&fixture("fig2.el"))]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Built: H = 6 vertices (1 double edge), strings: lengths 2,2"));
    let o = clawpack(&["decompose", path(&fixture("fig3.el"))]);
    assert!(stdout(&o).starts_with("bridge tree K_{1,3}; components: K3, TypeIII×3\n"));
}

#[test]
fn generated_graphs_color() {
    let dir = tempfile::tempdir().unwrap();
    for (i, args) in [
        vec![
            "generate",
            "expansion",
            "--n",
            "6",
            "--max-string",
            "2",
            "--seed",
            "3",
        ],
        vec![
            "generate",
            "bridged",
            "--blocks",
            "t1,k3,t1,t2,t1",
            "--seed",
            "9",
        ],
        vec!["generate", "bridged", "--k", "7", "--seed", "4"],
    ]
    .into_iter()
    .enumerate()
    {
        let p = dir.path().join(format!("g{i}.el"));
        let mut a = args.clone();
        a.extend(["-o", path(&p)]);
        assert_eq!(clawpack(&a).status.code(), Some(0));
        assert_eq!(
            clawpack(&["color", path(&p)]).status.code(),
            Some(0),
            "{args:?}"
        );
    }
}
