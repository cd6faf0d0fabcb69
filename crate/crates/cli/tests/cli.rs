use std::path::PathBuf;
use std::process::{Command, Output};

use quiver_exact_cli::{Payload, Report};

fn fixture(name: &str) -> String {
    format!(
        "{}/../../fixtures/{name}.quiver",
        env!("CARGO_MANIFEST_DIR")
    )
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quiver-exact"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("quiver-exact-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn analyze_summaries() {
    let cases = [
        (
            "EX1",
            "7 dotted arrows; 128 exact structures; stable orbits: A, B; 4 Frobenius",
        ),
        ("A2", "0 dotted arrows; 1 exact structure (split)"),
        (
            "AUS2",
            "1 dotted arrow (self-loop at v); 2 exact structures; stable orbits: A; 2 Frobenius",
        ),
        ("SS1", "0 dotted arrows; 1 exact structure (split)"),
    ];
    for (f, want) in cases {
        let o = run(&["analyze", &fixture(f), "--count-only"]);
        assert!(o.status.success(), "{f}");
        assert_eq!(stdout(&o).trim(), want, "{f}");
    }
}

#[test]
fn analyze_json_round_trips() {
    let o = run(&["analyze", &fixture("EX1"), "--json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let report: Report = serde_json::from_str(&text).unwrap();
    let again: Report = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(report, again);
    let Payload::Analyze(a) = &report.payload else {
        panic!("analyze payload")
    };
    assert_eq!(a.structure_count, "128");
    assert_eq!(a.structures.as_ref().map(Vec::len), Some(128));
    assert_eq!(a.frobenius_count, 4);
    assert_eq!(a.global_dimension, "2");
    assert_eq!(report.field, "Q");
}

#[test]
fn json_is_stable_across_runs() {
    let args = [
        "k0",
        &fixture("AUS2"),
        "--dotted",
        "0",
        "--json",
        "--seed",
        "5",
    ];
    assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
}

#[test]
fn reconstruct_split_echoes_the_quiver() {
    let o = run(&["reconstruct", &fixture("EX1")]);
    assert!(o.status.success());
    let out = quiver_exact::pathalg::parse_presentation(&stdout(&o)).unwrap();
    let input = quiver_exact::pathalg::parse_presentation(
        &std::fs::read_to_string(fixture("EX1")).unwrap(),
    )
    .unwrap();
    assert_eq!(out.vertices, input.vertices);
    let ends = |p: &quiver_exact::pathalg::QuiverPresentation| {
        let mut v: Vec<_> = p.arrows.iter().map(|a| (a.source, a.target)).collect();
        v.sort();
        v
    };
    assert_eq!(ends(&out), ends(&input));
}

#[test]
fn reconstruct_aus2_with_ig() {
    let o = run(&[
        "reconstruct",
        &fixture("AUS2"),
        "--dotted",
        "0",
        "--verify-ig",
        "--json",
    ]);
    assert!(o.status.success());
    let report: Report = serde_json::from_str(&stdout(&o)).unwrap();
    let Payload::Reconstruct(r) = report.payload else {
        panic!("reconstruct payload")
    };
    assert_eq!(r.kept, vec!["u"]);
    assert_eq!(r.dim, 2);
    let ig = r.ig.unwrap();
    assert_eq!((ig.right.as_str(), ig.left.as_str()), ("yes(0)", "yes(0)"));
    assert!(ig.cotilting_rigid && ig.cotilting_is_regular && ig.gp_orthogonal);
}

#[test]
fn k0_outputs() {
    let o = run(&["k0", &fixture("AUS2"), "--dotted", "0"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("K0 = Z; 50/50 Ex=AR samples pass"));
    let o = run(&["k0", &fixture("EX1")]);
    assert!(stdout(&o).starts_with("K0 = Z^11;"));
}

#[test]
fn dot_counts_and_determinism() {
    let args = ["dot", &fixture("EX1"), "--dotted", "all"];
    let a = stdout(&run(&args));
    assert_eq!(a, stdout(&run(&args)));
    assert_eq!(a.lines().filter(|l| l.contains("style=solid")).count(), 16);
    assert_eq!(a.lines().filter(|l| l.contains("style=dashed")).count(), 7);
    let nodes = a.lines().filter(|l| {
        l.trim_end().ends_with(';') && !l.contains("->") && l.trim_start().starts_with('"')
    });
    assert_eq!(nodes.count(), 11);

    let aus = stdout(&run(&["dot", &fixture("AUS2")]));
    assert_eq!(aus.lines().filter(|l| l.contains("style=solid")).count(), 2);
    assert!(aus.contains("\"v\" -> \"v\" [style=dashed"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(
        run(&["reconstruct", &fixture("EX1"), "--dotted", "Z"])
            .status
            .code(),
        Some(1)
    );
    let bad = scratch_file("bad.quiver", "field Q\nvertex 1\narrow a 1 -> 1\n");
    assert_eq!(
        run(&["analyze", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let infinite = scratch_file("loop.quiver", "field Q\nvertex 1\narrow x: 1 -> 1\n");
    assert_eq!(
        run(&["analyze", infinite.to_str().unwrap()]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["analyze", "/nonexistent/file.quiver"]).status.code(),
        Some(2)
    );
}

#[test]
fn field_override() {
    let o = run(&["analyze", &fixture("EX1"), "--count-only", "--field", "F7"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("7 dotted arrows; 128 exact structures"));
    assert_eq!(
        run(&["analyze", &fixture("EX1"), "--field", "8"])
            .status
            .code(),
        Some(1)
    );
}
