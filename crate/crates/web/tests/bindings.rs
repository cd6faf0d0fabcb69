use quiver_exact_cli::{AnalyzeReport, K0Report, ReconstructReport};
use quiver_exact_web::{analyze_text, dot_text, examples, k0_text, reconstruct_text};

fn example(name: &str) -> String {
    let list: Vec<(String, String)> = serde_json::from_str(&examples()).unwrap();
    list.into_iter().find(|(n, _)| n == name).unwrap().1
}

#[test]
fn bundled_examples_analyze() {
    let r: AnalyzeReport = serde_json::from_str(&analyze_text(&example("EX1")).unwrap()).unwrap();
    assert_eq!(r.dotted_arrows.len(), 7);
    assert_eq!(r.frobenius_count, 4);
    let r: AnalyzeReport = serde_json::from_str(&analyze_text(&example("A2")).unwrap()).unwrap();
    assert_eq!(r.structure_count, "1");
}

#[test]
fn selection_by_indices_matches_orbit_names() {
    let text = example("EX1");
    let analysis: AnalyzeReport = serde_json::from_str(&analyze_text(&text).unwrap()).unwrap();
    let a = analysis.frobenius.iter().find(|s| s.label == "A").unwrap();
    let indices: Vec<String> = a.chosen.iter().map(usize::to_string).collect();
    let by_index: ReconstructReport =
        serde_json::from_str(&reconstruct_text(&text, &indices.join(","), false).unwrap()).unwrap();
    let by_name: ReconstructReport =
        serde_json::from_str(&reconstruct_text(&text, "A", false).unwrap()).unwrap();
    assert_eq!(by_index, by_name);
    assert_eq!(by_name.kept.len(), 8);
}

#[test]
fn k0_and_dot() {
    let r: K0Report =
        serde_json::from_str(&k0_text(&example("AUS2"), "A", 10, 3).unwrap()).unwrap();
    assert_eq!(r.group, "Z");
    assert_eq!(r.passed, 10);
    let dot = dot_text(&example("AUS2"), "split").unwrap();
    assert!(!dot.contains("dashed"));
}

#[test]
fn errors_are_reported() {
    assert!(analyze_text("vertex 1\narrow a: 1 -> 2\n").is_err());
    assert!(reconstruct_text(&example("EX1"), "Q", false).is_err());
}
