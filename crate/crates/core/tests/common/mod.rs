#![allow(dead_code)]

use std::sync::Arc;

use quiver_exact::exstruct::TranslationQuiver;
use quiver_exact::pathalg::{
    parse_presentation, AlgebraBasis, QuiverPresentation, VertexId, DEFAULT_DEGREE_CAP,
};

pub const FIXTURES: [&str; 7] = ["EX1", "AUS2", "A2", "SS1", "TABLE_AB", "TABLE_A", "TABLE_B"];

pub fn presentation(name: &str) -> QuiverPresentation {
    let path = format!(
        "{}/../../fixtures/{name}.quiver",
        env!("CARGO_MANIFEST_DIR")
    );
    parse_presentation(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

pub fn algebra(name: &str) -> Arc<AlgebraBasis> {
    AlgebraBasis::compute(&presentation(name), DEFAULT_DEGREE_CAP).unwrap()
}

pub fn quiver(name: &str) -> Arc<TranslationQuiver> {
    Arc::new(TranslationQuiver::compute(&algebra(name), 20))
}

pub fn vertex(tq: &TranslationQuiver, name: &str) -> VertexId {
    tq.vertex_names.iter().position(|v| v == name).unwrap()
}

pub fn names(tq: &TranslationQuiver, vs: &[VertexId]) -> Vec<String> {
    vs.iter().map(|&v| tq.vertex_names[v].clone()).collect()
}

pub fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}
