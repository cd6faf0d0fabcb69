mod common;

use common::*;
use quiver_exact::pathalg::{
    cross_check, parse_presentation, AlgebraBasis, QuiverPresentation, DEFAULT_DEGREE_CAP,
};

/// Paths avoiding every zero-relation word; exact for monomial presentations.
fn monomial_dim(p: &QuiverPresentation) -> usize {
    let zero: Vec<&Vec<usize>> = p.relations.iter().map(|r| &r.terms[0].word).collect();
    let dead = |w: &[usize]| {
        zero.iter()
            .any(|z| w.windows(z.len()).any(|s| s == z.as_slice()))
    };
    let mut layer: Vec<Vec<usize>> = (0..p.arrows.len()).map(|a| vec![a]).collect();
    let mut total = p.vertex_count();
    while !layer.is_empty() {
        layer.retain(|w| !dead(w));
        total += layer.len();
        layer = layer
            .iter()
            .flat_map(|w| {
                let t = p.arrows[*w.last().unwrap()].target;
                p.arrows
                    .iter()
                    .enumerate()
                    .filter(move |(_, a)| a.source == t)
                    .map(move |(b, _)| {
                        let mut w2 = w.clone();
                        w2.push(b);
                        w2
                    })
            })
            .collect();
    }
    total
}

#[test]
fn groebner_dimensions_agree_with_path_space_oracle() {
    for name in FIXTURES {
        let ab = algebra(name);
        cross_check(&ab, DEFAULT_DEGREE_CAP).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn monomial_fixtures_match_path_count() {
    for name in ["AUS2", "A2", "SS1"] {
        let p = presentation(name);
        assert_eq!(algebra(name).total_dim(), monomial_dim(&p), "{name}");
    }
    assert_eq!(algebra("AUS2").total_dim(), 5);
}

#[test]
fn relations_of_mixed_length_keep_long_cycles() {
    // a*b equals the longer c*d*e
    let src = "vertex 1 2 3 4 5\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 1 -> 4\narrow d: 4 -> 5\narrow e: 5 -> 3\nrelation a*b - c*d*e\n";
    let ab = AlgebraBasis::compute(&parse_presentation(src).unwrap(), DEFAULT_DEGREE_CAP).unwrap();
    assert_eq!(ab.total_dim(), 5 + 5 + 3);
    cross_check(&ab, DEFAULT_DEGREE_CAP).unwrap();
    assert_eq!(algebra("TABLE_A").total_dim(), 36);
}

#[test]
fn example_algebra_dimensions() {
    let ab = algebra("EX1");
    assert_eq!(ab.vertex_count(), 11);
    assert_eq!(ab.total_dim(), 74);
    let opp = ab.opposite(DEFAULT_DEGREE_CAP).unwrap();
    assert_eq!(opp.total_dim(), 74);
    for s in 0..11 {
        for t in 0..11 {
            assert_eq!(ab.dim_between(s, t), opp.dim_between(t, s));
        }
    }
}
