mod common;

use common::*;
use quiver_exact::exstruct::{frobenius_structures, parse_dotted_selection};
use quiver_exact::pathalg::{parse_presentation, AlgebraBasis, Element, DEFAULT_DEGREE_CAP};
use quiver_exact::reconstruct::{
    compare_with_presentation, cotilting_module, gp_orthogonality_check,
    iwanaga_gorenstein_dimension, reconstruct_algebra,
};

#[test]
fn reconstructed_relations_vanish_and_dimensions_add_up() {
    let tq = quiver("EX1");
    let ab = tq.algebra();
    for spec in frobenius_structures(&tq) {
        let pres = reconstruct_algebra(&spec, DEFAULT_DEGREE_CAP).unwrap();
        for r in &pres.quiver.relations {
            let mut sum = Element::zero();
            for t in &r.terms {
                sum.add_scaled(&pres.evaluate(&t.word), &t.coeff);
            }
            assert!(sum.is_zero(), "{}: relation does not vanish", spec.label());
        }
        let corner: usize = pres
            .kept
            .iter()
            .flat_map(|&s| pres.kept.iter().map(move |&t| ab.dim_between(s, t)))
            .sum();
        assert_eq!(pres.dim_total, corner, "{}", spec.label());
        let reparsed = AlgebraBasis::compute(
            &parse_presentation(&pres.presentation).unwrap(),
            DEFAULT_DEGREE_CAP,
        )
        .unwrap();
        assert_eq!(reparsed.total_dim(), corner, "{}", spec.label());
    }
}

#[test]
fn aus2_gives_dual_numbers() {
    let tq = quiver("AUS2");
    let pres = reconstruct_algebra(
        &parse_dotted_selection(&tq, "all").unwrap(),
        DEFAULT_DEGREE_CAP,
    )
    .unwrap();
    assert_eq!(pres.kept.len(), 1);
    assert_eq!(pres.dim_total, 2);
    assert_eq!(pres.loewy_length, 2);
    let dual = parse_presentation("vertex u\narrow x: u -> u\nrelation x*x\n").unwrap();
    assert!(compare_with_presentation(&pres, &dual).unwrap().isomorphic);
    let wrong = parse_presentation("vertex u\narrow x: u -> u\nrelation x*x*x\n").unwrap();
    assert!(!compare_with_presentation(&pres, &wrong).unwrap().isomorphic);
}

#[test]
fn table_rows_are_not_interchangeable() {
    let tq = quiver("EX1");
    let a = reconstruct_algebra(
        &parse_dotted_selection(&tq, "A").unwrap(),
        DEFAULT_DEGREE_CAP,
    )
    .unwrap();
    assert!(
        compare_with_presentation(&a, &presentation("TABLE_A"))
            .unwrap()
            .isomorphic
    );
    let b = reconstruct_algebra(
        &parse_dotted_selection(&tq, "B").unwrap(),
        DEFAULT_DEGREE_CAP,
    )
    .unwrap();
    assert!(compare_with_presentation(&a, &presentation("TABLE_B")).is_err());
    assert!(!compare_with_presentation(&b, &presentation("TABLE_AB")).is_ok_and(|r| r.isomorphic));
}

#[test]
fn frobenius_reconstructions_are_gorenstein_with_cotilting_modules() {
    let tq = quiver("EX1");
    for spec in frobenius_structures(&tq) {
        let pres = reconstruct_algebra(&spec, DEFAULT_DEGREE_CAP).unwrap();
        let ig = iwanaga_gorenstein_dimension(&pres, 3, 8).unwrap();
        assert_eq!(ig.verdict().to_string(), "yes(2)", "{}", spec.label());
        let cot = cotilting_module(&spec, &pres, 3, 8).unwrap();
        assert!(cot.rigid, "{}", spec.label());
        let rows = gp_orthogonality_check(&spec, &pres, 3, 8).unwrap();
        assert!(rows.iter().all(|r| r.orthogonal), "{}", spec.label());
    }
}
