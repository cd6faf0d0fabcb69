mod common;

use std::collections::BTreeSet;

use common::*;
use quiver_exact::exstruct::{
    ar_conflation, enumerate_exact_structures, frobenius_structures, ExactStructureSpec,
};
use quiver_exact::repmod::homology_at;

#[test]
fn every_subset_of_dotted_arrows_is_a_structure() {
    let tq = quiver("EX1");
    let specs: Vec<ExactStructureSpec> = enumerate_exact_structures(&tq).unwrap().collect();
    assert_eq!(specs.len(), 128);
    let mut frobenius = 0;
    for s in &specs {
        let proj: BTreeSet<_> = s.projective_vertices.iter().collect();
        let inj: BTreeSet<_> = s.injective_vertices.iter().collect();
        assert_eq!(s.frobenius, proj == inj, "{}", s.label());
        frobenius += s.frobenius as usize;
    }
    assert_eq!(frobenius, 4);
    assert_eq!(frobenius_structures(&tq).len(), 4);
}

#[test]
fn ar_conflations_are_exact() {
    for name in ["EX1", "AUS2"] {
        let tq = quiver(name);
        let spec = ExactStructureSpec::all(tq.clone());
        let ab = tq.algebra();
        for k in 0..tq.dotted_arrows.len() {
            let c = ar_conflation(&spec, k).unwrap();
            let (f, g) = (c.f.to_module_map(ab), c.g.to_module_map(ab));
            assert!(f.is_injective(), "{name} arrow {k}");
            assert!(f.then(&g).is_zero(), "{name} arrow {k}");
            assert!(homology_at(&f, &g).is_zero(), "{name} arrow {k}");
            let (coker, _) = g.cokernel();
            assert_eq!(
                coker.composition_factors(),
                vec![tq.dotted_arrows[k].source],
                "{name} arrow {k}"
            );
            assert_eq!(c.x, vec![tq.dotted_arrows[k].target]);
        }
    }
}

#[test]
fn projectives_and_injectives_of_the_split_structure() {
    let tq = quiver("EX1");
    let split = ExactStructureSpec::split(tq.clone());
    let everything: Vec<usize> = (0..tq.vertex_count()).collect();
    assert_eq!(split.projective_vertices, everything);
    assert_eq!(split.injective_vertices, everything);
    let all = ExactStructureSpec::all(tq.clone());
    assert_eq!(all.projective_vertices.len(), 4);
}
