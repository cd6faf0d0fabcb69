mod common;

use common::*;
use quiver_exact::homology::{
    global_dimension, minimal_resolution, projective_dimension, DimBound,
};
use quiver_exact::repmod::{hom_space, random_filt_module, Representation, Side};

#[test]
fn aus2_resolutions_by_hand() {
    let ab = algebra("AUS2");
    let p = ab.presentation();
    let (u, v) = (p.vertex_index("u").unwrap(), p.vertex_index("v").unwrap());
    // 0 -> P_v -> P_u -> P_v -> S_v -> 0
    let res = minimal_resolution(&Representation::simple(ab.clone(), v, Side::Right), 5);
    assert_eq!(
        (res.tops(0), res.tops(1), res.tops(2)),
        (&[v][..], &[u][..], &[v][..])
    );
    assert_eq!(res.projective_dimension(), Some(2));
    assert_eq!(
        projective_dimension(&Representation::simple(ab.clone(), u, Side::Right), 5),
        DimBound::Exact(1)
    );
    assert_eq!(global_dimension(&ab, 5), DimBound::Exact(2));
    let ext2 = res.ext_against_algebra(2).unwrap();
    assert_eq!(ext2.composition_factors(), vec![v]);
    assert!(res.ext_against_algebra(0).unwrap().is_zero());
    assert!(res.ext_against_algebra(1).unwrap().is_zero());
}

#[test]
fn global_dimensions() {
    assert_eq!(global_dimension(&algebra("EX1"), 6), DimBound::Exact(2));
    assert_eq!(global_dimension(&algebra("A2"), 6), DimBound::Exact(1));
    assert_eq!(global_dimension(&algebra("SS1"), 6), DimBound::Exact(0));
}

#[test]
fn ext_zero_matches_hom_space() {
    let ab = algebra("EX1");
    let all: Vec<usize> = (0..ab.vertex_count()).collect();
    for seed in 0..12 {
        let m = random_filt_module(&ab, &all, 1 + (seed as usize % 3), seed);
        let res = minimal_resolution(&m, 3);
        for v in 0..ab.vertex_count() {
            let s = Representation::simple(ab.clone(), v, Side::Right);
            assert_eq!(
                res.ext_dim(&s, 0).unwrap(),
                hom_space(&m, &s).len(),
                "seed {seed} vertex {v}"
            );
        }
    }
}

#[test]
fn resolution_alternating_dimension_sum() {
    let ab = algebra("EX1");
    let all: Vec<usize> = (0..ab.vertex_count()).collect();
    for seed in 0..12 {
        let m = random_filt_module(&ab, &all, 3, seed);
        let res = minimal_resolution(&m, 4);
        let pd = res.projective_dimension().expect("finite global dimension");
        let alt: i64 = (0..=pd)
            .map(|k| {
                let d: usize = res.tops(k).iter().map(|&t| ab.words_from(t).len()).sum();
                if k % 2 == 0 {
                    d as i64
                } else {
                    -(d as i64)
                }
            })
            .sum();
        assert_eq!(alt, m.total_dim() as i64, "seed {seed}");
    }
}
