mod common;

use common::*;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use quiver_exact::exactlin::{FieldSpec, IntegerMatrix, Matrix};
use quiver_exact::exstruct::{frobenius_structures, ExactStructureSpec};
use quiver_exact::homology::minimal_resolution;
use quiver_exact::k0::{ar_relation_vector, conflation_vector, k0_group, verify_ex_equals_ar};
use quiver_exact::repmod::{Representation, Side};

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Free rank and torsion order of `Z^rows / columns`, from the rank over Q and
/// the gcd of maximal nonzero minors.
fn cokernel_oracle(m: &IntegerMatrix) -> (usize, BigInt) {
    let q = FieldSpec::Rationals;
    let rows: Vec<Vec<_>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| q.from_bigint(m.get(r, c))).collect())
        .collect();
    let rank = if m.cols() == 0 {
        0
    } else {
        Matrix::from_rows(q, rows).rank()
    };
    let mut g = BigInt::zero();
    for rs in subsets(m.rows(), rank) {
        for cs in subsets(m.cols(), rank) {
            let mut sub = IntegerMatrix::zeros(rank, rank);
            for (i, &r) in rs.iter().enumerate() {
                for (j, &c) in cs.iter().enumerate() {
                    sub.set(i, j, m.get(r, c).clone());
                }
            }
            g = g.gcd(&sub.determinant());
        }
    }
    (m.rows() - rank, if rank == 0 { BigInt::one() } else { g })
}

#[test]
fn aus2_relation_is_two_v_minus_u() {
    let tq = quiver("AUS2");
    let (u, v) = (vertex(&tq, "u"), vertex(&tq, "v"));
    let spec = ExactStructureSpec::all(tq.clone());
    let mut want = vec![BigInt::zero(); 2];
    want[u] = BigInt::from(-1);
    want[v] = BigInt::from(2);
    assert_eq!(ar_relation_vector(&spec, 0).unwrap(), want);
    let k0 = k0_group(&spec);
    assert_eq!(
        (k0.free_rank, k0.torsion.len(), k0.describe()),
        (1, 0, "Z".to_string())
    );
}

#[test]
fn group_structure_matches_minor_oracle() {
    let tq = quiver("EX1");
    let mut specs = frobenius_structures(&tq);
    specs.push(ExactStructureSpec::all(tq.clone()));
    for spec in specs {
        let k0 = k0_group(&spec);
        let (free, order) = cokernel_oracle(&k0.ar_matrix);
        assert_eq!(k0.free_rank, free, "{}", spec.label());
        assert_eq!(
            k0.torsion.iter().product::<BigInt>(),
            order,
            "{}",
            spec.label()
        );
        assert!(k0.cross_checked);
    }
    assert_eq!(
        k0_group(&ExactStructureSpec::all(tq.clone())).describe(),
        "Z^4"
    );
}

#[test]
fn doubled_simple_gives_doubled_relation() {
    let tq = quiver("EX1");
    let spec = ExactStructureSpec::all(tq.clone());
    let ab = tq.algebra();
    for (k, arrow) in tq.dotted_arrows.iter().enumerate() {
        let s = Representation::simple(ab.clone(), arrow.source, Side::Right);
        let res = minimal_resolution(&s.direct_sum(&s), 3);
        let v = conflation_vector(tq.vertex_count(), res.tops(2), res.tops(1), res.tops(0));
        let ar: Vec<BigInt> = ar_relation_vector(&spec, k)
            .unwrap()
            .into_iter()
            .map(|x| x * 2)
            .collect();
        assert_eq!(v, ar, "arrow {k}");
    }
}

#[test]
fn split_conflations_vanish_and_samples_pass() {
    assert!(conflation_vector(3, &[0], &[0, 2], &[2])
        .iter()
        .all(Zero::is_zero));
    let tq = quiver("AUS2");
    for spec in frobenius_structures(&tq) {
        assert!(
            verify_ex_equals_ar(&spec, 20, 1).all_passed(),
            "{}",
            spec.label()
        );
    }
}
