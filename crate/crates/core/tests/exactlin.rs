use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use quiver_exact::exactlin::{lattice_membership, FieldSpec, IntegerMatrix, Matrix};

fn matrix(field: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Matrix {
    Matrix::from_rows(
        field,
        (0..rows)
            .map(|r| {
                (0..cols)
                    .map(|c| field.from_i64(entries[r * cols + c]))
                    .collect()
            })
            .collect(),
    )
}

fn shaped() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..6, 1usize..6)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-3i64..=3, r * c)))
}

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

/// gcd of all k x k minors.
fn determinantal_divisor(rows: usize, cols: usize, e: &[i64], k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let sub: Vec<i64> = rs
                .iter()
                .flat_map(|&r| cs.iter().map(move |&c| e[r * cols + c]))
                .collect();
            g = g.gcd(&IntegerMatrix::from_i64(k, k, &sub).determinant());
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_nullity_and_kernel((r, c, e) in shaped(), p in prop::sample::select(vec![0u64, 2, 7])) {
        let field = if p == 0 { FieldSpec::Rationals } else { FieldSpec::prime(p).unwrap() };
        let m = matrix(field, r, c, &e);
        let k = m.kernel_basis();
        prop_assert_eq!(m.rank() + k.cols(), c);
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn solve_recovers_a_consistent_system((r, c, e) in shaped(), x in prop::collection::vec(-4i64..=4, 6)) {
        let field = FieldSpec::Rationals;
        let m = matrix(field, r, c, &e);
        let x0 = matrix(field, c, 1, &x[..c]);
        let b = m.mul(&x0);
        let sol = m.solve(&b).expect("consistent");
        prop_assert_eq!(m.mul(&sol), b);
    }

    #[test]
    fn smith_form_matches_determinantal_divisors((r, c, e) in shaped()) {
        let m = IntegerMatrix::from_i64(r, c, &e);
        let snf = m.smith_normal_form();
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.diagonal.clone());
        let mut prev = BigInt::from(1);
        for (k, d) in snf.factors.iter().enumerate() {
            let dk = determinantal_divisor(r, c, &e, k + 1);
            prop_assert_eq!(&prev * d.abs(), dk.clone());
            prev = dk;
        }
        prop_assert!(determinantal_divisor(r, c, &e, snf.factors.len() + 1).is_zero() || snf.factors.len() == r.min(c));
    }

    #[test]
    fn lattice_contains_integer_combinations((r, c, e) in shaped(), w in prop::collection::vec(-3i64..=3, 6)) {
        let m = IntegerMatrix::from_i64(r, c, &e);
        let w: Vec<BigInt> = w[..c].iter().map(|&x| BigInt::from(x)).collect();
        prop_assert!(lattice_membership(&m, &m.mul_vec(&w)));
    }
}

#[test]
fn lattice_rejects_points_off_a_sublattice() {
    let m = IntegerMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
    assert!(!lattice_membership(&m, &[BigInt::from(1), BigInt::from(0)]));
    assert!(lattice_membership(&m, &[BigInt::from(4), BigInt::from(-3)]));
    assert_eq!(
        m.smith_normal_form().factors,
        vec![BigInt::from(1), BigInt::from(6)]
    );
}
