use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// `u * m * v = diag(factors, 0, ...)` with `u`, `v` unimodular and
/// each factor dividing the next.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub factors: Vec<BigInt>,
    pub diagonal: IntegerMatrix,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// `Z^cols / (row lattice)`: free rank and torsion factors greater than one.
    pub fn row_quotient(&self) -> (usize, Vec<BigInt>) {
        (self.diagonal.cols - self.rank(), self.torsion())
    }

    /// `Z^rows / (column lattice)`: free rank and torsion factors greater than one.
    pub fn column_quotient(&self) -> (usize, Vec<BigInt>) {
        (self.diagonal.rows - self.rank(), self.torsion())
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        IntegerMatrix {
            rows,
            cols,
            data: entries.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: BigInt) {
        self.data[r * self.cols + c] = x;
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * rhs.get(k, j);
                    out.data[i * rhs.cols + j] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let val = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, val);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for c in 0..self.cols {
            let delta = factor * self.get(source, c);
            self.data[target * self.cols + c] += delta;
        }
    }

    /// col[target] += factor * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for r in 0..self.rows {
            let delta = factor * self.get(r, source);
            self.data[r * self.cols + target] += delta;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c);
            self.set(r, c, v);
        }
    }

    /// Smith normal form by elimination, always pivoting on the entry of
    /// least absolute value in the active block.
    pub fn smith_normal_form(&self) -> SmithForm {
        let (m, n) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut u = Self::identity(m);
        let mut v = Self::identity(n);
        let mut t = 0;
        while t < m.min(n) {
            let Some((pr, pc)) = a.min_abs_entry(t, t) else {
                break;
            };
            a.swap_rows(t, pr);
            u.swap_rows(t, pr);
            a.swap_cols(t, pc);
            v.swap_cols(t, pc);
            loop {
                let mut clean = true;
                for i in t + 1..m {
                    if a.get(i, t).is_zero() {
                        continue;
                    }
                    let q = -a.get(i, t).div_floor(a.get(t, t));
                    a.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    clean &= a.get(i, t).is_zero();
                }
                for j in t + 1..n {
                    if a.get(t, j).is_zero() {
                        continue;
                    }
                    let q = -a.get(t, j).div_floor(a.get(t, t));
                    a.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                    clean &= a.get(t, j).is_zero();
                }
                if !clean {
                    // a remainder smaller than the pivot sits in row or column t
                    let (pr, pc) = a.min_abs_in_cross(t);
                    a.swap_rows(t, pr);
                    u.swap_rows(t, pr);
                    a.swap_cols(t, pc);
                    v.swap_cols(t, pc);
                    continue;
                }
                let pivot = a.get(t, t).clone();
                let offender =
                    (t + 1..m).find(|&i| (t + 1..n).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
                match offender {
                    Some(i) => {
                        let one = BigInt::one();
                        a.add_row_multiple(t, i, &one);
                        u.add_row_multiple(t, i, &one);
                    }
                    None => break,
                }
            }
            if a.get(t, t).is_negative() {
                a.negate_row(t);
                u.negate_row(t);
            }
            t += 1;
        }
        let factors = (0..m.min(n))
            .map(|i| a.get(i, i).clone())
            .take_while(|d| !d.is_zero())
            .collect();
        SmithForm {
            factors,
            diagonal: a,
            u,
            v,
        }
    }

    fn min_abs_entry(&self, r0: usize, c0: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in r0..self.rows {
            for c in c0..self.cols {
                let x = self.get(r, c);
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(br, bc)| x.abs() < self.get(br, bc).abs()) {
                    best = Some((r, c));
                }
            }
        }
        best
    }

    fn min_abs_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let mut best_abs = self.get(t, t).abs();
        for i in t + 1..self.rows {
            let x = self.get(i, t);
            if !x.is_zero() && x.abs() < best_abs {
                best = (i, t);
                best_abs = x.abs();
            }
        }
        for j in t + 1..self.cols {
            let x = self.get(t, j);
            if !x.is_zero() && x.abs() < best_abs {
                best = (t, j);
                best_abs = x.abs();
            }
        }
        best
    }

    /// Integer coefficients `w` with `self * w = v`, if any exist.
    pub fn solve_integer(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.rows, "vector length must equal row count");
        let snf = self.smith_normal_form();
        let uv = snf.u.mul_vec(v);
        let mut y = vec![BigInt::zero(); self.cols];
        for (i, x) in uv.iter().enumerate() {
            match snf.factors.get(i) {
                Some(d) => {
                    if !x.is_multiple_of(d) {
                        return None;
                    }
                    y[i] = x / d;
                }
                None => {
                    if !x.is_zero() {
                        return None;
                    }
                }
            }
        }
        Some(snf.v.mul_vec(&y))
    }
}

/// Whether `v` is an integer combination of the columns of `basis`.
pub fn lattice_membership(basis: &IntegerMatrix, v: &[BigInt]) -> bool {
    basis.solve_integer(v).is_some()
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_identity() {
        let s = IntegerMatrix::identity(3).smith_normal_form();
        assert_eq!(s.factors, ints(&[1, 1, 1]));
    }

    #[test]
    fn snf_two_by_two() {
        let m = IntegerMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
        let s = m.smith_normal_form();
        assert_eq!(s.factors, ints(&[1, 6]));
        assert_eq!(s.u.mul(&m).mul(&s.v), s.diagonal);
        assert_eq!(s.u.determinant().abs(), BigInt::one());
        assert_eq!(s.v.determinant().abs(), BigInt::one());
    }

    #[test]
    fn snf_empty() {
        let m = IntegerMatrix::zeros(0, 4);
        let s = m.smith_normal_form();
        assert!(s.factors.is_empty());
        assert_eq!(s.row_quotient(), (4, vec![]));
    }

    #[test]
    fn membership_basics() {
        let id = IntegerMatrix::identity(3);
        assert!(lattice_membership(&id, &ints(&[4, -7, 0])));
        let two = IntegerMatrix::from_i64(1, 1, &[2]);
        assert!(!lattice_membership(&two, &ints(&[1])));
        assert!(lattice_membership(&two, &ints(&[-6])));
        let ar = IntegerMatrix::from_i64(2, 1, &[2, -1]);
        assert!(lattice_membership(&ar, &ints(&[2, -1])));
        assert!(!lattice_membership(&ar, &ints(&[1, 0])));
    }

    #[test]
    fn determinant_small() {
        let m = IntegerMatrix::from_i64(3, 3, &[2, 0, 1, 1, 3, 2, 1, 1, 2]);
        assert_eq!(m.determinant(), BigInt::from(6));
        let sing = IntegerMatrix::from_i64(2, 2, &[1, 2, 2, 4]);
        assert_eq!(sing.determinant(), BigInt::zero());
    }
}
