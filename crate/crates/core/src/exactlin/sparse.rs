use std::collections::BTreeMap;

use super::field::Scalar;

/// A sparse vector indexed by an ordered key type.
pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// Incrementally maintained echelon basis of a subspace spanned by sparse
/// vectors. The pivot of each stored row is its largest key, so reduction
/// against the basis only ever introduces smaller keys.
#[derive(Clone, Debug)]
pub struct SparseEchelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for SparseEchelon<K> {
    fn default() -> Self {
        SparseEchelon {
            rows: BTreeMap::new(),
        }
    }
}

pub fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, scale: &Scalar, x: &SparseVec<K>) {
    for (k, v) in x {
        let delta = scale * v;
        match target.get_mut(k) {
            Some(slot) => {
                *slot += &delta;
                if slot.is_zero() {
                    target.remove(k);
                }
            }
            None => {
                if !delta.is_zero() {
                    target.insert(k.clone(), delta);
                }
            }
        }
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Reduces `v` against the basis; the result has no pivot keys.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        let mut done = SparseVec::new();
        while let Some((k, c)) = v.pop_last() {
            match self.rows.get(&k) {
                Some(row) => {
                    // row is monic at k; subtract c * row without its pivot
                    let neg = -&c;
                    for (rk, rv) in row.range(..k.clone()) {
                        let delta = &neg * rv;
                        match v.get_mut(rk) {
                            Some(slot) => {
                                *slot += &delta;
                                if slot.is_zero() {
                                    v.remove(rk);
                                }
                            }
                            None => {
                                v.insert(rk.clone(), delta);
                            }
                        }
                    }
                }
                None => {
                    done.insert(k, c);
                }
            }
        }
        done
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` to the span; returns the new monic basis row if the rank grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> Option<SparseVec<K>> {
        let mut r = self.reduce(v);
        let (pivot, lead) = {
            let (k, c) = r.last_key_value()?;
            (k.clone(), c.clone())
        };
        let inv = lead.inv().expect("nonzero leading coefficient");
        for val in r.values_mut() {
            *val = &*val * &inv;
        }
        self.rows.insert(pivot, r.clone());
        Some(r)
    }

    /// Basis rows, reduced so that no row contains another row's pivot.
    pub fn reduced_basis(&self) -> Vec<SparseVec<K>> {
        let mut out: Vec<SparseVec<K>> = Vec::with_capacity(self.rows.len());
        let mut fully = SparseEchelon::<K>::new();
        for (k, row) in &self.rows {
            // rows with smaller pivots are already fully reduced
            let mut tail = row.clone();
            let lead = tail.remove(k).expect("pivot present");
            let mut reduced = fully.reduce(tail);
            reduced.insert(k.clone(), lead);
            fully.rows.insert(k.clone(), reduced.clone());
            out.push(reduced);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;

    fn vec_of(entries: &[(u32, i64)]) -> SparseVec<u32> {
        let q = FieldSpec::Rationals;
        entries.iter().map(|&(k, v)| (k, q.from_i64(v))).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut e = SparseEchelon::new();
        assert!(e.insert(vec_of(&[(0, 1), (2, 1)])).is_some());
        assert!(e.insert(vec_of(&[(1, 2), (2, 2)])).is_some());
        assert!(e.insert(vec_of(&[(0, 2), (1, 2), (2, 4)])).is_none());
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&vec_of(&[(0, 1), (1, -1)])));
        assert!(!e.contains(&vec_of(&[(0, 1)])));
    }

    #[test]
    fn reduced_basis_is_clean() {
        let mut e = SparseEchelon::new();
        e.insert(vec_of(&[(0, 1), (1, 1)]));
        e.insert(vec_of(&[(1, 1), (2, 1)]));
        let basis = e.reduced_basis();
        assert_eq!(basis.len(), 2);
        // the row with pivot 2 must not mention pivot 1
        assert!(!basis[1].contains_key(&1));
    }
}
