use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::exactlin::Scalar;

use super::presentation::{ArrowId, QuiverPresentation};
use super::PathError;

/// Arrow sequence under the length-lexicographic order (shorter first,
/// then by arrow declaration index).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<ArrowId>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of the path algebra: words (all with common endpoints) to coefficients.
pub type Poly = BTreeMap<Word, Scalar>;

fn add_term(p: &mut Poly, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match p.get_mut(&w) {
        Some(slot) => {
            *slot += &c;
            if slot.is_zero() {
                p.remove(&w);
            }
        }
        None => {
            p.insert(w, c);
        }
    }
}

fn lead(p: &Poly) -> Option<(&Word, &Scalar)> {
    p.last_key_value()
}

fn make_monic(p: &mut Poly) {
    let inv = lead(p).expect("nonzero").1.inv().expect("nonzero lead");
    for c in p.values_mut() {
        *c = &*c * &inv;
    }
}

/// `prefix * p * suffix` scaled by `scale`.
fn sandwich(prefix: &[ArrowId], p: &Poly, suffix: &[ArrowId], scale: &Scalar) -> Poly {
    p.iter()
        .map(|(w, c)| {
            let mut word = Vec::with_capacity(prefix.len() + w.0.len() + suffix.len());
            word.extend_from_slice(prefix);
            word.extend_from_slice(&w.0);
            word.extend_from_slice(suffix);
            (Word(word), c * scale)
        })
        .collect()
}

pub fn relation_poly(pres: &QuiverPresentation, index: usize) -> Poly {
    let mut p = Poly::new();
    for t in &pres.relations[index].terms {
        add_term(&mut p, Word(t.word.clone()), t.coeff.clone());
    }
    p
}

/// Reduced Gröbner basis of the two-sided ideal generated by the relations.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    elements: Vec<Poly>,
    leads: HashMap<Vec<ArrowId>, usize>,
    lead_lens: BTreeSet<usize>,
}

struct Builder {
    slots: Vec<Option<Poly>>,
    leads: HashMap<Vec<ArrowId>, usize>,
    lead_lens: BTreeMap<usize, usize>,
    pairs: Vec<(usize, usize)>,
    cap: usize,
}

impl Builder {
    fn find_divisor(&self, w: &[ArrowId]) -> Option<(usize, usize)> {
        for &len in self.lead_lens.keys() {
            if len > w.len() {
                break;
            }
            for start in 0..=w.len() - len {
                if let Some(&idx) = self.leads.get(&w[start..start + len]) {
                    return Some((idx, start));
                }
            }
        }
        None
    }

    fn reduce(&self, p: Poly) -> Poly {
        reduce_with(
            p,
            |w| self.find_divisor(w),
            |i| self.slots[i].as_ref().expect("live"),
        )
    }

    fn add(&mut self, p: Poly, pending: &mut Vec<Poly>) -> Result<(), PathError> {
        let mut r = self.reduce(p);
        if r.is_empty() {
            return Ok(());
        }
        make_monic(&mut r);
        let lw = lead(&r).expect("nonzero").0 .0.clone();
        if lw.len() > self.cap {
            return Err(PathError::DegreeCapExceeded { cap: self.cap });
        }
        // elements whose lead contains the new lead are retired and re-reduced
        let retire: Vec<usize> = self
            .leads
            .iter()
            .filter(|(w, _)| contains_subword(w, &lw))
            .map(|(_, &i)| i)
            .collect();
        for i in retire {
            let old = self.slots[i].take().expect("live");
            let ow = lead(&old).expect("nonzero").0 .0.clone();
            self.leads.remove(&ow);
            self.dec_len(ow.len());
            pending.push(old);
        }
        let idx = self.slots.len();
        self.leads.insert(lw.clone(), idx);
        *self.lead_lens.entry(lw.len()).or_insert(0) += 1;
        self.slots.push(Some(r));
        for j in 0..=idx {
            if self.slots[j].is_some() {
                self.pairs.push((idx, j));
                if j != idx {
                    self.pairs.push((j, idx));
                }
            }
        }
        Ok(())
    }

    fn dec_len(&mut self, len: usize) {
        let e = self.lead_lens.get_mut(&len).expect("length tracked");
        *e -= 1;
        if *e == 0 {
            self.lead_lens.remove(&len);
        }
    }

    /// S-polynomials for every proper overlap of lead(i)'s suffix with lead(j)'s prefix.
    fn overlaps(&self, i: usize, j: usize) -> Vec<Poly> {
        let (Some(gi), Some(gj)) = (&self.slots[i], &self.slots[j]) else {
            return Vec::new();
        };
        let u = &lead(gi).expect("nonzero").0 .0;
        let v = &lead(gj).expect("nonzero").0 .0;
        let mut out = Vec::new();
        let one = gi.values().next().expect("nonzero").field().one();
        let minus = -&one;
        for k in 1..u.len().min(v.len()) {
            if u[u.len() - k..] == v[..k] {
                let mut s = sandwich(&[], gi, &v[k..], &one);
                for (w, c) in sandwich(&u[..u.len() - k], gj, &[], &minus) {
                    add_term(&mut s, w, c);
                }
                out.push(s);
            }
        }
        out
    }
}

fn contains_subword(hay: &[ArrowId], needle: &[ArrowId]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

fn reduce_with<'a>(
    mut p: Poly,
    find: impl Fn(&[ArrowId]) -> Option<(usize, usize)>,
    elem: impl Fn(usize) -> &'a Poly,
) -> Poly {
    let mut done = Poly::new();
    while let Some((w, c)) = p.pop_last() {
        match find(&w.0) {
            Some((idx, start)) => {
                let g = elem(idx);
                let glead = lead(g).expect("nonzero").0;
                let prefix = &w.0[..start];
                let suffix = &w.0[start + glead.0.len()..];
                let neg = -&c;
                for (gw, gc) in g.range(..glead.clone()) {
                    let mut word = Vec::with_capacity(w.0.len());
                    word.extend_from_slice(prefix);
                    word.extend_from_slice(&gw.0);
                    word.extend_from_slice(suffix);
                    add_term(&mut p, Word(word), &neg * gc);
                }
            }
            None => {
                done.insert(w, c);
            }
        }
    }
    done
}

impl GroebnerBasis {
    /// Buchberger completion with overlap S-polynomials. Fails when a basis
    /// element's leading word would exceed `cap` arrows.
    pub fn compute(pres: &QuiverPresentation, cap: usize) -> Result<Self, PathError> {
        let mut b = Builder {
            slots: Vec::new(),
            leads: HashMap::new(),
            lead_lens: BTreeMap::new(),
            pairs: Vec::new(),
            cap,
        };
        let mut pending: Vec<Poly> = (0..pres.relations.len())
            .rev()
            .map(|i| relation_poly(pres, i))
            .collect();
        loop {
            while let Some(p) = pending.pop() {
                b.add(p, &mut pending)?;
            }
            let Some((i, j)) = b.pairs.pop() else { break };
            pending.extend(b.overlaps(i, j));
        }
        let live: Vec<Poly> = b.slots.into_iter().flatten().collect();
        Ok(Self::interreduced(live))
    }

    fn interreduced(mut elements: Vec<Poly>) -> Self {
        elements.sort_by(|a, b| lead(a).unwrap().0.cmp(lead(b).unwrap().0));
        let mut gb = GroebnerBasis {
            leads: elements
                .iter()
                .enumerate()
                .map(|(i, p)| (lead(p).unwrap().0 .0.clone(), i))
                .collect(),
            lead_lens: elements
                .iter()
                .map(|p| lead(p).unwrap().0 .0.len())
                .collect(),
            elements,
        };
        for i in 0..gb.elements.len() {
            let mut tail = gb.elements[i].clone();
            let (lw, lc) = tail.pop_last().unwrap();
            let mut reduced = gb.reduce(tail);
            reduced.insert(lw, lc);
            gb.elements[i] = reduced;
        }
        gb
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn leading_words(&self) -> impl Iterator<Item = &Vec<ArrowId>> {
        self.elements.iter().map(|p| &lead(p).unwrap().0 .0)
    }

    fn find_divisor(&self, w: &[ArrowId]) -> Option<(usize, usize)> {
        for &len in &self.lead_lens {
            if len > w.len() {
                break;
            }
            for start in 0..=w.len() - len {
                if let Some(&idx) = self.leads.get(&w[start..start + len]) {
                    return Some((idx, start));
                }
            }
        }
        None
    }

    /// Normal form of `p` modulo the ideal.
    pub fn reduce(&self, p: Poly) -> Poly {
        reduce_with(p, |w| self.find_divisor(w), |i| &self.elements[i])
    }

    pub fn is_reducible(&self, w: &[ArrowId]) -> bool {
        self.find_divisor(w).is_some()
    }

    /// Whether some leading word is a suffix of `w`.
    pub fn has_lead_suffix(&self, w: &[ArrowId]) -> bool {
        self.lead_lens
            .iter()
            .take_while(|&&l| l <= w.len())
            .any(|&l| self.leads.contains_key(&w[w.len() - l..]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathalg::parse_presentation;

    #[test]
    fn word_order_is_length_lex() {
        assert!(Word(vec![5]) < Word(vec![0, 0]));
        assert!(Word(vec![0, 1]) < Word(vec![1, 0]));
    }

    #[test]
    fn non_homogeneous_overlap() {
        // x^2 = y on a single vertex with y*x = 0 and x*y = 0 forces x^3 = 0
        let p = parse_presentation(
            "vertex o\narrow x: o -> o\narrow y: o -> o\nrelation x*x - y*y\nrelation y*x\nrelation x*y\n",
        )
        .unwrap();
        let gb = GroebnerBasis::compute(&p, 30).unwrap();
        for i in 0..p.relations.len() {
            assert!(gb.reduce(relation_poly(&p, i)).is_empty());
        }
        assert!(gb.is_reducible(&[0, 0, 0]));
        assert!(gb.is_reducible(&[1, 1, 1]));
    }

    #[test]
    fn cap_is_reported() {
        // x*y = y*x on a loop pair generates an infinite basis under deglex
        // only if cap is tiny; the commutative plane is infinite-dimensional anyway
        let p = parse_presentation(
            "vertex o\narrow x: o -> o\narrow y: o -> o\nrelation x*y*x - y*x*y\n",
        )
        .unwrap();
        let r = GroebnerBasis::compute(&p, 4);
        assert!(matches!(r, Err(PathError::DegreeCapExceeded { cap: 4 })));
    }
}
