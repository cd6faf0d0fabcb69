use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::exactlin::{FieldSpec, Scalar, SparseEchelon, SparseVec};

use super::groebner::{GroebnerBasis, Poly, Word};
use super::presentation::{ArrowId, PathWord, QuiverPresentation, VertexId};
use super::PathError;

/// Default bound on the length of Gröbner leading words and normal words.
pub const DEFAULT_DEGREE_CAP: usize = 30;

/// A k-linear combination of normal words, indexed by position in
/// [`AlgebraBasis::words`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<usize, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn basis(index: usize, field: FieldSpec) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(index, field.one());
        Element { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut e = Element::zero();
        for (i, c) in terms {
            e.add_term(i, &c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn coefficient(&self, index: usize) -> Option<&Scalar> {
        self.terms.get(&index)
    }

    pub fn add_term(&mut self, index: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&index) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&index);
                }
            }
            None => {
                self.terms.insert(index, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        for (i, c) in &other.terms {
            self.add_term(*i, &(c * s));
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut e = self.clone();
        for (i, c) in &other.terms {
            e.add_term(*i, c);
        }
        e
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut e = self.clone();
        for (i, c) in &other.terms {
            e.add_term(*i, &(-c));
        }
        e
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        if s.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(&i, c)| (i, c * s)).collect(),
        }
    }

    pub fn as_sparse(&self) -> SparseVec<usize> {
        self.terms.clone()
    }
}

/// Finite basis of `kQ/I` with complete multiplication data.
#[derive(Clone, Debug)]
pub struct AlgebraBasis {
    presentation: QuiverPresentation,
    groebner: GroebnerBasis,
    words: Vec<PathWord>,
    index: HashMap<(VertexId, Vec<ArrowId>), usize>,
    /// `products[u][v]` = normal form of `u * v` (empty when not composable).
    products: Vec<Vec<Element>>,
    by_endpoints: Vec<Vec<Vec<usize>>>,
    loewy_length: usize,
}

impl AlgebraBasis {
    /// Completes the relations to a reduced Gröbner basis and enumerates the
    /// normal words, failing when either exceeds `degree_cap`.
    pub fn compute(
        presentation: &QuiverPresentation,
        degree_cap: usize,
    ) -> Result<Arc<Self>, PathError> {
        let groebner = GroebnerBasis::compute(presentation, degree_cap)?;
        let n = presentation.vertex_count();
        let field = presentation.field;

        // breadth-first by length: prefixes of normal words are normal
        let mut words: Vec<PathWord> = (0..n).map(PathWord::lazy).collect();
        let mut frontier: Vec<usize> = (0..n).collect();
        let mut length = 0;
        while !frontier.is_empty() {
            length += 1;
            let mut next = Vec::new();
            for &wi in &frontier {
                let w = words[wi].clone();
                for (a, arrow) in presentation.arrows.iter().enumerate() {
                    if arrow.source != w.target {
                        continue;
                    }
                    let mut arrows = w.arrows.clone();
                    arrows.push(a);
                    if groebner.has_lead_suffix(&arrows) {
                        continue;
                    }
                    if length > degree_cap {
                        return Err(PathError::DegreeCapExceeded { cap: degree_cap });
                    }
                    words.push(PathWord {
                        source: w.source,
                        target: arrow.target,
                        arrows,
                    });
                    next.push(words.len() - 1);
                }
            }
            frontier = next;
        }
        words.sort_by(|a, b| (a.len(), a.source, &a.arrows).cmp(&(b.len(), b.source, &b.arrows)));
        let index: HashMap<(VertexId, Vec<ArrowId>), usize> = words
            .iter()
            .enumerate()
            .map(|(i, w)| ((w.source, w.arrows.clone()), i))
            .collect();
        let mut by_endpoints = vec![vec![Vec::new(); n]; n];
        for (i, w) in words.iter().enumerate() {
            by_endpoints[w.source][w.target].push(i);
        }

        let mut ab = AlgebraBasis {
            presentation: presentation.clone(),
            groebner,
            words,
            index,
            products: Vec::new(),
            by_endpoints,
            loewy_length: 0,
        };
        let dim = ab.words.len();
        let mut products = vec![vec![Element::zero(); dim]; dim];
        for (u, row) in products.iter_mut().enumerate() {
            for (v, slot) in row.iter_mut().enumerate() {
                let (wu, wv) = (&ab.words[u], &ab.words[v]);
                if wu.target != wv.source {
                    continue;
                }
                if wu.is_lazy() {
                    *slot = Element::basis(v, field);
                } else if wv.is_lazy() {
                    *slot = Element::basis(u, field);
                } else {
                    let mut arrows = wu.arrows.clone();
                    arrows.extend_from_slice(&wv.arrows);
                    *slot = ab.normal_form_of_word(wu.source, &arrows);
                }
            }
        }
        ab.products = products;
        ab.loewy_length = ab.compute_loewy_length().ok_or(PathError::NotAdmissible)?;
        Ok(Arc::new(ab))
    }

    pub fn presentation(&self) -> &QuiverPresentation {
        &self.presentation
    }

    pub fn field(&self) -> FieldSpec {
        self.presentation.field
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.groebner
    }

    pub fn vertex_count(&self) -> usize {
        self.presentation.vertex_count()
    }

    pub fn total_dim(&self) -> usize {
        self.words.len()
    }

    pub fn loewy_length(&self) -> usize {
        self.loewy_length
    }

    pub fn words(&self) -> &[PathWord] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &PathWord {
        &self.words[i]
    }

    pub fn word_index(&self, source: VertexId, arrows: &[ArrowId]) -> Option<usize> {
        self.index.get(&(source, arrows.to_vec())).copied()
    }

    pub fn lazy_index(&self, v: VertexId) -> usize {
        self.word_index(v, &[]).expect("lazy paths are normal")
    }

    pub fn arrow_index(&self, a: ArrowId) -> usize {
        let src = self.presentation.arrows[a].source;
        self.word_index(src, &[a])
            .expect("arrows are normal for admissible relations")
    }

    /// Indices of normal words from `source` to `target`, i.e. a basis of
    /// `e_source Γ e_target`.
    pub fn words_between(&self, source: VertexId, target: VertexId) -> &[usize] {
        &self.by_endpoints[source][target]
    }

    pub fn dim_between(&self, source: VertexId, target: VertexId) -> usize {
        self.by_endpoints[source][target].len()
    }

    pub fn words_from(&self, source: VertexId) -> Vec<usize> {
        (0..self.vertex_count())
            .flat_map(|t| self.by_endpoints[source][t].iter().copied())
            .collect()
    }

    pub fn words_to(&self, target: VertexId) -> Vec<usize> {
        (0..self.vertex_count())
            .flat_map(|s| self.by_endpoints[s][target].iter().copied())
            .collect()
    }

    pub fn word_name(&self, i: usize) -> String {
        self.presentation.path_name(&self.words[i])
    }

    pub fn element_to_string(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.terms()
            .map(|(i, c)| {
                if c.is_one() {
                    self.word_name(i)
                } else {
                    format!("{}*{}", c, self.word_name(i))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Normal form of an arbitrary arrow sequence; a lazy path when empty.
    pub fn normal_form_of_word(&self, source: VertexId, arrows: &[ArrowId]) -> Element {
        if arrows.is_empty() {
            return Element::basis(self.lazy_index(source), self.field());
        }
        let Some((s, _)) = self.presentation.word_endpoints(arrows) else {
            return Element::zero();
        };
        debug_assert_eq!(s, source);
        let mut p = Poly::new();
        p.insert(Word(arrows.to_vec()), self.field().one());
        self.poly_to_element(source, &self.groebner.reduce(p))
    }

    fn poly_to_element(&self, source: VertexId, p: &Poly) -> Element {
        Element::from_terms(p.iter().map(|(w, c)| {
            let i = self
                .word_index(source, &w.0)
                .expect("reduced words are normal");
            (i, c.clone())
        }))
    }

    /// Normal form of a linear combination of arrow sequences sharing a source.
    pub fn evaluate_poly(&self, source: VertexId, p: &Poly) -> Element {
        let reduced = self.groebner.reduce(p.clone());
        self.poly_to_element(source, &reduced)
    }

    pub fn product_of_words(&self, u: usize, v: usize) -> &Element {
        &self.products[u][v]
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        let mut out = Element::zero();
        for (u, a) in x.terms() {
            for (v, b) in y.terms() {
                let p = &self.products[u][v];
                if !p.is_zero() {
                    out.add_scaled(p, &(a * b));
                }
            }
        }
        out
    }

    pub fn idempotent(&self, v: VertexId) -> Element {
        Element::basis(self.lazy_index(v), self.field())
    }

    pub fn arrow_element(&self, a: ArrowId) -> Element {
        Element::basis(self.arrow_index(a), self.field())
    }

    /// Endpoints of a nonzero element homogeneous with respect to the vertices.
    pub fn endpoints_of(&self, x: &Element) -> Option<(VertexId, VertexId)> {
        let (i, _) = x.terms().next()?;
        let w = &self.words[i];
        Some((w.source, w.target))
    }

    /// `None` when the radical is not nilpotent (the ideal is not admissible).
    fn compute_loewy_length(&self) -> Option<usize> {
        // rad^(k+1) = span { x * a : x in rad^k, a an arrow }
        let field = self.field();
        let mut layer: Vec<SparseVec<usize>> = self
            .words
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_lazy())
            .map(|(i, _)| Element::basis(i, field).as_sparse())
            .collect();
        let mut k = 1;
        while !layer.is_empty() {
            let mut next = SparseEchelon::new();
            for x in &layer {
                let xe = Element::from_terms(x.clone());
                for a in 0..self.presentation.arrows.len() {
                    let p = self.multiply(&xe, &self.arrow_element(a));
                    if !p.is_zero() {
                        next.insert(p.as_sparse());
                    }
                }
            }
            layer = next.reduced_basis();
            k += 1;
            if k > self.words.len() + 1 {
                return None;
            }
        }
        Some(k)
    }

    /// Normal-word counts keyed by (source, target, length).
    pub fn dims_by_length(&self) -> BTreeMap<(VertexId, VertexId, usize), usize> {
        let mut m = BTreeMap::new();
        for w in &self.words {
            *m.entry((w.source, w.target, w.len())).or_insert(0) += 1;
        }
        m
    }

    /// The opposite algebra: arrows and relation words reversed.
    pub fn opposite(&self, degree_cap: usize) -> Result<Arc<AlgebraBasis>, PathError> {
        AlgebraBasis::compute(&self.presentation.opposite(), degree_cap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathalg::parse_presentation;

    fn build(src: &str) -> Arc<AlgebraBasis> {
        AlgebraBasis::compute(&parse_presentation(src).unwrap(), DEFAULT_DEGREE_CAP).unwrap()
    }

    const AUS2: &str = "vertex u v\narrow a: u -> v\narrow b: v -> u\nrelation b*a\n";

    #[test]
    fn a2_dimension() {
        let ab = build("vertex 1 2\narrow a: 1 -> 2\n");
        assert_eq!(ab.total_dim(), 3);
        assert_eq!(ab.loewy_length(), 2);
    }

    #[test]
    fn aus2_words() {
        let ab = build(AUS2);
        assert_eq!(ab.total_dim(), 5);
        let names: Vec<String> = (0..5).map(|i| ab.word_name(i)).collect();
        for n in ["e_u", "e_v", "a", "b", "a*b"] {
            assert!(names.contains(&n.to_string()), "missing {n}");
        }
        assert_eq!(ab.loewy_length(), 3);
    }

    #[test]
    fn aus2_products() {
        let ab = build(AUS2);
        let a = ab.arrow_element(0);
        let b = ab.arrow_element(1);
        let ab_ = ab.multiply(&a, &b);
        assert_eq!(ab.element_to_string(&ab_), "a*b");
        assert!(ab.multiply(&ab_, &a).is_zero());
        let eu = ab.idempotent(0);
        let ev = ab.idempotent(1);
        assert_eq!(ab.multiply(&eu, &eu), eu);
        assert!(ab.multiply(&eu, &ev).is_zero());
        assert_eq!(ab.multiply(&eu, &a), a);
        assert!(ab.multiply(&a, &eu).is_zero());
    }

    #[test]
    fn opposite_transposes_dimensions() {
        let ab = build("vertex u v\narrow a: u -> v\n");
        let op = ab.opposite(DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(op.total_dim(), 3);
        assert_eq!(op.presentation().arrows[0].source, 1);
        let aus = build(AUS2);
        let aop = aus.opposite(DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(aop.total_dim(), 5);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(aus.dim_between(i, j), aop.dim_between(j, i));
            }
        }
        let back = aop.opposite(DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(back.dims_by_length(), aus.dims_by_length());
    }

    #[test]
    fn non_admissible_is_rejected() {
        let p = parse_presentation("vertex o\narrow x: o -> o\nrelation x*x - x*x*x\n").unwrap();
        assert!(matches!(
            AlgebraBasis::compute(&p, 30),
            Err(PathError::NotAdmissible)
        ));
    }

    #[test]
    fn infinite_dimensional_is_detected() {
        let p = parse_presentation("vertex o\narrow x: o -> o\n").unwrap();
        let r = AlgebraBasis::compute(&p, 8);
        assert!(matches!(r, Err(PathError::DegreeCapExceeded { cap: 8 })));
    }
}
