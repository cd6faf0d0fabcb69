use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use serde::Serialize;

use crate::exactlin::{Matrix, SparseEchelon, SparseVec};
use crate::pathalg::{
    AlgebraBasis, Arrow, ArrowId, Element, QuiverPresentation, Relation, Term, VertexId, Word,
    DEFAULT_DEGREE_CAP,
};
use crate::repmod::{Representation, Side};

use super::ReconstructError;

/// Where an arrow of the reconstructed quiver goes in `Γ`.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorImage {
    pub arrow: String,
    pub source: VertexId,
    pub target: VertexId,
    pub image: String,
    #[serde(skip)]
    pub element: Element,
}

/// `Λ = e Γ e` for `e` the sum of the kept idempotents, as a quiver with
/// relations whose arrows map to the listed elements of `Γ`.
#[derive(Clone, Debug, Serialize)]
pub struct AlgebraPresentation {
    pub kept: Vec<VertexId>,
    pub dim_total: usize,
    pub loewy_length: usize,
    pub presentation: String,
    pub generators: Vec<GeneratorImage>,
    #[serde(skip)]
    pub quiver: QuiverPresentation,
    #[serde(skip)]
    pub algebra: Arc<AlgebraBasis>,
    #[serde(skip)]
    pub ambient: Arc<AlgebraBasis>,
}

fn arrow_name(k: usize) -> String {
    let c = (b'a' + (k % 26) as u8) as char;
    if k < 26 {
        c.to_string()
    } else {
        format!("{c}{}", k / 26)
    }
}

struct PathEntry {
    word: Vec<ArrowId>,
    source: usize,
    target: usize,
    value: Element,
}

/// Presents `e Γ e` for `e = Σ_{v ∈ kept} e_v`. Arrows are normal words
/// completing `rad² Λ` inside `rad Λ`, taken in word order; relations are
/// collected degree by degree up to the Loewy length of `Λ`, each new one
/// reduced modulo the ideal generated so far.
pub fn endomorphism_presentation(
    ab: &Arc<AlgebraBasis>,
    kept: &[VertexId],
    max_rel_deg: usize,
) -> Result<AlgebraPresentation, ReconstructError> {
    let mut kept = kept.to_vec();
    kept.sort_unstable();
    kept.dedup();
    if kept.is_empty() {
        return Err(ReconstructError::Empty);
    }
    let field = ab.field();
    let m = kept.len();
    let rad = |x: usize, y: usize| -> Vec<usize> {
        ab.words_between(kept[x], kept[y])
            .iter()
            .copied()
            .filter(|&w| !ab.word(w).is_lazy())
            .collect()
    };

    let mut quiver = QuiverPresentation {
        field,
        vertices: kept
            .iter()
            .map(|&v| ab.presentation().vertices[v].clone())
            .collect(),
        arrows: Vec::new(),
        relations: Vec::new(),
    };
    let mut generators = Vec::new();
    for x in 0..m {
        for y in 0..m {
            let mut span = SparseEchelon::<usize>::new();
            for z in 0..m {
                for u in rad(x, z) {
                    for v in rad(z, y) {
                        span.insert(ab.product_of_words(u, v).as_sparse());
                    }
                }
            }
            for w in rad(x, y) {
                if span.insert(SparseVec::from([(w, field.one())])).is_some() {
                    let name = arrow_name(quiver.arrows.len());
                    quiver.arrows.push(Arrow {
                        name: name.clone(),
                        source: x,
                        target: y,
                    });
                    generators.push(GeneratorImage {
                        arrow: name,
                        source: kept[x],
                        target: kept[y],
                        image: ab.word_name(w),
                        element: Element::basis(w, field),
                    });
                }
            }
        }
    }

    // paths whose proper prefixes all evaluate to nonzero elements, by length
    let mut layers: Vec<Vec<PathEntry>> = vec![Vec::new(), Vec::new()];
    for (a, g) in generators.iter().enumerate() {
        let ar = &quiver.arrows[a];
        layers[1].push(PathEntry {
            word: vec![a],
            source: ar.source,
            target: ar.target,
            value: g.element.clone(),
        });
    }
    let mut loewy = if generators.is_empty() { 1 } else { 2 };
    while layers[loewy - 1].iter().any(|p| !p.value.is_zero()) {
        if loewy > max_rel_deg {
            return Err(ReconstructError::DegreeCapExceeded(max_rel_deg));
        }
        let mut next = Vec::new();
        for p in layers[loewy - 1].iter().filter(|p| !p.value.is_zero()) {
            for (a, ar) in quiver
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, ar)| ar.source == p.target)
            {
                let mut word = p.word.clone();
                word.push(a);
                next.push(PathEntry {
                    word,
                    source: p.source,
                    target: ar.target,
                    value: ab.multiply(&p.value, &generators[a].element),
                });
            }
        }
        layers.push(next);
        loewy += 1;
    }
    let loewy = if generators.is_empty() { 1 } else { loewy - 1 };
    let enumerated: HashSet<&[ArrowId]> =
        layers.iter().flatten().map(|p| p.word.as_slice()).collect();

    // relations: (endpoints, max length, vector)
    let mut found: Vec<(usize, usize, usize, SparseVec<Word>)> = Vec::new();
    for d in 2..=loewy {
        let mut ideal = SparseEchelon::<Word>::new();
        for (x, y, len, r) in &found {
            let slack = d - len;
            let lefts = paths_ending(&layers, *x, slack, true);
            for p in &lefts {
                let rights = paths_starting(&layers, *y, slack - p.len());
                for q in &rights {
                    let mut v = SparseVec::new();
                    for (t, c) in r {
                        let w: Vec<ArrowId> = p.iter().chain(&t.0).chain(q).copied().collect();
                        if enumerated.contains(w.as_slice()) {
                            v.insert(Word(w), c.clone());
                        }
                    }
                    ideal.insert(v);
                }
            }
        }
        for x in 0..m {
            for y in 0..m {
                let cols: Vec<&PathEntry> = layers[2..=d]
                    .iter()
                    .flatten()
                    .filter(|p| p.source == x && p.target == y)
                    .collect();
                if cols.is_empty() {
                    continue;
                }
                let rows = ab.words_between(kept[x], kept[y]);
                let mut eval = Matrix::zeros(field, rows.len(), cols.len());
                for (j, p) in cols.iter().enumerate() {
                    for (w, c) in p.value.terms() {
                        let i = rows.binary_search(&w).expect("value in the block");
                        eval.set(i, j, c.clone());
                    }
                }
                let kernel = eval.kernel_basis();
                for k in 0..kernel.cols() {
                    let v: SparseVec<Word> = kernel
                        .column(k)
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(j, c)| (Word(cols[j].word.clone()), c))
                        .collect();
                    if let Some(row) = ideal.insert(v) {
                        let len = row.keys().map(|w| w.0.len()).max().unwrap_or(0);
                        found.push((x, y, len, row));
                    }
                }
            }
        }
    }
    for (_, _, _, r) in &found {
        quiver.relations.push(Relation {
            terms: r
                .iter()
                .rev()
                .map(|(w, c)| Term {
                    coeff: c.clone(),
                    word: w.0.clone(),
                })
                .collect(),
            line: None,
        });
    }

    let algebra = AlgebraBasis::compute(&quiver, DEFAULT_DEGREE_CAP.max(loewy + 1))?;
    let expected: usize = kept
        .iter()
        .flat_map(|&s| kept.iter().map(move |&t| (s, t)))
        .map(|(s, t)| ab.dim_between(s, t))
        .sum();
    if algebra.total_dim() != expected {
        return Err(ReconstructError::DimensionMismatch {
            presented: algebra.total_dim(),
            expected,
        });
    }
    Ok(AlgebraPresentation {
        kept,
        dim_total: expected,
        loewy_length: algebra.loewy_length(),
        presentation: quiver.to_dsl(),
        generators,
        quiver,
        algebra,
        ambient: ab.clone(),
    })
}

/// Alive paths (and the lazy path) ending at `x`, of length at most `max`.
fn paths_ending(layers: &[Vec<PathEntry>], x: usize, max: usize, alive: bool) -> Vec<Vec<ArrowId>> {
    let mut out = vec![Vec::new()];
    for layer in layers.iter().take(max + 1).skip(1) {
        out.extend(
            layer
                .iter()
                .filter(|p| p.target == x && (!alive || !p.value.is_zero()))
                .map(|p| p.word.clone()),
        );
    }
    out
}

fn paths_starting(layers: &[Vec<PathEntry>], y: usize, max: usize) -> Vec<Vec<ArrowId>> {
    let mut out = vec![Vec::new()];
    for layer in layers.iter().take(max + 1).skip(1) {
        out.extend(
            layer
                .iter()
                .filter(|p| p.source == y)
                .map(|p| p.word.clone()),
        );
    }
    out
}

/// `M e` as a right `Λ`-module, for a right `Γ`-module `M`.
pub fn restrict_to_corner(
    pres: &AlgebraPresentation,
    m: &Representation,
) -> Result<Representation, ReconstructError> {
    assert_eq!(
        m.side(),
        Side::Right,
        "corner restriction takes right modules"
    );
    let dims: Vec<usize> = pres.kept.iter().map(|&v| m.dim_at(v)).collect();
    let action = pres
        .generators
        .iter()
        .map(|g| m.element_matrix(&g.element, g.source, g.target))
        .collect();
    Ok(Representation::new(
        Side::Right,
        pres.algebra.clone(),
        dims,
        action,
    )?)
}

impl AlgebraPresentation {
    /// Evaluates a word in the reconstructed arrows inside `Γ`.
    pub fn evaluate(&self, word: &[ArrowId]) -> Element {
        let mut it = word.iter();
        let Some(&first) = it.next() else {
            return Element::zero();
        };
        it.fold(self.generators[first].element.clone(), |acc, &a| {
            self.ambient.multiply(&acc, &self.generators[a].element)
        })
    }

    /// Number of arrows between each pair of vertices, keyed by vertex names.
    pub fn arrow_counts(&self) -> BTreeMap<(String, String), usize> {
        let mut out = BTreeMap::new();
        for a in &self.quiver.arrows {
            let key = (
                self.quiver.vertices[a.source].clone(),
                self.quiver.vertices[a.target].clone(),
            );
            *out.entry(key).or_insert(0) += 1;
        }
        out
    }
}
