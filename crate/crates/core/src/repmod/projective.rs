use std::sync::Arc;

use crate::exactlin::{Matrix, Scalar};
use crate::pathalg::{AlgebraBasis, Element, VertexId};

use super::maps::{radical, ModuleMap};
use super::representation::{Representation, Side};

/// A direct sum of indecomposable projectives `e_i Γ` (right) or `Γ e_i`
/// (left), one summand per entry of `tops`, together with the coordinate
/// layout: the component at `j` lists, summand by summand, the normal words
/// from `i_t` to `j` (right) or from `j` to `i_t` (left).
#[derive(Clone, Debug)]
pub struct FreeModule {
    tops: Vec<VertexId>,
    module: Representation,
    offsets: Vec<Vec<usize>>,
}

fn block_words(ab: &AlgebraBasis, side: Side, top: VertexId, j: VertexId) -> &[usize] {
    match side {
        Side::Right => ab.words_between(top, j),
        Side::Left => ab.words_between(j, top),
    }
}

impl FreeModule {
    pub fn new(ab: &Arc<AlgebraBasis>, tops: &[VertexId], side: Side) -> Self {
        let n = ab.vertex_count();
        let field = ab.field();
        let mut offsets = vec![Vec::with_capacity(tops.len() + 1); n];
        let mut dims = vec![0; n];
        for j in 0..n {
            let mut acc = 0;
            for &t in tops {
                offsets[j].push(acc);
                acc += block_words(ab, side, t, j).len();
            }
            offsets[j].push(acc);
            dims[j] = acc;
        }
        let pres = ab.presentation();
        let mut action = Vec::with_capacity(pres.arrows.len());
        for (a, ar) in pres.arrows.iter().enumerate() {
            let (d, c) = match side {
                Side::Right => (ar.source, ar.target),
                Side::Left => (ar.target, ar.source),
            };
            let aw = ab.arrow_index(a);
            let mut m = Matrix::zeros(field, dims[c], dims[d]);
            for (t, &top) in tops.iter().enumerate() {
                let src = block_words(ab, side, top, d);
                let dst = block_words(ab, side, top, c);
                for (k, &w) in src.iter().enumerate() {
                    let prod = match side {
                        Side::Right => ab.product_of_words(w, aw),
                        Side::Left => ab.product_of_words(aw, w),
                    };
                    for (u, coeff) in prod.terms() {
                        let pos = dst.binary_search(&u).expect("product stays in the block");
                        m.set(offsets[c][t] + pos, offsets[d][t] + k, coeff.clone());
                    }
                }
            }
            action.push(m);
        }
        let module = Representation::new_unchecked(side, ab.clone(), dims, action);
        FreeModule {
            tops: tops.to_vec(),
            module,
            offsets,
        }
    }

    pub fn tops(&self) -> &[VertexId] {
        &self.tops
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn side(&self) -> Side {
        self.module.side()
    }

    fn words(&self, t: usize, j: VertexId) -> &[usize] {
        block_words(self.module.algebra(), self.side(), self.tops[t], j)
    }

    /// Coordinates at vertex `j` of the tuple whose summand-`t` entry is
    /// `components[t]`.
    pub fn vector(&self, j: VertexId, components: &[Element]) -> Vec<Scalar> {
        let field = self.module.field();
        let mut v = vec![field.zero(); self.module.dim_at(j)];
        for (t, x) in components.iter().enumerate() {
            let words = self.words(t, j);
            for (u, c) in x.terms() {
                let pos = words.binary_search(&u).expect("element in the right block");
                v[self.offsets[j][t] + pos] = c.clone();
            }
        }
        v
    }

    /// Inverse of [`FreeModule::vector`].
    pub fn components(&self, j: VertexId, v: &[Scalar]) -> Vec<Element> {
        (0..self.tops.len())
            .map(|t| {
                let words = self.words(t, j);
                Element::from_terms(
                    words
                        .iter()
                        .enumerate()
                        .map(|(k, &u)| (u, v[self.offsets[j][t] + k].clone())),
                )
            })
            .collect()
    }

    /// Coordinate of the generator `e_{i_t}` of summand `t`.
    pub fn generator_coordinate(&self, t: usize) -> usize {
        let top = self.tops[t];
        let lazy = self.module.algebra().lazy_index(top);
        let pos = self.words(t, top).binary_search(&lazy).expect("lazy path");
        self.offsets[top][t] + pos
    }

    /// The homomorphism sending generator `t` to `images[t]`, a vector of the
    /// component of `target` at `tops[t]`.
    pub fn map_to(&self, target: &Representation, images: &[Vec<Scalar>]) -> ModuleMap {
        let field = target.field();
        let n = target.dims().len();
        let blocks = (0..n)
            .map(|j| {
                let mut b = Matrix::zeros(field, target.dim_at(j), self.module.dim_at(j));
                for (t, img) in images.iter().enumerate() {
                    for (k, &w) in self.words(t, j).iter().enumerate() {
                        let col = target.basis_word_matrix(w).mul_vec(img);
                        for (r, x) in col.into_iter().enumerate() {
                            b.set(r, self.offsets[j][t] + k, x);
                        }
                    }
                }
                b
            })
            .collect();
        ModuleMap::new_unchecked(self.module.clone(), target.clone(), blocks)
    }
}

pub fn projective_module(ab: &Arc<AlgebraBasis>, v: VertexId, side: Side) -> Representation {
    FreeModule::new(ab, &[v], side).module
}

/// A homomorphism between right free modules, as a matrix over Γ:
/// `entries[t][s]` lies in `e_{target_t} Γ e_{source_s}` and the generator of
/// source summand `s` goes to `Σ_t entries[t][s]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjMap {
    pub source: Vec<VertexId>,
    pub target: Vec<VertexId>,
    pub entries: Vec<Vec<Element>>,
}

impl ProjMap {
    pub fn zero(source: &[VertexId], target: &[VertexId]) -> Self {
        ProjMap {
            source: source.to_vec(),
            target: target.to_vec(),
            entries: vec![vec![Element::zero(); source.len()]; target.len()],
        }
    }

    pub fn identity(ab: &AlgebraBasis, tops: &[VertexId]) -> Self {
        let mut m = Self::zero(tops, tops);
        for (t, &v) in tops.iter().enumerate() {
            m.entries[t][t] = ab.idempotent(v);
        }
        m
    }

    /// Reads off the matrix of a homomorphism of right free modules.
    pub fn from_module_map(src: &FreeModule, tgt: &FreeModule, f: &ModuleMap) -> Self {
        assert_eq!(src.side(), Side::Right);
        let entries_by_col: Vec<Vec<Element>> = (0..src.tops.len())
            .map(|s| {
                let top = src.tops[s];
                let col = f.block(top).column(src.generator_coordinate(s));
                tgt.components(top, &col)
            })
            .collect();
        let entries = (0..tgt.tops.len())
            .map(|t| {
                (0..src.tops.len())
                    .map(|s| entries_by_col[s][t].clone())
                    .collect()
            })
            .collect();
        ProjMap {
            source: src.tops.clone(),
            target: tgt.tops.clone(),
            entries,
        }
    }

    pub fn to_module_map(&self, ab: &Arc<AlgebraBasis>) -> ModuleMap {
        let src = FreeModule::new(ab, &self.source, Side::Right);
        let tgt = FreeModule::new(ab, &self.target, Side::Right);
        self.to_module_map_between(&src, &tgt)
    }

    pub fn to_module_map_between(&self, src: &FreeModule, tgt: &FreeModule) -> ModuleMap {
        let images: Vec<Vec<Scalar>> = (0..self.source.len())
            .map(|s| {
                let col: Vec<Element> = (0..self.target.len())
                    .map(|t| self.entries[t][s].clone())
                    .collect();
                tgt.vector(self.source[s], &col)
            })
            .collect();
        src.map_to(tgt.module(), &images)
    }

    /// `Hom(-, Γ)` applied to this map: the left-module map
    /// `⊕_t Γ e_{target_t} -> ⊕_s Γ e_{source_s}`, `(y_t) ↦ (Σ_t y_t x_{t,s})_s`.
    pub fn dual(&self, ab: &Arc<AlgebraBasis>) -> ModuleMap {
        let src = FreeModule::new(ab, &self.target, Side::Left);
        let tgt = FreeModule::new(ab, &self.source, Side::Left);
        // generator e_t of Γ e_{target_t} goes to (x_{t,s})_s
        let images: Vec<Vec<Scalar>> = (0..self.target.len())
            .map(|t| tgt.vector(self.target[t], &self.entries[t]))
            .collect();
        src.map_to(tgt.module(), &images)
    }

    /// `other ∘ self`.
    pub fn then(&self, ab: &AlgebraBasis, other: &ProjMap) -> ProjMap {
        assert_eq!(self.target, other.source);
        let mut out = ProjMap::zero(&self.source, &other.target);
        for u in 0..other.target.len() {
            for s in 0..self.source.len() {
                let mut acc = Element::zero();
                for t in 0..self.target.len() {
                    let p = ab.multiply(&other.entries[u][t], &self.entries[t][s]);
                    acc = acc.add(&p);
                }
                out.entries[u][s] = acc;
            }
        }
        out
    }

    /// Whether every entry lies in the radical (no lazy-path terms).
    pub fn is_radical(&self, ab: &AlgebraBasis) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|x| x.terms().all(|(w, _)| !ab.word(w).is_lazy()))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Element::is_zero)
    }
}

/// Projective cover: generators are unit vectors completing the radical at
/// each vertex, taken in vertex order.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub free: FreeModule,
    pub generators: Vec<Vec<Scalar>>,
    pub epi: ModuleMap,
}

pub fn projective_cover(m: &Representation) -> ProjectiveCover {
    let field = m.field();
    let (_, incl) = radical(m);
    let mut tops = Vec::new();
    let mut generators = Vec::new();
    for v in 0..m.dims().len() {
        for c in incl.block(v).complement_coordinates() {
            let mut e = vec![field.zero(); m.dim_at(v)];
            e[c] = field.one();
            tops.push(v);
            generators.push(e);
        }
    }
    let free = FreeModule::new(m.algebra(), &tops, m.side());
    let epi = free.map_to(m, &generators);
    ProjectiveCover {
        free,
        generators,
        epi,
    }
}

impl ProjMap {
    /// Entries drawn as random combinations of the normal words in each block.
    /// With `radical_only` the lazy paths are skipped.
    pub fn random(
        ab: &AlgebraBasis,
        source: &[VertexId],
        target: &[VertexId],
        radical_only: bool,
        rng: &mut impl rand::Rng,
    ) -> ProjMap {
        let field = ab.field();
        let entries = target
            .iter()
            .map(|&t| {
                source
                    .iter()
                    .map(|&s| {
                        Element::from_terms(
                            ab.words_between(t, s)
                                .iter()
                                .filter(|&&w| !(radical_only && ab.word(w).is_lazy()))
                                .map(|&w| (w, super::random::random_scalar(field, rng))),
                        )
                    })
                    .collect()
            })
            .collect();
        ProjMap {
            source: source.to_vec(),
            target: target.to_vec(),
            entries,
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &ProjMap) -> ProjMap {
        let mut out = ProjMap::zero(
            &[self.source.clone(), other.source.clone()].concat(),
            &[self.target.clone(), other.target.clone()].concat(),
        );
        for (t, row) in self.entries.iter().enumerate() {
            for (s, x) in row.iter().enumerate() {
                out.entries[t][s] = x.clone();
            }
        }
        let (t0, s0) = (self.target.len(), self.source.len());
        for (t, row) in other.entries.iter().enumerate() {
            for (s, x) in row.iter().enumerate() {
                out.entries[t0 + t][s0 + s] = x.clone();
            }
        }
        out
    }
}

/// Whether `m` is projective, by comparing it with its projective cover.
pub fn is_projective(m: &Representation) -> bool {
    projective_cover(m).free.module().total_dim() == m.total_dim()
}
