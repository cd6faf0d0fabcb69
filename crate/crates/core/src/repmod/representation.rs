use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exactlin::{FieldSpec, Matrix, Scalar};
use crate::pathalg::{AlgebraBasis, ArrowId, Element, VertexId};

use super::ModuleError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        }
    }
}

/// A finite-dimensional module given by a vector space per vertex and a
/// matrix per arrow.
///
/// For a right module an arrow `a: i -> j` maps the component at `i` to the
/// component at `j`, so the word `a*b` acts as `B * A`. For a left module the
/// same arrow maps `j` to `i` and `a*b` acts as `A * B`.
#[derive(Clone)]
pub struct Representation {
    side: Side,
    algebra: Arc<AlgebraBasis>,
    dims: Vec<usize>,
    action: Vec<Matrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("side", &self.side)
            .field("dims", &self.dims)
            .finish_non_exhaustive()
    }
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side
            && same_algebra(&self.algebra, &other.algebra)
            && self.dims == other.dims
            && self.action == other.action
    }
}

pub(crate) fn same_algebra(a: &Arc<AlgebraBasis>, b: &Arc<AlgebraBasis>) -> bool {
    Arc::ptr_eq(a, b) || a.presentation() == b.presentation()
}

impl Representation {
    /// Checks matrix shapes and that every relation acts as zero.
    pub fn new(
        side: Side,
        algebra: Arc<AlgebraBasis>,
        dims: Vec<usize>,
        action: Vec<Matrix>,
    ) -> Result<Self, ModuleError> {
        let m = Self::new_unchecked(side, algebra, dims, action);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        side: Side,
        algebra: Arc<AlgebraBasis>,
        dims: Vec<usize>,
        action: Vec<Matrix>,
    ) -> Self {
        let m = Representation {
            side,
            algebra,
            dims,
            action,
        };
        debug_assert_eq!(m.validate(), Ok(()));
        m
    }

    fn validate(&self) -> Result<(), ModuleError> {
        let pres = self.algebra.presentation();
        if self.dims.len() != pres.vertex_count() || self.action.len() != pres.arrows.len() {
            return Err(ModuleError::Shape("vertex or arrow count".into()));
        }
        for a in 0..pres.arrows.len() {
            let (d, c) = self.dom_cod(a);
            if self.action[a].shape() != (self.dims[c], self.dims[d]) {
                return Err(ModuleError::Shape(format!("arrow {}", pres.arrows[a].name)));
            }
        }
        for (k, r) in pres.relations.iter().enumerate() {
            let (s, t) = pres.word_endpoints(&r.terms[0].word).expect("validated");
            let (d, c) = self.oriented(s, t);
            let mut acc = Matrix::zeros(self.field(), self.dims[c], self.dims[d]);
            for term in &r.terms {
                acc = acc.add(&self.word_matrix(&term.word).scale(&term.coeff));
            }
            if !acc.is_zero() {
                return Err(ModuleError::RelationViolated(k));
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<AlgebraBasis>, side: Side) -> Self {
        let n = algebra.vertex_count();
        Self::from_dims_zero_action(algebra, side, vec![0; n])
    }

    fn from_dims_zero_action(algebra: Arc<AlgebraBasis>, side: Side, dims: Vec<usize>) -> Self {
        let field = algebra.field();
        let action = algebra
            .presentation()
            .arrows
            .iter()
            .map(|ar| {
                let (d, c) = match side {
                    Side::Right => (ar.source, ar.target),
                    Side::Left => (ar.target, ar.source),
                };
                Matrix::zeros(field, dims[c], dims[d])
            })
            .collect();
        Representation {
            side,
            algebra,
            dims,
            action,
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn algebra(&self) -> &Arc<AlgebraBasis> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: VertexId) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn action(&self, a: ArrowId) -> &Matrix {
        &self.action[a]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Domain and codomain component of the map induced by arrow `a`.
    pub fn dom_cod(&self, a: ArrowId) -> (VertexId, VertexId) {
        let ar = &self.algebra.presentation().arrows[a];
        self.oriented(ar.source, ar.target)
    }

    /// Domain and codomain components of a path from `s` to `t`.
    pub fn oriented(&self, s: VertexId, t: VertexId) -> (VertexId, VertexId) {
        match self.side {
            Side::Right => (s, t),
            Side::Left => (t, s),
        }
    }

    /// Matrix of a nonempty composable arrow sequence.
    pub fn word_matrix(&self, word: &[ArrowId]) -> Matrix {
        let mut it: Box<dyn Iterator<Item = &ArrowId>> = match self.side {
            Side::Right => Box::new(word.iter()),
            Side::Left => Box::new(word.iter().rev()),
        };
        let first = *it.next().expect("nonempty word");
        let mut m = self.action[first].clone();
        for &a in it {
            m = self.action[a].mul(&m);
        }
        m
    }

    /// Matrix of a normal word of the algebra basis (identity for lazy paths).
    pub fn basis_word_matrix(&self, w: usize) -> Matrix {
        let pw = self.algebra.word(w);
        if pw.is_lazy() {
            Matrix::identity(self.field(), self.dims[pw.source])
        } else {
            self.word_matrix(&pw.arrows)
        }
    }

    /// Matrix of an algebra element lying in `e_s Γ e_t`.
    pub fn element_matrix(&self, x: &Element, s: VertexId, t: VertexId) -> Matrix {
        let (d, c) = self.oriented(s, t);
        let mut m = Matrix::zeros(self.field(), self.dims[c], self.dims[d]);
        for (w, coeff) in x.terms() {
            let pw = self.algebra.word(w);
            debug_assert_eq!((pw.source, pw.target), (s, t));
            m = m.add(&self.basis_word_matrix(w).scale(coeff));
        }
        m
    }

    /// `v * x` for right modules, `x * v` for left modules.
    pub fn act(&self, v: &[Scalar], x: &Element, s: VertexId, t: VertexId) -> Vec<Scalar> {
        self.element_matrix(x, s, t).mul_vec(v)
    }

    /// The simple module at `v`.
    pub fn simple(algebra: Arc<AlgebraBasis>, v: VertexId, side: Side) -> Self {
        let mut dims = vec![0; algebra.vertex_count()];
        dims[v] = 1;
        Self::from_dims_zero_action(algebra, side, dims)
    }

    /// The same matrices read as a module over the opposite algebra, which
    /// must have the reversed presentation with identical arrow order.
    pub fn as_opposite(&self, opposite: Arc<AlgebraBasis>) -> Representation {
        assert_eq!(
            opposite.presentation(),
            &self.algebra.presentation().opposite(),
            "not the opposite algebra"
        );
        Representation {
            side: self.side.flip(),
            algebra: opposite,
            dims: self.dims.clone(),
            action: self.action.clone(),
        }
    }

    pub fn direct_sum(&self, other: &Representation) -> Representation {
        assert!(self.side == other.side && same_algebra(&self.algebra, &other.algebra));
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        Representation {
            side: self.side,
            algebra: self.algebra.clone(),
            dims,
            action,
        }
    }

    /// Multiset of composition factors, listed in vertex order. Every simple
    /// of a basic quiver algebra is one-dimensional, so vertex `i` occurs
    /// `dim M_i` times.
    pub fn composition_factors(&self) -> Vec<VertexId> {
        self.dims
            .iter()
            .enumerate()
            .flat_map(|(v, &d)| std::iter::repeat_n(v, d))
            .collect()
    }
}
