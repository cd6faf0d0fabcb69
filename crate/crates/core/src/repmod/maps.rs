use crate::exactlin::{Matrix, Scalar};
use crate::pathalg::VertexId;

use super::representation::{same_algebra, Representation};
use super::ModuleError;

/// A homomorphism given by one matrix per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleMap {
    source: Representation,
    target: Representation,
    blocks: Vec<Matrix>,
}

impl ModuleMap {
    /// Checks shapes and every naturality square.
    pub fn new(
        source: Representation,
        target: Representation,
        blocks: Vec<Matrix>,
    ) -> Result<Self, ModuleError> {
        if source.side() != target.side() || !same_algebra(source.algebra(), target.algebra()) {
            return Err(ModuleError::Incompatible);
        }
        let f = ModuleMap {
            source,
            target,
            blocks,
        };
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(
        source: Representation,
        target: Representation,
        blocks: Vec<Matrix>,
    ) -> Self {
        let f = ModuleMap {
            source,
            target,
            blocks,
        };
        debug_assert_eq!(f.validate(), Ok(()));
        f
    }

    fn validate(&self) -> Result<(), ModuleError> {
        let n = self.source.dims().len();
        if self.blocks.len() != n {
            return Err(ModuleError::Shape("block count".into()));
        }
        for v in 0..n {
            if self.blocks[v].shape() != (self.target.dim_at(v), self.source.dim_at(v)) {
                return Err(ModuleError::Shape(format!("block at vertex {v}")));
            }
        }
        for a in 0..self.source.actions().len() {
            let (d, c) = self.source.dom_cod(a);
            let lhs = self.blocks[c].mul(self.source.action(a));
            let rhs = self.target.action(a).mul(&self.blocks[d]);
            if lhs != rhs {
                return Err(ModuleError::NotNatural(a));
            }
        }
        Ok(())
    }

    pub fn identity(m: &Representation) -> Self {
        let blocks = m
            .dims()
            .iter()
            .map(|&d| Matrix::identity(m.field(), d))
            .collect();
        ModuleMap {
            source: m.clone(),
            target: m.clone(),
            blocks,
        }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let blocks = (0..source.dims().len())
            .map(|v| Matrix::zeros(source.field(), target.dim_at(v), source.dim_at(v)))
            .collect();
        ModuleMap {
            source: source.clone(),
            target: target.clone(),
            blocks,
        }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn block(&self, v: VertexId) -> &Matrix {
        &self.blocks[v]
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank_at(&self, v: VertexId) -> usize {
        self.blocks[v].rank()
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        (0..self.blocks.len()).all(|v| self.rank_at(v) == self.source.dim_at(v))
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.blocks.len()).all(|v| self.rank_at(v) == self.target.dim_at(v))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ModuleMap) -> ModuleMap {
        assert_eq!(
            self.target.dims(),
            next.source.dims(),
            "maps are not composable"
        );
        let blocks = self
            .blocks
            .iter()
            .zip(&next.blocks)
            .map(|(f, g)| g.mul(f))
            .collect();
        ModuleMap {
            source: self.source.clone(),
            target: next.target.clone(),
            blocks,
        }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.add(b))
            .collect();
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks,
        }
    }

    pub fn scale(&self, s: &Scalar) -> ModuleMap {
        ModuleMap {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    /// Kernel with its inclusion into the source.
    pub fn kernel(&self) -> (Representation, ModuleMap) {
        let bases: Vec<Matrix> = self.blocks.iter().map(Matrix::kernel_basis).collect();
        submodule(&self.source, bases)
    }

    /// Image with its inclusion into the target.
    pub fn image(&self) -> (Representation, ModuleMap) {
        let bases: Vec<Matrix> = self.blocks.iter().map(Matrix::column_space_basis).collect();
        submodule(&self.target, bases)
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (Representation, ModuleMap) {
        let bases: Vec<Matrix> = self.blocks.iter().map(Matrix::column_space_basis).collect();
        quotient(&self.target, &bases)
    }

    /// `(source ⊕ other.source) -> target`, the map `[self, other]`.
    pub fn hstack(&self, other: &ModuleMap) -> ModuleMap {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.hstack(b))
            .collect();
        ModuleMap {
            source: self.source.direct_sum(&other.source),
            target: self.target.clone(),
            blocks,
        }
    }

    /// `self ⊕ other` between direct sums.
    pub fn direct_sum(&self, other: &ModuleMap) -> ModuleMap {
        let blocks = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        ModuleMap {
            source: self.source.direct_sum(&other.source),
            target: self.target.direct_sum(&other.target),
            blocks,
        }
    }
}

/// The submodule whose component at each vertex is spanned by the columns of
/// `bases[v]` (assumed linearly independent and closed under the action).
pub fn submodule(m: &Representation, bases: Vec<Matrix>) -> (Representation, ModuleMap) {
    let field = m.field();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let action = (0..m.actions().len())
        .map(|a| {
            let (d, c) = m.dom_cod(a);
            let moved = m.action(a).mul(&bases[d]);
            if dims[c] == 0 || dims[d] == 0 {
                return Matrix::zeros(field, dims[c], dims[d]);
            }
            bases[c].solve(&moved).expect("subspace is not a submodule")
        })
        .collect();
    let sub = Representation::new_unchecked(m.side(), m.algebra().clone(), dims, action);
    let incl = ModuleMap::new_unchecked(sub.clone(), m.clone(), bases);
    (sub, incl)
}

/// The quotient by the submodule spanned by `bases[v]` (closed under the action,
/// columns need not be independent), with the projection.
pub fn quotient(m: &Representation, bases: &[Matrix]) -> (Representation, ModuleMap) {
    let field = m.field();
    let n = m.dims().len();
    let mut keep = Vec::with_capacity(n);
    let mut proj = Vec::with_capacity(n);
    for v in 0..n {
        let b = bases[v].column_space_basis();
        let comp = b.complement_coordinates();
        let units = Matrix::identity(field, m.dim_at(v)).select_columns(&comp);
        let full = b.hstack(&units);
        let inv = full.inverse().expect("basis plus complement is invertible");
        proj.push(inv.block(b.cols(), 0, comp.len(), m.dim_at(v)));
        keep.push(comp);
    }
    let dims: Vec<usize> = keep.iter().map(Vec::len).collect();
    let action = (0..m.actions().len())
        .map(|a| {
            let (d, c) = m.dom_cod(a);
            proj[c].mul(&m.action(a).select_columns(&keep[d]))
        })
        .collect();
    let q = Representation::new_unchecked(m.side(), m.algebra().clone(), dims, action);
    let p = ModuleMap::new_unchecked(m.clone(), q.clone(), proj);
    (q, p)
}

/// The smallest submodule containing the given vectors (per vertex columns).
pub fn generated_submodule(m: &Representation, gens: Vec<Matrix>) -> (Representation, ModuleMap) {
    let mut bases: Vec<Matrix> = gens.iter().map(Matrix::column_space_basis).collect();
    loop {
        let mut grown = false;
        for a in 0..m.actions().len() {
            let (d, c) = m.dom_cod(a);
            if bases[d].cols() == 0 {
                continue;
            }
            let moved = m.action(a).mul(&bases[d]);
            let joined = bases[c].hstack(&moved).column_space_basis();
            if joined.cols() > bases[c].cols() {
                bases[c] = joined;
                grown = true;
            }
        }
        if !grown {
            break;
        }
    }
    submodule(m, bases)
}

/// `M rad Γ` for right modules (`rad Γ M` for left): the span of the images
/// of all arrows, which is already closed under the action.
pub fn radical(m: &Representation) -> (Representation, ModuleMap) {
    let field = m.field();
    let n = m.dims().len();
    let mut spans: Vec<Matrix> = (0..n)
        .map(|v| Matrix::zeros(field, m.dim_at(v), 0))
        .collect();
    for a in 0..m.actions().len() {
        let (_, c) = m.dom_cod(a);
        spans[c] = spans[c].hstack(m.action(a));
    }
    let bases = spans.iter().map(Matrix::column_space_basis).collect();
    submodule(m, bases)
}

/// `M / rad M` with the projection.
pub fn top(m: &Representation) -> (Representation, ModuleMap) {
    let (_, incl) = radical(m);
    quotient(m, incl.blocks())
}

/// `ker g / im f` for composable `f: A -> M`, `g: M -> B` with `g ∘ f = 0`.
pub fn homology_at(f: &ModuleMap, g: &ModuleMap) -> Representation {
    let (k, incl) = g.kernel();
    let field = k.field();
    let coords: Vec<Matrix> = (0..k.dims().len())
        .map(|v| {
            let im = f.block(v).column_space_basis();
            if k.dim_at(v) == 0 || im.cols() == 0 {
                return Matrix::zeros(field, k.dim_at(v), 0);
            }
            incl.block(v).solve(&im).expect("g ∘ f = 0")
        })
        .collect();
    quotient(&k, &coords).0
}

/// A basis of `Hom(M, N)` obtained by solving the naturality equations.
pub fn hom_space(m: &Representation, n: &Representation) -> Vec<ModuleMap> {
    assert!(m.side() == n.side() && same_algebra(m.algebra(), n.algebra()));
    let field = m.field();
    let nv = m.dims().len();
    // unknown block at v is dim N_v x dim M_v, stored row-major after `offset[v]`
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dim_at(v) * m.dim_at(v);
    }
    let unknowns = offset[nv];
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for a in 0..m.actions().len() {
        let (d, c) = m.dom_cod(a);
        let (ma, na) = (m.action(a), n.action(a));
        // (N(a) F_d - F_c M(a))[r][s] = 0
        for r in 0..n.dim_at(c) {
            for s in 0..m.dim_at(d) {
                let mut row = vec![field.zero(); unknowns];
                for k in 0..n.dim_at(d) {
                    let x = na.get(r, k);
                    if !x.is_zero() {
                        row[offset[d] + k * m.dim_at(d) + s] += x;
                    }
                }
                for k in 0..m.dim_at(c) {
                    let x = ma.get(k, s);
                    if !x.is_zero() {
                        row[offset[c] + r * m.dim_at(c) + k] -= x;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows_with_cols(field, unknowns, rows);
    let sols = system.kernel_basis();
    (0..sols.cols())
        .map(|j| {
            let blocks = (0..nv)
                .map(|v| {
                    let mut b = Matrix::zeros(field, n.dim_at(v), m.dim_at(v));
                    for r in 0..n.dim_at(v) {
                        for s in 0..m.dim_at(v) {
                            b.set(r, s, sols.get(offset[v] + r * m.dim_at(v) + s, j).clone());
                        }
                    }
                    b
                })
                .collect();
            ModuleMap::new_unchecked(m.clone(), n.clone(), blocks)
        })
        .collect()
}
