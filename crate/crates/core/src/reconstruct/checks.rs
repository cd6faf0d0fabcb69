use serde::Serialize;

use crate::exstruct::ExactStructureSpec;
use crate::homology::{injective_dimension_leq, minimal_resolution, IdReport, IdVerdict};
use crate::pathalg::VertexId;
use crate::repmod::{is_projective, projective_cover, FreeModule, Representation, Side};

use super::endo::{endomorphism_presentation, restrict_to_corner, AlgebraPresentation};
use super::ReconstructError;

/// `End(⊕ P_i)` over the projective vertices of the structure.
pub fn reconstruct_algebra(
    spec: &ExactStructureSpec,
    max_rel_deg: usize,
) -> Result<AlgebraPresentation, ReconstructError> {
    endomorphism_presentation(
        spec.quiver.algebra(),
        &spec.projective_vertices,
        max_rel_deg,
    )
}

fn regular(pres: &AlgebraPresentation) -> Representation {
    let all: Vec<VertexId> = (0..pres.kept.len()).collect();
    FreeModule::new(&pres.algebra, &all, Side::Right)
        .module()
        .clone()
}

/// `dim Ext^j(M, N)` for `j = 1..=span`, `None` where the resolution stops short.
fn ext_row(
    m: &Representation,
    n: &Representation,
    span: usize,
    max_deg: usize,
) -> Vec<Option<usize>> {
    let res = minimal_resolution(m, max_deg.min(span + 1));
    (1..=span).map(|j| res.ext_dim(n, j).ok()).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CotiltingReport {
    /// Dimension vector of `U` over the reconstructed vertices.
    pub dims: Vec<usize>,
    /// `dim Ext^j(U, U)` for `j = 1..=check_span`.
    pub self_ext: Vec<Option<usize>>,
    pub rigid: bool,
    /// `U` is projective with every indecomposable projective once as a summand.
    pub is_regular: bool,
    #[serde(skip)]
    pub module: Representation,
}

/// `U = Hom(e Γ, f Γ)` for `f` the injective vertices, restricted to `Λ`.
pub fn cotilting_module(
    spec: &ExactStructureSpec,
    pres: &AlgebraPresentation,
    check_span: usize,
    max_deg: usize,
) -> Result<CotiltingReport, ReconstructError> {
    let ab = spec.quiver.algebra();
    let big = FreeModule::new(ab, &spec.injective_vertices, Side::Right);
    let u = restrict_to_corner(pres, big.module())?;
    let self_ext = ext_row(&u, &u, check_span, max_deg);
    let rigid = self_ext.iter().all(|d| *d == Some(0));
    let mut tops = projective_cover(&u).free.tops().to_vec();
    tops.sort_unstable();
    let is_regular = is_projective(&u) && tops == (0..pres.kept.len()).collect::<Vec<_>>();
    Ok(CotiltingReport {
        dims: u.dims().to_vec(),
        self_ext,
        rigid,
        is_regular,
        module: u,
    })
}

/// Injective dimension of `Λ` on both sides against the bound `n`.
#[derive(Clone, Debug, Serialize)]
pub struct IgReport {
    pub n: usize,
    pub right: IdReport,
    pub left: IdReport,
}

impl IgReport {
    pub fn verdict(&self) -> IdVerdict {
        match (self.right.verdict, self.left.verdict) {
            (IdVerdict::Yes(n), IdVerdict::Yes(_)) => IdVerdict::Yes(n),
            (IdVerdict::No, _) | (_, IdVerdict::No) => IdVerdict::No,
            _ => IdVerdict::Undetermined,
        }
    }
}

pub fn verify_iwanaga_gorenstein(
    pres: &AlgebraPresentation,
    n: usize,
    check_span: usize,
    max_deg: usize,
) -> Result<IgReport, ReconstructError> {
    Ok(IgReport {
        n,
        right: injective_dimension_leq(&pres.algebra, Side::Right, n, check_span, max_deg)?,
        left: injective_dimension_leq(&pres.algebra, Side::Left, n, check_span, max_deg)?,
    })
}

/// `e_i Γ e` as a `Λ`-module and its Ext groups against `Λ`.
#[derive(Clone, Debug, Serialize)]
pub struct GpRow {
    pub vertex: VertexId,
    pub dims: Vec<usize>,
    pub ext: Vec<Option<usize>>,
    pub orthogonal: bool,
}

/// For every vertex `i` of `Γ`, checks `Ext^j(e_i Γ e, Λ) = 0` for
/// `j = 1..=check_span`.
pub fn gp_orthogonality_check(
    spec: &ExactStructureSpec,
    pres: &AlgebraPresentation,
    check_span: usize,
    max_deg: usize,
) -> Result<Vec<GpRow>, ReconstructError> {
    let ab = spec.quiver.algebra();
    let lambda = regular(pres);
    (0..ab.vertex_count())
        .map(|i| {
            let p = FreeModule::new(ab, &[i], Side::Right);
            let n = restrict_to_corner(pres, p.module())?;
            let ext = ext_row(&n, &lambda, check_span, max_deg);
            Ok(GpRow {
                vertex: i,
                dims: n.dims().to_vec(),
                orthogonal: ext.iter().all(|d| *d == Some(0)),
                ext,
            })
        })
        .collect()
}

/// Searches for the least `n < max_deg` with `id Λ ≤ n` on both sides and
/// reports both verdicts at that `n` (or at the last bound tried).
pub fn iwanaga_gorenstein_dimension(
    pres: &AlgebraPresentation,
    check_span: usize,
    max_deg: usize,
) -> Result<IgReport, ReconstructError> {
    let mut bound = 0;
    for side in [Side::Right, Side::Left] {
        let mut n = bound;
        while n + 1 < max_deg.max(1) {
            let r = injective_dimension_leq(&pres.algebra, side, n, check_span, max_deg)?;
            if r.verdict != IdVerdict::No {
                break;
            }
            n += 1;
        }
        bound = bound.max(n);
    }
    verify_iwanaga_gorenstein(pres, bound, check_span, max_deg)
}
