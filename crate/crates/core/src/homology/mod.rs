//! Minimal projective resolutions and Ext against the algebra.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactlin::Matrix;
use crate::pathalg::{AlgebraBasis, PathError, VertexId, DEFAULT_DEGREE_CAP};
use crate::repmod::{
    homology_at, projective_cover, FreeModule, ModuleMap, ProjMap, Representation, Side,
};

pub const DEFAULT_MAX_DEG: usize = 20;
pub const DEFAULT_CHECK_SPAN: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("resolution computed to degree {computed} is too short for Ext^{needed}")]
    ResolutionTooShort { computed: usize, needed: usize },
    #[error("{0}")]
    Path(#[from] PathError),
}

/// `0 <- M <- P_0 <- P_1 <- ...`, with `differentials[k - 1]: P_k -> P_{k-1}`.
#[derive(Clone, Debug)]
pub struct ProjResolution {
    pub module: Representation,
    pub terms: Vec<FreeModule>,
    pub differentials: Vec<ProjMap>,
    pub augmentation: ModuleMap,
    pub minimal: bool,
    pub complete: bool,
    pub length_computed: usize,
}

/// Iterated projective covers of syzygies of a right module, stopping at the
/// first zero syzygy or after `P_max_deg`.
pub fn minimal_resolution(m: &Representation, max_deg: usize) -> ProjResolution {
    assert_eq!(
        m.side(),
        Side::Right,
        "resolutions are built for right modules"
    );
    let ab = m.algebra().clone();
    let cover = projective_cover(m);
    let augmentation = cover.epi.clone();
    let mut terms = vec![cover.free];
    let mut differentials = Vec::new();
    let (mut syzygy, mut incl) = augmentation.kernel();
    let complete = loop {
        if syzygy.is_zero() {
            break true;
        }
        if terms.len() > max_deg {
            break false;
        }
        let cover = projective_cover(&syzygy);
        let prev = terms.last().expect("nonempty");
        let entries_by_col: Vec<_> = cover
            .free
            .tops()
            .iter()
            .zip(&cover.generators)
            .map(|(&top, g)| prev.components(top, &incl.block(top).mul_vec(g)))
            .collect();
        let d = ProjMap {
            source: cover.free.tops().to_vec(),
            target: prev.tops().to_vec(),
            entries: (0..prev.tops().len())
                .map(|t| entries_by_col.iter().map(|col| col[t].clone()).collect())
                .collect(),
        };
        differentials.push(d);
        let next = cover.epi.kernel();
        terms.push(cover.free);
        syzygy = next.0;
        incl = next.1;
    };
    let minimal = differentials.iter().all(|d| d.is_radical(&ab));
    let length_computed = terms.len() - 1;
    ProjResolution {
        module: m.clone(),
        terms,
        differentials,
        augmentation,
        minimal,
        complete,
        length_computed,
    }
}

impl ProjResolution {
    pub fn algebra(&self) -> &Arc<AlgebraBasis> {
        self.module.algebra()
    }

    /// Tops of `P_k` (empty beyond a complete resolution).
    pub fn tops(&self, k: usize) -> &[VertexId] {
        self.terms.get(k).map_or(&[], |t| t.tops())
    }

    /// Projective dimension when the resolution is complete.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.complete.then(|| {
            let nonzero = self.terms.iter().rposition(|t| !t.tops().is_empty());
            nonzero.unwrap_or(0)
        })
    }

    fn check_degree(&self, i: usize) -> Result<(), HomologyError> {
        if self.complete || i + 1 < self.terms.len() {
            Ok(())
        } else {
            Err(HomologyError::ResolutionTooShort {
                computed: self.length_computed,
                needed: i,
            })
        }
    }

    /// The map `P_{k+1} -> P_k` (zero past the end of a complete resolution).
    pub fn differential(&self, k: usize) -> ProjMap {
        self.differentials
            .get(k)
            .cloned()
            .unwrap_or_else(|| ProjMap::zero(self.tops(k + 1), self.tops(k)))
    }

    /// `Ext^i(M, Γ)` as a left module: cohomology of `Hom(P_•, Γ)`, where
    /// `Hom(e_j Γ, Γ) = Γ e_j` and differentials act by right multiplication.
    pub fn ext_against_algebra(&self, i: usize) -> Result<Representation, HomologyError> {
        self.check_degree(i)?;
        let ab = self.algebra();
        let dual = |k: usize| self.differential(k).dual(ab);
        let outgoing = dual(i);
        let incoming = if i == 0 {
            let zero = Representation::zero(ab.clone(), Side::Left);
            ModuleMap::zero(&zero, outgoing.source())
        } else {
            dual(i - 1)
        };
        Ok(homology_at(&incoming, &outgoing))
    }

    /// `dim Ext^i(M, N)` for a right module `N`, from `Hom(e_j Γ, N) = N_j`.
    pub fn ext_dim(&self, n: &Representation, i: usize) -> Result<usize, HomologyError> {
        self.check_degree(i)?;
        let out_rank = self.hom_dual_matrix(n, i).rank();
        let space: usize = self.tops(i).iter().map(|&v| n.dim_at(v)).sum();
        let in_rank = if i == 0 {
            0
        } else {
            self.hom_dual_matrix(n, i - 1).rank()
        };
        Ok(space - out_rank - in_rank)
    }

    /// Matrix of `Hom(P_k, N) -> Hom(P_{k+1}, N)`.
    fn hom_dual_matrix(&self, n: &Representation, k: usize) -> Matrix {
        let d = self.differential(k);
        let field = n.field();
        let offsets = |tops: &[VertexId]| {
            let mut o = vec![0];
            for &v in tops {
                o.push(o.last().unwrap() + n.dim_at(v));
            }
            o
        };
        let (src_off, tgt_off) = (offsets(&d.target), offsets(&d.source));
        let mut m = Matrix::zeros(field, *tgt_off.last().unwrap(), *src_off.last().unwrap());
        for (t, &it) in d.target.iter().enumerate() {
            for (s, &js) in d.source.iter().enumerate() {
                let x = &d.entries[t][s];
                if x.is_zero() {
                    continue;
                }
                m.paste(tgt_off[s], src_off[t], &n.element_matrix(x, it, js));
            }
        }
        m
    }
}

/// Projective dimension, or a marker that it exceeds the search bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum DimBound {
    Exact(usize),
    Exceeds(usize),
}

impl fmt::Display for DimBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimBound::Exact(n) => write!(f, "{n}"),
            DimBound::Exceeds(n) => write!(f, "> {n}"),
        }
    }
}

pub fn projective_dimension(m: &Representation, max_deg: usize) -> DimBound {
    let res = minimal_resolution(m, max_deg);
    match res.projective_dimension() {
        Some(d) => DimBound::Exact(d),
        None => DimBound::Exceeds(max_deg),
    }
}

/// Maximum projective dimension of the simple right modules.
pub fn global_dimension(ab: &Arc<AlgebraBasis>, max_deg: usize) -> DimBound {
    let mut best = 0;
    for v in 0..ab.vertex_count() {
        match projective_dimension(&Representation::simple(ab.clone(), v, Side::Right), max_deg) {
            DimBound::Exact(d) => best = best.max(d),
            e @ DimBound::Exceeds(_) => return e,
        }
    }
    DimBound::Exact(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "bound", rename_all = "snake_case")]
pub enum IdVerdict {
    Yes(usize),
    No,
    Undetermined,
}

impl fmt::Display for IdVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdVerdict::Yes(n) => write!(f, "yes({n})"),
            IdVerdict::No => write!(f, "no"),
            IdVerdict::Undetermined => write!(f, "undetermined"),
        }
    }
}

/// Per-simple evidence behind an [`IdVerdict`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdReport {
    pub verdict: IdVerdict,
    pub n: usize,
    pub check_span: usize,
    /// `ext_dims[v][k]` = dim Ext^{n+1+k}(S_v, Λ), `None` past the computed range.
    pub ext_dims: Vec<Vec<Option<usize>>>,
}

/// Decides `id Λ ≤ n` on the given side. For a finite-dimensional algebra
/// this holds iff `Ext^{n+1}(S, Λ) = 0` for every simple `S`; the degrees up
/// to `n + check_span` are also reported. A left-side query runs on the
/// opposite algebra.
pub fn injective_dimension_leq(
    ab: &Arc<AlgebraBasis>,
    side: Side,
    n: usize,
    check_span: usize,
    max_deg: usize,
) -> Result<IdReport, HomologyError> {
    let alg = match side {
        Side::Right => ab.clone(),
        Side::Left => ab.opposite(DEFAULT_DEGREE_CAP)?,
    };
    let regular = FreeModule::new(
        &alg,
        &(0..alg.vertex_count()).collect::<Vec<_>>(),
        Side::Right,
    );
    let depth = max_deg.min(n + check_span + 1);
    let mut ext_dims = Vec::new();
    let mut first_known = true;
    let mut first_zero = true;
    for v in 0..alg.vertex_count() {
        let res = minimal_resolution(&Representation::simple(alg.clone(), v, Side::Right), depth);
        let row: Vec<Option<usize>> = (n + 1..=n + check_span.max(1))
            .map(|i| res.ext_dim(regular.module(), i).ok())
            .collect();
        match row[0] {
            None => first_known = false,
            Some(d) if d > 0 => first_zero = false,
            Some(_) => {}
        }
        ext_dims.push(row);
    }
    let verdict = if !first_zero {
        IdVerdict::No
    } else if first_known {
        IdVerdict::Yes(n)
    } else {
        IdVerdict::Undetermined
    };
    Ok(IdReport {
        verdict,
        n,
        check_span,
        ext_dims,
    })
}
