use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::homology::{minimal_resolution, DimBound, ProjResolution};
use crate::pathalg::{AlgebraBasis, VertexId};
use crate::repmod::{Representation, Side};

/// The 2-regular test for one simple right module.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TwoRegularReport {
    pub vertex: VertexId,
    pub pd: DimBound,
    pub pd_is_2: bool,
    pub ext0_vanishes: bool,
    pub ext1_vanishes: bool,
    pub ext2_dim: usize,
    pub ext2_support_vertex: Option<VertexId>,
    pub is_two_regular: bool,
    pub reason: Option<String>,
    #[serde(skip)]
    pub c2_resolution: Option<ProjResolution>,
}

/// `pd S_v = 2`, `Hom(S_v, Γ) = Ext^1(S_v, Γ) = 0` and `Ext^2(S_v, Γ)` a
/// simple left module.
pub fn check_two_regular(ab: &Arc<AlgebraBasis>, v: VertexId, max_deg: usize) -> TwoRegularReport {
    let s = Representation::simple(ab.clone(), v, Side::Right);
    let res = minimal_resolution(&s, max_deg.max(2));
    let pd = match res.projective_dimension() {
        Some(d) => DimBound::Exact(d),
        None => DimBound::Exceeds(res.length_computed),
    };
    let exts: Vec<Option<Representation>> =
        (0..3).map(|i| res.ext_against_algebra(i).ok()).collect();
    let ext0_vanishes = exts[0].as_ref().is_some_and(Representation::is_zero);
    let ext1_vanishes = exts[1].as_ref().is_some_and(Representation::is_zero);
    let ext2_dim = exts[2].as_ref().map_or(0, Representation::total_dim);
    let ext2_support_vertex = match &exts[2] {
        Some(e) if e.total_dim() == 1 => e.dims().iter().position(|&d| d == 1),
        _ => None,
    };
    let pd_is_2 = pd == DimBound::Exact(2);
    let is_two_regular = pd_is_2 && ext0_vanishes && ext1_vanishes && ext2_dim == 1;
    let reason = if is_two_regular {
        None
    } else if let DimBound::Exceeds(n) = pd {
        Some(format!(
            "projective dimension undetermined beyond degree {n}"
        ))
    } else if !pd_is_2 {
        Some(format!("projective dimension is {pd}"))
    } else if !ext0_vanishes {
        Some("Hom(S, Γ) is nonzero".into())
    } else if !ext1_vanishes {
        Some("Ext^1(S, Γ) is nonzero".into())
    } else {
        Some(format!("Ext^2(S, Γ) has dimension {ext2_dim}"))
    };
    TwoRegularReport {
        vertex: v,
        pd,
        pd_is_2,
        ext0_vanishes,
        ext1_vanishes,
        ext2_dim,
        ext2_support_vertex: ext2_support_vertex.filter(|_| is_two_regular),
        is_two_regular,
        reason,
        c2_resolution: pd_is_2.then_some(res),
    }
}
