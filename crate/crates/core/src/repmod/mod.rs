//! Finite-dimensional modules over `kQ/I` as quiver representations.

mod maps;
mod projective;
mod random;
mod representation;

pub use maps::{
    generated_submodule, hom_space, homology_at, quotient, radical, submodule, top, ModuleMap,
};
pub use projective::{
    is_projective, projective_cover, projective_module, FreeModule, ProjMap, ProjectiveCover,
};
pub use random::{random_extension_on_top, random_filt_module, random_filt_module_with};
pub use representation::{Representation, Side};

use std::sync::Arc;

use thiserror::Error;

use crate::pathalg::{AlgebraBasis, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("relation #{0} does not act as zero")]
    RelationViolated(usize),
    #[error("map does not commute with arrow #{0}")]
    NotNatural(usize),
    #[error("modules live on different sides or algebras")]
    Incompatible,
}

pub fn simple_module(ab: &Arc<AlgebraBasis>, v: VertexId, side: Side) -> Representation {
    Representation::simple(ab.clone(), v, side)
}
