//! The algebra `Λ = End(⊕ P_i)` over the projective vertices of an exact
//! structure, presented by a quiver with relations, and the homological
//! checks that go with it.

mod checks;
mod compare;
mod endo;

pub use checks::{
    cotilting_module, gp_orthogonality_check, iwanaga_gorenstein_dimension, reconstruct_algebra,
    verify_iwanaga_gorenstein, CotiltingReport, GpRow, IgReport,
};
pub use compare::{compare_with_presentation, ComparisonReport};
pub use endo::{
    endomorphism_presentation, restrict_to_corner, AlgebraPresentation, GeneratorImage,
};

use thiserror::Error;

use crate::homology::HomologyError;
use crate::pathalg::PathError;
use crate::repmod::ModuleError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReconstructError {
    #[error("no projective vertices: the endomorphism algebra is zero")]
    Empty,
    #[error("radical of the endomorphism algebra not nilpotent by degree {0}")]
    DegreeCapExceeded(usize),
    #[error("presented algebra has dimension {presented}, expected {expected}")]
    DimensionMismatch { presented: usize, expected: usize },
    #[error("vertex `{0}` is not a vertex of the reconstructed quiver")]
    UnknownVertex(String),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}
