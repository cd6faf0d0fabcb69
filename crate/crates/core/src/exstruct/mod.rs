//! Exact structures on `proj Γ`: 2-regular simples, the translation quiver
//! with its dotted arrows, enumeration, and conflation certificates.

mod conflation;
mod quiver;
mod structures;
mod tworeg;

pub use conflation::{
    ar_conflation, compose_deflations, is_deflation, pullback_deflation, random_deflation,
    sample_axioms, ArConflation, AxiomSample, CompositionCertificate, ConflationCertificate,
    Pullback,
};
pub use quiver::{DottedArrow, Orbit, SolidArrow, TranslationQuiver};
pub use structures::{
    enumerate_exact_structures, frobenius_structures, parse_dotted_selection, structure_count,
    ExactStructureSpec, MATERIALIZE_LIMIT,
};
pub use tworeg::{check_two_regular, TwoRegularReport};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExstructError {
    #[error("{0} dotted arrows give more structures than can be listed; use count-only mode")]
    TooManyStructures(usize),
    #[error("unknown orbit or arrow `{0}`")]
    UnknownSelection(String),
    #[error("dotted arrow #{0} is not in the chosen set")]
    NotChosen(usize),
}
