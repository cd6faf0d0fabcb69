//! Quiver presentations, the input DSL, and finite bases of `kQ/I` computed
//! from a length-lexicographic noncommutative Gröbner basis.

mod basis;
mod dsl;
mod groebner;
pub mod oracle;
mod presentation;

pub use basis::{AlgebraBasis, Element, DEFAULT_DEGREE_CAP};
pub use dsl::{parse_presentation, parse_presentation_over};
pub use groebner::{relation_poly, GroebnerBasis, Poly, Word};
pub use presentation::{Arrow, ArrowId, PathWord, QuiverPresentation, Relation, Term, VertexId};

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::exactlin::LinalgError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("path `{0}` is not composable")]
    NonComposable(String),
    #[error("relation term `{0}` has length < 2")]
    RelationTooShort(String),
    #[error("relation term `{0}` does not share the endpoints of the other terms")]
    MixedEndpoints(String),
    #[error("relation is zero")]
    ZeroRelation,
    #[error("degree cap {cap} exceeded: possibly infinite-dimensional or cap too low")]
    DegreeCapExceeded { cap: usize },
    #[error("the radical of the quotient is not nilpotent; the ideal is not admissible")]
    NotAdmissible,
    #[error("Gröbner dimensions disagree with the path-space oracle at {0}")]
    OracleMismatch(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("{0}")]
    Semantic(PathError),
    #[error("{0}")]
    Field(LinalgError),
}

/// A DSL error with 1-based position.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(crate) fn syntax(line: usize, column: usize, msg: String) -> Self {
        ParseError {
            line,
            column,
            kind: ParseErrorKind::Syntax(msg),
        }
    }
}

/// Gröbner basis plus finite path basis, capped at `degree_cap`.
pub fn groebner_basis(
    p: &QuiverPresentation,
    degree_cap: usize,
) -> Result<Arc<AlgebraBasis>, PathError> {
    AlgebraBasis::compute(p, degree_cap)
}

/// Compares the Gröbner normal-word counts with [`oracle::filtered_dimensions`].
pub fn cross_check(ab: &AlgebraBasis, degree_cap: usize) -> Result<(), PathError> {
    let oracle = oracle::filtered_dimensions(ab.presentation(), degree_cap)?;
    let engine = ab.dims_by_length();
    if oracle == engine {
        return Ok(());
    }
    let keys: BTreeMap<_, _> = oracle
        .keys()
        .chain(engine.keys())
        .map(|k| (*k, ()))
        .collect();
    let first = keys
        .keys()
        .find(|k| oracle.get(k) != engine.get(k))
        .expect("maps differ");
    let p = ab.presentation();
    Err(PathError::OracleMismatch(format!(
        "{} -> {} length {}: engine {}, oracle {}",
        p.vertices[first.0],
        p.vertices[first.1],
        first.2,
        engine.get(first).copied().unwrap_or(0),
        oracle.get(first).copied().unwrap_or(0)
    )))
}
