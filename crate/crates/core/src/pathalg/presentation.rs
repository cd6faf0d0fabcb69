use std::collections::HashMap;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::exactlin::{FieldSpec, Scalar};

use super::PathError;

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A path read left to right: for `a: i -> j` and `b: j -> l`, `[a, b]` runs
/// from `i` to `l`. An empty arrow list is the lazy path at `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathWord {
    pub source: VertexId,
    pub target: VertexId,
    pub arrows: Vec<ArrowId>,
}

impl PathWord {
    pub fn lazy(v: VertexId) -> Self {
        PathWord {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_lazy(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// One summand `coeff * a1*a2*...` of a relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub word: Vec<ArrowId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<Term>,
    /// Source line in the DSL text, when parsed.
    pub line: Option<usize>,
}

impl Relation {
    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|t| t.word.len()).max().unwrap_or(0)
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|t| t.word.len()).min().unwrap_or(0)
    }
}

/// A quiver with relations over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub field: FieldSpec,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl QuiverPresentation {
    pub fn new(field: FieldSpec) -> Self {
        QuiverPresentation {
            field,
            vertices: Vec::new(),
            arrows: Vec::new(),
            relations: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId, PathError> {
        if self.vertex_index(name).is_some() || self.arrow_index(name).is_some() {
            return Err(PathError::DuplicateName(name.to_string()));
        }
        self.vertices.push(name.to_string());
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(
        &mut self,
        name: &str,
        source: VertexId,
        target: VertexId,
    ) -> Result<ArrowId, PathError> {
        if self.arrow_index(name).is_some() || self.vertex_index(name).is_some() {
            return Err(PathError::DuplicateName(name.to_string()));
        }
        assert!(source < self.vertices.len() && target < self.vertices.len());
        self.arrows.push(Arrow {
            name: name.to_string(),
            source,
            target,
        });
        Ok(self.arrows.len() - 1)
    }

    /// Endpoints of a composable nonempty arrow sequence.
    pub fn word_endpoints(&self, word: &[ArrowId]) -> Option<(VertexId, VertexId)> {
        let first = self.arrows.get(*word.first()?)?;
        let mut at = first.target;
        for &a in &word[1..] {
            let arrow = self.arrows.get(a)?;
            if arrow.source != at {
                return None;
            }
            at = arrow.target;
        }
        Some((first.source, at))
    }

    pub fn path_word(&self, word: &[ArrowId]) -> Option<PathWord> {
        let (source, target) = self.word_endpoints(word)?;
        Some(PathWord {
            source,
            target,
            arrows: word.to_vec(),
        })
    }

    /// Checks the admissibility prerequisites and appends the relation.
    pub fn add_relation(&mut self, relation: Relation) -> Result<(), PathError> {
        self.validate_relation(&relation)?;
        self.relations.push(relation);
        Ok(())
    }

    pub fn validate_relation(&self, relation: &Relation) -> Result<(), PathError> {
        if relation.terms.is_empty() {
            return Err(PathError::ZeroRelation);
        }
        let mut ends = None;
        for term in &relation.terms {
            if term.word.len() < 2 {
                return Err(PathError::RelationTooShort(self.word_name(&term.word)));
            }
            let e = self
                .word_endpoints(&term.word)
                .ok_or_else(|| PathError::NonComposable(self.word_name(&term.word)))?;
            match ends {
                None => ends = Some(e),
                Some(prev) if prev != e => {
                    return Err(PathError::MixedEndpoints(self.word_name(&term.word)));
                }
                _ => {}
            }
        }
        Ok(())
    }

    pub fn word_name(&self, word: &[ArrowId]) -> String {
        word.iter()
            .map(|&a| self.arrows.get(a).map_or("?", |x| x.name.as_str()))
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn path_name(&self, w: &PathWord) -> String {
        if w.is_lazy() {
            format!("e_{}", self.vertices[w.source])
        } else {
            self.word_name(&w.arrows)
        }
    }

    /// Reverses every arrow and every relation word.
    pub fn opposite(&self) -> QuiverPresentation {
        QuiverPresentation {
            field: self.field,
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| Relation {
                    terms: r
                        .terms
                        .iter()
                        .map(|t| Term {
                            coeff: t.coeff.clone(),
                            word: t.word.iter().rev().copied().collect(),
                        })
                        .collect(),
                    line: r.line,
                })
                .collect(),
        }
    }

    /// Arrow counts per (source, target) pair.
    pub fn arrow_multiplicities(&self) -> HashMap<(VertexId, VertexId), usize> {
        let mut m = HashMap::new();
        for a in &self.arrows {
            *m.entry((a.source, a.target)).or_insert(0) += 1;
        }
        m
    }

    /// Renders the presentation in the input DSL; the output parses back to
    /// an equal presentation.
    pub fn to_dsl(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "field {}", self.field.name());
        if !self.vertices.is_empty() {
            let _ = writeln!(out, "vertex {}", self.vertices.join(" "));
        }
        for a in &self.arrows {
            let _ = writeln!(
                out,
                "arrow {}: {} -> {}",
                a.name, self.vertices[a.source], self.vertices[a.target]
            );
        }
        for r in &self.relations {
            let _ = writeln!(out, "relation {}", self.relation_text(r));
        }
        out
    }

    pub fn relation_text(&self, r: &Relation) -> String {
        let mut s = String::new();
        for (i, t) in r.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let mag = if neg { -&t.coeff } else { t.coeff.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                let _ = write!(s, "{mag}*");
            }
            s.push_str(&self.word_name(&t.word));
        }
        s
    }
}

impl fmt::Display for QuiverPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dsl())
    }
}
