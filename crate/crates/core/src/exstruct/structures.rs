use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::Serialize;

use crate::pathalg::VertexId;

use super::quiver::TranslationQuiver;
use super::ExstructError;

/// Largest number of structures [`enumerate_exact_structures`] will list.
pub const MATERIALIZE_LIMIT: u64 = 1 << 20;

/// An exact structure on `proj Γ`, given by its set of dotted arrows.
#[derive(Clone, Debug, Serialize)]
pub struct ExactStructureSpec {
    #[serde(skip)]
    pub quiver: Arc<TranslationQuiver>,
    /// Indices into the quiver's dotted arrows, increasing.
    pub chosen: Vec<usize>,
    /// Sources of the chosen arrows: the simples generating the Serre subcategory.
    pub allowed_simples: Vec<VertexId>,
    pub projective_vertices: Vec<VertexId>,
    pub injective_vertices: Vec<VertexId>,
    pub frobenius: bool,
}

impl PartialEq for ExactStructureSpec {
    fn eq(&self, other: &Self) -> bool {
        self.chosen == other.chosen && self.allowed_simples == other.allowed_simples
    }
}

impl ExactStructureSpec {
    pub fn new(quiver: Arc<TranslationQuiver>, chosen: impl IntoIterator<Item = usize>) -> Self {
        let chosen: Vec<usize> = chosen
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let n = quiver.vertex_count();
        let sources: BTreeSet<VertexId> = chosen
            .iter()
            .map(|&k| quiver.dotted_arrows[k].source)
            .collect();
        let targets: BTreeSet<VertexId> = chosen
            .iter()
            .map(|&k| quiver.dotted_arrows[k].target)
            .collect();
        let projective_vertices: Vec<VertexId> = (0..n).filter(|v| !sources.contains(v)).collect();
        let injective_vertices: Vec<VertexId> = (0..n).filter(|v| !targets.contains(v)).collect();
        let frobenius = projective_vertices == injective_vertices;
        ExactStructureSpec {
            quiver,
            chosen,
            allowed_simples: sources.into_iter().collect(),
            projective_vertices,
            injective_vertices,
            frobenius,
        }
    }

    pub fn split(quiver: Arc<TranslationQuiver>) -> Self {
        Self::new(quiver, [])
    }

    pub fn all(quiver: Arc<TranslationQuiver>) -> Self {
        let k = quiver.dotted_arrows.len();
        Self::new(quiver, 0..k)
    }

    /// Whether `chosen` is a union of stable orbits (checked independently of
    /// the projective/injective comparison).
    pub fn is_union_of_stable_orbits(&self) -> bool {
        self.quiver.orbits.iter().all(|o| {
            let picked = o.arrows.iter().filter(|k| self.chosen.contains(k)).count();
            picked == 0 || (o.stable && picked == o.arrows.len())
        })
    }

    pub fn is_allowed(&self, v: VertexId) -> bool {
        self.allowed_simples.binary_search(&v).is_ok()
    }

    /// A short label: orbit names when `chosen` is a union of named orbits,
    /// arrow indices otherwise.
    pub fn label(&self) -> String {
        if self.chosen.is_empty() {
            return "split".into();
        }
        let mut names = Vec::new();
        let mut covered = BTreeSet::new();
        for o in self.quiver.named_orbits() {
            if o.arrows.iter().all(|k| self.chosen.contains(k)) {
                names.push(o.name.clone().expect("named"));
                covered.extend(o.arrows.iter().copied());
            }
        }
        if covered.len() == self.chosen.len() {
            names.join(",")
        } else {
            self.chosen
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

/// `2^(number of dotted arrows)`.
pub fn structure_count(tq: &TranslationQuiver) -> BigUint {
    BigUint::from(1u8) << tq.dotted_arrows.len()
}

/// All exact structures in bitmask order (bit `k` selects dotted arrow `k`).
pub fn enumerate_exact_structures(
    tq: &Arc<TranslationQuiver>,
) -> Result<impl Iterator<Item = ExactStructureSpec>, ExstructError> {
    let k = tq.dotted_arrows.len();
    if structure_count(tq) > BigUint::from(MATERIALIZE_LIMIT) {
        return Err(ExstructError::TooManyStructures(k));
    }
    let tq = tq.clone();
    Ok((0u64..1 << k).map(move |mask| {
        ExactStructureSpec::new(tq.clone(), (0..k).filter(|b| mask >> b & 1 == 1))
    }))
}

/// One structure per subset of the stable orbits, in bitmask order over the
/// stable orbits sorted by name.
pub fn frobenius_structures(tq: &Arc<TranslationQuiver>) -> Vec<ExactStructureSpec> {
    let stable = tq.stable_orbits();
    (0u64..1 << stable.len())
        .map(|mask| {
            let chosen = stable
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .flat_map(|(_, o)| o.arrows.iter().copied());
            ExactStructureSpec::new(tq.clone(), chosen)
        })
        .collect()
}

/// Parses `A,B` (orbit names), `0,2,3` (arrow indices), `all`, or an empty
/// string (the split structure).
pub fn parse_dotted_selection(
    tq: &Arc<TranslationQuiver>,
    text: &str,
) -> Result<ExactStructureSpec, ExstructError> {
    let text = text.trim();
    if text.is_empty() || text == "split" || text == "none" {
        return Ok(ExactStructureSpec::split(tq.clone()));
    }
    if text == "all" {
        return Ok(ExactStructureSpec::all(tq.clone()));
    }
    let mut chosen = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Ok(k) = item.parse::<usize>() {
            if k >= tq.dotted_arrows.len() {
                return Err(ExstructError::UnknownSelection(item.into()));
            }
            chosen.push(k);
        } else if let Some(o) = tq.orbit_by_name(item) {
            chosen.extend(o.arrows.iter().copied());
        } else {
            return Err(ExstructError::UnknownSelection(item.into()));
        }
    }
    Ok(ExactStructureSpec::new(tq.clone(), chosen))
}
