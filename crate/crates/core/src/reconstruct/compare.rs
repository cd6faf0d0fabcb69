use serde::Serialize;

use crate::exactlin::Scalar;
use crate::pathalg::{AlgebraBasis, ArrowId, Element, QuiverPresentation, DEFAULT_DEGREE_CAP};

use super::endo::AlgebraPresentation;
use super::ReconstructError;

/// Outcome of matching a hand-written presentation against a reconstructed
/// one: an arrow assignment (up to sign) under which every candidate relation
/// vanishes in `Γ`, and equal dimensions.
#[derive(Clone, Debug, Serialize)]
pub struct ComparisonReport {
    pub isomorphic: bool,
    /// `(candidate arrow, sign, reconstructed arrow)`.
    pub arrow_map: Vec<(String, i8, String)>,
    pub candidate_dim: usize,
    pub reconstructed_dim: usize,
    pub reason: String,
}

struct Search<'a> {
    pres: &'a AlgebraPresentation,
    candidate: &'a QuiverPresentation,
    options: Vec<Vec<ArrowId>>,
    signs: Vec<Scalar>,
    /// relations checkable once arrows `0..=k` are assigned, indexed by `k`
    ready: Vec<Vec<usize>>,
    choice: Vec<(ArrowId, usize)>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn relation_vanishes(&self, r: usize) -> bool {
        let mut acc = Element::zero();
        for t in &self.candidate.relations[r].terms {
            let mut coeff = t.coeff.clone();
            let mut word = Vec::with_capacity(t.word.len());
            for &a in &t.word {
                let (target, s) = self.choice[a];
                coeff = &coeff * &self.signs[s];
                word.push(target);
            }
            acc.add_scaled(&self.pres.evaluate(&word), &coeff);
        }
        acc.is_zero()
    }

    fn run(&mut self, k: usize) -> bool {
        if k == self.options.len() {
            return true;
        }
        for opt in self.options[k].clone() {
            if self.used[opt] {
                continue;
            }
            self.used[opt] = true;
            for s in 0..self.signs.len() {
                self.choice.push((opt, s));
                if self.ready[k].iter().all(|&r| self.relation_vanishes(r)) && self.run(k + 1) {
                    return true;
                }
                self.choice.pop();
            }
            self.used[opt] = false;
        }
        false
    }
}

/// Looks for an isomorphism from `kQ'/I'` (the candidate) to the reconstructed
/// algebra sending each candidate arrow to `±` a reconstructed arrow with the
/// same endpoints. The assignment gives a surjection, so equal dimensions make
/// it an isomorphism.
pub fn compare_with_presentation(
    pres: &AlgebraPresentation,
    candidate: &QuiverPresentation,
) -> Result<ComparisonReport, ReconstructError> {
    let vmap: Vec<usize> = candidate
        .vertices
        .iter()
        .map(|n| {
            pres.quiver
                .vertex_index(n)
                .ok_or_else(|| ReconstructError::UnknownVertex(n.clone()))
        })
        .collect::<Result<_, _>>()?;
    let candidate_dim = AlgebraBasis::compute(candidate, DEFAULT_DEGREE_CAP)?.total_dim();
    let mut report = ComparisonReport {
        isomorphic: false,
        arrow_map: Vec::new(),
        candidate_dim,
        reconstructed_dim: pres.dim_total,
        reason: String::new(),
    };
    if candidate.vertices.len() != pres.quiver.vertices.len()
        || candidate.arrows.len() != pres.quiver.arrows.len()
    {
        report.reason = "vertex or arrow counts differ".into();
        return Ok(report);
    }
    if candidate_dim != pres.dim_total {
        report.reason = format!("dimensions differ: {candidate_dim} vs {}", pres.dim_total);
        return Ok(report);
    }
    let options: Vec<Vec<ArrowId>> = candidate
        .arrows
        .iter()
        .map(|a| {
            pres.quiver
                .arrows
                .iter()
                .enumerate()
                .filter(|(_, b)| b.source == vmap[a.source] && b.target == vmap[a.target])
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let mut ready = vec![Vec::new(); options.len()];
    for (r, rel) in candidate.relations.iter().enumerate() {
        let last = rel
            .terms
            .iter()
            .flat_map(|t| t.word.iter().copied())
            .max()
            .unwrap_or(0);
        ready[last].push(r);
    }
    let field = candidate.field;
    let mut signs = vec![field.one()];
    if field.characteristic() != 2 {
        signs.push(-field.one());
    }
    let mut search = Search {
        pres,
        candidate,
        options,
        signs,
        ready,
        choice: Vec::new(),
        used: vec![false; pres.quiver.arrows.len()],
    };
    if search.run(0) {
        report.isomorphic = true;
        report.arrow_map = search
            .choice
            .iter()
            .enumerate()
            .map(|(a, &(b, s))| {
                (
                    candidate.arrows[a].name.clone(),
                    if s == 0 { 1 } else { -1 },
                    pres.quiver.arrows[b].name.clone(),
                )
            })
            .collect();
        report.reason = "relations vanish and dimensions agree".into();
    } else {
        report.reason = "no signed arrow assignment kills the candidate relations".into();
    }
    Ok(report)
}
