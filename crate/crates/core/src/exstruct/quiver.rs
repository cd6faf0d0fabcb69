use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::pathalg::{AlgebraBasis, VertexId};

use super::tworeg::{check_two_regular, TwoRegularReport};

/// An irreducible map `P_source -> P_target` between indecomposable
/// projectives with the dimension of its space modulo `J^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SolidArrow {
    pub source: VertexId,
    pub target: VertexId,
    pub multiplicity: usize,
}

/// `P_source ⇢ τ P_source`, one per 2-regular simple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DottedArrow {
    pub source: VertexId,
    pub target: VertexId,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    /// `A`, `B`, ... for orbits carrying dotted arrows, in order of their
    /// smallest vertex; `None` for isolated vertices.
    pub name: Option<String>,
    pub vertices: Vec<VertexId>,
    /// Indices into [`TranslationQuiver::dotted_arrows`].
    pub arrows: Vec<usize>,
    pub stable: bool,
}

/// The quiver of `proj Γ` together with its dotted translation arrows.
#[derive(Clone, Debug, Serialize)]
pub struct TranslationQuiver {
    pub vertex_names: Vec<String>,
    pub solid_arrows: Vec<SolidArrow>,
    pub dotted_arrows: Vec<DottedArrow>,
    pub orbits: Vec<Orbit>,
    pub reports: Vec<TwoRegularReport>,
    #[serde(skip)]
    algebra: Option<Arc<AlgebraBasis>>,
}

fn orbit_name(k: usize) -> String {
    let letters = b"ABCDEFGHIJKLMNOPQRSTUVWXYZ";
    if k < 26 {
        (letters[k] as char).to_string()
    } else {
        format!("{}{}", letters[k % 26] as char, k / 26)
    }
}

impl TranslationQuiver {
    pub fn compute(ab: &Arc<AlgebraBasis>, max_deg: usize) -> Self {
        let reports: Vec<TwoRegularReport> = (0..ab.vertex_count())
            .map(|v| check_two_regular(ab, v, max_deg))
            .collect();
        Self::from_reports(ab, reports)
    }

    pub fn from_reports(ab: &Arc<AlgebraBasis>, reports: Vec<TwoRegularReport>) -> Self {
        let pres = ab.presentation();
        let n = pres.vertex_count();
        // a presentation arrow i -> j lies in e_i Γ e_j = Hom(P_j, P_i)
        let mut counts: BTreeMap<(VertexId, VertexId), usize> = BTreeMap::new();
        for ar in &pres.arrows {
            *counts.entry((ar.target, ar.source)).or_insert(0) += 1;
        }
        let solid_arrows = counts
            .into_iter()
            .map(|((source, target), multiplicity)| SolidArrow {
                source,
                target,
                multiplicity,
            })
            .collect();
        let dotted_arrows: Vec<DottedArrow> = reports
            .iter()
            .filter_map(|r| {
                r.ext2_support_vertex.map(|t| DottedArrow {
                    source: r.vertex,
                    target: t,
                })
            })
            .collect();

        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for d in &dotted_arrows {
            let (a, b) = (find(&mut parent, d.source), find(&mut parent, d.target));
            parent[a.max(b)] = a.min(b);
        }
        let mut groups: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        let mut named = 0;
        let orbits = groups
            .into_values()
            .map(|vertices| {
                let arrows: Vec<usize> = dotted_arrows
                    .iter()
                    .enumerate()
                    .filter(|(_, d)| vertices.contains(&d.source))
                    .map(|(k, _)| k)
                    .collect();
                let stable = !arrows.is_empty()
                    && vertices.iter().all(|v| {
                        dotted_arrows.iter().any(|d| d.source == *v)
                            && dotted_arrows.iter().any(|d| d.target == *v)
                    });
                let name = (!arrows.is_empty()).then(|| {
                    named += 1;
                    orbit_name(named - 1)
                });
                Orbit {
                    name,
                    vertices,
                    arrows,
                    stable,
                }
            })
            .collect();
        TranslationQuiver {
            vertex_names: pres.vertices.clone(),
            solid_arrows,
            dotted_arrows,
            orbits,
            reports,
            algebra: Some(ab.clone()),
        }
    }

    pub fn algebra(&self) -> &Arc<AlgebraBasis> {
        self.algebra.as_ref().expect("quiver built from an algebra")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn two_regular_vertices(&self) -> Vec<VertexId> {
        self.dotted_arrows.iter().map(|d| d.source).collect()
    }

    /// τ on 2-regular vertices.
    pub fn tau(&self, v: VertexId) -> Option<VertexId> {
        self.dotted_arrows
            .iter()
            .find(|d| d.source == v)
            .map(|d| d.target)
    }

    pub fn orbit_by_name(&self, name: &str) -> Option<&Orbit> {
        self.orbits.iter().find(|o| o.name.as_deref() == Some(name))
    }

    pub fn stable_orbits(&self) -> Vec<&Orbit> {
        self.orbits.iter().filter(|o| o.stable).collect()
    }

    pub fn named_orbits(&self) -> Vec<&Orbit> {
        self.orbits.iter().filter(|o| o.name.is_some()).collect()
    }

    pub fn dotted_label(&self, k: usize) -> String {
        let d = self.dotted_arrows[k];
        format!(
            "{} -> {}",
            self.vertex_names[d.source], self.vertex_names[d.target]
        )
    }
}
