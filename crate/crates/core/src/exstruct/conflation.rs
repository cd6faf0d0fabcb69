use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use crate::exactlin::Matrix;
use crate::homology::minimal_resolution;
use crate::pathalg::VertexId;
use crate::repmod::{is_projective, random_filt_module_with, ModuleMap, ProjMap, Representation};

use super::quiver::DottedArrow;
use super::structures::ExactStructureSpec;
use super::ExstructError;

/// Evidence that `g: Y -> Z` is (or is not) a deflation for a structure:
/// its kernel `f: X -> Y` and the composition factors of its cokernel.
#[derive(Clone, Debug, Serialize)]
pub struct ConflationCertificate {
    #[serde(skip)]
    pub f: ModuleMap,
    #[serde(skip)]
    pub g: ModuleMap,
    #[serde(skip)]
    pub cokernel_module: Representation,
    pub factor_multiset: Vec<VertexId>,
    pub kernel_projective: bool,
    pub verdict: bool,
    pub reason: String,
}

/// `g` is a deflation iff every composition factor of its cokernel is an
/// allowed simple; the kernel is also checked to be projective.
pub fn is_deflation(spec: &ExactStructureSpec, g: &ModuleMap) -> ConflationCertificate {
    let (_, f) = g.kernel();
    let (cokernel_module, _) = g.cokernel();
    let factor_multiset = cokernel_module.composition_factors();
    let kernel_projective = is_projective(f.source());
    let ends_projective = is_projective(g.source()) && is_projective(g.target());
    let names = &spec.quiver.vertex_names;
    let bad: Vec<&str> = factor_multiset
        .iter()
        .filter(|v| !spec.is_allowed(**v))
        .map(|&v| names[v].as_str())
        .collect();
    let (verdict, reason) = if !ends_projective {
        (false, "source or target is not projective".to_string())
    } else if !bad.is_empty() {
        (
            false,
            format!(
                "cokernel has factors outside the allowed simples: {}",
                bad.join(" ")
            ),
        )
    } else if !kernel_projective {
        (false, "kernel is not projective".to_string())
    } else if factor_multiset.is_empty() {
        (true, "split epimorphism (cokernel zero)".to_string())
    } else {
        (true, "cokernel lies in the Serre subcategory".to_string())
    };
    ConflationCertificate {
        f,
        g: g.clone(),
        cokernel_module,
        factor_multiset,
        kernel_projective,
        verdict,
        reason,
    }
}

/// The AR conflation `X ↣ Y ↠ Z` of a dotted arrow: the minimal resolution
/// `0 -> X -> Y -> Z -> S -> 0` of its source simple.
#[derive(Clone, Debug)]
pub struct ArConflation {
    pub arrow: DottedArrow,
    pub x: Vec<VertexId>,
    pub y: Vec<VertexId>,
    pub z: Vec<VertexId>,
    pub f: ProjMap,
    pub g: ProjMap,
}

pub fn ar_conflation(spec: &ExactStructureSpec, k: usize) -> Result<ArConflation, ExstructError> {
    if !spec.chosen.contains(&k) {
        return Err(ExstructError::NotChosen(k));
    }
    let tq = &spec.quiver;
    let arrow = tq.dotted_arrows[k];
    let res = tq.reports[arrow.source]
        .c2_resolution
        .as_ref()
        .expect("2-regular simples carry their resolution");
    let conf = ArConflation {
        arrow,
        x: res.tops(2).to_vec(),
        y: res.tops(1).to_vec(),
        z: res.tops(0).to_vec(),
        f: res.differential(1),
        g: res.differential(0),
    };
    assert_eq!(conf.x, vec![arrow.target], "X is the τ-translate");
    assert_eq!(conf.z, vec![arrow.source]);
    Ok(conf)
}

/// `E = ker([g, -h]: Y ⊕ W -> Z)` with its projection `k: E -> W`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub e: Representation,
    pub k: ModuleMap,
    pub e_projective: bool,
    pub certificate: ConflationCertificate,
}

pub fn pullback_deflation(spec: &ExactStructureSpec, g: &ModuleMap, h: &ModuleMap) -> Pullback {
    assert_eq!(
        g.target().dims(),
        h.target().dims(),
        "g and h must share a target"
    );
    let field = g.source().field();
    let minus = -field.one();
    let diff = g.hstack(&h.scale(&minus));
    let (e, incl) = diff.kernel();
    let (y, w) = (g.source(), h.source());
    let proj_blocks = (0..w.dims().len())
        .map(|v| {
            let mut b = Matrix::zeros(field, w.dim_at(v), y.dim_at(v) + w.dim_at(v));
            b.paste(0, y.dim_at(v), &Matrix::identity(field, w.dim_at(v)));
            b
        })
        .collect();
    let proj = ModuleMap::new(diff.source().clone(), w.clone(), proj_blocks)
        .expect("projection is natural");
    let k = incl.then(&proj);
    let certificate = is_deflation(spec, &k);
    Pullback {
        e_projective: is_projective(&e),
        e,
        k,
        certificate,
    }
}

/// Certificate for `k ∘ g`, plus the multiset bounds forced by the exact
/// sequence `coker g -> coker(k g) -> coker k -> 0`.
#[derive(Clone, Debug, Serialize)]
pub struct CompositionCertificate {
    pub certificate: ConflationCertificate,
    pub multiset_bounds_hold: bool,
}

fn counts(v: &[VertexId]) -> BTreeMap<VertexId, usize> {
    let mut m = BTreeMap::new();
    for &x in v {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

fn sub_multiset(a: &BTreeMap<VertexId, usize>, b: &BTreeMap<VertexId, usize>) -> bool {
    a.iter().all(|(k, n)| b.get(k).copied().unwrap_or(0) >= *n)
}

pub fn compose_deflations(
    spec: &ExactStructureSpec,
    g: &ModuleMap,
    k: &ModuleMap,
) -> CompositionCertificate {
    let composite = g.then(k);
    let certificate = is_deflation(spec, &composite);
    let whole = counts(&certificate.factor_multiset);
    let of_k = counts(&k.cokernel().0.composition_factors());
    let mut union = counts(&g.cokernel().0.composition_factors());
    for (v, n) in &of_k {
        *union.entry(*v).or_insert(0) += n;
    }
    CompositionCertificate {
        multiset_bounds_hold: sub_multiset(&of_k, &whole) && sub_multiset(&whole, &union),
        certificate,
    }
}

/// A random deflation `Y -> Z`: the first differential of the minimal
/// resolution of a random module in the Serre subcategory, plus a split
/// summand. Returns the map as a matrix over Γ.
pub fn random_deflation(spec: &ExactStructureSpec, max_len: usize, rng: &mut impl Rng) -> ProjMap {
    let ab = spec.quiver.algebra();
    let n = ab.vertex_count();
    let mut g = if spec.allowed_simples.is_empty() {
        ProjMap::zero(&[], &[])
    } else {
        let len = rng.gen_range(1..=max_len.max(1));
        let m = random_filt_module_with(ab, &spec.allowed_simples, len, rng);
        let res = minimal_resolution(&m, 3);
        res.differential(0)
    };
    if g.source.is_empty() || rng.gen_bool(0.5) {
        let v = rng.gen_range(0..n);
        g = g.direct_sum(&ProjMap::identity(ab, &[v]));
    }
    g
}

/// Outcome of sampled checks of the pullback and composition axioms.
#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomSample {
    pub pullbacks: usize,
    pub pullbacks_passed: usize,
    pub compositions: usize,
    pub compositions_passed: usize,
    pub failures: Vec<String>,
}

/// Pulls random deflations back along random maps and composes random
/// deflations, certifying every result.
pub fn sample_axioms(
    spec: &ExactStructureSpec,
    pullbacks: usize,
    compositions: usize,
    rng: &mut impl Rng,
) -> AxiomSample {
    let ab = spec.quiver.algebra().clone();
    let n = ab.vertex_count();
    let mut out = AxiomSample {
        pullbacks,
        compositions,
        ..AxiomSample::default()
    };
    for i in 0..pullbacks {
        let g = random_deflation(spec, 3, rng);
        let w_len = rng.gen_range(1..=2);
        let w: Vec<VertexId> = (0..w_len).map(|_| rng.gen_range(0..n)).collect();
        let h = ProjMap::random(&ab, &w, &g.target, false, rng);
        let p = pullback_deflation(spec, &g.to_module_map(&ab), &h.to_module_map(&ab));
        if p.e_projective && p.certificate.verdict {
            out.pullbacks_passed += 1;
        } else {
            out.failures
                .push(format!("pullback #{i}: {}", p.certificate.reason));
        }
    }
    for i in 0..compositions {
        let k = random_deflation(spec, 3, rng);
        // a deflation onto the source of k, summand by summand
        let mut g = ProjMap::zero(&[], &[]);
        for &v in &k.source {
            let piece = match spec.quiver.tau(v) {
                Some(_) if spec.is_allowed(v) && rng.gen_bool(0.7) => {
                    let idx = spec
                        .chosen
                        .iter()
                        .copied()
                        .find(|&c| spec.quiver.dotted_arrows[c].source == v)
                        .expect("allowed vertices carry a chosen arrow");
                    ar_conflation(spec, idx).expect("chosen").g
                }
                _ => ProjMap::identity(&ab, &[v]),
            };
            g = g.direct_sum(&piece);
        }
        let c = compose_deflations(spec, &g.to_module_map(&ab), &k.to_module_map(&ab));
        if c.certificate.verdict && c.multiset_bounds_hold {
            out.compositions_passed += 1;
        } else {
            out.failures
                .push(format!("composition #{i}: {}", c.certificate.reason));
        }
    }
    out
}
