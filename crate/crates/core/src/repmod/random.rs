use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{FieldSpec, Matrix, Scalar};
use crate::pathalg::{AlgebraBasis, VertexId};

use super::maps::ModuleMap;
use super::representation::{Representation, Side};

/// Height bound for random rational coefficients.
const RATIONAL_BOX: i64 = 3;

pub(crate) fn random_scalar(field: FieldSpec, rng: &mut impl Rng) -> Scalar {
    match field {
        FieldSpec::Rationals => field.from_i64(rng.gen_range(-RATIONAL_BOX..=RATIONAL_BOX)),
        FieldSpec::PrimeField(p) => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

/// `0 -> m -> E -> S_top -> 0` with the extension data drawn at random from
/// the space of all admissible gluings. Returns `E` and the inclusion of `m`.
pub fn random_extension_on_top(
    m: &Representation,
    top: VertexId,
    rng: &mut impl Rng,
) -> (Representation, ModuleMap) {
    assert_eq!(m.side(), Side::Right, "right modules only");
    let ab = m.algebra();
    let field = m.field();
    let pres = ab.presentation();
    // unknowns: a vector of M_target for every arrow leaving `top`
    let out_arrows: Vec<usize> = (0..pres.arrows.len())
        .filter(|&a| pres.arrows[a].source == top)
        .collect();
    let mut offset = Vec::with_capacity(out_arrows.len() + 1);
    let mut acc = 0;
    for &a in &out_arrows {
        offset.push(acc);
        acc += m.dim_at(pres.arrows[a].target);
    }
    let unknowns = acc;
    // each relation starting at `top` sends the new vector to
    // Σ c · M(rest of word) m_{first arrow}, which must vanish
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for r in &pres.relations {
        let (s, t) = pres.word_endpoints(&r.terms[0].word).expect("validated");
        if s != top {
            continue;
        }
        let mut block = Matrix::zeros(field, m.dim_at(t), unknowns);
        for term in &r.terms {
            let first = term.word[0];
            let k = out_arrows
                .iter()
                .position(|&a| a == first)
                .expect("arrow leaves top");
            let tail = if term.word.len() > 1 {
                m.word_matrix(&term.word[1..])
            } else {
                Matrix::identity(field, m.dim_at(t))
            };
            let scaled = tail.scale(&term.coeff);
            for i in 0..scaled.rows() {
                for j in 0..scaled.cols() {
                    let cur = block.get(i, offset[k] + j) + scaled.get(i, j);
                    block.set(i, offset[k] + j, cur);
                }
            }
        }
        for i in 0..block.rows() {
            rows.push(block.row(i).to_vec());
        }
    }
    let solutions = Matrix::from_rows_with_cols(field, unknowns, rows).kernel_basis();
    let mut choice = vec![field.zero(); unknowns];
    for j in 0..solutions.cols() {
        let c = random_scalar(field, rng);
        if c.is_zero() {
            continue;
        }
        for (i, slot) in choice.iter_mut().enumerate() {
            let x = solutions.get(i, j);
            if !x.is_zero() {
                *slot += &(x * &c);
            }
        }
    }

    let n = m.dims().len();
    let mut dims = m.dims().to_vec();
    dims[top] += 1;
    let action = (0..pres.arrows.len())
        .map(|a| {
            let (d, c) = (pres.arrows[a].source, pres.arrows[a].target);
            let mut e = Matrix::zeros(field, dims[c], dims[d]);
            e.paste(0, 0, m.action(a));
            if d == top {
                let k = out_arrows.iter().position(|&x| x == a).expect("listed");
                for i in 0..m.dim_at(c) {
                    e.set(i, dims[d] - 1, choice[offset[k] + i].clone());
                }
            }
            e
        })
        .collect();
    let ext = Representation::new(Side::Right, ab.clone(), dims.clone(), action)
        .expect("gluing satisfies every relation");
    let blocks = (0..n)
        .map(|v| {
            let mut b = Matrix::zeros(field, dims[v], m.dim_at(v));
            b.paste(0, 0, &Matrix::identity(field, m.dim_at(v)));
            b
        })
        .collect();
    let incl = ModuleMap::new_unchecked(m.clone(), ext.clone(), blocks);
    (ext, incl)
}

/// A right module of composition length `length` whose factors all lie in
/// `allowed`, built by iterated random extensions. Deterministic per seed.
pub fn random_filt_module(
    ab: &Arc<AlgebraBasis>,
    allowed: &[VertexId],
    length: usize,
    seed: u64,
) -> Representation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_filt_module_with(ab, allowed, length, &mut rng)
}

pub fn random_filt_module_with(
    ab: &Arc<AlgebraBasis>,
    allowed: &[VertexId],
    length: usize,
    rng: &mut impl Rng,
) -> Representation {
    assert!(!allowed.is_empty() && length >= 1);
    let mut m = Representation::zero(ab.clone(), Side::Right);
    for _ in 0..length {
        let top = allowed[rng.gen_range(0..allowed.len())];
        m = random_extension_on_top(&m, top, rng).0;
    }
    m
}
