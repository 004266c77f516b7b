//! Seeded random elements: degrees in `[−3, 3]`, one to four nonzero terms,
//! coefficient labels within radius 3 (all points of a finite model), one to
//! three labels per coefficient, scalars from `{±1, ±i, ±1/2, 2}`.

use std::sync::Arc;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeff::CoeffFn;
use crate::crossed::CrossedElement;
use crate::dynsys::SystemModel;
use crate::exactnum::GaussianRational;

pub const DEGREE_RADIUS: i64 = 3;
pub const LABEL_RADIUS: i64 = 3;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn scalar_pool() -> Vec<GaussianRational> {
    vec![
        GaussianRational::from_ints(1, 0),
        GaussianRational::from_ints(-1, 0),
        GaussianRational::from_ints(0, 1),
        GaussianRational::from_ints(0, -1),
        GaussianRational::from_fracs(1, 2, 0, 1),
        GaussianRational::from_fracs(-1, 2, 0, 1),
        GaussianRational::from_ints(2, 0),
    ]
}

pub fn random_scalar(rng: &mut SampleRng) -> GaussianRational {
    scalar_pool().choose(rng).expect("pool is nonempty").clone()
}

fn label_range(s: &SystemModel) -> (i64, i64) {
    match s {
        SystemModel::FinitePermutation(p) => (0, p.len() as i64 - 1),
        _ => (-LABEL_RADIUS, LABEL_RADIUS),
    }
}

/// Nonzero coefficient function with one to three labels.
pub fn random_coeff(s: &SystemModel, rng: &mut SampleRng) -> CoeffFn {
    let (lo, hi) = label_range(s);
    loop {
        let count = rng.random_range(1..=3);
        let terms: Vec<(i64, GaussianRational)> = (0..count)
            .map(|_| (rng.random_range(lo..=hi), random_scalar(rng)))
            .collect();
        let a = CoeffFn::from_terms(s, terms).expect("labels in range");
        if !a.is_zero() {
            return a;
        }
    }
}

/// Nonzero element; distinct degrees, each with a nonzero coefficient.
pub fn random_element(s: &Arc<SystemModel>, rng: &mut SampleRng) -> CrossedElement {
    let count = rng.random_range(1..=4);
    let mut degrees: Vec<i64> = (-DEGREE_RADIUS..=DEGREE_RADIUS).collect();
    let mut terms = Vec::new();
    for _ in 0..count {
        let i = rng.random_range(0..degrees.len());
        let n = degrees.swap_remove(i);
        terms.push((n, random_coeff(s, rng)));
    }
    CrossedElement::from_terms(s, terms).expect("coefficients match the model")
}

/// Random combination of up to three elements of `pool`, possibly zero.
pub fn random_combination(
    s: &Arc<SystemModel>,
    pool: &[CrossedElement],
    rng: &mut SampleRng,
) -> CrossedElement {
    let mut acc = CrossedElement::zero(s);
    if pool.is_empty() {
        return acc;
    }
    for _ in 0..rng.random_range(1..=3) {
        let x = pool.choose(rng).expect("pool is nonempty");
        acc = acc.add(&x.scale(&random_scalar(rng))).expect("same model");
    }
    acc
}
