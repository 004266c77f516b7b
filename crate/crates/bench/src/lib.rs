//! Benchmark fixtures; the benches live in `benches/`.

use std::sync::Arc;

use cpw_core::sample::{random_element, rng};
use cpw_core::{CrossedElement, GaussianRational, SystemModel};

/// The three models exercised by the benches.
pub fn models() -> Vec<(&'static str, Arc<SystemModel>)> {
    vec![
        ("five_cycle", Arc::new(SystemModel::finite(vec![1, 2, 3, 4, 0]).expect("valid permutation"))),
        ("shift", Arc::new(SystemModel::shift())),
        ("circle", Arc::new(SystemModel::circle(GaussianRational::from_fracs(3, 5, 4, 5)).expect("unit modulus"))),
    ]
}

pub fn elements(s: &Arc<SystemModel>, count: usize, seed: u64) -> Vec<CrossedElement> {
    let mut r = rng(seed);
    (0..count).map(|_| random_element(s, &mut r)).collect()
}
