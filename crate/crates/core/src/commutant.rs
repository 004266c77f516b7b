//! The commutant `A′` of `Â` inside the crossed product.

use std::sync::Arc;

use crate::coeff::{evaluate, supp, window_labels, CoeffFn};
use crate::crossed::CrossedElement;
use crate::dynsys::{per_n, Point, PointSet, SystemModel};
use crate::exactnum::{rational, GaussianRational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutantVerdict {
    pub member: bool,
    pub failing_degree: Option<i64>,
    pub failing_point: Option<Point>,
}

impl CommutantVerdict {
    fn member() -> Self {
        CommutantVerdict {
            member: true,
            failing_degree: None,
            failing_point: None,
        }
    }
}

/// Rational points `((1−k²) + 2k·i)/(1+k²)` of the unit circle for
/// `k = 0, 1, −1, 2, −2, …`; they are pairwise distinct.
pub fn circle_points() -> impl Iterator<Item = Point> {
    (0i64..).flat_map(|k| if k == 0 { vec![0] } else { vec![k, -k] }).map(|k| {
        let den = 1 + k * k;
        Point::Circle(GaussianRational::new(rational(1 - k * k, den), rational(2 * k, den)))
    })
}

/// First point of `supp(a)` in canonical order. On the circle `supp(a)` is
/// everything, so we return the first rational point where `a` does not vanish.
fn first_support_point(s: &SystemModel, a: &CoeffFn, outside: &PointSet) -> Option<Point> {
    match s {
        SystemModel::FinitePermutation(_) => a
            .terms()
            .keys()
            .map(|&x| Point::Finite(x as usize))
            .find(|p| !outside.contains(p)),
        SystemModel::IntegerShift => a.terms().keys().map(|&x| Point::Shift(x)).find(|p| !outside.contains(p)),
        // A nonzero Laurent polynomial has finitely many roots, so this terminates.
        SystemModel::CircleRotation(_) => circle_points()
            .filter(|p| !outside.contains(p))
            .find(|p| !evaluate(s, a, p).expect("circle point").is_zero()),
    }
}

/// Degreewise test `supp(fₙ) ⊆ Perⁿ` for every `n ≠ 0`.
pub fn in_commutant_structural(s: &SystemModel, f: &CrossedElement) -> CommutantVerdict {
    for (&n, fn_) in f.terms() {
        if n == 0 {
            continue;
        }
        let per = per_n(s, n).expect("n is nonzero");
        let support = supp(s, fn_).expect("coefficient matches model");
        if !support.is_subset_of(&per) {
            return CommutantVerdict {
                member: false,
                failing_degree: Some(n),
                failing_point: first_support_point(s, fn_, &per),
            };
        }
    }
    CommutantVerdict::member()
}

/// `max |degree| + max |label| + 1`.
pub fn default_probe_radius(f: &CrossedElement) -> usize {
    (f.degree_reach() + f.label_reach() + 1) as usize
}

fn probes(s: &SystemModel, f: &CrossedElement, probe_radius: usize) -> Vec<CoeffFn> {
    let labels: Vec<i64> = match s {
        SystemModel::FinitePermutation(p) => (0..p.len() as i64).collect(),
        SystemModel::IntegerShift => {
            let r = probe_radius as i64;
            let mut ls: Vec<i64> = (-r..=r).collect();
            for (n, a) in f.terms() {
                for k in a.terms().keys() {
                    ls.push(*k);
                    ls.push(k - n);
                }
            }
            ls.sort_unstable();
            ls.dedup();
            ls
        }
        SystemModel::CircleRotation(_) => vec![1],
    };
    labels
        .into_iter()
        .map(|k| CoeffFn::basis(s, k).expect("label in range"))
        .collect()
}

/// Checks `f*a = a*f` against a generating family of `Â`.
pub fn in_commutant_direct(s: &Arc<SystemModel>, f: &CrossedElement, probe_radius: usize) -> bool {
    probes(s, f, probe_radius).into_iter().all(|a| {
        let a = CrossedElement::from_coeff(s, a).expect("probe matches model");
        f.mul(&a).expect("same model") == a.mul(f).expect("same model")
    })
}

/// Basis `{e·δⁿ : |n| ≤ degree_bound, supp(e) ⊆ Perⁿ}` of the windowed commutant,
/// ordered by degree and then label.
pub fn commutant_basis_window(s: &Arc<SystemModel>, degree_bound: usize, radius: usize) -> Vec<CrossedElement> {
    let labels = window_labels(s, radius);
    let d = degree_bound as i64;
    let mut out = Vec::new();
    for n in -d..=d {
        let per = if n == 0 { PointSet::All } else { per_n(s, n).expect("n is nonzero") };
        for &k in &labels {
            let a = CoeffFn::basis(s, k).expect("window label");
            if supp(s, &a).expect("matches model").is_subset_of(&per) {
                out.push(CrossedElement::monomial(s, a, n).expect("matches model"));
            }
        }
    }
    out
}

/// `A′ = Â`, decided by scanning `Perⁿ` for `1 ≤ n ≤ period_bound`: a discrete
/// model gains a commutant element from any nonempty `Perⁿ`, the circle only
/// when `Perⁿ` is everything.
pub fn is_maximal_abelian(s: &SystemModel) -> bool {
    (1..=s.period_bound() as i64).all(|n| {
        let per = per_n(s, n).expect("n is nonzero");
        match s {
            SystemModel::CircleRotation(_) => per != PointSet::All,
            _ => per.is_empty(),
        }
    })
}
