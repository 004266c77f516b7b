use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::certificate::{Certificate, ChainStep};
use super::span::{ideal_window_span, span_intersection_element, window_products, Window};
use crate::coeff::{bump, evaluate, sigma_hat, vanishing_generators, window_labels, CoeffFn};
use crate::commutant::in_commutant_structural;
use crate::crossed::CrossedElement;
use crate::dynsys::{
    apply_sigma_tilde, aperiodic_points_dense, disjoint_invariant_open_sets, has_empty_interior,
    is_minimal, orbit, per_n, Point, PointSet, SystemModel,
};
use crate::error::{Error, Result};

fn point_of(s: &SystemModel, label: i64) -> Point {
    match s {
        SystemModel::FinitePermutation(_) => Point::Finite(label as usize),
        SystemModel::IntegerShift => Point::Shift(label),
        SystemModel::CircleRotation(_) => unreachable!("labels of Laurent polynomials are exponents"),
    }
}

fn lowest_term(f: &CrossedElement) -> Result<(i64, CoeffFn)> {
    f.terms()
        .iter()
        .next()
        .map(|(n, a)| (*n, a.clone()))
        .ok_or(Error::ZeroElement)
}

/// Right factor `σ̂⁻ⁿ(a)·δ⁻ⁿ`, which turns `a·δⁿ` into `a²`.
fn squaring_factor(s: &Arc<SystemModel>, a: &CoeffFn, n: i64) -> Result<CrossedElement> {
    CrossedElement::monomial(s, sigma_hat(s, a, -n)?, -n)
}

/// Nonzero element of `(f) ∩ Â` built from one aperiodic point.
pub fn witness_in_a(f: &CrossedElement) -> Result<(CoeffFn, Certificate)> {
    let s = f.model();
    let caps = s.capabilities();
    if !caps.regular_bumps || !aperiodic_points_dense(s) {
        return Err(Error::PreconditionFailed(
            "needs regular bumps and dense aperiodic points".into(),
        ));
    }
    let (n1, lead) = lowest_term(f)?;
    // Every point of the shift model is aperiodic; take the smallest in supp(f_{n₁}).
    let x = point_of(s, *lead.terms().keys().next().expect("nonzero coefficient"));
    let h = CrossedElement::from_coeff(s, bump(s, &x)?)?;
    let g = CrossedElement::from_coeff(s, bump(s, &apply_sigma_tilde(s, &x, -n1)?)?)?;
    let mono = h.mul(f)?.mul(&g)?;
    let (i, ai) = lowest_term(&mono)?;
    let right = squaring_factor(s, &ai, i)?;
    let a = mono.mul(&right)?.e_map();
    let cert = Certificate::Chain(vec![
        ChainStep {
            left: Some(h),
            right: Some(g),
        },
        ChainStep {
            left: None,
            right: Some(right),
        },
    ]);
    Ok((a, cert))
}

/// Nonzero element of `(f) ∩ A′`, with the number of term-reducing steps.
pub fn witness_in_commutant(f: &CrossedElement) -> Result<(CrossedElement, Certificate, usize)> {
    let s = f.model();
    if !s.capabilities().regular_bumps {
        return Err(Error::PreconditionFailed("needs regular bumps".into()));
    }
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    if aperiodic_points_dense(s) {
        let (a, cert) = witness_in_a(f)?;
        return Ok((CrossedElement::from_coeff(s, a)?, cert, 0));
    }
    let mut g = f.clone();
    let mut steps = Vec::new();
    let mut iterations = 0;
    loop {
        // Normalize so that the degree-0 coefficient is f_{n₁}² ≠ 0.
        let (n1, lead) = lowest_term(&g)?;
        let right = squaring_factor(s, &lead, n1)?;
        g = g.mul(&right)?;
        steps.push(ChainStep {
            left: None,
            right: Some(right),
        });
        let verdict = in_commutant_structural(s, &g);
        if verdict.member {
            return Ok((g, Certificate::Chain(steps), iterations));
        }
        let j = verdict.failing_degree.expect("non-member has a failing degree");
        let x = verdict.failing_point.expect("discrete models report a point");
        // x is not j-periodic, so this kills degree 0 and keeps degree j.
        let a = CrossedElement::from_coeff(s, bump(s, &x)?)?;
        let h = CrossedElement::from_coeff(s, bump(s, &apply_sigma_tilde(s, &x, -j)?)?)?;
        g = a.mul(&g)?.mul(&h)?;
        steps.push(ChainStep {
            left: Some(a),
            right: Some(h),
        });
        iterations += 1;
    }
}

/// Smallest `n ≥ 1` whose `Perⁿ` has nonempty interior.
pub fn default_period(s: &SystemModel) -> Option<usize> {
    (1..=s.period_bound()).find(|&n| !has_empty_interior(s, &per_n(s, n as i64).expect("n > 0")))
}

/// `f + f·δⁿ` with `supp(f) ⊆ Perⁿ`: `f = 1` when `Perⁿ` is everything,
/// otherwise the indicator of the first point of `Perⁿ`.
pub fn zero_intersection_generator(s: &Arc<SystemModel>, n: usize) -> Result<(CrossedElement, CoeffFn)> {
    if n == 0 {
        return Err(Error::ZeroPeriod);
    }
    let per = per_n(s, n as i64)?;
    if has_empty_interior(s, &per) {
        return Err(Error::PreconditionFailed(format!("Per^{n} has empty interior")));
    }
    let f = match &per {
        PointSet::All => CoeffFn::one(s)?,
        PointSet::Finite(points) => bump(s, &points[0])?,
        other => return Err(Error::Unsupported(format!("choosing a coefficient supported in {other}"))),
    };
    let gen = CrossedElement::from_terms(s, [(0, f.clone()), (n as i64, f.clone())])?;
    Ok((gen, f))
}

/// Whether `h = Σ bᵢ(δⁱ + δⁱ⁺ⁿ)` for finitely supported `b`, by forward
/// substitution `b_d = h_d − b_{d−n}`.
pub fn in_paired_subspace(h: &CrossedElement, n: usize) -> bool {
    let n = n as i64;
    let (Some(&lo), Some(&hi)) = (h.terms().keys().next(), h.terms().keys().next_back()) else {
        return true;
    };
    let mut b: BTreeMap<i64, CoeffFn> = BTreeMap::new();
    for d in lo..=hi {
        let prev = b.get(&(d - n)).cloned().unwrap_or_else(|| CoeffFn::zero(h.coeff_kind()));
        let bd = h.coeff(d).sub(&prev).expect("same kind");
        // h_{d+n} = b_{d+n} + b_d with both beyond the support forces b_d = 0.
        if d > hi - n && !bd.is_zero() {
            return false;
        }
        b.insert(d, bd);
    }
    true
}

/// Checks that every window product of `gen = f + f·δⁿ` lies in the paired
/// subspace and that the subspace meets `Â` only in zero.
pub fn verify_paired_form(s: &Arc<SystemModel>, n: usize, gen: &CrossedElement, w: &Window) -> Result<bool> {
    let f = gen.coeff(0);
    let expected = CrossedElement::from_terms(s, [(0, f.clone()), (n as i64, f)])?;
    if n == 0 || gen.is_zero() || *gen != expected {
        return Err(Error::PreconditionFailed(format!("generator is not of the form f + f*d^{n}")));
    }
    let gens = std::slice::from_ref(gen);
    let products = window_products(s, gens, w)?;
    let products_paired = products
        .par_iter()
        .all(|spec| spec.evaluate(gens).map(|x| in_paired_subspace(&x, n)).unwrap_or(false));
    let labels = window_labels(s, w.support_radius);
    let no_coefficient_paired = labels.iter().all(|&k| {
        let a = CrossedElement::from_coeff(s, CoeffFn::basis(s, k).expect("window label")).expect("matches model");
        !in_paired_subspace(&a, n)
    });
    Ok(products_paired && no_coefficient_paired)
}

/// Lifts coefficient functions to degree-0 crossed-product elements.
fn lift(s: &Arc<SystemModel>, fs: Vec<CoeffFn>) -> Vec<CrossedElement> {
    fs.into_iter()
        .map(|a| CrossedElement::from_coeff(s, a).expect("matches model"))
        .collect()
}

/// Generators of a proper ideal from a non-dense orbit, and whether every
/// window-span element has all coefficients vanishing at `mu`.
pub fn proper_ideal_from_nondense_orbit(
    s: &Arc<SystemModel>,
    mu: &Point,
    w: &Window,
) -> Result<(Vec<CrossedElement>, bool)> {
    s.check_point(mu)?;
    let dense = match s.as_ref() {
        SystemModel::FinitePermutation(_) => is_minimal(s),
        _ => aperiodic_points_dense(s),
    };
    if dense {
        return Err(Error::PreconditionFailed(format!("orbit of {mu} is dense")));
    }
    let (points, _) = orbit(s, mu, s.period_bound())?;
    let closure = PointSet::finite(s, points);
    let gens = lift(s, vanishing_generators(s, &closure, w.support_radius)?);
    let span = ideal_window_span(&gens, w)?;
    let vanish = span.basis_elements().iter().all(|x| {
        x.terms()
            .values()
            .all(|a| evaluate(s, a, mu).map(|v| v.is_zero()).unwrap_or(false))
    });
    Ok((gens, vanish))
}

/// Outcome of [`prime_refutation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeRefutation {
    pub gens1: Vec<CrossedElement>,
    pub gens2: Vec<CrossedElement>,
    /// Some nonzero element in both window spans, if any.
    pub common: Option<CrossedElement>,
    pub verified: bool,
}

/// Two nonzero ideals with zero windowed intersection for a non-transitive
/// finite system.
pub fn prime_refutation(s: &Arc<SystemModel>, w: &Window) -> Result<PrimeRefutation> {
    if !matches!(s.as_ref(), SystemModel::FinitePermutation(_)) {
        return Err(Error::Unsupported(format!("prime refutation on the {} model", s.kind_name())));
    }
    let (o1, o2) = disjoint_invariant_open_sets(s)?
        .ok_or_else(|| Error::PreconditionFailed("system is topologically transitive".into()))?;
    // Discrete spaces: closures are the sets themselves.
    let gens1 = lift(s, vanishing_generators(s, &o1, 0)?);
    let gens2 = lift(s, vanishing_generators(s, &o2, 0)?);
    let span1 = ideal_window_span(&gens1, w)?;
    let span2 = ideal_window_span(&gens2, w)?;
    let common = span_intersection_element(&span1, &span2)?;
    // E vanishes on both spans' intersection; with a unit, E(I) = 0 forces I = 0.
    let e_zero = common.as_ref().is_none_or(|x| x.e_map().is_zero());
    let verified = common.is_none() && e_zero;
    Ok(PrimeRefutation {
        gens1,
        gens2,
        common,
        verified,
    })
}

/// Common nonzero element of `(f)` and `(g)` with one certificate per ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeWitness {
    pub element: CrossedElement,
    pub cert_f: Certificate,
    pub cert_g: Certificate,
}

pub fn prime_witness(f: &CrossedElement, g: &CrossedElement, w: &Window) -> Result<Option<PrimeWitness>> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroElement);
    }
    let span_f = ideal_window_span(std::slice::from_ref(f), w)?;
    let span_g = ideal_window_span(std::slice::from_ref(g), w)?;
    let Some(element) = span_intersection_element(&span_f, &span_g)? else {
        return Ok(None);
    };
    let cert_f = span_f.membership(&element)?.expect("element lies in the first span");
    let cert_g = span_g.membership(&element)?.expect("element lies in the second span");
    Ok(Some(PrimeWitness { element, cert_f, cert_g }))
}

/// First window indicator `e_k` (degree 0) in the window span of `gens`.
pub fn find_indicator(gens: &[CrossedElement], w: &Window) -> Result<Option<(CoeffFn, Certificate)>> {
    let span = ideal_window_span(gens, w)?;
    let s = span.model();
    if !s.capabilities().regular_bumps {
        return Err(Error::PreconditionFailed("indicators need a discrete model".into()));
    }
    let labels: Vec<i64> = span
        .coordinate_index()
        .iter()
        .filter(|(n, _)| *n == 0)
        .map(|(_, k)| *k)
        .collect();
    for k in labels {
        let e = CoeffFn::basis(s, k)?;
        if let Some(cert) = span.membership(&CrossedElement::from_coeff(s, e.clone())?)? {
            return Ok(Some((e, cert)));
        }
    }
    Ok(None)
}
