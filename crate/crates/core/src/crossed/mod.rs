//! Elements `Σ fₙ δⁿ` of the crossed product `Â ⋊_σ̂ ℤ`.
//!
//! We compute directly in `Â ⋊ ℤ`: in all three models `Â` is the concrete
//! algebra we store, so the Gelfand isomorphism between `A ⋊ ℤ` and `Â ⋊ ℤ`
//! is the identity and statements about one transfer verbatim to the other.

mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::coeff::{sigma_hat, CoeffFn, CoeffKind};
use crate::dynsys::SystemModel;
use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;

pub use text::{format_element, parse_element};

/// Finitely supported map from degrees to nonzero coefficient functions.
#[derive(Clone, Debug)]
pub struct CrossedElement {
    model: Arc<SystemModel>,
    terms: BTreeMap<i64, CoeffFn>,
}

impl PartialEq for CrossedElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_model(other) && self.terms == other.terms
    }
}

impl Eq for CrossedElement {}

impl CrossedElement {
    pub fn zero(model: &Arc<SystemModel>) -> Self {
        CrossedElement {
            model: Arc::clone(model),
            terms: BTreeMap::new(),
        }
    }

    /// `a·δⁿ`; the zero function gives the zero element.
    pub fn monomial(model: &Arc<SystemModel>, a: CoeffFn, n: i64) -> Result<Self> {
        a.check_model(model)?;
        let mut out = CrossedElement::zero(model);
        if !a.is_zero() {
            out.terms.insert(n, a);
        }
        Ok(out)
    }

    /// `1·δⁿ`, available only when `Â` has a unit.
    pub fn delta_power(model: &Arc<SystemModel>, n: i64) -> Result<Self> {
        CrossedElement::monomial(model, CoeffFn::one(model)?, n)
    }

    pub fn from_coeff(model: &Arc<SystemModel>, a: CoeffFn) -> Result<Self> {
        CrossedElement::monomial(model, a, 0)
    }

    /// Builds from `(degree, coefficient)` pairs, summing repeated degrees.
    pub fn from_terms(model: &Arc<SystemModel>, terms: impl IntoIterator<Item = (i64, CoeffFn)>) -> Result<Self> {
        let mut out = CrossedElement::zero(model);
        for (n, a) in terms {
            a.check_model(model)?;
            out.add_coeff(n, &a);
        }
        Ok(out)
    }

    pub fn model(&self) -> &Arc<SystemModel> {
        &self.model
    }

    pub fn terms(&self) -> &BTreeMap<i64, CoeffFn> {
        &self.terms
    }

    pub fn coeff_kind(&self) -> CoeffKind {
        CoeffKind::of(&self.model)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero coefficient functions.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, n: i64) -> CoeffFn {
        self.terms
            .get(&n)
            .cloned()
            .unwrap_or_else(|| CoeffFn::zero(self.coeff_kind()))
    }

    /// Sorted degrees carrying a nonzero coefficient.
    pub fn support_degrees(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    /// Largest `|n|` over the support, 0 for the zero element.
    pub fn degree_reach(&self) -> i64 {
        self.terms.keys().map(|n| n.abs()).max().unwrap_or(0)
    }

    /// Largest absolute coefficient label over all terms.
    pub fn label_reach(&self) -> i64 {
        self.terms.values().map(CoeffFn::label_reach).max().unwrap_or(0)
    }

    pub fn same_model(&self, other: &CrossedElement) -> bool {
        Arc::ptr_eq(&self.model, &other.model) || self.model == other.model
    }

    fn check_same(&self, other: &CrossedElement) -> Result<()> {
        if self.same_model(other) {
            Ok(())
        } else {
            Err(Error::ModelMismatch)
        }
    }

    fn add_coeff(&mut self, n: i64, a: &CoeffFn) {
        if a.is_zero() {
            return;
        }
        let sum = match self.terms.get(&n) {
            Some(existing) => existing.add(a).expect("same coefficient kind"),
            None => a.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&n);
        } else {
            self.terms.insert(n, sum);
        }
    }

    pub fn add(&self, other: &CrossedElement) -> Result<CrossedElement> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (n, a) in &other.terms {
            out.add_coeff(*n, a);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CrossedElement) -> Result<CrossedElement> {
        self.add(&other.scale(&-GaussianRational::one()))
    }

    pub fn scale(&self, c: &GaussianRational) -> CrossedElement {
        let mut out = CrossedElement::zero(&self.model);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(n, a)| (*n, a.scale(c))).collect();
        out
    }

    pub fn neg(&self) -> CrossedElement {
        self.scale(&-GaussianRational::one())
    }

    /// Twisted convolution `(f*g)(n) = Σₖ f(k)·σ̂ᵏ(g(n−k))`.
    pub fn mul(&self, other: &CrossedElement) -> Result<CrossedElement> {
        self.check_same(other)?;
        let mut out = CrossedElement::zero(&self.model);
        for (k, fk) in &self.terms {
            for (m, gm) in &other.terms {
                let twisted = sigma_hat(&self.model, gm, *k)?;
                out.add_coeff(k + m, &fk.mul(&twisted)?);
            }
        }
        Ok(out)
    }

    /// `E(Σ fₙ δⁿ) = f₀`.
    pub fn e_map(&self) -> CoeffFn {
        self.coeff(0)
    }
}

pub fn x_add(f: &CrossedElement, g: &CrossedElement) -> Result<CrossedElement> {
    f.add(g)
}

pub fn x_scale(c: &GaussianRational, f: &CrossedElement) -> CrossedElement {
    f.scale(c)
}

pub fn x_mul(f: &CrossedElement, g: &CrossedElement) -> Result<CrossedElement> {
    f.mul(g)
}

pub fn x_equal(f: &CrossedElement, g: &CrossedElement) -> Result<bool> {
    f.check_same(g)?;
    Ok(f.terms == g.terms)
}

pub fn e_map(f: &CrossedElement) -> CoeffFn {
    f.e_map()
}

pub fn support_degrees(f: &CrossedElement) -> Vec<i64> {
    f.support_degrees()
}

impl fmt::Display for CrossedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap() -> Arc<SystemModel> {
        Arc::new(SystemModel::finite(vec![1, 0]).unwrap())
    }

    fn e(s: &Arc<SystemModel>, k: i64) -> CoeffFn {
        CoeffFn::basis(s, k).unwrap()
    }

    fn mono(s: &Arc<SystemModel>, a: CoeffFn, n: i64) -> CrossedElement {
        CrossedElement::monomial(s, a, n).unwrap()
    }

    #[test]
    fn add_and_scale_examples() {
        let s = swap();
        let f = mono(&s, e(&s, 0), 1).add(&mono(&s, e(&s, 1), 3)).unwrap();
        assert!(f.add(&f.scale(&(-1).into())).unwrap().is_zero());
        let sum = mono(&s, e(&s, 0), 1).add(&mono(&s, e(&s, 1), 1)).unwrap();
        assert_eq!(sum, mono(&s, e(&s, 0).add(&e(&s, 1)).unwrap(), 1));
        assert_eq!(mono(&s, e(&s, 0), 0).scale(&2.into()), mono(&s, e(&s, 0).scale(&2.into()), 0));
    }

    #[test]
    fn twisted_product_examples() {
        let s = swap();
        let a = mono(&s, e(&s, 0), 1);
        assert!(a.mul(&a).unwrap().is_zero());
        assert_eq!(a.mul(&mono(&s, e(&s, 1), 1)).unwrap(), mono(&s, e(&s, 0), 2));
        let one = CrossedElement::delta_power(&s, 0).unwrap();
        let f = a.add(&mono(&s, e(&s, 1), -2)).unwrap();
        assert_eq!(one.mul(&f).unwrap(), f);
        assert_eq!(f.mul(&one).unwrap(), f);
    }

    #[test]
    fn monomials_and_deltas() {
        let s = swap();
        assert!(mono(&s, CoeffFn::zero(CoeffKind::Finite(2)), 5).is_zero());
        let c = Arc::new(SystemModel::circle(GaussianRational::i()).unwrap());
        let d = CrossedElement::delta_power(&c, -1).unwrap();
        assert_eq!(d.support_degrees(), vec![-1]);
        assert_eq!(d.coeff(-1), CoeffFn::one(&c).unwrap());
        let sh = Arc::new(SystemModel::shift());
        assert_eq!(CrossedElement::delta_power(&sh, 1), Err(Error::NotUnital));
    }

    #[test]
    fn e_map_and_degrees() {
        let s = swap();
        let f = mono(&s, e(&s, 0), 0).add(&mono(&s, e(&s, 1), 3)).unwrap();
        assert_eq!(f.e_map(), e(&s, 0));
        assert_eq!(f.support_degrees(), vec![0, 3]);
        assert!(mono(&s, e(&s, 1), 3).e_map().is_zero());
        assert!(CrossedElement::zero(&s).e_map().is_zero());
        assert!(CrossedElement::zero(&s).support_degrees().is_empty());
        assert!(x_equal(&f, &f).unwrap());
    }

    #[test]
    fn model_mismatch() {
        let s = swap();
        let t = Arc::new(SystemModel::finite(vec![0, 1]).unwrap());
        let f = mono(&s, e(&s, 0), 0);
        let g = mono(&t, e(&t, 0), 0);
        assert_eq!(f.add(&g), Err(Error::ModelMismatch));
        assert_eq!(f.mul(&g), Err(Error::ModelMismatch));
        assert_eq!(x_equal(&f, &g), Err(Error::ModelMismatch));
    }
}
