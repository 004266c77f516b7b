//! The coefficient algebra `Â` of each model.
//!
//! All three variants share one sparse representation: a map from an integer
//! label to a nonzero scalar. For the discrete models the label is a point and
//! the entry is the value there (so the map lists indicator coefficients); for
//! the circle model the label is the exponent of a Laurent monomial `tᵐ`.

use std::collections::BTreeMap;

use crate::dynsys::{Point, PointSet, SystemModel};
use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;

/// Which concrete algebra a [`CoeffFn`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffKind {
    /// Functions on `{0..N-1}`.
    Finite(usize),
    /// Finitely supported functions on ℤ.
    FinSupp,
    /// Laurent polynomials in `t`.
    Laurent,
}

impl CoeffKind {
    pub fn of(model: &SystemModel) -> CoeffKind {
        match model {
            SystemModel::FinitePermutation(p) => CoeffKind::Finite(p.len()),
            SystemModel::IntegerShift => CoeffKind::FinSupp,
            SystemModel::CircleRotation(_) => CoeffKind::Laurent,
        }
    }

    pub fn is_pointwise(self) -> bool {
        !matches!(self, CoeffKind::Laurent)
    }
}

/// An element of `Â` in canonical sparse form (no stored zeros).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffFn {
    kind: CoeffKind,
    terms: BTreeMap<i64, GaussianRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffOp {
    Add,
    Mul,
}

impl CoeffFn {
    pub fn zero(kind: CoeffKind) -> Self {
        CoeffFn {
            kind,
            terms: BTreeMap::new(),
        }
    }

    /// Builds from `(label, value)` pairs, summing repeats and dropping zeros.
    pub fn from_terms(
        model: &SystemModel,
        terms: impl IntoIterator<Item = (i64, GaussianRational)>,
    ) -> Result<Self> {
        let kind = CoeffKind::of(model);
        let mut out = CoeffFn::zero(kind);
        for (label, value) in terms {
            if let CoeffKind::Finite(n) = kind {
                if label < 0 || label as usize >= n {
                    return Err(Error::KindMismatch(format!(
                        "indicator e_{label} outside a {n}-point space"
                    )));
                }
            }
            out.add_term(label, &value);
        }
        Ok(out)
    }

    pub fn one(model: &SystemModel) -> Result<Self> {
        match model {
            SystemModel::FinitePermutation(p) => {
                CoeffFn::from_terms(model, (0..p.len() as i64).map(|k| (k, GaussianRational::one())))
            }
            SystemModel::IntegerShift => Err(Error::NotUnital),
            SystemModel::CircleRotation(_) => CoeffFn::from_terms(model, [(0, GaussianRational::one())]),
        }
    }

    /// Indicator `e_k` (discrete) or monomial `tᵏ` (circle).
    pub fn basis(model: &SystemModel, label: i64) -> Result<Self> {
        CoeffFn::from_terms(model, [(label, GaussianRational::one())])
    }

    pub fn kind(&self) -> CoeffKind {
        self.kind
    }

    pub fn terms(&self) -> &BTreeMap<i64, GaussianRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, label: i64) -> GaussianRational {
        self.terms.get(&label).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// Largest absolute label (point index or exponent), 0 for the zero function.
    pub fn label_reach(&self) -> i64 {
        self.terms.keys().map(|k| k.abs()).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, label: i64, value: &GaussianRational) {
        if value.is_zero() {
            return;
        }
        let entry = self.terms.entry(label).or_insert_with(GaussianRational::zero);
        *entry += value;
        if entry.is_zero() {
            self.terms.remove(&label);
        }
    }

    pub fn check_model(&self, model: &SystemModel) -> Result<()> {
        if self.kind == CoeffKind::of(model) {
            Ok(())
        } else {
            Err(Error::KindMismatch(format!(
                "{:?} coefficient used with the {} model",
                self.kind,
                model.kind_name()
            )))
        }
    }

    fn check_same(&self, other: &CoeffFn) -> Result<()> {
        if self.kind == other.kind {
            Ok(())
        } else {
            Err(Error::KindMismatch(format!("{:?} vs {:?}", self.kind, other.kind)))
        }
    }

    pub fn add(&self, other: &CoeffFn) -> Result<CoeffFn> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(*k, v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CoeffFn) -> Result<CoeffFn> {
        self.add(&other.scale(&-GaussianRational::one()))
    }

    pub fn scale(&self, c: &GaussianRational) -> CoeffFn {
        if c.is_zero() {
            return CoeffFn::zero(self.kind);
        }
        CoeffFn {
            kind: self.kind,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Pointwise product for the discrete models, polynomial product for Laurent.
    pub fn mul(&self, other: &CoeffFn) -> Result<CoeffFn> {
        self.check_same(other)?;
        let mut out = CoeffFn::zero(self.kind);
        if self.kind.is_pointwise() {
            let (small, large) = if self.terms.len() <= other.terms.len() {
                (self, other)
            } else {
                (other, self)
            };
            for (k, v) in &small.terms {
                if let Some(w) = large.terms.get(k) {
                    out.add_term(*k, &(v * w));
                }
            }
        } else {
            for (a, v) in &self.terms {
                for (b, w) in &other.terms {
                    out.add_term(a + b, &(v * w));
                }
            }
        }
        Ok(out)
    }
}

pub fn coeff_arith(op: CoeffOp, f: &CoeffFn, g: &CoeffFn) -> Result<CoeffFn> {
    match op {
        CoeffOp::Add => f.add(g),
        CoeffOp::Mul => f.mul(g),
    }
}

/// `σ̂ᵏ(f) = f ∘ σ̃⁻ᵏ`.
///
/// On indicators this moves `e_x` to `e_{σ̃ᵏ(x)}`; on the circle it sends
/// `tᵐ` to `q^{km}·tᵐ`.
pub fn sigma_hat(s: &SystemModel, f: &CoeffFn, k: i64) -> Result<CoeffFn> {
    f.check_model(s)?;
    if k == 0 || f.is_zero() {
        return Ok(f.clone());
    }
    let terms = match s {
        SystemModel::FinitePermutation(perm) => f
            .terms
            .iter()
            .map(|(x, v)| (perm.apply_pow(*x as usize, k) as i64, v.clone()))
            .collect(),
        SystemModel::IntegerShift => f.terms.iter().map(|(x, v)| (x + k, v.clone())).collect(),
        SystemModel::CircleRotation(q) => {
            let qk = q.pow(k)?;
            let mut out = BTreeMap::new();
            for (m, v) in &f.terms {
                out.insert(*m, v * &qk.pow(*m)?);
            }
            out
        }
    };
    Ok(CoeffFn { kind: f.kind, terms })
}

/// Point evaluation `μ(f)`.
pub fn evaluate(s: &SystemModel, f: &CoeffFn, p: &Point) -> Result<GaussianRational> {
    f.check_model(s)?;
    s.check_point(p)?;
    Ok(match p {
        Point::Finite(x) => f.coefficient(*x as i64),
        Point::Shift(n) => f.coefficient(*n),
        Point::Circle(z) => {
            let mut acc = GaussianRational::zero();
            for (m, c) in &f.terms {
                acc += &(c * &z.pow(*m)?);
            }
            acc
        }
    })
}

/// Indicator of `{p}`: the regularity witness in discrete models.
pub fn bump(s: &SystemModel, p: &Point) -> Result<CoeffFn> {
    s.check_point(p)?;
    match p {
        Point::Finite(x) => CoeffFn::basis(s, *x as i64),
        Point::Shift(n) => CoeffFn::basis(s, *n),
        Point::Circle(_) => Err(Error::Unsupported(
            "bump functions on the circle model (nonzero Laurent polynomials cannot vanish on open sets)".into(),
        )),
    }
}

/// Closure of the nonvanishing set.
pub fn supp(s: &SystemModel, f: &CoeffFn) -> Result<PointSet> {
    f.check_model(s)?;
    Ok(match s {
        SystemModel::FinitePermutation(_) => {
            PointSet::finite(s, f.terms.keys().map(|&x| Point::Finite(x as usize)).collect())
        }
        SystemModel::IntegerShift => PointSet::finite(s, f.terms.keys().map(|&x| Point::Shift(x)).collect()),
        // A nonzero Laurent polynomial has finitely many zeros on the circle.
        SystemModel::CircleRotation(_) => {
            if f.is_zero() {
                PointSet::Empty
            } else {
                PointSet::All
            }
        }
    })
}

/// Functions vanishing on a closed set: indicators off the set in discrete
/// models (within `radius` for the shift), and `Π (t − zᵢ)` for a finite set on
/// the circle.
pub fn vanishing_generators(s: &SystemModel, closed: &PointSet, radius: usize) -> Result<Vec<CoeffFn>> {
    match s {
        SystemModel::FinitePermutation(perm) => (0..perm.len())
            .filter(|&x| !closed.contains(&Point::Finite(x)))
            .map(|x| CoeffFn::basis(s, x as i64))
            .collect(),
        SystemModel::IntegerShift => {
            let r = radius as i64;
            (-r..=r)
                .filter(|&n| !closed.contains(&Point::Shift(n)))
                .map(|n| CoeffFn::basis(s, n))
                .collect()
        }
        SystemModel::CircleRotation(_) => match closed {
            PointSet::All => Ok(Vec::new()),
            PointSet::Empty => Ok(vec![CoeffFn::one(s)?]),
            PointSet::Finite(points) => {
                let mut product = CoeffFn::one(s)?;
                for p in points {
                    let Point::Circle(z) = p else {
                        return Err(Error::KindMismatch(format!("point {p} on the circle model")));
                    };
                    let factor = CoeffFn::from_terms(s, [(1, GaussianRational::one()), (0, -z)])?;
                    product = product.mul(&factor)?;
                }
                Ok(vec![product])
            }
            PointSet::CofiniteComplementOf(_) => Err(Error::Unsupported(
                "vanishing ideal of a cofinite subset of the circle".into(),
            )),
        },
    }
}

/// Basis labels spanning the coefficient window: all points for a finite model,
/// `|k| ≤ radius` otherwise.
pub fn window_labels(s: &SystemModel, radius: usize) -> Vec<i64> {
    match s {
        SystemModel::FinitePermutation(p) => (0..p.len() as i64).collect(),
        _ => {
            let r = radius as i64;
            (-r..=r).collect()
        }
    }
}
