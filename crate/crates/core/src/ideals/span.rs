use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use super::certificate::Certificate;
use super::echelon::{Echelon, SparseVec};
use crate::coeff::CoeffFn;
use crate::crossed::CrossedElement;
use crate::dynsys::SystemModel;
use crate::error::{Error, Result};
use crate::exactnum::{ExactMatrix, GaussianRational};

/// Truncation bounds for ideal spans.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub degree_bound: usize,
    /// Ignored by finite models; the Laurent exponent bound on the circle.
    pub support_radius: usize,
}

impl Window {
    pub fn new(degree_bound: usize, support_radius: usize) -> Result<Self> {
        if degree_bound == 0 || support_radius == 0 {
            return Err(Error::PreconditionFailed("window bounds must be at least 1".into()));
        }
        Ok(Window {
            degree_bound,
            support_radius,
        })
    }
}

/// A window monomial `b·δⁱ`, `b` the coefficient basis element with `label`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub degree: i64,
    pub label: i64,
}

impl Monomial {
    pub fn to_element(self, model: &Arc<SystemModel>) -> Result<CrossedElement> {
        CrossedElement::monomial(model, CoeffFn::basis(model, self.label)?, self.degree)
    }
}

/// `left * gens[generator] * right`, a missing side meaning no factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductSpec {
    pub generator: usize,
    pub left: Option<Monomial>,
    pub right: Option<Monomial>,
}

impl ProductSpec {
    pub fn evaluate(&self, gens: &[CrossedElement]) -> Result<CrossedElement> {
        let g = gens.get(self.generator).ok_or(Error::EmptyGenerators)?;
        let model = g.model();
        let mut x = g.clone();
        if let Some(l) = self.left {
            x = l.to_element(model)?.mul(&x)?;
        }
        if let Some(r) = self.right {
            x = x.mul(&r.to_element(model)?)?;
        }
        Ok(x)
    }
}

fn check_generators(gens: &[CrossedElement]) -> Result<&Arc<SystemModel>> {
    let first = gens.iter().find(|g| !g.is_zero()).ok_or(Error::EmptyGenerators)?;
    if gens.iter().any(|g| g.is_zero()) {
        return Err(Error::EmptyGenerators);
    }
    if gens.iter().any(|g| !g.same_model(first)) {
        return Err(Error::ModelMismatch);
    }
    Ok(first.model())
}

fn degree_reach(gens: &[CrossedElement]) -> i64 {
    gens.iter().map(CrossedElement::degree_reach).max().unwrap_or(0)
}

fn label_reach(gens: &[CrossedElement]) -> i64 {
    gens.iter().map(CrossedElement::label_reach).max().unwrap_or(0)
}

/// Labels of the multiplying monomials. The shift model has no unit to leave
/// a side empty, so the radius is widened to reach every translate `x − n` of
/// a generator label `x` at degree `n`.
fn multiplier_labels(s: &SystemModel, gens: &[CrossedElement], w: &Window) -> Vec<i64> {
    match s {
        SystemModel::FinitePermutation(p) => (0..p.len() as i64).collect(),
        SystemModel::IntegerShift => {
            let r = (w.support_radius as i64).max(label_reach(gens) + degree_reach(gens));
            (-r..=r).collect()
        }
        SystemModel::CircleRotation(_) => {
            let r = w.support_radius as i64;
            (-r..=r).collect()
        }
    }
}

fn coordinate_labels(s: &SystemModel, gens: &[CrossedElement], w: &Window) -> Vec<i64> {
    match s {
        SystemModel::CircleRotation(_) => {
            let r = 2 * w.support_radius as i64 + label_reach(gens);
            (-r..=r).collect()
        }
        _ => multiplier_labels(s, gens, w),
    }
}

/// Deterministic enumeration of the products spanning a window: per
/// generator, in unital models the bare generator, then `g*m′`, then `m*g`;
/// then `m*g*m′` in all models. Monomials run by degree, then label.
pub fn window_products(s: &SystemModel, gens: &[CrossedElement], w: &Window) -> Result<Vec<ProductSpec>> {
    check_generators(gens)?;
    let labels = multiplier_labels(s, gens, w);
    let d = w.degree_bound as i64;
    let monomials: Vec<Monomial> = (-d..=d)
        .flat_map(|degree| labels.iter().map(move |&label| Monomial { degree, label }))
        .collect();
    let unital = s.capabilities().unital;
    let mut out = Vec::new();
    for generator in 0..gens.len() {
        if unital {
            out.push(ProductSpec {
                generator,
                left: None,
                right: None,
            });
            for &m in &monomials {
                out.push(ProductSpec {
                    generator,
                    left: None,
                    right: Some(m),
                });
            }
            for &m in &monomials {
                out.push(ProductSpec {
                    generator,
                    left: Some(m),
                    right: None,
                });
            }
        }
        for &m in &monomials {
            for &m2 in &monomials {
                out.push(ProductSpec {
                    generator,
                    left: Some(m),
                    right: Some(m2),
                });
            }
        }
    }
    Ok(out)
}

/// Exact span of window products `m * g * m′` in reduced row-echelon form.
#[derive(Clone, Debug)]
pub struct IdealWindowSpan {
    model: Arc<SystemModel>,
    generators: Vec<CrossedElement>,
    window: Window,
    coordinate_index: Vec<(i64, i64)>,
    lookup: HashMap<(i64, i64), usize>,
    echelon: Echelon,
}

const CHUNK: usize = 512;

pub fn ideal_window_span(gens: &[CrossedElement], w: &Window) -> Result<IdealWindowSpan> {
    let model = Arc::clone(check_generators(gens)?);
    let reach = w.degree_bound as i64 + degree_reach(gens);
    let labels = coordinate_labels(&model, gens, w);
    let coordinate_index: Vec<(i64, i64)> = (-reach..=reach)
        .flat_map(|n| labels.iter().map(move |&k| (n, k)))
        .collect();
    let lookup = coordinate_index.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut span = IdealWindowSpan {
        model: Arc::clone(&model),
        generators: gens.to_vec(),
        window: *w,
        coordinate_index,
        lookup,
        echelon: Echelon::default(),
    };
    let products = window_products(&model, gens, w)?;
    let full = span.coordinate_index.len();
    for (chunk_no, chunk) in products.chunks(CHUNK).enumerate() {
        if span.echelon.rank() == full {
            break;
        }
        let vectors: Vec<Option<SparseVec>> = chunk
            .par_iter()
            .map(|spec| {
                let x = spec.evaluate(gens).expect("window monomials match the model");
                // Products leaving the collection window are dropped.
                span.coords(&x).ok().filter(|v| !v.is_empty())
            })
            .collect();
        for (offset, v) in vectors.into_iter().enumerate() {
            if let Some(v) = v {
                let index = chunk_no * CHUNK + offset;
                span.echelon
                    .insert(v, SparseVec::from([(index, GaussianRational::one())]));
            }
        }
    }
    Ok(span)
}

impl IdealWindowSpan {
    pub fn model(&self) -> &Arc<SystemModel> {
        &self.model
    }

    pub fn generators(&self) -> &[CrossedElement] {
        &self.generators
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    /// Coordinates as `(degree, label)`, by degree and then label.
    pub fn coordinate_index(&self) -> &[(i64, i64)] {
        &self.coordinate_index
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub(crate) fn coords(&self, x: &CrossedElement) -> Result<SparseVec> {
        let mut v = SparseVec::new();
        for (n, a) in x.terms() {
            for (k, c) in a.terms() {
                let i = self
                    .lookup
                    .get(&(*n, *k))
                    .ok_or_else(|| Error::WindowOverflow(format!("term at degree {n}, label {k}")))?;
                v.insert(*i, c.clone());
            }
        }
        Ok(v)
    }

    pub(crate) fn element(&self, v: &SparseVec) -> CrossedElement {
        let terms = v.iter().map(|(i, c)| {
            let (n, k) = self.coordinate_index[*i];
            let a = CoeffFn::from_terms(&self.model, [(k, c.clone())]).expect("window label");
            (n, a)
        });
        CrossedElement::from_terms(&self.model, terms).expect("window coordinates match the model")
    }

    /// Basis rows in pivot order, as a dense matrix over the coordinates.
    pub fn basis_matrix(&self) -> ExactMatrix {
        let cols = self.coordinate_index.len();
        let rows = self
            .echelon
            .rows()
            .map(|(_, r)| {
                let mut dense = vec![GaussianRational::zero(); cols];
                for (i, c) in &r.vector {
                    dense[*i] = c.clone();
                }
                dense
            })
            .collect();
        ExactMatrix::from_rows(cols, rows).expect("rows have coordinate length")
    }

    pub fn basis_elements(&self) -> Vec<CrossedElement> {
        self.echelon.rows().map(|(_, r)| self.element(&r.vector)).collect()
    }

    /// Linear-combination certificate for `target`, or `None` when it is not
    /// in this window's span.
    pub fn membership(&self, target: &CrossedElement) -> Result<Option<Certificate>> {
        if !target.same_model(&self.generators[0]) {
            return Err(Error::ModelMismatch);
        }
        let mut v = self.coords(target)?;
        let mut comb = SparseVec::new();
        self.echelon.reduce(&mut v, &mut comb);
        if !v.is_empty() {
            return Ok(None);
        }
        // reduce subtracted the rows; negate to express the target.
        Ok(Some(Certificate::LinComb(
            comb.into_iter().map(|(i, c)| (-c, i)).collect(),
        )))
    }

    /// Basis of the span's intersection with the degree-0 subspace.
    pub fn intersect_with_a(&self) -> Vec<CoeffFn> {
        // Echelon form with the degree-0 block ordered last: rows whose pivot
        // lands there vanish off degree 0.
        let n = self.coordinate_index.len();
        let zero_block: Vec<usize> = (0..n).filter(|&i| self.coordinate_index[i].0 == 0).collect();
        let others: Vec<usize> = (0..n).filter(|&i| self.coordinate_index[i].0 != 0).collect();
        let boundary = others.len();
        let mut position = vec![0usize; n];
        for (p, &i) in others.iter().chain(&zero_block).enumerate() {
            position[i] = p;
        }
        let mut ech = Echelon::default();
        for (_, r) in self.echelon.rows() {
            let v: SparseVec = r.vector.iter().map(|(i, c)| (position[*i], c.clone())).collect();
            ech.insert(v, SparseVec::new());
        }
        ech.rows()
            .filter(|(p, _)| **p >= boundary)
            .map(|(_, r)| {
                let terms = r
                    .vector
                    .iter()
                    .map(|(p, c)| (self.coordinate_index[zero_block[p - boundary]].1, c.clone()));
                CoeffFn::from_terms(&self.model, terms).expect("window label")
            })
            .collect()
    }
}

pub fn membership(span: &IdealWindowSpan, target: &CrossedElement) -> Result<Option<Certificate>> {
    span.membership(target)
}

pub fn intersect_with_a_window(span: &IdealWindowSpan) -> Vec<CoeffFn> {
    span.intersect_with_a()
}

/// Looks for the unit in the window span of `gens`.
pub fn contains_unit(gens: &[CrossedElement], w: &Window) -> Result<Option<Certificate>> {
    let model = check_generators(gens)?;
    if !model.capabilities().unital {
        return Err(Error::NotUnital);
    }
    let one = CrossedElement::delta_power(model, 0)?;
    ideal_window_span(gens, w)?.membership(&one)
}

/// A nonzero element common to both spans, or `None` when the two windowed
/// spans meet only in zero.
pub fn span_intersection_element(a: &IdealWindowSpan, b: &IdealWindowSpan) -> Result<Option<CrossedElement>> {
    if !a.model.as_ref().eq(b.model.as_ref()) {
        return Err(Error::ModelMismatch);
    }
    let mut coords: Vec<(i64, i64)> = a.coordinate_index.iter().chain(&b.coordinate_index).copied().collect();
    coords.sort_unstable();
    coords.dedup();
    let lookup: HashMap<(i64, i64), usize> = coords.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let remap = |span: &IdealWindowSpan, v: &SparseVec| -> SparseVec {
        v.iter().map(|(i, c)| (lookup[&span.coordinate_index[*i]], c.clone())).collect()
    };
    let mut ech = Echelon::default();
    for (_, r) in a.echelon.rows() {
        ech.insert(remap(a, &r.vector), SparseVec::new());
    }
    // A b-row that reduces to zero against the earlier rows yields a relation
    // Σ βⱼ bⱼ ∈ span(a); the b-rows are independent, so the sum is nonzero.
    let b_rows: Vec<&SparseVec> = b.echelon.rows().map(|(_, r)| &r.vector).collect();
    for (j, v) in b_rows.iter().enumerate() {
        if let Some(rel) = ech.insert(remap(b, v), SparseVec::from([(j, GaussianRational::one())])) {
            let mut acc = SparseVec::new();
            for (jj, beta) in &rel {
                super::echelon::axpy(&mut acc, beta, b_rows[*jj]);
            }
            return Ok(Some(b.element(&acc)));
        }
    }
    Ok(None)
}
