use std::sync::Arc;

use serde_json::{json, Value};

use super::span::{window_products, Window};
use crate::crossed::{parse_element, CrossedElement};
use crate::dynsys::SystemModel;
use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;

/// One step `x ↦ left * x * right`; a missing side means no multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub left: Option<CrossedElement>,
    pub right: Option<CrossedElement>,
}

/// Replayable evidence that an element lies in the ideal generated by some
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Starting from the first generator, apply each step in turn.
    Chain(Vec<ChainStep>),
    /// `Σ c · product[row]` over the window product enumeration of the span.
    LinComb(Vec<(GaussianRational, usize)>),
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidCertificate(msg.into())
}

impl Certificate {
    pub fn to_json(&self) -> Value {
        match self {
            Certificate::Chain(steps) => {
                let side = |x: &Option<CrossedElement>| match x {
                    Some(e) => Value::String(e.to_string()),
                    None => Value::Null,
                };
                let steps: Vec<Value> = steps
                    .iter()
                    .map(|st| json!({"left": side(&st.left), "right": side(&st.right)}))
                    .collect();
                json!({"kind": "chain", "steps": steps})
            }
            Certificate::LinComb(coeffs) => {
                let coeffs: Vec<Value> = coeffs.iter().map(|(c, i)| json!([c.to_string(), i])).collect();
                json!({"kind": "lincomb", "coeffs": coeffs})
            }
        }
    }

    pub fn from_json(model: &Arc<SystemModel>, v: &Value) -> Result<Certificate> {
        let kind = v.get("kind").and_then(Value::as_str).ok_or_else(|| bad("missing kind"))?;
        match kind {
            "chain" => {
                let steps = v.get("steps").and_then(Value::as_array).ok_or_else(|| bad("missing steps"))?;
                let side = |x: Option<&Value>| -> Result<Option<CrossedElement>> {
                    match x {
                        None | Some(Value::Null) => Ok(None),
                        Some(Value::String(t)) => Ok(Some(parse_element(model, t)?)),
                        Some(_) => Err(bad("chain side must be a string or null")),
                    }
                };
                let steps = steps
                    .iter()
                    .map(|st| {
                        Ok(ChainStep {
                            left: side(st.get("left"))?,
                            right: side(st.get("right"))?,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Certificate::Chain(steps))
            }
            "lincomb" => {
                let coeffs = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| bad("missing coeffs"))?;
                let coeffs = coeffs
                    .iter()
                    .map(|pair| {
                        let c = pair
                            .get(0)
                            .and_then(Value::as_str)
                            .ok_or_else(|| bad("coefficient must be a scalar string"))?;
                        let i = pair
                            .get(1)
                            .and_then(Value::as_u64)
                            .ok_or_else(|| bad("row index must be a non-negative integer"))?;
                        Ok((c.parse::<GaussianRational>()?, i as usize))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Certificate::LinComb(coeffs))
            }
            other => Err(bad(format!("unknown kind {other:?}"))),
        }
    }

    /// Rebuilds the certified element. Chains start from `gens[0]`;
    /// linear combinations need the window that produced them.
    pub fn replay(&self, gens: &[CrossedElement], window: Option<&Window>) -> Result<CrossedElement> {
        let first = gens.first().ok_or(Error::EmptyGenerators)?;
        let model = first.model();
        match self {
            Certificate::Chain(steps) => {
                let mut x = first.clone();
                for st in steps {
                    if let Some(l) = &st.left {
                        x = l.mul(&x)?;
                    }
                    if let Some(r) = &st.right {
                        x = x.mul(r)?;
                    }
                }
                Ok(x)
            }
            Certificate::LinComb(coeffs) => {
                let window = window.ok_or_else(|| bad("linear combination replay needs its window"))?;
                let products = window_products(model, gens, window)?;
                let mut acc = CrossedElement::zero(model);
                for (c, i) in coeffs {
                    let spec = products
                        .get(*i)
                        .ok_or_else(|| bad(format!("row index {i} beyond {} products", products.len())))?;
                    acc = acc.add(&spec.evaluate(gens)?.scale(c))?;
                }
                Ok(acc)
            }
        }
    }
}
