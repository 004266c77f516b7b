//! Element grammar (whitespace-insensitive):
//!
//! ```text
//! element = [ "-" ] term { ("+" | "-") term } ;
//! term    = factor { "*" factor } ;
//! factor  = scalar | "e_" int | "t" [ "^" int ] | "d^" int ;
//! scalar  = "(" [ "-" ] rat [ ("+"|"-") [ rat ] "i" ] ")" | [ rat ] "i" | rat ;
//! ```
//!
//! Factors multiply left to right in the crossed product, so `d^1*t` means
//! `δ·t = σ̂(t)·δ`. The literal `1` is the scalar one (the unit in unital
//! models). Canonical output lists terms by ascending degree and then
//! ascending label, with complex scalars in parentheses.

use std::fmt::Write;
use std::sync::Arc;

use num_traits::Signed;

use super::CrossedElement;
use crate::coeff::{sigma_hat, CoeffFn, CoeffKind};
use crate::dynsys::SystemModel;
use crate::error::{Error, ParseError};
use crate::exactnum::text::Cursor;
use crate::exactnum::GaussianRational;

const FACTOR_START: &[&str] = &["(", "digit", "i", "e_", "t", "d^"];

pub fn parse_element(s: &Arc<SystemModel>, text: &str) -> Result<CrossedElement, ParseError> {
    let mut cur = Cursor::new(text);
    let mut acc = CrossedElement::zero(s);
    let mut negate = cur.eat('-');
    loop {
        let term = parse_term(s, &mut cur)?;
        let term = if negate { term.neg() } else { term };
        acc = acc.add(&term).expect("same model");
        if cur.eat('+') {
            negate = false;
        } else if cur.eat('-') {
            negate = true;
        } else if cur.at_end() {
            return Ok(acc);
        } else {
            let pos = cur.position();
            return Err(ParseError::expecting(
                pos,
                &["+", "-", "*", "end of input"],
                "unexpected character after term",
            ));
        }
    }
}

fn parse_term(s: &Arc<SystemModel>, cur: &mut Cursor<'_>) -> Result<CrossedElement, ParseError> {
    let start = cur.position();
    let mut scalar = GaussianRational::one();
    let mut coeff: Option<CoeffFn> = None;
    let mut degree: i64 = 0;
    loop {
        let at = cur.position();
        match cur.peek() {
            Some(c) if c == '(' || c == 'i' || c.is_ascii_digit() => {
                scalar = &scalar * &cur.scalar(false)?;
            }
            Some('e') => {
                if !cur.eat_str("e_") {
                    return Err(ParseError::expecting(at, &["e_"], "expected '_' after 'e'"));
                }
                let k = cur.int()?;
                let atom = atom(s, CoeffKind::FinSupp, k, at)?;
                coeff = Some(times_shifted(s, coeff, &atom, degree, at)?);
            }
            Some('t') => {
                cur.eat('t');
                let m = if cur.eat('^') { cur.int()? } else { 1 };
                let atom = atom(s, CoeffKind::Laurent, m, at)?;
                coeff = Some(times_shifted(s, coeff, &atom, degree, at)?);
            }
            Some('d') => {
                if !cur.eat_str("d^") {
                    return Err(ParseError::expecting(at, &["d^"], "expected '^' after 'd'"));
                }
                let n = cur.int()?;
                degree = degree
                    .checked_add(n)
                    .ok_or_else(|| ParseError::new(at, "degree out of range"))?;
            }
            _ => {
                return Err(ParseError::expecting(at, FACTOR_START, "expected a factor"));
            }
        }
        if !cur.eat('*') {
            break;
        }
    }
    if scalar.is_zero() {
        return Ok(CrossedElement::zero(s));
    }
    let coeff = match coeff {
        Some(c) => c,
        None => CoeffFn::one(s).map_err(|_| {
            ParseError::new(start, "term needs an explicit e_k coefficient: this model has no unit")
        })?,
    };
    CrossedElement::monomial(s, coeff.scale(&scalar), degree).map_err(|e| ParseError::new(start, e.to_string()))
}

/// Indicator or Laurent atom; `family` says which syntax was used.
fn atom(s: &SystemModel, family: CoeffKind, label: i64, at: usize) -> Result<CoeffFn, ParseError> {
    let model_kind = CoeffKind::of(s);
    let ok = match family {
        CoeffKind::Laurent => model_kind == CoeffKind::Laurent,
        _ => model_kind.is_pointwise(),
    };
    if !ok {
        let what = if family == CoeffKind::Laurent { "t" } else { "e_k" };
        return Err(ParseError::new(at, format!("'{what}' is not a coefficient of the {} model", s.kind_name())));
    }
    CoeffFn::basis(s, label).map_err(|e| match e {
        Error::KindMismatch(msg) => ParseError::new(at, msg),
        other => ParseError::new(at, other.to_string()),
    })
}

/// `current · σ̂^degree(atom)`: moving the atom left past `δ^degree`.
fn times_shifted(
    s: &SystemModel,
    current: Option<CoeffFn>,
    atom: &CoeffFn,
    degree: i64,
    at: usize,
) -> Result<CoeffFn, ParseError> {
    let moved = sigma_hat(s, atom, degree).map_err(|e| ParseError::new(at, e.to_string()))?;
    match current {
        None => Ok(moved),
        Some(c) => c.mul(&moved).map_err(|e| ParseError::new(at, e.to_string())),
    }
}

fn basis_text(kind: CoeffKind, label: i64) -> Option<String> {
    match kind {
        CoeffKind::Laurent => match label {
            0 => None,
            1 => Some("t".into()),
            m => Some(format!("t^{m}")),
        },
        _ => Some(format!("e_{label}")),
    }
}

pub fn format_element(f: &CrossedElement) -> String {
    let kind = f.coeff_kind();
    let mut out = String::new();
    for (degree, coeff) in f.terms() {
        for (label, c) in coeff.terms() {
            let negative = c.is_real() && c.re().is_negative();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut parts: Vec<String> = Vec::new();
            let magnitude = if negative { -c } else { c.clone() };
            if !magnitude.is_one() {
                if magnitude.is_real() {
                    parts.push(magnitude.to_string());
                } else {
                    parts.push(format!("({magnitude})"));
                }
            }
            if let Some(b) = basis_text(kind, *label) {
                parts.push(b);
            }
            if *degree != 0 {
                parts.push(format!("d^{degree}"));
            }
            if parts.is_empty() {
                parts.push("1".into());
            }
            let _ = write!(out, "{}", parts.join("*"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
