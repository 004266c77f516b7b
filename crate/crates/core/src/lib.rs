//! Exact arithmetic in crossed products `Â ⋊ ℤ` over three concrete
//! dynamical models, with the commutant, ideal spans and the constructive
//! witness algorithms built on them.

pub mod coeff;
pub mod commutant;
pub mod crossed;
pub mod dynsys;
pub mod error;
pub mod exactnum;
pub mod ideals;
pub mod sample;

pub use coeff::{CoeffFn, CoeffKind};
pub use crossed::{format_element, parse_element, CrossedElement};
pub use dynsys::{Point, PointSet, SystemModel};
pub use error::{Error, ParseError, Result};
pub use exactnum::{GaussianRational, Rational};
pub use ideals::{Certificate, Window};
