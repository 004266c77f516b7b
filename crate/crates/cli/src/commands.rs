//! `analyze`, `eval` and `witness`.

use std::fmt;

use serde_json::{json, Value};

use cpw_core::commutant::is_maximal_abelian;
use cpw_core::dynsys::{aperiodic_points_dense, is_minimal, is_topologically_transitive, per_n};
use cpw_core::ideals::{witness_in_a, witness_in_commutant};
use cpw_core::{parse_element, CrossedElement, Error, ParseError};

use crate::config::{ConfigError, SystemConfig};
use crate::report::{Status, EXIT_USAGE};
use crate::suites::certificate_detail;

/// Failures that map to the usage exit code.
#[derive(Debug)]
pub enum CommandError {
    Config(ConfigError),
    Parse { expr: String, error: ParseError },
    Usage(String),
}

impl fmt::Display for CommandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommandError::Config(e) => write!(f, "{e}"),
            CommandError::Parse { expr, error } => write!(f, "parse error in {expr:?} {error}"),
            CommandError::Usage(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CommandError {}

impl From<ConfigError> for CommandError {
    fn from(e: ConfigError) -> Self {
        CommandError::Config(e)
    }
}

impl CommandError {
    pub fn exit_code(&self) -> i32 {
        EXIT_USAGE
    }
}

/// Printed text and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn parse(cfg: &SystemConfig, expr: &str) -> Result<CrossedElement, CommandError> {
    parse_element(&cfg.model, expr).map_err(|error| CommandError::Parse {
        expr: expr.to_string(),
        error,
    })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

pub fn analyze_report(cfg: &SystemConfig, per_bound: usize) -> Value {
    let s = &cfg.model;
    let dense = aperiodic_points_dense(s);
    let maximal = is_maximal_abelian(s);
    let bound = per_bound as i64;
    let table: Vec<Value> = (-bound..=bound)
        .filter(|&n| n != 0)
        .map(|n| json!({"n": n, "set": per_n(s, n).expect("n is nonzero").to_string()}))
        .collect();
    json!({
        "schema_version": 1,
        "system": cfg.echo,
        "properties": {
            "aperiodic_dense": dense,
            "minimal": is_minimal(s),
            "transitive": is_topologically_transitive(s),
            "maximal_abelian": maximal,
        },
        "per_n": table,
        "consistency": {
            "check": "maximal_abelian == aperiodic_dense",
            "status": Status::from_bool(dense == maximal).as_str(),
        },
    })
}

pub fn cmd_analyze(cfg: &SystemConfig, per_bound: usize) -> Outcome {
    let report = analyze_report(cfg, per_bound);
    let ok = report["consistency"]["status"] == "pass";
    Outcome {
        stdout: pretty(&report),
        code: Status::from_bool(ok).exit_code(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Mul,
    Add,
}

impl std::str::FromStr for Op {
    type Err = CommandError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mul" | "*" => Ok(Op::Mul),
            "add" | "+" => Ok(Op::Add),
            other => Err(CommandError::Usage(format!("unknown operation {other:?}; expected mul or add"))),
        }
    }
}

/// Folds `expr (op expr)*` left to right and returns the canonical text.
pub fn cmd_eval(cfg: &SystemConfig, args: &[String]) -> Result<String, CommandError> {
    if args.is_empty() || args.len() % 2 == 0 {
        return Err(CommandError::Usage("expected <expr> (<op> <expr>)...".into()));
    }
    let mut acc = parse(cfg, &args[0])?;
    for pair in args[1..].chunks(2) {
        let op: Op = pair[0].parse()?;
        let rhs = parse(cfg, &pair[1])?;
        acc = match op {
            Op::Mul => acc.mul(&rhs),
            Op::Add => acc.add(&rhs),
        }
        .expect("operands share the model");
    }
    Ok(acc.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessMode {
    InA,
    InCommutant,
}

impl WitnessMode {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessMode::InA => "in-a",
            WitnessMode::InCommutant => "in-commutant",
        }
    }
}

pub fn cmd_witness(cfg: &SystemConfig, mode: WitnessMode, expr: &str) -> Result<Outcome, CommandError> {
    let s = &cfg.model;
    let f = parse(cfg, expr)?;
    if f.is_zero() {
        return Err(CommandError::Usage("the element must be nonzero".into()));
    }
    let result = match mode {
        WitnessMode::InA => witness_in_a(&f).map(|(a, cert)| {
            (CrossedElement::from_coeff(s, a).expect("matches model"), cert, None)
        }),
        WitnessMode::InCommutant => witness_in_commutant(&f).map(|(c, cert, it)| (c, cert, Some(it))),
    };
    let mut report = json!({"schema_version": 1, "system": cfg.echo, "mode": mode.as_str()});
    let status = match result {
        Ok((element, cert, iterations)) => {
            let detail = certificate_detail(std::slice::from_ref(&f), &element, &cert, None);
            for (k, v) in detail.as_object().expect("detail is an object") {
                report[k] = v.clone();
            }
            if let Some(it) = iterations {
                report["iterations"] = json!(it);
            }
            Status::Pass
        }
        Err(Error::PreconditionFailed(reason) | Error::Unsupported(reason)) => {
            report["input"] = json!(f.to_string());
            report["reason"] = json!(reason);
            report["capability"] = json!(match mode {
                WitnessMode::InA if s.capabilities().regular_bumps => "aperiodic_dense",
                _ => "regular_bumps",
            });
            Status::Unsupported
        }
        Err(e) => {
            report["input"] = json!(f.to_string());
            report["error"] = json!(e.to_string());
            Status::Fail
        }
    };
    report["status"] = json!(status.as_str());
    Ok(Outcome {
        stdout: pretty(&report),
        code: status.exit_code(),
    })
}
