//! System configuration files.
//!
//! ```json
//! {"model": "finite", "permutation": [1, 0]}
//! {"model": "shift"}
//! {"model": "circle", "q": "3/5+4/5i"}
//! ```

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use cpw_core::{GaussianRational, SystemModel};

/// Validation failure at a JSON path such as `$.permutation[2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub path: String,
    pub message: String,
}

impl ConfigError {
    fn at(path: impl Into<String>, message: impl Into<String>) -> Self {
        ConfigError {
            path: path.into(),
            message: message.into(),
        }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "config error at {}: {}", self.path, self.message)
    }
}

impl std::error::Error for ConfigError {}

/// A validated system and its canonical JSON echo.
#[derive(Clone, Debug)]
pub struct SystemConfig {
    pub model: Arc<SystemModel>,
    pub echo: Value,
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str]) -> Result<(), ConfigError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(ConfigError::at(format!("$.{k}"), "unknown field")),
        None => Ok(()),
    }
}

pub fn parse_config(text: &str) -> Result<SystemConfig, ConfigError> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| ConfigError::at("$", format!("invalid JSON: {e}")))?;
    from_value(&value)
}

pub fn from_value(value: &Value) -> Result<SystemConfig, ConfigError> {
    let obj = value.as_object().ok_or_else(|| ConfigError::at("$", "expected an object"))?;
    let model = obj
        .get("model")
        .ok_or_else(|| ConfigError::at("$.model", "missing field"))?
        .as_str()
        .ok_or_else(|| ConfigError::at("$.model", "expected a string"))?;
    match model {
        "finite" => {
            check_keys(obj, &["model", "permutation"])?;
            let raw = obj
                .get("permutation")
                .ok_or_else(|| ConfigError::at("$.permutation", "missing field"))?
                .as_array()
                .ok_or_else(|| ConfigError::at("$.permutation", "expected an array"))?;
            let images = raw
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    v.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| ConfigError::at(format!("$.permutation[{i}]"), "expected a non-negative integer"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let s = SystemModel::finite(images.clone()).map_err(|e| ConfigError::at("$.permutation", e.to_string()))?;
            Ok(SystemConfig {
                model: Arc::new(s),
                echo: json!({"model": "finite", "permutation": images}),
            })
        }
        "shift" => {
            check_keys(obj, &["model"])?;
            Ok(SystemConfig {
                model: Arc::new(SystemModel::shift()),
                echo: json!({"model": "shift"}),
            })
        }
        "circle" => {
            check_keys(obj, &["model", "q"])?;
            let text = obj
                .get("q")
                .ok_or_else(|| ConfigError::at("$.q", "missing field"))?
                .as_str()
                .ok_or_else(|| ConfigError::at("$.q", "expected a scalar string such as \"3/5+4/5i\""))?;
            let q: GaussianRational = text.parse().map_err(|e| ConfigError::at("$.q", format!("{e}")))?;
            let s = SystemModel::circle(q.clone()).map_err(|e| ConfigError::at("$.q", e.to_string()))?;
            Ok(SystemConfig {
                model: Arc::new(s),
                echo: json!({"model": "circle", "q": q.to_string()}),
            })
        }
        other => Err(ConfigError::at(
            "$.model",
            format!("unknown model {other:?}; expected \"finite\", \"shift\" or \"circle\""),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_of(text: &str) -> String {
        parse_config(text).unwrap_err().path
    }

    #[test]
    fn accepts_the_three_models() {
        let c = parse_config(r#"{"model":"finite","permutation":[1,0]}"#).unwrap();
        assert_eq!(c.model.finite_size(), Some(2));
        assert_eq!(parse_config(r#"{"model":"shift"}"#).unwrap().echo, json!({"model": "shift"}));
        let c = parse_config(r#"{"model":"circle","q":" 3/5 + 4/5i "}"#).unwrap();
        assert_eq!(c.echo, json!({"model": "circle", "q": "3/5+4/5i"}));
    }

    #[test]
    fn errors_name_the_field() {
        assert_eq!(path_of("[1]"), "$");
        assert_eq!(path_of("{"), "$");
        assert_eq!(path_of(r#"{"permutation":[0]}"#), "$.model");
        assert_eq!(path_of(r#"{"model":"torus"}"#), "$.model");
        assert_eq!(path_of(r#"{"model":"finite"}"#), "$.permutation");
        assert_eq!(path_of(r#"{"model":"finite","permutation":[1,0,-2]}"#), "$.permutation[2]");
        assert_eq!(path_of(r#"{"model":"finite","permutation":[0,0]}"#), "$.permutation");
        assert_eq!(path_of(r#"{"model":"circle","q":"1+i"}"#), "$.q");
        assert_eq!(path_of(r#"{"model":"circle","q":"1+"}"#), "$.q");
        assert_eq!(path_of(r#"{"model":"circle","q":1}"#), "$.q");
        assert_eq!(path_of(r#"{"model":"shift","q":"1"}"#), "$.q");
    }
}
