//! Instance files: a fan plus named classes, as JSON.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use torzar::rational::{format_rational, parse_rational};
use torzar::{lattice, Fan, ToricClass};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
    #[serde(default)]
    pub classes: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub file: InstanceFile,
    pub fan: Arc<Fan>,
    pub classes: BTreeMap<String, ToricClass>,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))
    }

    /// Sorted keys, rationals in lowest terms, no whitespace.
    pub fn canonical_json(&self) -> String {
        let mut c = self.clone();
        for values in c.classes.values_mut() {
            for v in values.iter_mut() {
                if let Ok(r) = parse_rational(v) {
                    *v = format_rational(&r);
                }
            }
        }
        let value = serde_json::to_value(&c).expect("instance serializes");
        serde_json::to_string(&value).expect("json value serializes")
    }

    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_json().as_bytes()))
    }

    pub fn to_pretty_json(&self) -> String {
        let value: serde_json::Value = serde_json::from_str(&self.canonical_json()).unwrap();
        serde_json::to_string_pretty(&value).unwrap() + "\n"
    }

    pub fn from_parts(fan: &Fan, classes: &BTreeMap<String, ToricClass>) -> Self {
        let to_i64 = |x: &torzar::BigInt| x.to_string().parse::<i64>().expect("ray fits in i64");
        Self {
            dim: fan.dim(),
            rays: fan.rays().iter().map(|r| r.iter().map(to_i64).collect()).collect(),
            cones: fan.cones().to_vec(),
            classes: classes
                .iter()
                .map(|(k, c)| (k.clone(), c.values().iter().map(format_rational).collect()))
                .collect(),
        }
    }

    /// Validates the fan and every class.
    pub fn build(self) -> Result<Instance, CliError> {
        let rays = self.rays.iter().map(|r| lattice(r)).collect();
        let fan = Arc::new(Fan::new(self.dim, rays, self.cones.clone()).map_err(CliError::Fan)?);
        let mut classes = BTreeMap::new();
        for (name, values) in &self.classes {
            if values.len() != fan.rays().len() {
                return Err(CliError::Class(format!(
                    "class '{name}' has {} values but the fan has {} rays",
                    values.len(),
                    fan.rays().len()
                )));
            }
            let parsed = values
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    parse_rational(v).map_err(|e| CliError::Rational(format!("class '{name}', value {i}: {e}")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            classes.insert(name.clone(), ToricClass::new(fan.clone(), parsed).expect("length checked"));
        }
        Ok(Instance { file: self, fan, classes })
    }
}

pub fn parse_instance(path: &Path) -> Result<Instance, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    InstanceFile::from_json(&text)?.build()
}
