//! JSON file formats for monoids and acts.
//!
//! Monoid: `{"name"?: string, "order": n, "identity": e, "table": [[..n]; n]}`
//!
//! Act: `{"name"?: string, "monoid": <monoid object | path>, "size": m,
//! "action": [[..n]; m]}`. A string `monoid` is a path, resolved relative to
//! the act file's directory when loaded from disk.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::act::FiniteAct;
use crate::error::{ActError, MonoidError};
use crate::monoid::FiniteMonoid;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
}

impl MonoidFile {
    pub fn validate(&self) -> Result<FiniteMonoid, MonoidError> {
        if self.table.len() != self.order {
            return Err(MonoidError::OrderMismatch {
                declared: self.order,
                actual: self.table.len(),
            });
        }
        let monoid = FiniteMonoid::from_rows(&self.table, Some(self.identity))?;
        Ok(match &self.name {
            Some(name) => monoid.with_name(name.clone()),
            None => monoid,
        })
    }
}

impl From<FiniteMonoid> for MonoidFile {
    fn from(m: FiniteMonoid) -> Self {
        MonoidFile {
            name: m.name().map(str::to_owned),
            order: m.order(),
            identity: m.identity(),
            table: m.rows(),
        }
    }
}

impl TryFrom<MonoidFile> for FiniteMonoid {
    type Error = MonoidError;

    fn try_from(file: MonoidFile) -> Result<Self, Self::Error> {
        file.validate()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonoidRef {
    Inline(MonoidFile),
    Path(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub monoid: MonoidRef,
    pub size: usize,
    pub action: Vec<Vec<usize>>,
}

impl ActFile {
    /// Validates against an inline monoid, or a path resolved under `base`.
    pub fn validate(&self, base: Option<&Path>) -> Result<FiniteAct, LoadError> {
        let monoid = match &self.monoid {
            MonoidRef::Inline(file) => file.validate()?,
            MonoidRef::Path(p) => {
                let path = match base {
                    Some(dir) => dir.join(p),
                    None => PathBuf::from(p),
                };
                load_monoid(&path)?
            }
        };
        self.validate_over(Arc::new(monoid)).map_err(LoadError::from)
    }

    pub fn validate_over(&self, monoid: Arc<FiniteMonoid>) -> Result<FiniteAct, ActError> {
        if self.action.len() != self.size {
            return Err(ActError::SizeMismatch {
                declared: self.size,
                actual: self.action.len(),
            });
        }
        let act = FiniteAct::from_rows(monoid, &self.action)?;
        Ok(match &self.name {
            Some(name) => act.with_name(name.clone()),
            None => act,
        })
    }
}

impl From<FiniteAct> for ActFile {
    fn from(act: FiniteAct) -> Self {
        ActFile {
            name: act.name().map(str::to_owned),
            monoid: MonoidRef::Inline(FiniteMonoid::clone(act.monoid()).into()),
            size: act.size(),
            action: act.rows(),
        }
    }
}

impl TryFrom<ActFile> for FiniteAct {
    type Error = LoadError;

    fn try_from(file: ActFile) -> Result<Self, Self::Error> {
        file.validate(None)
    }
}

/// Failure to turn a file into a validated structure.
#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid monoid: {0}")]
    Monoid(#[from] MonoidError),
    #[error("invalid act: {0}")]
    Act(#[from] ActError),
}

fn read(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn parse_monoid(text: &str) -> Result<FiniteMonoid, LoadError> {
    let file: MonoidFile = serde_json::from_str(text)?;
    Ok(file.validate()?)
}

pub fn load_monoid(path: &Path) -> Result<FiniteMonoid, LoadError> {
    parse_monoid(&read(path)?)
}

pub fn parse_act(text: &str, base: Option<&Path>) -> Result<FiniteAct, LoadError> {
    let file: ActFile = serde_json::from_str(text)?;
    file.validate(base)
}

pub fn load_act(path: &Path) -> Result<FiniteAct, LoadError> {
    parse_act(&read(path)?, path.parent())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::catalog::*;

    #[test]
    fn monoid_roundtrip_keeps_identity_position() {
        let z4 = mod_mul(4);
        let text = serde_json::to_string(&z4).unwrap();
        assert!(text.contains("\"identity\":1"));
        let back: FiniteMonoid = serde_json::from_str(&text).unwrap();
        assert_eq!(back, z4);
    }

    #[test]
    fn parser_uses_validation_errors() {
        let bad = r#"{"order": 2, "identity": 0, "table": [[0, 1], [1, 3]]}"#;
        assert!(matches!(
            parse_monoid(bad),
            Err(LoadError::Monoid(MonoidError::OutOfRangeEntry { .. }))
        ));
        let rps = r#"{"order": 3, "identity": 0, "table": [[0,1,0],[1,1,2],[0,2,2]]}"#;
        assert!(matches!(
            parse_monoid(rps),
            Err(LoadError::Monoid(MonoidError::NotAssociative { .. }))
        ));
        let short = r#"{"order": 3, "identity": 0, "table": [[0]]}"#;
        assert!(matches!(
            parse_monoid(short),
            Err(LoadError::Monoid(MonoidError::OrderMismatch { declared: 3, actual: 1 }))
        ));
        assert!(matches!(parse_monoid("{"), Err(LoadError::Parse(_))));
    }

    #[test]
    fn act_with_monoid_path() {
        let dir = tempfile::tempdir().unwrap();
        let monoid_path = dir.path().join("u.json");
        fs::write(&monoid_path, serde_json::to_string(&idempotent_pair()).unwrap()).unwrap();
        let act_path = dir.path().join("a.json");
        fs::write(
            &act_path,
            r#"{"monoid": "u.json", "size": 2, "action": [[0, 0], [1, 0]]}"#,
        )
        .unwrap();
        let act = load_act(&act_path).unwrap();
        assert_eq!(act.size(), 2);
        assert_eq!(act.act(1, IDEMPOTENT), 0);
    }

    #[test]
    fn act_errors_surface() {
        let text = r#"{"monoid": {"order": 1, "identity": 0, "table": [[0]]}, "size": 2, "action": [[1], [1]]}"#;
        assert!(matches!(
            parse_act(text, None),
            Err(LoadError::Act(ActError::UnitLawViolation { a: 0 }))
        ));
        let missing = load_act(Path::new("/nonexistent/act.json"));
        assert!(matches!(missing, Err(LoadError::Io { .. })));
    }
}
