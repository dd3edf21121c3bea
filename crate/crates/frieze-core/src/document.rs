//! The `.frieze.json` document format.
//!
//! A document stores a tiling seed — the first row of an additive
//! tiling or the quiddity of a multiplicative frieze — as
//! rational-strings, under a canonical JSON encoding: fixed key order
//! (`kind`, `n`, `seed`, `metadata`), seed values in the text syntax of
//! [`Rational`], one trailing newline. Equal documents serialize to
//! identical bytes. Loading validates the seed through the
//! corresponding core module, so a document that loads is a document
//! that builds.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::additive::{AdditiveError, FirstRow};
use crate::multiplicative::{Frieze, FriezeError, Quiddity};
use crate::rational::Rational;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("document is {actual}, expected {expected}")]
    KindMismatch {
        expected: TilingKind,
        actual: TilingKind,
    },
    #[error("multiplicative seed needs n+1 = {expected} values, got {actual}")]
    SeedLength { expected: usize, actual: usize },
    #[error(transparent)]
    Additive(#[from] AdditiveError),
    #[error(transparent)]
    Frieze(#[from] FriezeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TilingKind {
    Additive,
    Multiplicative,
}

impl std::fmt::Display for TilingKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TilingKind::Additive => write!(f, "additive"),
            TilingKind::Multiplicative => write!(f, "multiplicative"),
        }
    }
}

/// A tiling seed plus free-form metadata. `n` is the line-count
/// parameter: an additive document has `n` seed values (lines `0..=n`),
/// a multiplicative one has `n + 1` (lines `1..=n`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TilingDocument {
    pub kind: TilingKind,
    pub n: usize,
    pub seed: Vec<Rational>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

impl TilingDocument {
    pub fn from_first_row(row: &FirstRow) -> Self {
        TilingDocument {
            kind: TilingKind::Additive,
            n: row.n(),
            seed: row.values().to_vec(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn from_quiddity(quiddity: &Quiddity) -> Self {
        TilingDocument {
            kind: TilingKind::Multiplicative,
            n: quiddity.lines(),
            seed: quiddity.values().to_vec(),
            metadata: BTreeMap::new(),
        }
    }

    /// Canonical byte form: compact JSON, declaration key order,
    /// newline-terminated.
    pub fn save(&self) -> String {
        to_canonical_json(self)
    }

    /// Parses and validates. Closure failures surface with the core
    /// module's message.
    pub fn load(text: &str) -> Result<Self, DocumentError> {
        let doc: TilingDocument = serde_json::from_str(text)?;
        match doc.kind {
            TilingKind::Additive => {
                FirstRow::new(doc.n, doc.seed.clone())?;
            }
            TilingKind::Multiplicative => {
                if doc.seed.len() != doc.n + 1 {
                    return Err(DocumentError::SeedLength {
                        expected: doc.n + 1,
                        actual: doc.seed.len(),
                    });
                }
                Frieze::build(doc.seed.clone())?;
            }
        }
        Ok(doc)
    }

    pub fn first_row(&self) -> Result<FirstRow, DocumentError> {
        if self.kind != TilingKind::Additive {
            return Err(DocumentError::KindMismatch {
                expected: TilingKind::Additive,
                actual: self.kind,
            });
        }
        Ok(FirstRow::new(self.n, self.seed.clone())?)
    }

    pub fn frieze(&self) -> Result<Frieze, DocumentError> {
        if self.kind != TilingKind::Multiplicative {
            return Err(DocumentError::KindMismatch {
                expected: TilingKind::Multiplicative,
                actual: self.kind,
            });
        }
        Ok(Frieze::build(self.seed.clone())?)
    }
}

/// Compact JSON with struct-declaration key order and a trailing
/// newline; the one encoding used for documents and reports.
pub fn to_canonical_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string(value).expect("serializable value");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rationals(values: &[&str]) -> Vec<Rational> {
        values.iter().map(|v| Rational::parse(v).unwrap()).collect()
    }

    #[test]
    fn additive_document_bytes_are_canonical() {
        let row = FirstRow::new(4, rationals(&["0", "1", "2", "3"])).unwrap();
        let doc = TilingDocument::from_first_row(&row);
        assert_eq!(
            doc.save(),
            "{\"kind\":\"additive\",\"n\":4,\"seed\":[\"0\",\"1\",\"2\",\"3\"],\"metadata\":{}}\n"
        );
    }

    #[test]
    fn save_load_round_trips_bytes() {
        let quiddity = Quiddity::new(rationals(&["1", "2", "2", "2", "2", "1", "5"])).unwrap();
        let doc = TilingDocument::from_quiddity(&quiddity);
        let bytes = doc.save();
        let reloaded = TilingDocument::load(&bytes).unwrap();
        assert_eq!(reloaded, doc);
        assert_eq!(reloaded.save(), bytes);
    }

    #[test]
    fn load_validates_additive_closure() {
        let text = r#"{"kind":"additive","n":4,"seed":["1","1","1","1"],"metadata":{}}"#;
        let err = TilingDocument::load(text).unwrap_err();
        assert!(err.to_string().contains("not closed"), "{err}");
    }

    #[test]
    fn load_accepts_decimal_seed() {
        let text = r#"{"kind":"additive","n":4,"seed":["3.5","1.5","1","0"],"metadata":{}}"#;
        let doc = TilingDocument::load(text).unwrap();
        assert_eq!(doc.seed, rationals(&["7/2", "3/2", "1", "0"]));
    }

    #[test]
    fn load_checks_multiplicative_seed_length() {
        let text = r#"{"kind":"multiplicative","n":6,"seed":["1","1","1"],"metadata":{}}"#;
        assert!(matches!(
            TilingDocument::load(text),
            Err(DocumentError::SeedLength { expected: 7, actual: 3 })
        ));
    }

    #[test]
    fn kind_accessors_enforce_kind() {
        let row = FirstRow::new(2, rationals(&["0", "1"])).unwrap();
        let doc = TilingDocument::from_first_row(&row);
        assert!(doc.first_row().is_ok());
        assert!(matches!(
            doc.frieze(),
            Err(DocumentError::KindMismatch { .. })
        ));
    }
}
