//! The JSON chain document.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chain::ChainKind;
use crate::error::{Error, Result};
use crate::{Chain, Point, Scalar};

pub const FORMAT_VERSION: &str = "1";

fn current_version() -> String {
    FORMAT_VERSION.to_string()
}

/// A chain on disk. Coordinates are exact: `"p/q"` strings, or
/// `{"r": "p/q", "s2": "p/q"}` for `r + s2·√2`. Plain JSON integers are
/// accepted on input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainDocument {
    #[serde(default = "current_version")]
    pub format_version: String,
    pub n: usize,
    #[serde(default)]
    pub kind: ChainKind,
    pub vertices: Vec<[Scalar; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, serde_json::Value>,
}

impl ChainDocument {
    pub fn from_chain(chain: &Chain) -> Self {
        ChainDocument {
            format_version: current_version(),
            n: chain.n(),
            kind: chain.kind(),
            vertices: chain
                .vertices()
                .iter()
                .map(|p| [p.x.clone(), p.y.clone()])
                .collect(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_meta(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.metadata.insert(key.to_string(), value.into());
        self
    }

    pub fn to_chain(&self) -> Result<Chain> {
        let vertices = self
            .vertices
            .iter()
            .map(|[x, y]| Point::new(x.clone(), y.clone()))
            .collect();
        Chain::new(self.n, vertices, self.kind)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    /// Parses a document, rejecting unknown format versions.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ChainDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported format_version {:?}, expected {FORMAT_VERSION:?}",
                doc.format_version
            )));
        }
        Ok(doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{epsilon_path, explicit_chain};
    use crate::Rational;

    #[test]
    fn round_trip() {
        let c = epsilon_path(&Rational::new(1.into(), 10.into())).unwrap();
        let doc = ChainDocument::from_chain(&c).with_meta("generator", "epsilon-path");
        let text = doc.to_json();
        let back = ChainDocument::from_json(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_chain().unwrap(), c);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn minimal_input_form() {
        let d = ChainDocument::from_json(
            r#"{"n": 2, "kind": "cycle", "vertices": [[0,0],[0,2],["2","0"],[0,"0/1"]]}"#,
        )
        .unwrap();
        let c2: Chain = explicit_chain("cycle-c2").unwrap();
        assert_eq!(d.to_chain().unwrap(), c2);
    }

    #[test]
    fn version_and_shape_checked() {
        let bad = r#"{"format_version": "9", "n": 2, "vertices": [[0,0],[1,1]]}"#;
        assert!(matches!(ChainDocument::from_json(bad), Err(Error::Parse(_))));
        assert!(ChainDocument::from_json(r#"{"n": 2}"#).is_err());
        assert!(ChainDocument::from_json(r#"{"n": 2, "vertices": [["x", 0]]}"#).is_err());
    }
}
