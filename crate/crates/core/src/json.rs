//! JSON file formats: dicots (optionally with coordinates), involutions and
//! configuration dumps.
//!
//! ```json
//! {"vertices": [{"id": 1, "x": "1"}, {"id": 2, "x": "1/2"}],
//!  "solid": [[1, 2, "1"]],
//!  "dashed": [[1, 2, "3/2"]],
//!  "coords": {"1": ["0", "0"], "2": ["1", "0"]}}
//! ```
//!
//! Rationals are strings (`"p/q"` or decimal); bare JSON integers are also
//! accepted. The order of a solid pair is its orientation.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonRational(pub Rational);

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonRational;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational as \"p/q\", a decimal string, or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonRational, E> {
                parse_rational(v).map(JsonRational).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonRational, E> {
                Ok(JsonRational(crate::rational::int(v)))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonRational, E> {
                Ok(JsonRational(Rational::from_integer(v.into())))
            }
        }
        d.deserialize_any(V)
    }
}

impl From<Rational> for JsonRational {
    fn from(q: Rational) -> Self {
        JsonRational(q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawVertex {
    pub id: i64,
    pub x: JsonRational,
}

/// Unvalidated dicot description, exactly as it appears on disk.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RawDicot {
    pub vertices: Vec<RawVertex>,
    #[serde(default)]
    pub solid: Vec<(i64, i64, JsonRational)>,
    #[serde(default)]
    pub dashed: Vec<(i64, i64, JsonRational)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<BTreeMap<String, (JsonRational, JsonRational)>>,
}

impl RawDicot {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("raw dicot serializes")
    }
}

/// `{"pi": {"1": 4, "4": 1, ...}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiFile {
    pub pi: BTreeMap<String, i64>,
}

/// One line of `monodimer enumerate` output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigLine {
    pub loops: Vec<Vec<u32>>,
    pub kinds: Vec<Vec<String>>,
    pub isolated: Vec<u32>,
    pub weight: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn reads_strings_and_integers() {
        let raw = RawDicot::from_json(
            r#"{"vertices": [{"id": 1, "x": "1/2"}, {"id": 2, "x": 3}],
                "solid": [[1, 2, "0.5"]], "dashed": []}"#,
        )
        .unwrap();
        assert_eq!(raw.vertices[0].x.0, ratio(1, 2));
        assert_eq!(raw.vertices[1].x.0, ratio(3, 1));
        assert_eq!(raw.solid[0].2 .0, ratio(1, 2));
        assert!(raw.coords.is_none());
    }

    #[test]
    fn rejects_garbage_weight() {
        assert!(RawDicot::from_json(r#"{"vertices": [{"id": 1, "x": "one"}]}"#).is_err());
    }
}

/// Failure to turn file contents into a validated value.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid dicot ({axiom}): {0}", axiom = .0.axiom())]
    Dicot(#[from] crate::dicot::DicotError),
    #[error("{0}")]
    Other(String),
}
