//! JSON input documents describing monoidal complexes.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Embedded,
    Abstract,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient_dim: Option<usize>,
    pub faces: Vec<FaceEntry>,
    pub generators: Vec<GeneratorEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub gluings: Vec<GluingEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceEntry {
    pub id: String,
    pub dim: usize,
    pub cone_generators: Vec<Vec<i64>>,
    pub monoid_generators: Vec<String>,
}

/// In embedded mode `vector` lives in the common ambient lattice and `face`
/// is informational. In abstract mode each entry gives the coordinates of the
/// generator in the listed face `face`; a generator shared by several faces
/// has one entry per face.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorEntry {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub face: Option<String>,
    pub vector: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<u64>,
}

/// `matrix` maps coordinates in `face_a` to coordinates in `face_b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GluingEntry {
    pub face_a: String,
    pub face_b: String,
    pub matrix: Vec<Vec<i64>>,
}

impl ComplexDocument {
    pub fn from_json(s: &str) -> Result<ComplexDocument, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}
