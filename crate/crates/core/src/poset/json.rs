use std::collections::BTreeMap;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use super::{EdgeLabeling, GradedPoset, Label};
use crate::{Error, Result};

/// Interchange form: `{elements, ranks, covers, labels}` where label keys
/// are `"i-j"` for the cover `i ⋖ j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson<L> {
    pub elements: Vec<String>,
    pub ranks: Vec<usize>,
    pub covers: Vec<[usize; 2]>,
    #[serde(default = "BTreeMap::new")]
    pub labels: BTreeMap<String, L>,
}

impl<L: Label + Serialize + DeserializeOwned> PosetJson<L> {
    pub fn from_poset(p: &GradedPoset, labels: Option<&EdgeLabeling<L>>) -> Self {
        PosetJson {
            elements: p.names().to_vec(),
            ranks: p.ranks().to_vec(),
            covers: p.covers().iter().map(|&(a, b)| [a, b]).collect(),
            labels: labels
                .map(|l| {
                    l.iter()
                        .map(|(&(a, b), v)| (format!("{a}-{b}"), v.clone()))
                        .collect()
                })
                .unwrap_or_default(),
        }
    }

    pub fn into_poset(self) -> Result<(GradedPoset, EdgeLabeling<L>)> {
        let p = GradedPoset::new(
            self.elements,
            self.ranks,
            self.covers.iter().map(|c| (c[0], c[1])).collect(),
        )?;
        let mut l = EdgeLabeling::new();
        for (key, v) in self.labels {
            let (a, b) = key
                .split_once('-')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or_else(|| Error::Parse(format!("bad label key {key:?}")))?;
            if !p.is_cover(a, b) {
                return Err(Error::InvalidPoset(format!("label on non-cover {key}")));
            }
            l.insert(a, b, v);
        }
        Ok((p, l))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("poset JSON serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}
