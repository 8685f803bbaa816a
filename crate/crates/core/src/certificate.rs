use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

/// A machine-checkable record of one verified claim.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub parameters: Map<String, Value>,
    /// Number of objects examined (matchings, families, vertex sets, …).
    pub search_size: u64,
    pub verdict: bool,
    pub elapsed_ms: u64,
}

impl Certificate {
    pub fn new(claim: impl Into<String>) -> Self {
        Certificate {
            claim: claim.into(),
            parameters: Map::new(),
            search_size: 0,
            verdict: false,
            elapsed_ms: 0,
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_owned(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }
}
