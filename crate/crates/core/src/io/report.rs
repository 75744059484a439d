use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bounds::BoundReport;
use crate::error::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seeds {
    pub seed: u64,
    pub trials: usize,
}

/// Machine-readable output of a corpus audit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub version: u32,
    pub tool_version: String,
    pub seeds: Seeds,
    /// Sorted by id.
    pub ideals: Vec<BoundReport>,
    /// Wall-clock milliseconds per ideal id.
    #[serde(default)]
    pub timings: BTreeMap<String, f64>,
}

impl ReportDocument {
    pub fn new(seeds: Seeds, mut ideals: Vec<BoundReport>, timings: BTreeMap<String, f64>) -> Self {
        ideals.sort_by(|a, b| a.id.cmp(&b.id));
        ReportDocument { version: SCHEMA_VERSION, tool_version: env!("CARGO_PKG_VERSION").into(), seeds, ideals, timings }
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let doc: ReportDocument = serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("report: {e}")))?;
        if doc.version != SCHEMA_VERSION {
            return Err(Error::InvalidInput(format!("report schema {} is not {SCHEMA_VERSION}", doc.version)));
        }
        Ok(doc)
    }

    /// The same document with timings cleared, for comparing runs.
    pub fn without_timings(&self) -> Self {
        ReportDocument { timings: BTreeMap::new(), ..self.clone() }
    }

    pub fn violations(&self) -> usize {
        self.ideals.iter().map(|r| r.violations().len()).sum()
    }
}
