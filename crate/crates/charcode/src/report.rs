//! Machine-readable run report emitted by the CLI.
//!
//! Schema (stable keys):
//! {"spec":{"p","e","k","e1","e2","q","n","dim","d"},"method",
//!  "distribution":[{"w","count"}],"min_distance","lower_bound",
//!  "griesmer_optimal","dual_distance","verdict","ms"}

use crate::code::{CodeSpec, DualDistance, WeightDistribution};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistEntry {
    pub w: u64,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub spec: CodeSpec,
    pub method: String,
    pub distribution: Vec<DistEntry>,
    pub min_distance: u64,
    pub lower_bound: i64,
    pub griesmer_optimal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual_distance: Option<DualDistance>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    pub ms: u64,
}

impl RunReport {
    pub fn distribution_from(dist: &WeightDistribution) -> Vec<DistEntry> {
        dist.entries()
            .iter()
            .map(|&(w, count)| DistEntry { w, count })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::validate_spec;

    #[test]
    fn json_roundtrip_is_lossless() {
        let spec = validate_spec(2, 2, 3, 1, 1).unwrap();
        let report = RunReport {
            spec,
            method: "both".into(),
            distribution: vec![
                DistEntry { w: 0, count: 1 },
                DistEntry { w: 47, count: 189 },
            ],
            min_distance: 47,
            lower_bound: 47,
            griesmer_optimal: true,
            dual_distance: Some(DualDistance::Three),
            verdict: Some("match".into()),
            ms: 12,
        };
        let s = serde_json::to_string(&report).unwrap();
        let back: RunReport = serde_json::from_str(&s).unwrap();
        assert_eq!(report, back);

        // optional fields drop out of the serialized form entirely
        let bare = RunReport {
            dual_distance: None,
            verdict: None,
            ..report
        };
        let s = serde_json::to_string(&bare).unwrap();
        assert!(!s.contains("dual_distance"));
        assert!(!s.contains("verdict"));
        let back: RunReport = serde_json::from_str(&s).unwrap();
        assert_eq!(bare, back);
    }
}
