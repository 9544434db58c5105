//! Text formats exchanged by the command line: point-set files and
//! grouping records.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Edge, Point2};
use crate::grouping::{GroupingResult, Method, Removal, ThresholdedResult};
use crate::shapes::SampledShape;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("k = {k} but {points} points are listed")]
    CountMismatch { k: usize, points: usize },
    #[error("truth edge ({}, {}) is out of range for k = {k}", .edge.a, .edge.b)]
    TruthOutOfRange { edge: Edge, k: usize },
    #[error("truth edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
}

/// `{ "source": string|null, "k": int, "points": [[x, y], ...],
/// "truth_edges": [[i, j], ...]|null }`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSetFile {
    pub source: Option<String>,
    pub k: usize,
    pub points: Vec<Point2>,
    pub truth_edges: Option<Vec<Edge>>,
}

impl PointSetFile {
    pub fn from_sample(sample: &SampledShape) -> Self {
        Self {
            source: Some(sample.source.clone()),
            k: sample.k(),
            points: sample.points.clone(),
            truth_edges: Some(sample.truth_edges()),
        }
    }

    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let file: PointSetFile = serde_json::from_str(text)?;
        file.validate()?;
        Ok(file)
    }

    pub fn validate(&self) -> Result<(), FormatError> {
        if self.k != self.points.len() {
            return Err(FormatError::CountMismatch {
                k: self.k,
                points: self.points.len(),
            });
        }
        for &edge in self.truth_edges.iter().flatten() {
            if edge.b >= self.k {
                return Err(FormatError::TruthOutOfRange { edge, k: self.k });
            }
            if edge.a == edge.b {
                return Err(FormatError::SelfLoop(edge.a));
            }
        }
        Ok(())
    }

    pub fn truth_set(&self) -> Option<BTreeSet<Edge>> {
        self.truth_edges
            .as_ref()
            .map(|t| t.iter().copied().collect())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("point set serializes")
    }
}

/// Serialized outcome of one grouping run. `stop_flatness` and `triangles`
/// are present only for the thresholded surface variant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupingRecord {
    pub method: Method,
    pub k: usize,
    pub hamiltonian: bool,
    pub edges: Vec<Edge>,
    pub boundary: Vec<usize>,
    pub removals: Vec<Removal>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stop_flatness: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangles: Option<Vec<[usize; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<f64>,
}

impl From<&GroupingResult> for GroupingRecord {
    fn from(r: &GroupingResult) -> Self {
        Self {
            method: r.method,
            k: r.k,
            hamiltonian: r.hamiltonian,
            edges: r.selected_edges.clone(),
            boundary: r.boundary.clone(),
            removals: r.removals.clone(),
            stop_flatness: None,
            triangles: None,
            xi: None,
        }
    }
}

impl From<&ThresholdedResult> for GroupingRecord {
    fn from(t: &ThresholdedResult) -> Self {
        let mut record = GroupingRecord::from(&t.to_grouping_result());
        record.stop_flatness = Some(t.stop_flatness);
        record.triangles = Some(t.triangles());
        record
    }
}

impl GroupingRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("grouping record serializes")
    }
}
