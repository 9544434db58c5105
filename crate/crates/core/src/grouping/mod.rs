//! Dot grouping: surface-based greedy carving of the Delaunay triangulation,
//! the contour-based minimum spanning tree baseline, and the grouping score.

mod mst;
mod queue;
mod surface;

pub use mst::{group_mst, DisjointSet};
pub use queue::{QueueEntry, RemovalQueue};
pub use surface::{
    group_surface, group_surface_thresholded, run_surface, SurfaceRun, ThresholdedResult,
    DEFAULT_STOP_FLATNESS,
};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Edge, GeometryError};
use crate::shapes::SampledShape;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroupingError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("at least {needed} points are required, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("no edges were selected")]
    EmptySelection,
    #[error("edge ({}, {}) references a point outside 0..{k}", .edge.a, .edge.b)]
    IndexOutOfRange { edge: Edge, k: usize },
    #[error("stop flatness must be a non-negative number, got {0}")]
    BadThreshold(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Surface,
    Mst,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Surface => "surface",
            Method::Mst => "mst",
        }
    }

    /// Runs this method on `points`.
    pub fn group(
        &self,
        points: &[crate::geometry::Point2],
    ) -> Result<GroupingResult, GroupingError> {
        match self {
            Method::Surface => group_surface(points),
            Method::Mst => group_mst(points),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "surface" => Ok(Method::Surface),
            "mst" => Ok(Method::Mst),
            other => Err(format!(
                "unknown method {other:?} (expected surface or mst)"
            )),
        }
    }
}

/// One applied triangle removal: the boundary edge popped and its flatness.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Removal {
    pub edge: Edge,
    pub flatness: f64,
}

/// Edges chosen by a grouping method over `k` points.
///
/// For the surface method `selected_edges` is the final boundary cycle and
/// `boundary` lists it in counterclockwise order; for the MST they are the
/// `k - 1` tree edges and `boundary` is empty.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupingResult {
    pub method: Method,
    pub k: usize,
    pub hamiltonian: bool,
    pub selected_edges: Vec<Edge>,
    pub boundary: Vec<usize>,
    pub removals: Vec<Removal>,
}

/// Fraction of `selected` edges that belong to `truth`.
pub fn score_edges(selected: &[Edge], truth: &BTreeSet<Edge>) -> Result<f64, GroupingError> {
    if selected.is_empty() {
        return Err(GroupingError::EmptySelection);
    }
    let hits = selected.iter().filter(|e| truth.contains(e)).count();
    Ok(hits as f64 / selected.len() as f64)
}

/// Grouping score: the share of selected edges joining outline neighbours.
pub fn grouping_score(result: &GroupingResult, truth: &SampledShape) -> Result<f64, GroupingError> {
    let k = truth.k();
    if let Some(&edge) = result.selected_edges.iter().find(|e| e.b >= k) {
        return Err(GroupingError::IndexOutOfRange { edge, k });
    }
    score_edges(&result.selected_edges, &truth.truth_set())
}
