use std::collections::BTreeMap;

use super::{
    DisjointSet, GroupingError, GroupingResult, Method, QueueEntry, Removal, RemovalQueue,
};
use crate::geometry::{delaunay, Edge, Point2, TriangulatedGraph};

/// Stop flatness used for edge-point clouds, where a Hamiltonian boundary
/// is not expected.
pub const DEFAULT_STOP_FLATNESS: f64 = 5.0;

/// State after greedy carving: the surviving triangulation and the applied
/// removals in order.
#[derive(Debug, Clone)]
pub struct SurfaceRun {
    pub graph: TriangulatedGraph,
    pub removals: Vec<Removal>,
    /// Boundary vertex count of the initial triangulation (the convex hull).
    pub hull_size: usize,
}

/// Triangulates `points` and peels outer triangles, flattest boundary edge
/// first, while the popped edge's opposite vertex is still internal.
///
/// With `stop_flatness = Some(tau)` only edges with flatness strictly above
/// `tau` are removed.
pub fn run_surface(
    points: &[Point2],
    stop_flatness: Option<f64>,
) -> Result<SurfaceRun, GroupingError> {
    if let Some(tau) = stop_flatness {
        if tau.is_nan() || tau < 0.0 {
            return Err(GroupingError::BadThreshold(tau));
        }
    }
    let mut graph = delaunay(points)?;
    let hull_size = graph.boundary_vertex_count();
    let eligible = |flatness: f64| stop_flatness.is_none_or(|tau| flatness > tau);

    let mut queue = RemovalQueue::new();
    let enqueue = |graph: &TriangulatedGraph, queue: &mut RemovalQueue, edge: Edge| {
        let opposite = graph
            .opposite(edge)
            .expect("queued edges are on the boundary");
        let flatness = graph
            .flatness(edge)
            .expect("queued edges are on the boundary");
        if eligible(flatness) {
            let length = points[edge.a].distance(&points[edge.b]);
            queue.push(QueueEntry {
                edge,
                opposite,
                flatness,
                length,
            });
        }
    };
    for edge in graph.removable_edges() {
        enqueue(&graph, &mut queue, edge);
    }

    let mut removals = Vec::new();
    while let Some(entry) = queue.pop() {
        // Skip entries whose triangle is gone or whose apex got exposed.
        let current = graph.opposite(entry.edge).ok();
        if current != Some(entry.opposite) || graph.is_boundary_vertex(entry.opposite) {
            continue;
        }
        let exposed = graph.remove_triangle(entry.edge)?;
        removals.push(Removal {
            edge: entry.edge,
            flatness: entry.flatness,
        });
        for edge in exposed {
            enqueue(&graph, &mut queue, edge);
        }
    }
    Ok(SurfaceRun {
        graph,
        removals,
        hull_size,
    })
}

/// Surface-based grouping: carve until no removable edge remains and report
/// the boundary cycle.
pub fn group_surface(points: &[Point2]) -> Result<GroupingResult, GroupingError> {
    let run = run_surface(points, None)?;
    let boundary = run.graph.boundary_sequence();
    Ok(GroupingResult {
        method: Method::Surface,
        k: points.len(),
        hamiltonian: boundary.len() == points.len(),
        selected_edges: run.graph.boundary_edges(),
        boundary,
        removals: run.removals,
    })
}

/// Result of carving with a stop flatness: the surviving triangles rather
/// than a forced boundary cycle.
#[derive(Debug, Clone)]
pub struct ThresholdedResult {
    pub stop_flatness: f64,
    pub run: SurfaceRun,
}

impl ThresholdedResult {
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        self.run.graph.alive_triangles().collect()
    }

    pub fn boundary_edges(&self) -> Vec<Edge> {
        self.run.graph.boundary_edges()
    }

    pub fn removals(&self) -> &[Removal] {
        &self.run.removals
    }

    /// Number of pieces the surviving triangles form, joining triangles
    /// that share an edge.
    pub fn component_count(&self) -> usize {
        let triangles = self.triangles();
        let mut sets = DisjointSet::new(triangles.len());
        let mut owner: BTreeMap<Edge, usize> = BTreeMap::new();
        for (t, tri) in triangles.iter().enumerate() {
            for i in 0..3 {
                let edge = Edge::new(tri[i], tri[(i + 1) % 3]);
                if let Some(&other) = owner.get(&edge) {
                    sets.union(t, other);
                } else {
                    owner.insert(edge, t);
                }
            }
        }
        (0..triangles.len()).filter(|&t| sets.find(t) == t).count()
    }

    /// Same record shape as [`group_surface`], with the boundary at the
    /// point the carving stopped.
    pub fn to_grouping_result(&self) -> GroupingResult {
        let boundary = self.run.graph.boundary_sequence();
        let k = self.run.graph.vertex_count();
        GroupingResult {
            method: Method::Surface,
            k,
            hamiltonian: boundary.len() == k,
            selected_edges: self.boundary_edges(),
            boundary,
            removals: self.run.removals.clone(),
        }
    }
}

/// Carves only boundary edges flatter than `tau`; a positive `tau` leaves
/// filled-in regions between point clusters.
pub fn group_surface_thresholded(
    points: &[Point2],
    tau: f64,
) -> Result<ThresholdedResult, GroupingError> {
    Ok(ThresholdedResult {
        stop_flatness: tau,
        run: run_surface(points, Some(tau))?,
    })
}
