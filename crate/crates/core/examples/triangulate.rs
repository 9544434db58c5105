// Delaunay triangulation of dots sampled from a concave outline.
//
// cargo run --example triangulate

use dotgroup::geometry::delaunay;
use dotgroup::shapes::{builtin_shape, sample_uniform, BuiltinShape};

pub struct Counts {
    pub k: usize,
    pub hull: usize,
    pub triangles: usize,
    pub edges: usize,
}

pub fn run() -> Counts {
    let outline = builtin_shape(BuiltinShape::U, 1000).expect("builtin outline");
    let sample = sample_uniform(&outline, 40).expect("K fits the outline");
    let graph = delaunay(&sample.points).expect("sampled dots are in general position");

    let counts = Counts {
        k: graph.vertex_count(),
        hull: graph.boundary_vertex_count(),
        triangles: graph.triangle_count(),
        edges: graph.edge_count(),
    };
    println!("U outline, K = {}", counts.k);
    println!("convex hull vertices: {}", counts.hull);
    println!(
        "triangles: {} (2K - h - 2 = {})",
        counts.triangles,
        2 * counts.k - counts.hull - 2
    );
    println!(
        "edges:     {} (3K - h - 3 = {})",
        counts.edges,
        3 * counts.k - counts.hull - 3
    );
    println!(
        "removable boundary edges: {}",
        graph.removable_edges().len()
    );
    counts
}

#[allow(dead_code)]
fn main() {
    run();
}
