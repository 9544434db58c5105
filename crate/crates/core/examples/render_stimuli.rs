// The three stimulus representations (dots, all triangles, triangles
// inside the outline) and a grouping result, written as SVG.
//
// cargo run --example render_stimuli [-- OUT_DIR]

use std::path::{Path, PathBuf};

use dotgroup::geometry::delaunay;
use dotgroup::grouping::group_surface;
use dotgroup::render::{inside_triangles, render_grouping, render_points, render_triangles};
use dotgroup::shapes::{builtin_shape, sample_uniform, BuiltinShape};

/// Writes one SVG per representation and returns `(file, triangle count)`.
pub fn run(dir: &Path) -> Vec<(PathBuf, usize)> {
    let outline = builtin_shape(BuiltinShape::U, 1000).expect("builtin outline");
    let sample = sample_uniform(&outline, 30).expect("K fits the outline");
    let graph = delaunay(&sample.points).expect("triangulation");
    let all: Vec<[usize; 3]> = graph.alive_triangles().collect();
    let inside = inside_triangles(&graph, outline.points());
    let grouping = group_surface(&sample.points).expect("grouping succeeds");

    std::fs::create_dir_all(dir).expect("create output directory");
    let outputs = [
        ("points.svg", render_points(&sample.points), 0),
        (
            "all-triangles.svg",
            render_triangles(&sample.points, &all),
            all.len(),
        ),
        (
            "triangles.svg",
            render_triangles(&sample.points, &inside),
            inside.len(),
        ),
        (
            "grouping.svg",
            render_grouping(&sample.points, &grouping.selected_edges),
            0,
        ),
    ];
    outputs
        .into_iter()
        .map(|(name, svg, triangles)| {
            let path = dir.join(name);
            std::fs::write(&path, svg).expect("write SVG");
            println!("{} ({triangles} triangles)", path.display());
            (path, triangles)
        })
        .collect()
}

#[allow(dead_code)]
fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("stimuli"));
    run(&dir);
}
