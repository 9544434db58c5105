// Greedy surface carving on a star: the boundary of the carved
// triangulation visits every dot in outline order.
//
// cargo run --example surface_grouping

use dotgroup::grouping::{group_surface, grouping_score};
use dotgroup::shapes::{builtin_shape, sample_uniform, BuiltinShape};

pub fn run() -> (bool, f64) {
    let outline = builtin_shape(BuiltinShape::Star5, 1000).expect("builtin outline");
    let sample = sample_uniform(&outline, 50).expect("K fits the outline");
    let result = group_surface(&sample.points).expect("grouping succeeds");
    let xi = grouping_score(&result, &sample).expect("non-empty selection");

    println!("star5, K = {}", result.k);
    println!(
        "removed {} triangles; the first five:",
        result.removals.len()
    );
    for r in result.removals.iter().take(5) {
        println!(
            "  ({:>2}, {:>2})  flatness {:.2}",
            r.edge.a, r.edge.b, r.flatness
        );
    }
    println!("hamiltonian: {}", result.hamiltonian);
    println!("boundary: {:?}", result.boundary);
    println!("xi = {xi}");
    (result.hamiltonian, xi)
}

#[allow(dead_code)]
fn main() {
    run();
}
