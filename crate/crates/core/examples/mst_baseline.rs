// Surface carving against the minimum spanning tree baseline on the comb
// outline, over a range of sample sizes.
//
// cargo run --example mst_baseline

use dotgroup::grouping::{grouping_score, Method};
use dotgroup::shapes::{builtin_shape, sample_uniform, BuiltinShape};

pub fn run() -> Vec<(usize, f64, f64)> {
    let outline = builtin_shape(BuiltinShape::Comb, 1000).expect("builtin outline");
    println!("{:>4}  {:>8}  {:>8}", "K", "surface", "mst");
    let mut rows = Vec::new();
    for k in (10..=150).step_by(10) {
        let sample = sample_uniform(&outline, k).expect("K fits the outline");
        let score = |m: Method| {
            let result = m.group(&sample.points).expect("grouping succeeds");
            grouping_score(&result, &sample).expect("non-empty selection")
        };
        let (surface, mst) = (score(Method::Surface), score(Method::Mst));
        println!("{k:>4}  {surface:>8.3}  {mst:>8.3}");
        rows.push((k, surface, mst));
    }
    rows
}

#[allow(dead_code)]
fn main() {
    run();
}
