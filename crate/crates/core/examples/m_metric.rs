// The smallest sample size from which grouping stays accurate, for every
// builtin shape and both methods.
//
// cargo run --release --example m_metric

use dotgroup::grouping::Method;
use dotgroup::retrieval::{default_grid, m_metric, DEFAULT_M_THRESHOLD};
use dotgroup::shapes::{builtin_shape, BuiltinShape};

pub fn run() -> Vec<(String, Option<usize>, Option<usize>)> {
    let grid = default_grid();
    let show = |m: Option<usize>| m.map_or("NA".to_string(), |m| m.to_string());
    println!("{:<8} {:>8} {:>8}", "shape", "surface", "mst");
    let mut rows = Vec::new();
    for kind in BuiltinShape::ALL {
        let outline = builtin_shape(kind, 1000).expect("builtin outline");
        let m = |method| {
            m_metric(&outline, method, DEFAULT_M_THRESHOLD, &grid)
                .expect("scoring succeeds")
                .m
        };
        let (surface, mst) = (m(Method::Surface), m(Method::Mst));
        println!("{:<8} {:>8} {:>8}", kind.name(), show(surface), show(mst));
        rows.push((kind.name().to_string(), surface, mst));
    }
    rows
}

#[allow(dead_code)]
fn main() {
    run();
}
