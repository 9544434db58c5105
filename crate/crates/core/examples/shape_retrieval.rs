// Retrieval of each builtin shape from its own surface reconstruction.
//
// cargo run --release --example shape_retrieval

use dotgroup::retrieval::{retrieve, DEFAULT_RETRIEVAL_CAP};
use dotgroup::shapes::builtin_db;

pub fn run() -> Vec<(String, Option<usize>)> {
    let db = builtin_db();
    let mut found = Vec::new();
    for name in db.names() {
        let outcome = retrieve(&db, name, DEFAULT_RETRIEVAL_CAP).expect("retrieval runs");
        match (outcome.n, outcome.steps.last()) {
            (Some(n), Some(step)) => {
                let own = step.distances[db.position(name).unwrap()];
                let runner_up = step
                    .distances
                    .iter()
                    .copied()
                    .filter(|&d| d != own)
                    .fold(f64::INFINITY, f64::min);
                println!("{name:<8} n = {n:<4} own distance {own:.4}, next {runner_up:.4}");
            }
            _ => println!("{name:<8} NO-TERMINATION"),
        }
        found.push((name.to_string(), outcome.n));
    }
    found
}

#[allow(dead_code)]
fn main() {
    run();
}
