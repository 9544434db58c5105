// A K sweep over the builtin database, printed as CSV, followed by the
// per-K mean score of each method.
//
// cargo run --release --example sweep

use dotgroup::grouping::Method;
use dotgroup::shapes::builtin_db;
use dotgroup::sweep::{run_sweep, SweepConfig};

pub fn run(grid: Vec<usize>) -> String {
    let config = SweepConfig {
        grid,
        ..SweepConfig::default()
    };
    let report = run_sweep(&builtin_db(), &config);
    let csv = report.to_csv();
    print!("{csv}");

    println!();
    println!("{:>4}  {:>8}  {:>8}", "K", "surface", "mst");
    let (surface, mst) = (report.mean_xi(Method::Surface), report.mean_xi(Method::Mst));
    for ((k, s), (_, m)) in surface.iter().zip(&mst) {
        println!("{k:>4}  {s:>8.3}  {m:>8.3}");
    }
    csv
}

#[allow(dead_code)]
fn main() {
    run((10..=200).step_by(10).collect());
}
