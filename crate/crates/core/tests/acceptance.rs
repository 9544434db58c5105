//! Acceptance suite: every criterion runs in turn, prints one PASS/FAIL
//! line, and the test fails at the end if any criterion did.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use dotgroup::geometry::{delaunay, Point2};
use dotgroup::grouping::{
    group_mst, group_surface, group_surface_thresholded, grouping_score, run_surface, Method,
    DEFAULT_STOP_FLATNESS,
};
use dotgroup::retrieval::{
    default_grid, descriptor, m_from_trace, m_metric, retrieve, DEFAULT_M_THRESHOLD,
};
use dotgroup::shapes::{
    builtin_db, builtin_shape, kanizsa_dots, sample_uniform, BuiltinShape, DenseOutline, ShapeDb,
};
use dotgroup::sweep::{run_sweep, SweepConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn outline(kind: BuiltinShape) -> DenseOutline {
    builtin_shape(kind, 1000).unwrap()
}

fn xi(kind: &DenseOutline, method: Method, k: usize) -> (f64, bool) {
    let sample = sample_uniform(kind, k).unwrap();
    let result = method.group(&sample.points).unwrap();
    (
        grouping_score(&result, &sample).unwrap(),
        result.hamiltonian,
    )
}

fn euler_delaunay() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for k in [10, 50, 200] {
        for seed in 0..50 {
            let pts = common::random_points(1000 * k as u64 + seed, k);
            let g = delaunay(&pts).unwrap();
            let h = common::hull_size(&pts);
            let tris: Vec<[usize; 3]> = g.alive_triangles().collect();
            if tris.len() != 2 * k - h - 2
                || g.edge_count() != 3 * k - h - 3
                || common::empty_circle_violation(&pts, &tris).is_some()
            {
                failures.push((k, seed));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures.is_empty() && elapsed < Duration::from_secs(10),
        format!("150 sets, {} failures, {:.2?}", failures.len(), elapsed),
    )
}

fn hamiltonian_recovery() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for kind in [
        BuiltinShape::Circle,
        BuiltinShape::Ellipse,
        BuiltinShape::Square,
        BuiltinShape::Star5,
    ] {
        let o = outline(kind);
        for k in (20..=100).step_by(10) {
            let (score, hamiltonian) = xi(&o, Method::Surface, k);
            if !hamiltonian || score != 1.0 {
                failures.push(format!("{kind}/K={k}: xi={score}"));
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures.is_empty() && elapsed < Duration::from_secs(5),
        format!("36 runs, failures {failures:?}, {elapsed:.2?}"),
    )
}

fn max_adjacent_flatness(o: &DenseOutline, k: usize) -> f64 {
    let sample = sample_uniform(o, k).unwrap();
    let truth = sample.truth_set();
    let run = run_surface(&sample.points, None).unwrap();
    run.graph
        .boundary_edges()
        .into_iter()
        .filter(|e| truth.contains(e))
        .map(|e| run.graph.flatness(e).unwrap())
        .fold(0.0, f64::max)
}

fn flatness_convergence() -> Outcome {
    let star = outline(BuiltinShape::Star5);
    let (coarse, fine) = (
        max_adjacent_flatness(&star, 100),
        max_adjacent_flatness(&star, 400),
    );
    outcome(
        fine < coarse / 2.0,
        format!("max flatness K=100: {coarse:.4}, K=400: {fine:.4}"),
    )
}

fn surface_beats_contour() -> Outcome {
    let shapes: Vec<DenseOutline> = [
        BuiltinShape::Star5,
        BuiltinShape::L,
        BuiltinShape::U,
        BuiltinShape::Comb,
        BuiltinShape::Ellipse,
    ]
    .into_iter()
    .map(outline)
    .collect();
    let mut behind = Vec::new();
    let mut strict = 0;
    for k in (30..=200).step_by(10) {
        let mean = |m| shapes.iter().map(|o| xi(o, m, k).0).sum::<f64>() / shapes.len() as f64;
        let (surface, mst) = (mean(Method::Surface), mean(Method::Mst));
        if surface > mst {
            strict += 1;
        } else if surface < mst {
            behind.push(format!("K={k}: {surface:.3} < {mst:.3}"));
        }
    }
    outcome(
        behind.is_empty() && strict >= 15,
        format!("strictly ahead at {strict}/18 grid points; behind at {behind:?}"),
    )
}

fn mst_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut mismatches = 0;
    for seed in 0..100 {
        let k = rng.gen_range(2..=8);
        let pts = common::random_points(seed, k);
        let ours = group_mst(&pts)
            .unwrap()
            .selected_edges
            .iter()
            .map(|e| (e.a, e.b))
            .collect::<Vec<_>>();
        let oracle = common::prim_edges(&pts);
        if common::sorted_weight(&pts, ours) != common::sorted_weight(&pts, oracle) {
            mismatches += 1;
        }
    }
    outcome(
        mismatches == 0,
        format!("100 sets with K <= 8, {mismatches} weight mismatches"),
    )
}

fn descriptor_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let n = rng.gen_range(21..120);
        let seq: Vec<Point2> = (0..n)
            .map(|_| Point2::new(rng.gen_range(0.0..512.0), rng.gen_range(0.0..512.0)))
            .collect();
        let base = *descriptor(&seq).unwrap().values();
        let shift = rng.gen_range(1..n);
        let scale = rng.gen_range(0.1..10.0);
        let (dx, dy) = (rng.gen_range(-500.0..500.0), rng.gen_range(-500.0..500.0));
        let (s, c) = rng.gen_range(0.0..std::f64::consts::TAU).sin_cos();
        let variants: [Vec<Point2>; 5] = [
            (0..n).map(|i| seq[(i + shift) % n]).collect(),
            seq.iter().rev().copied().collect(),
            seq.iter()
                .map(|p| Point2::new(p.x * scale, p.y * scale))
                .collect(),
            seq.iter()
                .map(|p| Point2::new(p.x + dx, p.y + dy))
                .collect(),
            seq.iter()
                .map(|p| Point2::new(c * p.x - s * p.y, s * p.x + c * p.y))
                .collect(),
        ];
        for v in &variants {
            let d = descriptor(v).unwrap();
            for (a, b) in base.iter().zip(d.values()) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    let circle = descriptor(outline(BuiltinShape::Circle).points()).unwrap();
    let circle_max = circle.values().iter().copied().fold(0.0, f64::max);
    outcome(
        worst <= 1e-12 && circle_max < 1e-9,
        format!("largest deviation {worst:.2e}; circle max component {circle_max:.2e}"),
    )
}

fn retrieval_sanity() -> Outcome {
    let db = builtin_db();
    let mut problems = Vec::new();
    let mut found = Vec::new();
    for (target, name) in db.names().enumerate() {
        let result = retrieve(&db, name, 500).unwrap();
        match (result.n, result.steps.last()) {
            (Some(n), Some(step)) if n <= 100 => {
                let own = step.distances[target];
                let nearest = step
                    .distances
                    .iter()
                    .enumerate()
                    .min_by(|a, b| a.1.total_cmp(b.1))
                    .unwrap()
                    .0;
                let margin = step
                    .distances
                    .iter()
                    .enumerate()
                    .all(|(i, &d)| i == target || d > 3.0 * own);
                if nearest != target || !margin || step.n != n {
                    problems.push(format!("{name}: log does not confirm n={n}"));
                }
                found.push(format!("{name}={n}"));
            }
            (n, _) => problems.push(format!("{name}: n={n:?}")),
        }
    }
    let square = outline(BuiltinShape::Square);
    let twin = DenseOutline::new("twin", square.points().to_vec()).unwrap();
    let twins = ShapeDb::from_outlines(vec![square, twin]).unwrap();
    let duplicate = retrieve(&twins, "square", 500).unwrap();
    if duplicate.n.is_some() {
        problems.push("duplicate db terminated".into());
    }
    outcome(
        problems.is_empty(),
        format!(
            "{}; duplicate db tried {} sizes; problems {problems:?}",
            found.join(" "),
            duplicate.steps.len()
        ),
    )
}

fn m_metric_cases() -> Outcome {
    let circle = m_metric(
        &outline(BuiltinShape::Circle),
        Method::Surface,
        DEFAULT_M_THRESHOLD,
        &default_grid(),
    )
    .unwrap()
    .m;
    let trace: Vec<(usize, f64)> = default_grid()
        .into_iter()
        .map(|k| (k, if k == 200 { 0.85 } else { 0.5 }))
        .collect();
    let late = m_from_trace(&trace, DEFAULT_M_THRESHOLD);
    outcome(
        circle == Some(10) && late == Some(200),
        format!("circle m={circle:?}; injected trace m={late:?}"),
    )
}

fn median_runtime(points: &[Point2]) -> Duration {
    let mut times: Vec<Duration> = (0..5)
        .map(|_| {
            let start = Instant::now();
            group_surface(points).unwrap();
            start.elapsed()
        })
        .collect();
    times.sort();
    times[2]
}

fn complexity() -> Outcome {
    let circle = outline(BuiltinShape::Circle);
    let dense = |k: usize| -> Vec<Point2> {
        (0..k)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / k as f64;
                Point2::new(256.0 + 200.0 * t.cos(), 256.0 + 200.0 * t.sin())
            })
            .collect()
    };
    let (small, large) = (median_runtime(&dense(1000)), median_runtime(&dense(2000)));
    let ratio = large.as_secs_f64() / small.as_secs_f64();
    let start = Instant::now();
    group_mst(&sample_uniform(&circle, 1000).unwrap().points).unwrap();
    let mst = start.elapsed();
    outcome(
        ratio < 2.5 && mst < Duration::from_secs(30),
        format!("surface K=1000 {small:.2?}, K=2000 {large:.2?} (ratio {ratio:.2}); mst K=1000 {mst:.2?}"),
    )
}

fn thresholded_variant() -> Outcome {
    let star = sample_uniform(&outline(BuiltinShape::Star5), 50).unwrap();
    let intact = group_surface_thresholded(&star.points, f64::INFINITY).unwrap();
    let full: Vec<[usize; 3]> = delaunay(&star.points).unwrap().alive_triangles().collect();
    let infinite_ok = intact.triangles() == full && intact.removals().is_empty();

    let zero = group_surface_thresholded(&star.points, 0.0).unwrap();
    let greedy = group_surface(&star.points).unwrap();
    let zero_ok = zero.boundary_edges() == greedy.selected_edges
        && zero.removals() == greedy.removals.as_slice();

    let stimulus = kanizsa_dots(240.0, 60.0, 12.0);
    let carved = group_surface_thresholded(&stimulus.points, DEFAULT_STOP_FLATNESS).unwrap();
    let tris = carved.triangles();
    let connected = common::edge_connected(&tris);
    let clusters: BTreeSet<usize> = tris
        .iter()
        .flatten()
        .map(|&v| stimulus.cluster[v])
        .collect();
    let center = Point2::new(256.0, 256.0);
    let covered = tris.iter().any(|t| {
        let v: Vec<Point2> = t.iter().map(|&i| stimulus.points[i]).collect();
        common::winding_number(&center, &v) != 0
    });
    outcome(
        infinite_ok && zero_ok && connected && clusters.len() == 3 && covered,
        format!(
            "tau=inf intact {infinite_ok}; tau=0 matches greedy {zero_ok}; tau=5 Kanizsa: {} triangles, \
             connected {connected}, clusters spanned {}, centre covered {covered}",
            tris.len(),
            clusters.len()
        ),
    )
}

fn determinism() -> Outcome {
    let db = builtin_db();
    let config = SweepConfig::default();
    let first = run_sweep(&db, &config).to_csv();
    let second = run_sweep(&db, &config).to_csv();
    outcome(
        first == second,
        format!("{} bytes, identical {}", first.len(), first == second),
    )
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        (
            "Euler counts and empty circumcircles on random sets",
            euler_delaunay,
        ),
        (
            "Hamiltonian recovery on convex and star outlines",
            hamiltonian_recovery,
        ),
        (
            "Flatness of adjacent boundary pairs shrinks with K",
            flatness_convergence,
        ),
        (
            "Surface mean score at least the MST mean",
            surface_beats_contour,
        ),
        ("MST weight equals Prim oracle", mst_oracle),
        (
            "Descriptor invariances and circle spectrum",
            descriptor_invariance,
        ),
        ("Retrieval on the builtin database", retrieval_sanity),
        ("m-metric edge cases", m_metric_cases),
        ("Runtime scaling", complexity),
        ("Thresholded carving", thresholded_variant),
        ("Byte-identical sweeps", determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = check();
        let tag = if result.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {:>2}. {name}: {}", i + 1, result.detail);
        if !result.pass {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
