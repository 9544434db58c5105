mod common;

use dotgroup::geometry::Point2;
use dotgroup::grouping::{group_mst, group_surface, grouping_score, Method};
use dotgroup::retrieval::{descriptor, DESCRIPTOR_LEN};
use dotgroup::shapes::{builtin_shape, sample_uniform, BuiltinShape};
use proptest::prelude::*;

fn tree_weight(points: &[Point2], method: Method) -> f64 {
    let r = method.group(points).unwrap();
    r.selected_edges
        .iter()
        .map(|e| points[e.a].distance(&points[e.b]))
        .sum()
}

fn is_spanning_tree(k: usize, edges: &[dotgroup::geometry::Edge]) -> bool {
    let mut sets = dotgroup::grouping::DisjointSet::new(k);
    edges.len() == k - 1 && edges.iter().all(|e| sets.union(e.a, e.b))
}

fn close(a: &[f64; DESCRIPTOR_LEN], b: &[f64; DESCRIPTOR_LEN], tol: f64) -> bool {
    a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
}

fn sequence() -> impl Strategy<Value = Vec<Point2>> {
    prop::collection::vec((0.0..512.0f64, 0.0..512.0f64), 21..80)
        .prop_map(|v| v.into_iter().map(|(x, y)| Point2::new(x, y)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn mst_matches_prim(seed in any::<u64>(), k in 2usize..40) {
        let pts = common::random_points(seed, k);
        let r = group_mst(&pts).unwrap();
        prop_assert!(is_spanning_tree(k, &r.selected_edges));
        let ours = tree_weight(&pts, Method::Mst);
        let oracle = common::prim_weight(&pts);
        prop_assert!((ours - oracle).abs() <= 1e-9 * oracle.max(1.0));
    }

    #[test]
    fn scores_are_fractions(k in 10usize..120) {
        let outline = builtin_shape(BuiltinShape::U, 500).unwrap();
        let sample = sample_uniform(&outline, k).unwrap();
        for method in [Method::Surface, Method::Mst] {
            let xi = grouping_score(&method.group(&sample.points).unwrap(), &sample).unwrap();
            prop_assert!((0.0..=1.0).contains(&xi));
        }
    }

    #[test]
    fn descriptor_invariances(seq in sequence(), shift in 0usize..1000, scale in 0.01..100.0f64,
                              dx in -1e3..1e3f64, dy in -1e3..1e3f64, angle in 0.0..std::f64::consts::TAU) {
        let base = *descriptor(&seq).unwrap().values();
        let n = seq.len();
        let shifted: Vec<Point2> = (0..n).map(|i| seq[(i + shift) % n]).collect();
        let reversed: Vec<Point2> = seq.iter().rev().copied().collect();
        let scaled: Vec<Point2> = seq.iter().map(|p| Point2::new(p.x * scale, p.y * scale)).collect();
        let moved: Vec<Point2> = seq.iter().map(|p| Point2::new(p.x + dx, p.y + dy)).collect();
        let (s, c) = angle.sin_cos();
        let turned: Vec<Point2> = seq.iter().map(|p| Point2::new(c * p.x - s * p.y, s * p.x + c * p.y)).collect();
        for variant in [shifted, reversed, scaled, moved, turned] {
            prop_assert!(close(&base, descriptor(&variant).unwrap().values(), 1e-12));
        }
    }
}

#[test]
fn surface_beats_mst_on_a_sparse_star() {
    let outline = builtin_shape(BuiltinShape::Star5, 1000).unwrap();
    let sample = sample_uniform(&outline, 30).unwrap();
    let surface = grouping_score(&group_surface(&sample.points).unwrap(), &sample).unwrap();
    let mst = grouping_score(&group_mst(&sample.points).unwrap(), &sample).unwrap();
    assert_eq!(surface, 1.0);
    assert!(mst < 1.0);
}

#[test]
fn descriptor_scales_and_every_shift() {
    for seed in 0..5 {
        let seq = common::random_points(seed, 21 + 7 * seed as usize);
        let base = *descriptor(&seq).unwrap().values();
        let n = seq.len();
        for c in [0.5, 3.0, 100.0] {
            let scaled: Vec<Point2> = seq.iter().map(|p| Point2::new(p.x * c, p.y * c)).collect();
            assert!(close(&base, descriptor(&scaled).unwrap().values(), 1e-12));
        }
        for shift in 0..n {
            let shifted: Vec<Point2> = (0..n).map(|i| seq[(i + shift) % n]).collect();
            assert!(close(&base, descriptor(&shifted).unwrap().values(), 1e-12));
        }
    }
}

#[test]
fn descriptor_distance_is_a_metric() {
    use dotgroup::retrieval::distance;
    let d: Vec<_> = (0..3)
        .map(|s| descriptor(&common::random_points(100 + s, 40)).unwrap())
        .collect();
    assert!(distance(&d[0], &d[2]) <= distance(&d[0], &d[1]) + distance(&d[1], &d[2]));
    assert_eq!(distance(&d[0], &d[1]), distance(&d[1], &d[0]));
}

#[test]
fn zero_threshold_gives_grid_minimum() {
    use dotgroup::retrieval::{default_grid, m_metric};
    let outline = builtin_shape(BuiltinShape::Comb, 1000).unwrap();
    for method in [Method::Surface, Method::Mst] {
        assert_eq!(
            m_metric(&outline, method, 0.0, &default_grid()).unwrap().m,
            Some(10)
        );
    }
}
