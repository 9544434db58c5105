// Carving with a stop flatness on the edge dots of a Kanizsa triangle.
// The pac-man mouths are cut away while the region between them stays
// filled, joining the three clusters into one surface.
//
// cargo run --example illusory_contour [-- out.svg]

use std::collections::BTreeSet;

use dotgroup::grouping::{group_surface_thresholded, DEFAULT_STOP_FLATNESS};
use dotgroup::render::render_triangles;
use dotgroup::shapes::kanizsa_dots;

pub struct Illusion {
    pub triangles: usize,
    pub bridging: usize,
    pub components: usize,
    pub svg: String,
}

pub fn run() -> Illusion {
    let stimulus = kanizsa_dots(240.0, 60.0, 12.0);
    let carved = group_surface_thresholded(&stimulus.points, DEFAULT_STOP_FLATNESS)
        .expect("carving succeeds");
    let triangles = carved.triangles();
    let bridging = triangles
        .iter()
        .filter(|t| {
            t.iter()
                .map(|&i| stimulus.cluster[i])
                .collect::<BTreeSet<_>>()
                .len()
                > 1
        })
        .count();

    println!(
        "{} dots in 3 clusters, stop flatness {}",
        stimulus.points.len(),
        DEFAULT_STOP_FLATNESS
    );
    println!(
        "removed {} triangles, {} remain",
        carved.removals().len(),
        triangles.len()
    );
    println!("{bridging} remaining triangles join different clusters");
    println!("connected pieces: {}", carved.component_count());
    Illusion {
        triangles: triangles.len(),
        bridging,
        components: carved.component_count(),
        svg: render_triangles(&stimulus.points, &triangles),
    }
}

#[allow(dead_code)]
fn main() {
    let illusion = run();
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, illusion.svg).expect("write SVG");
        println!("wrote {path}");
    }
}
