//! Exhaustive survey of the smooth lattice polygons with vertices in a
//! coordinate box: enumerate, verify the smooth equivalence on every
//! member, and aggregate.
//!
//! ```sh
//! cargo run --release --example polygon_survey [max_coord]
//! ```

use std::collections::BTreeMap;

use latpoly::verifier::{run_corpus, smooth_polygons_in_box, ALL_CHECKS};

fn main() {
    let max_coord: i64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let corpus = smooth_polygons_in_box(max_coord);
    println!(
        "smooth lattice polygons with vertices in [0,{max_coord}]^2: {}",
        corpus.len()
    );

    let mut by_vertices: BTreeMap<usize, usize> = BTreeMap::new();
    for p in &corpus {
        *by_vertices.entry(p.vertex_count()).or_default() += 1;
    }
    for (v, count) in &by_vertices {
        println!("  {v}-gons: {count}");
    }

    let report = run_corpus(&corpus, &ALL_CHECKS);
    let consistent = report
        .members
        .iter()
        .filter(|m| m.equivalence.as_ref().is_some_and(|e| e.consistent))
        .count();
    let defective = report
        .members
        .iter()
        .filter(|m| m.equivalence.as_ref().is_some_and(|e| e.flag_d))
        .count();
    println!("\nequivalence reports consistent: {consistent}/{}", corpus.len());
    println!("dually defective members (basic-simplex copies): {defective}");
    println!("violations: {}", report.violations().len());
    for (i, v) in report.violations().iter().take(10) {
        println!("  member {i}: {v}");
    }
}
