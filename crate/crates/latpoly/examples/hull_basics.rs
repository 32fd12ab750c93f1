//! Hulls, facet descriptions, face lattices, volumes and lattice points on
//! a few small polytopes.
//!
//! ```sh
//! cargo run --example hull_basics
//! ```

use latpoly::faces::face_lattice;
use latpoly::lattice_points::lattice_points;
use latpoly::polytope::{convex_hull, LatticePolytope};
use latpoly::rat_string;
use latpoly::report::point_string;
use latpoly::{int, Int};

fn pts(coords: &[&[i64]]) -> Vec<Vec<Int>> {
    coords
        .iter()
        .map(|p| p.iter().map(|&x| int(x)).collect())
        .collect()
}

fn describe(name: &str, points: &[Vec<Int>]) {
    let (p, h) = convex_hull(points).unwrap();
    println!("== {name} ==");
    println!(
        "  dimension {} in ambient {}, {} vertices, volume {}",
        p.dim(),
        p.ambient_dim(),
        p.vertex_count(),
        p.normalized_volume()
    );
    for v in p.vertices() {
        println!("  vertex {}", point_string(v));
    }
    for i in 0..h.a.rows() {
        println!(
            "  facet  {} . x >= {}",
            point_string(h.a.row(i)),
            rat_string(&h.b[i])
        );
    }
    let lat = face_lattice(&p);
    println!(
        "  face counts by dimension: {:?} (Euler characteristic {})",
        lat.counts_by_dim(),
        lat.euler_characteristic()
    );
    let closed = lattice_points(&p, false).len();
    let interior = lattice_points(&p, true).len();
    println!("  lattice points: {closed} total, {interior} interior");
    println!();
}

fn main() {
    describe("unit square", &pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));
    describe(
        "quadric configuration (hull drops the inner points)",
        &pts(&[&[0, 0], &[0, 1], &[1, 0], &[0, 2], &[1, 1], &[2, 0]]),
    );
    describe(
        "triangle prism",
        &pts(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[1, 1, 0],
            &[0, 0, 1],
            &[1, 0, 1],
        ]),
    );

    // Minkowski sums glue polytopes together
    let simplex = LatticePolytope::simplex(2);
    let square = LatticePolytope::cube(2);
    let sum = simplex.minkowski_sum(&square).unwrap();
    println!("== Minkowski sum of triangle and square ==");
    for v in sum.vertices() {
        println!("  vertex {}", point_string(v));
    }
}
