//! Discriminant degrees and dual defect from alternating face-volume sums.
//!
//! The degree-2 Veronese triangle has discriminant degree 3, the 2x2
//! determinant square has degree 2, and the triangle prism is dually
//! defective with a codimension-2 dual variety.
//!
//! ```sh
//! cargo run --example defect_census
//! ```

use latpoly::defect::dual_defect;
use latpoly::polytope::LatticePolytope;
use latpoly::{int, Int};

fn pts(coords: &[&[i64]]) -> Vec<Vec<Int>> {
    coords
        .iter()
        .map(|p| p.iter().map(|&x| int(x)).collect())
        .collect()
}

fn census(name: &str, p: &LatticePolytope) {
    let r = dual_defect(p).unwrap();
    println!("== {name} ==");
    println!("  chern sum (delta_1): {}", r.chern_sum);
    let deltas: Vec<String> = r.delta.iter().map(|(i, d)| format!("d{i}={d}")).collect();
    println!("  delta sequence: {}", deltas.join(", "));
    println!("  dually defective: {}", r.defective);
    match (&r.codim, &r.degree) {
        (Some(c), Some(d)) => println!("  dual variety: codimension {c}, degree {d}"),
        _ => println!("  dual variety: degenerate case, no degree reported"),
    }
    if r.degenerate_embedding_suspected {
        println!("  note: first nonzero delta is negative");
    }
    println!();
}

fn main() {
    census(
        "2 * Delta_2 (Veronese surface)",
        &LatticePolytope::simplex(2).dilate(2).unwrap(),
    );
    census("unit square (Segre quadric)", &LatticePolytope::cube(2));
    census(
        "Delta_1 x Delta_2 (Segre threefold)",
        &LatticePolytope::from_points(&pts(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[1, 1, 0],
            &[0, 0, 1],
            &[1, 0, 1],
        ]))
        .unwrap(),
    );
    census("Delta_2 (linear embedding)", &LatticePolytope::simplex(2));
    census("unit cube", &LatticePolytope::cube(3));
    census(
        "2 * Delta_3",
        &LatticePolytope::simplex(3).dilate(2).unwrap(),
    );
}
