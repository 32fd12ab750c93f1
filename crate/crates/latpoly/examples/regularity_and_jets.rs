//! Simplicity, smoothness, edge lattice lengths and jet-spanning levels.
//!
//! ```sh
//! cargo run --example regularity_and_jets
//! ```

use latpoly::polytope::LatticePolytope;
use latpoly::regularity::{edge_lattice_lengths, jet_level, regularity_report};
use latpoly::report::point_string;
use latpoly::{int, Int};

fn pts(coords: &[&[i64]]) -> Vec<Vec<Int>> {
    coords
        .iter()
        .map(|p| p.iter().map(|&x| int(x)).collect())
        .collect()
}

fn inspect(name: &str, p: &LatticePolytope) {
    let r = regularity_report(p);
    println!("== {name} ==");
    println!("  simple: {}, smooth: {}", r.simple, r.smooth);
    if let Some(v) = r.offending_vertex {
        println!("  offending vertex: {}", point_string(&p.vertices()[v]));
    }
    let lengths = edge_lattice_lengths(p);
    let summary: Vec<String> = lengths.iter().map(|(_, l)| l.to_string()).collect();
    println!("  edge lattice lengths: [{}]", summary.join(", "));
    match jet_level(p) {
        Ok(k) => println!("  jet level: {k}"),
        Err(e) => println!("  jet level: unavailable ({e})"),
    }
    println!();
}

fn main() {
    inspect(
        "2 Delta_2 (2-jet spanned)",
        &LatticePolytope::simplex(2).dilate(2).unwrap(),
    );
    inspect(
        "del Pezzo hexagon (1-jet spanned)",
        &LatticePolytope::from_points(&pts(&[
            &[0, 0],
            &[1, 0],
            &[2, 1],
            &[2, 2],
            &[1, 2],
            &[0, 1],
        ]))
        .unwrap(),
    );
    inspect("3 Delta_1", &LatticePolytope::simplex(1).dilate(3).unwrap());
    inspect(
        "square pyramid (not simple)",
        &LatticePolytope::from_points(&pts(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[1, 1, 0],
            &[0, 0, 1],
        ]))
        .unwrap(),
    );
    inspect(
        "simple but singular triangle",
        &LatticePolytope::from_points(&pts(&[&[0, 0], &[2, 0], &[0, 1]])).unwrap(),
    );
}
