//! The three-way equivalence on smooth polytopes: Cayley structure of
//! length cd(P) with t > n/2, the codegree bound with tau = mu, and the
//! vanishing alternating face sum. The flags must agree on every smooth
//! polytope.
//!
//! ```sh
//! cargo run --example smooth_equivalence
//! ```

use latpoly::cayley::cayley_sum;
use latpoly::polytope::LatticePolytope;
use latpoly::verifier::verify_equivalences;
use latpoly::{int, rat_string, Int};

fn pts(coords: &[&[i64]]) -> Vec<Vec<Int>> {
    coords
        .iter()
        .map(|p| p.iter().map(|&x| int(x)).collect())
        .collect()
}

fn show(name: &str, p: &LatticePolytope) {
    let rep = verify_equivalences(p).unwrap();
    println!(
        "{name:<28} cd={} mu={:<5} a={} b={} d={}  consistent={}",
        rep.cd,
        rat_string(&rep.mu),
        rep.flag_a,
        rep.flag_b,
        rep.flag_d,
        rep.consistent
    );
    if let Some(w) = &rep.witness {
        println!("{:>28} witness fibers {:?}", "", w.fibers);
    }
}

fn main() {
    println!("flags: a = Cayley structure, b = codegree bound with tau = mu,");
    println!("       d = vanishing face sum\n");
    show("Delta_2", &LatticePolytope::simplex(2));
    show("Delta_3", &LatticePolytope::simplex(3));
    show("2 Delta_2", &LatticePolytope::simplex(2).dilate(2).unwrap());
    show("2 Delta_3", &LatticePolytope::simplex(3).dilate(2).unwrap());
    show("unit square", &LatticePolytope::cube(2));
    show("unit cube", &LatticePolytope::cube(3));
    show(
        "Delta_1 x Delta_2",
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
    let seg = LatticePolytope::simplex(1);
    show(
        "Cayley(D1, D1, D1)",
        &cayley_sum(&[seg.clone(), seg.clone(), seg]).unwrap(),
    );
    show(
        "hexagon (del Pezzo)",
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
    show(
        "Hirzebruch polytope",
        &LatticePolytope::from_points(&pts(&[&[0, 1], &[1, 1], &[1, 2], &[0, 3]])).unwrap(),
    );
}
