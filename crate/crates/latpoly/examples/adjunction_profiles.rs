//! Polyhedral adjunction: shrinking polytopes, Q-codegree, nef value,
//! codegree and cores.
//!
//! ```sh
//! cargo run --example adjunction_profiles
//! ```

use latpoly::adjunction::{adjoint_polytope, adjunction_profile, NefValue};
use latpoly::polytope::LatticePolytope;
use latpoly::report::point_string;
use latpoly::{int, rat_string, ratio, Int};

fn pts(coords: &[&[i64]]) -> Vec<Vec<Int>> {
    coords
        .iter()
        .map(|p| p.iter().map(|&x| int(x)).collect())
        .collect()
}

fn profile(name: &str, p: &LatticePolytope) {
    let prof = adjunction_profile(p).unwrap();
    let tau = match &prof.tau {
        NefValue::Finite(t) => rat_string(t),
        NefValue::Infinite => "infinity".into(),
    };
    println!("== {name} ==");
    println!(
        "  mu = {}, tau = {}, cd = {}",
        rat_string(&prof.mu),
        tau,
        prof.cd
    );
    println!(
        "  core at s = {}: dimension {:?}",
        rat_string(&prof.core.s),
        prof.core.dim
    );
    for v in &prof.core.vertices {
        println!(
            "  core vertex {}",
            point_string(&v.iter().map(rat_string).collect::<Vec<_>>())
        );
    }
    println!();
}

fn main() {
    for n in 1..=4 {
        profile(&format!("Delta_{n}"), &LatticePolytope::simplex(n));
    }
    profile("unit square", &LatticePolytope::cube(2));
    profile(
        "Hirzebruch polytope",
        &LatticePolytope::from_points(&pts(&[&[0, 1], &[1, 1], &[1, 2], &[0, 3]])).unwrap(),
    );

    // this pentagon separates the nef value from the Q-codegree: the fan
    // changes at s = 1 while the polytope stays nonempty until s = 3/2
    let pentagon =
        LatticePolytope::from_points(&pts(&[&[0, 0], &[4, 0], &[4, 1], &[2, 3], &[0, 3]]))
            .unwrap();
    profile("pentagon with tau > mu", &pentagon);
    for s in [ratio(1, 2), ratio(1, 1), ratio(5, 4), ratio(3, 2)] {
        let adj = adjoint_polytope(&pentagon, &s).unwrap();
        println!(
            "  pentagon at s = {}: {} vertices, dim {:?}",
            rat_string(&s),
            adj.vertices.len(),
            adj.dim
        );
    }
}
