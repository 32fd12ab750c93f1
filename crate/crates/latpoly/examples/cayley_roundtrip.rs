//! Building Cayley sums and detecting their structure again.
//!
//! ```sh
//! cargo run --example cayley_roundtrip
//! ```

use latpoly::cayley::{cayley_decompose, cayley_sum, max_cayley_length, width_one_functionals};
use latpoly::polytope::LatticePolytope;
use latpoly::report::point_string;
use latpoly::{int, Int};

fn pts(coords: &[&[i64]]) -> Vec<Vec<Int>> {
    coords
        .iter()
        .map(|p| p.iter().map(|&x| int(x)).collect())
        .collect()
}

fn main() {
    // the Hirzebruch surface: Cayley(Delta_1, 2 Delta_1)
    let d1 = LatticePolytope::simplex(1);
    let two_d1 = d1.dilate(2).unwrap();
    let f1 = cayley_sum(&[d1.clone(), two_d1]).unwrap();
    println!("Cayley(D1, 2D1): {} vertices in Z^2", f1.vertex_count());
    for v in f1.vertices() {
        println!("  vertex {}", point_string(v));
    }
    let decs = cayley_decompose(&f1, 1).unwrap();
    println!("detected {} decomposition(s) at t = 1:", decs.len());
    for d in &decs {
        println!(
            "  fibers {:?}, slices normally equivalent: {}, slice volumes {:?}",
            d.fibers,
            d.slices_normally_equivalent,
            d.slices
                .iter()
                .map(|s| s.normalized_volume())
                .collect::<Vec<_>>()
        );
    }

    // a 3-dimensional twisted sum of a triangle and a square
    let sum = cayley_sum(&[LatticePolytope::simplex(2), LatticePolytope::cube(2)]).unwrap();
    println!(
        "\n[triangle * square]: dimension {}, {} vertices",
        sum.dim(),
        sum.vertex_count()
    );
    let decs = cayley_decompose(&sum, 1).unwrap();
    for d in &decs {
        println!(
            "  t=1 fibers {:?}, normally equivalent: {}",
            d.fibers, d.slices_normally_equivalent
        );
    }

    // width-one functionals are the search space for projections
    for (name, p) in [
        ("unit square", LatticePolytope::cube(2)),
        ("Delta_2", LatticePolytope::simplex(2)),
        ("2 Delta_2", LatticePolytope::simplex(2).dilate(2).unwrap()),
    ] {
        let w = width_one_functionals(&p).unwrap();
        println!("\n{name}: {} width-one functionals", w.len());
        for f in &w {
            println!("  {} . x + {}", point_string(&f.linear), f.offset);
        }
    }

    // maximal Cayley length
    let prism = LatticePolytope::from_points(&pts(&[
        &[0, 0, 0],
        &[1, 0, 0],
        &[0, 1, 0],
        &[1, 1, 0],
        &[0, 0, 1],
        &[1, 0, 1],
    ]))
    .unwrap();
    println!(
        "\nmax Cayley length: Delta_3 -> {}, prism -> {}, 2 Delta_2 -> {}",
        max_cayley_length(&LatticePolytope::simplex(3)).unwrap(),
        max_cayley_length(&prism).unwrap(),
        max_cayley_length(&LatticePolytope::simplex(2).dilate(2).unwrap()).unwrap(),
    );
}
