//! Regularity of lattice polytopes: simplicity, smoothness, edge lattice
//! lengths and the jet-spanning level. All checks are intrinsic: they are
//! evaluated in the lattice of the affine span.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::faces::{face_lattice, FaceLattice};
use crate::linalg::{primitive_vector, IntMatrix};
use crate::polytope::LatticePolytope;
use crate::{Error, Int, Result};

#[derive(Clone, Debug)]
pub struct RegularityReport {
    pub simple: bool,
    pub smooth: bool,
    /// minimum lattice length over all edges; `None` for a point
    pub min_edge_length: Option<Int>,
    /// first vertex witnessing a simplicity or smoothness failure
    pub offending_vertex: Option<usize>,
}

/// Edge of the face lattice keyed by its two vertex indices.
pub type EdgeLengths = Vec<((usize, usize), Int)>;

fn edges_at_vertices(p: &LatticePolytope, lattice: &FaceLattice) -> Vec<Vec<usize>> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); p.vertex_count()];
    for (e, face) in lattice.faces.iter().enumerate().filter(|(_, f)| f.dim == 1) {
        for &v in &face.vertices {
            incident[v].push(e);
        }
    }
    incident
}

/// Lattice length of each edge: the number of lattice points on it minus 1,
/// i.e. the gcd of the coordinate differences of its endpoints.
pub fn edge_lattice_lengths(p: &LatticePolytope) -> EdgeLengths {
    let lattice = face_lattice(p);
    lattice
        .faces
        .iter()
        .filter(|f| f.dim == 1)
        .map(|f| {
            debug_assert_eq!(f.vertices.len(), 2);
            let (a, b) = (f.vertices[0], f.vertices[1]);
            let va = &p.vertices()[a];
            let vb = &p.vertices()[b];
            let mut g = Int::zero();
            for (x, y) in va.iter().zip(vb) {
                g = g.gcd(&(x - y));
            }
            ((a, b), g)
        })
        .collect()
}

fn vertex_edge_directions(
    p: &LatticePolytope,
    lattice: &FaceLattice,
    incident: &[Vec<usize>],
    v: usize,
) -> Vec<Vec<Int>> {
    incident[v]
        .iter()
        .map(|&e| {
            let face = &lattice.faces[e];
            let other = if face.vertices[0] == v {
                face.vertices[1]
            } else {
                face.vertices[0]
            };
            let diff: Vec<Int> = p.span_vertices()[other]
                .iter()
                .zip(&p.span_vertices()[v])
                .map(|(a, b)| a - b)
                .collect();
            primitive_vector(&diff).expect("edge endpoints differ")
        })
        .collect()
}

/// True iff exactly `dim(P)` edges pass through every vertex.
pub fn is_simple(p: &LatticePolytope) -> bool {
    simplicity_witness(p).is_none()
}

/// First vertex with the wrong edge count, if any.
fn simplicity_witness(p: &LatticePolytope) -> Option<usize> {
    let d = p.dim();
    if d == 0 {
        return None;
    }
    let lattice = face_lattice(p);
    let incident = edges_at_vertices(p, &lattice);
    (0..p.vertex_count()).find(|&v| incident[v].len() != d)
}

/// True iff the polytope is simple and at every vertex the primitive edge
/// directions form a basis of the span lattice.
pub fn is_smooth(p: &LatticePolytope) -> bool {
    regularity_report(p).smooth
}

/// Full regularity report: simplicity, smoothness, minimum edge length and
/// the first offending vertex when a check fails.
pub fn regularity_report(p: &LatticePolytope) -> RegularityReport {
    let d = p.dim();
    if d == 0 {
        return RegularityReport {
            simple: true,
            smooth: true,
            min_edge_length: None,
            offending_vertex: None,
        };
    }
    let lattice = face_lattice(p);
    let incident = edges_at_vertices(p, &lattice);
    let mut simple = true;
    let mut smooth = true;
    let mut offending = None;
    for v in 0..p.vertex_count() {
        if incident[v].len() != d {
            simple = false;
            smooth = false;
            offending = Some(v);
            break;
        }
        let dirs = vertex_edge_directions(p, &lattice, &incident, v);
        if !IntMatrix::from_rows(&dirs).det().abs().is_one() {
            smooth = false;
            if offending.is_none() {
                offending = Some(v);
            }
        }
    }
    let min_edge_length = edge_lattice_lengths(p)
        .into_iter()
        .map(|(_, len)| len)
        .min();
    RegularityReport {
        simple,
        smooth,
        min_edge_length,
        offending_vertex: offending,
    }
}

/// Largest `k` such that the associated embedding is `k`-jet spanned: the
/// minimum lattice length over all edges. Stated for non-singular toric
/// varieties only, so non-smooth input is rejected.
pub fn jet_level(p: &LatticePolytope) -> Result<Int> {
    let report = regularity_report(p);
    if !report.smooth {
        return Err(Error::NotSmooth(
            "jet level is defined for smooth polytopes only".into(),
        ));
    }
    report.min_edge_length.ok_or_else(|| {
        Error::InvalidParameter("jet level of a 0-dimensional polytope".into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;
    use num_traits::Signed;

    fn pts(coords: &[&[i64]]) -> Vec<Vec<Int>> {
        coords
            .iter()
            .map(|p| p.iter().map(|&x| int(x)).collect())
            .collect()
    }

    fn square_pyramid() -> LatticePolytope {
        LatticePolytope::from_points(&pts(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[1, 1, 0],
            &[0, 0, 1],
        ]))
        .unwrap()
    }

    #[test]
    fn cube_and_simplices_are_simple() {
        assert!(is_simple(&LatticePolytope::cube(3)));
        for n in 1..=4 {
            assert!(is_simple(&LatticePolytope::simplex(n)));
        }
    }

    #[test]
    fn square_pyramid_is_not_simple() {
        let p = square_pyramid();
        assert!(!is_simple(&p));
        let report = regularity_report(&p);
        assert!(!report.simple && !report.smooth);
        // the offending vertex is the apex (0,0,1), which has 4 edges
        let apex = p
            .vertices()
            .iter()
            .position(|v| v == &pts(&[&[0, 0, 1]])[0])
            .unwrap();
        assert_eq!(report.offending_vertex, Some(apex));
    }

    #[test]
    fn smoothness_examples() {
        assert!(is_smooth(&LatticePolytope::cube(2)));
        let two_delta2 = LatticePolytope::simplex(2).dilate(2).unwrap();
        assert!(is_smooth(&two_delta2));
        let bad = LatticePolytope::from_points(&pts(&[&[0, 0], &[2, 0], &[0, 1]])).unwrap();
        let report = regularity_report(&bad);
        assert!(report.simple);
        assert!(!report.smooth);
        // vertex (0,1): directions (0,-1) and (2,-1) have determinant 2
        let idx = bad
            .vertices()
            .iter()
            .position(|v| v == &pts(&[&[0, 1]])[0])
            .unwrap();
        assert_eq!(report.offending_vertex, Some(idx));
    }

    #[test]
    fn smooth_implies_simple() {
        for p in [
            LatticePolytope::cube(3),
            LatticePolytope::simplex(3),
            square_pyramid(),
            LatticePolytope::from_points(&pts(&[&[0, 0], &[2, 0], &[0, 1]])).unwrap(),
        ] {
            let r = regularity_report(&p);
            if r.smooth {
                assert!(r.simple);
            }
        }
    }

    #[test]
    fn edge_lengths_examples() {
        let two_delta2 = LatticePolytope::simplex(2).dilate(2).unwrap();
        assert!(edge_lattice_lengths(&two_delta2)
            .iter()
            .all(|(_, len)| *len == int(2)));

        let hexagon = LatticePolytope::from_points(&pts(&[
            &[0, 0],
            &[1, 0],
            &[2, 1],
            &[2, 2],
            &[1, 2],
            &[0, 1],
        ]))
        .unwrap();
        assert!(edge_lattice_lengths(&hexagon)
            .iter()
            .all(|(_, len)| *len == int(1)));

        let seg = LatticePolytope::from_points(&pts(&[&[0], &[5]])).unwrap();
        let lens = edge_lattice_lengths(&seg);
        assert_eq!(lens.len(), 1);
        assert_eq!(lens[0].1, int(5));
    }

    #[test]
    fn jet_level_examples() {
        let two_delta2 = LatticePolytope::simplex(2).dilate(2).unwrap();
        assert_eq!(jet_level(&two_delta2).unwrap(), int(2));

        let hexagon = LatticePolytope::from_points(&pts(&[
            &[0, 0],
            &[1, 0],
            &[2, 1],
            &[2, 2],
            &[1, 2],
            &[0, 1],
        ]))
        .unwrap();
        assert_eq!(jet_level(&hexagon).unwrap(), int(1));

        for a in 1..=3 {
            for n in 1..=3 {
                let p = LatticePolytope::simplex(n).dilate(a).unwrap();
                assert_eq!(jet_level(&p).unwrap(), int(a));
            }
        }

        assert!(jet_level(&square_pyramid()).is_err());
    }

    #[test]
    fn jet_level_scales_with_dilation_on_equal_edge_polytopes() {
        // when every edge of P has the same length, the jet level of tP is
        // t times the jet level of P; simplices and cubes qualify
        for p in [
            LatticePolytope::simplex(2),
            LatticePolytope::simplex(3),
            LatticePolytope::cube(2),
            LatticePolytope::cube(3),
            LatticePolytope::simplex(2).dilate(2).unwrap(),
        ] {
            let base = jet_level(&p).unwrap();
            for t in 2..=3 {
                let scaled = jet_level(&p.dilate(t).unwrap()).unwrap();
                assert_eq!(scaled, base.clone() * int(t));
            }
        }
    }

    #[test]
    fn regularity_is_unimodular_invariant() {
        use crate::linalg::IntMatrix;
        let maps = [
            IntMatrix::from_rows(&pts(&[&[1, 1], &[0, 1]])),
            IntMatrix::from_rows(&pts(&[&[2, 1], &[1, 1]])),
            IntMatrix::from_rows(&pts(&[&[0, -1], &[1, 0]])),
        ];
        let shift = pts(&[&[3, -2]])[0].clone();
        for p in [
            LatticePolytope::cube(2),
            LatticePolytope::simplex(2).dilate(2).unwrap(),
            LatticePolytope::from_points(&pts(&[&[0, 0], &[2, 0], &[0, 1]])).unwrap(),
        ] {
            let r0 = regularity_report(&p);
            for m in &maps {
                assert!(m.det().abs().is_one());
                let q = p.apply_unimodular(m, &shift).unwrap();
                let r1 = regularity_report(&q);
                assert_eq!(r0.simple, r1.simple);
                assert_eq!(r0.smooth, r1.smooth);
                assert_eq!(r0.min_edge_length, r1.min_edge_length);
            }
        }
    }
}
