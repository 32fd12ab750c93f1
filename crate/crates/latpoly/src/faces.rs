//! Face lattices and face volumes. Faces are generated by intersecting
//! facet vertex sets, which yields every nonempty face of a polytope; each
//! face carries its dimension, vertex set and active facets.

use std::collections::BTreeMap;

use crate::linalg::affine_rank;
use crate::polytope::LatticePolytope;
use crate::{Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub dim: usize,
    /// indices into the polytope's vertex list, sorted
    pub vertices: Vec<usize>,
    /// indices of the facets containing this face
    pub active_facets: Vec<usize>,
}

/// All nonempty faces of a polytope, including the polytope itself,
/// grouped by dimension.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    pub faces: Vec<Face>,
}

impl FaceLattice {
    pub fn counts_by_dim(&self) -> Vec<usize> {
        let top = self.faces.iter().map(|f| f.dim).max().unwrap_or(0);
        let mut counts = vec![0usize; top + 1];
        for f in &self.faces {
            counts[f.dim] += 1;
        }
        counts
    }

    pub fn faces_of_dim(&self, d: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == d)
    }

    /// Alternating sum of face counts (including the polytope, excluding the
    /// empty face); equals 1 for every polytope.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .map(|f| if f.dim % 2 == 0 { 1i64 } else { -1i64 })
            .sum()
    }
}

/// Computes the full face lattice by closing the facet vertex sets under
/// intersection. Every proper face of a polytope is an intersection of
/// facets, so the closure is complete.
pub fn face_lattice(p: &LatticePolytope) -> FaceLattice {
    let span_rank = |ids: &[usize]| -> usize {
        let pts: Vec<Vec<Rat>> = ids
            .iter()
            .map(|&i| {
                p.span_vertices()[i]
                    .iter()
                    .map(|x| Rat::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        affine_rank(&pts)
    };

    let all: Vec<usize> = (0..p.vertex_count()).collect();
    let mut seen: BTreeMap<Vec<usize>, Face> = BTreeMap::new();
    let top = Face {
        dim: p.dim(),
        vertices: all.clone(),
        active_facets: Vec::new(),
    };
    let mut queue = vec![all];
    seen.insert(queue[0].clone(), top);
    while let Some(current) = queue.pop() {
        for facet in p.facets() {
            let inter: Vec<usize> = current
                .iter()
                .copied()
                .filter(|v| facet.vertices.binary_search(v).is_ok())
                .collect();
            if inter.is_empty() || inter == current || seen.contains_key(&inter) {
                continue;
            }
            let active: Vec<usize> = p
                .facets()
                .iter()
                .enumerate()
                .filter(|(_, f)| inter.iter().all(|v| f.vertices.binary_search(v).is_ok()))
                .map(|(i, _)| i)
                .collect();
            let face = Face {
                dim: span_rank(&inter),
                vertices: inter.clone(),
                active_facets: active,
            };
            seen.insert(inter.clone(), face);
            queue.push(inter);
        }
    }
    let mut faces: Vec<Face> = seen.into_values().collect();
    faces.sort_by(|a, b| (a.dim, &a.vertices).cmp(&(b.dim, &b.vertices)));
    FaceLattice { faces }
}

/// Normalized lattice volume of a face: `dim(F)!` times the Euclidean volume
/// of `F` in the lattice of its affine span; 1 for vertices.
pub fn normalized_volume_of_face(p: &LatticePolytope, face: &Face) -> Int {
    let pts: Vec<Vec<Int>> = face.vertices.iter().map(|&i| p.vertices()[i].clone()).collect();
    LatticePolytope::from_points(&pts)
        .expect("face vertex set is nonempty")
        .normalized_volume()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;
    use crate::polytope::LatticePolytope;

    fn pts(coords: &[&[i64]]) -> Vec<Vec<crate::Int>> {
        coords
            .iter()
            .map(|p| p.iter().map(|&x| int(x)).collect())
            .collect()
    }

    fn prism() -> LatticePolytope {
        // Delta_1 x Delta_2
        LatticePolytope::from_points(&pts(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[1, 1, 0],
            &[0, 0, 1],
            &[1, 0, 1],
        ]))
        .unwrap()
    }

    #[test]
    fn unit_square_counts() {
        let l = face_lattice(&LatticePolytope::cube(2));
        assert_eq!(l.counts_by_dim(), vec![4, 4, 1]);
        assert_eq!(l.euler_characteristic(), 1);
    }

    #[test]
    fn simplex3_counts() {
        let l = face_lattice(&LatticePolytope::simplex(3));
        assert_eq!(l.counts_by_dim(), vec![4, 6, 4, 1]);
    }

    /// Independent oracle: a subset of vertices is a face iff it is the
    /// argmin set of some integer linear functional. Sweeping a box of
    /// functionals large enough to expose every normal cone enumerates all
    /// proper faces.
    fn faces_by_functional_sweep(p: &LatticePolytope, bound: i64) -> Vec<Vec<usize>> {
        use std::collections::BTreeSet;
        let n = p.dim();
        let verts = p.span_vertices();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut u = vec![-bound; n];
        loop {
            let vals: Vec<crate::Int> = verts
                .iter()
                .map(|v| u.iter().zip(v).map(|(&a, b)| int(a) * b).sum())
                .collect();
            let min = vals.iter().min().unwrap().clone();
            let argmin: Vec<usize> = (0..verts.len()).filter(|&i| vals[i] == min).collect();
            found.insert(argmin);
            let mut carry = 0;
            loop {
                if carry == n {
                    return found.into_iter().collect();
                }
                u[carry] += 1;
                if u[carry] <= bound {
                    break;
                }
                u[carry] = -bound;
                carry += 1;
            }
        }
    }

    #[test]
    fn prism_counts_match_functional_sweep_oracle() {
        let p = prism();
        let l = face_lattice(&p);
        assert_eq!(l.counts_by_dim(), vec![6, 9, 5, 1]);
        let oracle = faces_by_functional_sweep(&p, 2);
        let lattice_sets: std::collections::BTreeSet<Vec<usize>> =
            l.faces.iter().map(|f| f.vertices.clone()).collect();
        let oracle_sets: std::collections::BTreeSet<Vec<usize>> = oracle.into_iter().collect();
        assert_eq!(lattice_sets, oracle_sets);
    }

    #[test]
    fn face_volumes_of_prism() {
        let p = prism();
        let l = face_lattice(&p);
        // two triangles (volume 1) and three squares (volume 2)
        let mut facet_vols: Vec<i64> = l
            .faces_of_dim(2)
            .map(|f| {
                let v = normalized_volume_of_face(&p, f);
                i64::try_from(&v).unwrap()
            })
            .collect();
        facet_vols.sort_unstable();
        assert_eq!(facet_vols, vec![1, 1, 2, 2, 2]);
        assert_eq!(p.normalized_volume(), int(3));
    }

    #[test]
    fn point_face_lattice() {
        let p = LatticePolytope::from_points(&pts(&[&[7, -2]])).unwrap();
        let l = face_lattice(&p);
        assert_eq!(l.counts_by_dim(), vec![1]);
        assert_eq!(l.euler_characteristic(), 1);
    }
}
