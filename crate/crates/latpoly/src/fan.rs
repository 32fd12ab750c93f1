//! Normal fans and normal equivalence. A fan is stored as the set of its
//! maximal cones, one per vertex, each represented by the sorted set of
//! primitive inward facet normals active at that vertex; for polytope normal
//! fans those normals are exactly the extreme rays of the cone, so set
//! equality of this representation is fan equality.

use std::collections::BTreeSet;

use crate::polytope::LatticePolytope;
use crate::{Error, Int, Result};

pub type Cone = BTreeSet<Vec<Int>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFan {
    pub cones: BTreeSet<Cone>,
}

/// Normal fan of a polytope, computed in the coordinates of its span
/// lattice (ambient coordinates for full-dimensional polytopes).
pub fn normal_fan(p: &LatticePolytope) -> NormalFan {
    let mut cones = BTreeSet::new();
    for v in 0..p.vertex_count() {
        let cone: Cone = p
            .facets()
            .iter()
            .filter(|f| f.vertices.binary_search(&v).is_ok())
            .map(|f| f.normal.clone())
            .collect();
        cones.insert(cone);
    }
    NormalFan { cones }
}

/// Whether two polytopes in the same ambient lattice have equal normal fans.
/// Lower-dimensional polytopes are first translated so their affine spans
/// pass through the origin; the spans must then coincide as saturated
/// lattices (compared via their canonical HNF bases), after which the fans
/// are compared in the shared span coordinates. Fan isomorphism up to a
/// lattice automorphism is not attempted.
pub fn normally_equivalent(p: &LatticePolytope, q: &LatticePolytope) -> Result<bool> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(Error::DimensionMismatch(format!(
            "normal equivalence of ambient dims {} and {}",
            p.ambient_dim(),
            q.ambient_dim()
        )));
    }
    if p.dim() != q.dim() {
        return Ok(false);
    }
    if p.dim() == 0 {
        return Ok(true);
    }
    if !p.is_full_dimensional() && p.span().basis != q.span().basis {
        // translated spans differ as sublattices
        return Ok(false);
    }
    Ok(normal_fan(p) == normal_fan(q))
}
