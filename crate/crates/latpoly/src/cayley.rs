//! Cayley sums and their detection. The sum of slices `R_0, ..., R_k` in
//! `Z^m` is the hull of `R_0 x {0}, R_1 x {e_1}, ..., R_k x {e_k}` in
//! `Z^{m+k}`; the coordinate projection onto the last `k` coordinates maps
//! it onto the unimodular simplex. Detection runs the other way: a length
//! `t+1` Cayley structure on `P` is exactly a choice of `t` integer affine
//! functionals that take values in {0,1} on the vertices, have pairwise
//! disjoint supports, and leave at least one vertex at zero. Those
//! functionals are enumerated exactly as the lattice points of a dual-side
//! polytope, so the search is complete.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::lattice_points::points_in_system;
use crate::linalg::{kernel_basis, lattice_map_surjective, solve_rational, IntMatrix};
use crate::polytope::{dot, LatticePolytope};
use crate::{Error, Int, Rat, Result};

/// An integer affine functional taking values in `{0, 1}` on the vertices
/// of its target polytope, attaining both.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WidthOneFunctional {
    pub linear: Vec<Int>,
    pub offset: Int,
}

impl WidthOneFunctional {
    pub fn eval(&self, p: &[Int]) -> Int {
        dot(&self.linear, p) + &self.offset
    }
}

/// A detected Cayley structure: a lattice-surjective affine projection onto
/// the standard unimodular simplex, the vertex fibers, and the slices.
#[derive(Clone, Debug)]
pub struct CayleyDecomposition {
    pub t: usize,
    /// linear part of the projection, one row per simplex coordinate
    pub projection: IntMatrix,
    pub offset: Vec<Int>,
    /// vertex indices per fiber: `fibers[0]` maps to the origin of the
    /// simplex, `fibers[i]` to `e_i`
    pub fibers: Vec<Vec<usize>>,
    /// slice polytopes `R_0, ..., R_t` in the ambient coordinates of `P`
    pub slices: Vec<LatticePolytope>,
    /// whether the slices are normally equivalent inside the fiber lattice
    pub slices_normally_equivalent: bool,
}

impl CayleyDecomposition {
    /// Canonical identity of a decomposition: the unordered partition of the
    /// vertex set into fibers.
    pub fn partition_key(&self) -> BTreeSet<Vec<usize>> {
        self.fibers.iter().cloned().collect()
    }
}

/// The Cayley sum `conv(R_0 x {0}, R_1 x {e_1}, ..., R_k x {e_k})`.
pub fn cayley_sum(slices: &[LatticePolytope]) -> Result<LatticePolytope> {
    if slices.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "a Cayley sum needs at least 2 slices, got {}",
            slices.len()
        )));
    }
    let m = slices[0].ambient_dim();
    if slices.iter().any(|s| s.ambient_dim() != m) {
        return Err(Error::DimensionMismatch(
            "Cayley slices must share one ambient dimension".into(),
        ));
    }
    let k = slices.len() - 1;
    let mut pts = Vec::new();
    for (i, slice) in slices.iter().enumerate() {
        for v in slice.vertices() {
            let mut p = v.clone();
            p.extend(std::iter::repeat_with(Int::zero).take(k));
            if i > 0 {
                p[m + i - 1] = Int::one();
            }
            pts.push(p);
        }
    }
    LatticePolytope::from_points(&pts)
}

/// The Cayley trick on point configurations:
/// `(A_1 x {0}) ∪ (A_2 x {e_1}) ∪ ... ∪ (A_r x {e_{r-1}})`, deduplicated.
pub fn cayley_config(configs: &[Vec<Vec<Int>>]) -> Result<Vec<Vec<Int>>> {
    if configs.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "the Cayley configuration needs at least 2 factors, got {}",
            configs.len()
        )));
    }
    let m = configs
        .first()
        .and_then(|c| c.first())
        .map(|p| p.len())
        .ok_or_else(|| Error::EmptyInput("empty point configuration".into()))?;
    if configs
        .iter()
        .any(|c| c.is_empty() || c.iter().any(|p| p.len() != m))
    {
        return Err(Error::DimensionMismatch(
            "configurations must be nonempty and share one dimension".into(),
        ));
    }
    let k = configs.len() - 1;
    let mut out = Vec::new();
    for (i, config) in configs.iter().enumerate() {
        for p in config {
            let mut q = p.clone();
            q.extend(std::iter::repeat_with(Int::zero).take(k));
            if i > 0 {
                q[m + i - 1] = Int::one();
            }
            out.push(q);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// All integer affine functionals with values in `[0, 1]` on `P`, attaining
/// both 0 and 1 on vertices. They are the lattice points of the dual-side
/// polytope `{(u, c) : 0 <= u.x + c <= 1 for all vertices x}` minus the
/// constants, enumerated exactly.
pub fn width_one_functionals(p: &LatticePolytope) -> Result<Vec<WidthOneFunctional>> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            dim: p.dim(),
            ambient: p.ambient_dim(),
        });
    }
    let n = p.dim();
    let verts = p.vertices();
    // rows over (u, c): (v, 1) . (u, c) >= 0 and (-v, -1) . (u, c) >= -1
    let mut rows: Vec<(Vec<Int>, Rat)> = Vec::with_capacity(2 * verts.len());
    for v in verts {
        let mut pos = v.clone();
        pos.push(Int::one());
        rows.push((pos.clone(), Rat::from_integer(Int::zero())));
        let neg: Vec<Int> = pos.iter().map(|x| -x.clone()).collect();
        rows.push((neg, Rat::from_integer(-Int::one())));
    }
    // bounding box from the exact vertices of the dual-side polytope
    let rat_rows: Vec<Vec<Rat>> = rows
        .iter()
        .map(|(a, _)| a.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let rhs: Vec<Rat> = rows.iter().map(|(_, b)| b.clone()).collect();
    let mut dual_vertices: Vec<Vec<Rat>> = Vec::new();
    for subset in combinations(rows.len(), n + 1) {
        let sub_rows: Vec<Vec<Rat>> = subset.iter().map(|&i| rat_rows[i].clone()).collect();
        let sub_rhs: Vec<Rat> = subset.iter().map(|&i| rhs[i].clone()).collect();
        let Some(x) = solve_rational(&sub_rows, &sub_rhs) else {
            continue;
        };
        let feasible = rat_rows
            .iter()
            .zip(&rhs)
            .all(|(a, b)| a.iter().zip(&x).map(|(p, q)| p * q).sum::<Rat>() >= *b);
        if feasible {
            dual_vertices.push(x);
        }
    }
    assert!(
        !dual_vertices.is_empty(),
        "the dual-side polytope contains the constants 0 and 1"
    );
    let lo: Vec<Int> = (0..n + 1)
        .map(|j| dual_vertices.iter().map(|v| v[j].floor().to_integer()).min().unwrap())
        .collect();
    let hi: Vec<Int> = (0..n + 1)
        .map(|j| dual_vertices.iter().map(|v| v[j].ceil().to_integer()).max().unwrap())
        .collect();
    let mut out = Vec::new();
    for q in points_in_system(&rows, &lo, &hi, false) {
        let (linear, offset) = q.split_at(n);
        if linear.iter().all(|x| x.is_zero()) {
            continue;
        }
        let f = WidthOneFunctional {
            linear: linear.to_vec(),
            offset: offset[0].clone(),
        };
        let values: Vec<Int> = verts.iter().map(|v| f.eval(v)).collect();
        if values.iter().any(|x| x.is_zero()) && values.iter().any(|x| x.is_one()) {
            out.push(f);
        }
    }
    out.sort();
    Ok(out)
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let need = k - cur.len();
        for i in start..=m.saturating_sub(need) {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut cur, &mut out);
    out
}

/// Translates each slice to the origin, rewrites it in a basis of the fiber
/// lattice `ker(projection)`, and tests normal equivalence there.
fn slices_normally_equivalent(
    p: &LatticePolytope,
    projection: &IntMatrix,
    fibers: &[Vec<usize>],
) -> Result<bool> {
    let fiber_basis = kernel_basis(projection);
    let d = fiber_basis.len();
    let mut reduced: Vec<LatticePolytope> = Vec::with_capacity(fibers.len());
    for fiber in fibers {
        let base = &p.vertices()[fiber[0]];
        let mut coords = Vec::with_capacity(fiber.len());
        for &v in fiber {
            let diff: Vec<Int> = p.vertices()[v]
                .iter()
                .zip(base)
                .map(|(a, b)| a - b)
                .collect();
            if d == 0 {
                coords.push(Vec::new());
                continue;
            }
            let rows: Vec<Vec<Rat>> = (0..diff.len())
                .map(|i| {
                    fiber_basis
                        .iter()
                        .map(|k| Rat::from_integer(k[i].clone()))
                        .collect()
                })
                .collect();
            let rhs: Vec<Rat> = diff.iter().map(|x| Rat::from_integer(x.clone())).collect();
            let x = solve_rational(&rows, &rhs)
                .expect("fiber differences lie in the projection kernel");
            coords.push(
                x.iter()
                    .map(|c| {
                        assert!(c.denom().is_one(), "kernel basis is saturated");
                        c.numer().clone()
                    })
                    .collect(),
            );
        }
        reduced.push(LatticePolytope::from_points(&coords)?);
    }
    for other in reduced.iter().skip(1) {
        if !crate::fan::normally_equivalent(&reduced[0], other)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All Cayley decompositions of `P` onto the standard unimodular simplex of
/// dimension `t`, one per fiber partition of the vertices, in lexicographic
/// partition order.
pub fn cayley_decompose(p: &LatticePolytope, t: usize) -> Result<Vec<CayleyDecomposition>> {
    let n = p.dim();
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            dim: n,
            ambient: p.ambient_dim(),
        });
    }
    if t < 1 || t > n {
        return Err(Error::InvalidParameter(format!(
            "Cayley length parameter t must satisfy 1 <= t <= {n}, got {t}"
        )));
    }
    let funcs = width_one_functionals(p)?;
    let verts = p.vertices();
    assert!(verts.len() <= 128, "desk-scale vertex counts only");
    let supports: Vec<u128> = funcs
        .iter()
        .map(|f| {
            let mut mask = 0u128;
            for (i, v) in verts.iter().enumerate() {
                if f.eval(v).is_one() {
                    mask |= 1 << i;
                }
            }
            mask
        })
        .collect();
    let full: u128 = if verts.len() == 128 {
        u128::MAX
    } else {
        (1u128 << verts.len()) - 1
    };

    let mut found: BTreeMap<BTreeSet<Vec<usize>>, Vec<usize>> = BTreeMap::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn dfs(
        start: usize,
        t: usize,
        used: u128,
        full: u128,
        supports: &[u128],
        chosen: &mut Vec<usize>,
        found: &mut BTreeMap<BTreeSet<Vec<usize>>, Vec<usize>>,
        nverts: usize,
    ) {
        if chosen.len() == t {
            if used != full {
                let mut fibers: Vec<Vec<usize>> = Vec::with_capacity(t + 1);
                fibers.push((0..nverts).filter(|i| used >> i & 1 == 0).collect());
                for &f in chosen.iter() {
                    fibers.push((0..nverts).filter(|i| supports[f] >> i & 1 == 1).collect());
                }
                let key: BTreeSet<Vec<usize>> = fibers.iter().cloned().collect();
                found.entry(key).or_insert_with(|| chosen.clone());
            }
            return;
        }
        for i in start..supports.len() {
            if supports[i] & used == 0 {
                chosen.push(i);
                dfs(i + 1, t, used | supports[i], full, supports, chosen, found, nverts);
                chosen.pop();
            }
        }
    }
    dfs(0, t, 0, full, &supports, &mut chosen, &mut found, verts.len());

    let mut out = Vec::with_capacity(found.len());
    for (_, chosen) in found {
        let projection = IntMatrix::from_rows(
            &chosen.iter().map(|&i| funcs[i].linear.clone()).collect::<Vec<_>>(),
        );
        let offset: Vec<Int> = chosen.iter().map(|&i| funcs[i].offset.clone()).collect();
        assert!(
            lattice_map_surjective(&projection)?,
            "a projection attaining every simplex vertex is lattice-surjective"
        );
        let mut used = 0u128;
        for &i in &chosen {
            used |= supports[i];
        }
        let mut fibers: Vec<Vec<usize>> = Vec::with_capacity(t + 1);
        fibers.push((0..verts.len()).filter(|i| used >> i & 1 == 0).collect());
        for &i in &chosen {
            fibers.push((0..verts.len()).filter(|j| supports[i] >> j & 1 == 1).collect());
        }
        let slices: Vec<LatticePolytope> = fibers
            .iter()
            .map(|fiber| {
                let pts: Vec<Vec<Int>> = fiber.iter().map(|&v| verts[v].clone()).collect();
                LatticePolytope::from_points(&pts)
            })
            .collect::<Result<_>>()?;
        let equiv = slices_normally_equivalent(p, &projection, &fibers)?;
        out.push(CayleyDecomposition {
            t,
            projection,
            offset,
            fibers,
            slices,
            slices_normally_equivalent: equiv,
        });
    }
    Ok(out)
}

/// Largest `t + 1` such that `P` has a Cayley decomposition of length
/// `t + 1`; 1 when none exists.
pub fn max_cayley_length(p: &LatticePolytope) -> Result<usize> {
    let n = p.dim();
    for t in (1..=n).rev() {
        if !cayley_decompose(p, t)?.is_empty() {
            return Ok(t + 1);
        }
    }
    Ok(1)
}
