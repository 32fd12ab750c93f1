//! Exact convex-geometry core: hulls with rational orientation predicates,
//! irredundant facet descriptions, affine-span lattice reduction, dilation
//! and Minkowski sums.
//!
//! The hull is an incremental beneath-beyond construction over exact integer
//! coordinates. The boundary is maintained as a simplicial complex; coplanar
//! pieces are merged afterwards into true facets. Lower-dimensional inputs
//! are reduced to the saturated lattice of their affine span first, so all
//! facet data lives in coordinates where the polytope is full-dimensional.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::linalg::{
    self, affine_rank, complete_to_unimodular, kernel_basis, primitive_vector,
    saturated_row_lattice, solve_rational, unimodular_inverse, IntMatrix,
};
use crate::{Error, Int, Rat, Result};

/// The affine span of a lattice point set: an origin plus an HNF-canonical
/// basis of the saturated direction lattice. Full-dimensional spans use the
/// zero origin and the identity basis, so span coordinates coincide with
/// ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSpan {
    pub ambient_dim: usize,
    pub origin: Vec<Int>,
    pub basis: Vec<Vec<Int>>,
}

impl AffineSpan {
    pub fn of_points(points: &[Vec<Int>]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput("affine span of no points".into()));
        }
        let ambient = points[0].len();
        let origin = points
            .iter()
            .min()
            .expect("nonempty")
            .clone();
        let diffs: Vec<Vec<Int>> = points
            .iter()
            .map(|p| p.iter().zip(&origin).map(|(a, b)| a - b).collect())
            .collect();
        let basis = saturated_row_lattice(&IntMatrix::from_rows(&diffs));
        if basis.len() == ambient {
            return Ok(AffineSpan {
                ambient_dim: ambient,
                origin: vec![Int::zero(); ambient],
                basis: (0..ambient)
                    .map(|i| {
                        (0..ambient)
                            .map(|j| if i == j { Int::one() } else { Int::zero() })
                            .collect()
                    })
                    .collect(),
            });
        }
        Ok(AffineSpan {
            ambient_dim: ambient,
            origin,
            basis,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Integer span coordinates of an ambient lattice point, or `None` when
    /// the point is off the span. Points of the span always have integer
    /// coordinates because the basis generates the saturated lattice.
    pub fn to_span(&self, p: &[Int]) -> Option<Vec<Int>> {
        if self.dim() == self.ambient_dim {
            return Some(p.iter().zip(&self.origin).map(|(a, b)| a - b).collect());
        }
        if self.dim() == 0 {
            return if p == &self.origin[..] { Some(Vec::new()) } else { None };
        }
        let rows: Vec<Vec<Rat>> = (0..self.ambient_dim)
            .map(|i| {
                self.basis
                    .iter()
                    .map(|b| Rat::from_integer(b[i].clone()))
                    .collect()
            })
            .collect();
        let rhs: Vec<Rat> = p
            .iter()
            .zip(&self.origin)
            .map(|(a, b)| Rat::from_integer(a - b))
            .collect();
        let x = solve_rational(&rows, &rhs)?;
        let mut out = Vec::with_capacity(x.len());
        for c in x {
            if !c.denom().is_one() {
                return None;
            }
            out.push(c.numer().clone());
        }
        Some(out)
    }

    pub fn from_span(&self, c: &[Int]) -> Vec<Int> {
        let mut p = self.origin.clone();
        for (coef, b) in c.iter().zip(&self.basis) {
            for (pi, bi) in p.iter_mut().zip(b) {
                *pi += coef * bi;
            }
        }
        p
    }
}

/// One irredundant facet in span coordinates: `normal . y >= offset` holds on
/// the polytope with equality exactly on the facet. Normals are primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<Int>,
    pub offset: Int,
    pub vertices: Vec<usize>,
}

/// Irredundant H-description in ambient coordinates: `a x >= b` together
/// with the equality rows pinning the affine span of lower-dimensional
/// polytopes. All normals are primitive; `b` is integral for lattice
/// polytopes described minimally.
#[derive(Clone, Debug)]
pub struct HRep {
    pub a: IntMatrix,
    pub b: Vec<Rat>,
    pub eq_a: IntMatrix,
    pub eq_b: Vec<Rat>,
}

/// A lattice polytope: the convex hull of finitely many points of `Z^n`,
/// stored hull-minimally (the vertex list contains exactly the extreme
/// points, lex-sorted).
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    ambient_dim: usize,
    vertices: Vec<Vec<Int>>,
    span: AffineSpan,
    span_vertices: Vec<Vec<Int>>,
    facets: Vec<Facet>,
    volume: Int,
}

struct SimpFacet {
    verts: Vec<usize>,
    normal: Vec<Int>,
    offset: Int,
}

/// Primitive integer hyperplane through `n` affinely independent points of
/// `Q^n` (given as integer points). Returns `(normal, offset)` with
/// `normal . p = offset` for each point, or `None` when degenerate.
fn integer_hyperplane(points: &[&Vec<Int>]) -> Option<(Vec<Int>, Int)> {
    let n = points[0].len();
    debug_assert_eq!(points.len(), n);
    if n == 1 {
        return Some((vec![Int::one()], points[0][0].clone()));
    }
    let diffs: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(points[0].iter())
                .map(|(a, b)| Rat::from_integer(a - b))
                .collect()
        })
        .collect();
    // rational nullspace of the (n-1) x n difference matrix; must be 1-dim
    let mut work = diffs;
    let m = work.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..m).find(|&i| !work[i][col].is_zero()) else {
            continue;
        };
        work.swap(rank, p);
        let inv = work[rank][col].recip();
        for j in col..n {
            work[rank][j] = &work[rank][j] * &inv;
        }
        for i in 0..m {
            if i != rank && !work[i][col].is_zero() {
                let f = work[i][col].clone();
                for j in col..n {
                    let sub = &f * &work[rank][j];
                    work[i][j] = &work[i][j] - &sub;
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    if rank != n - 1 {
        return None;
    }
    let free_col = (0..n).find(|&c| pivot_of_col[c].is_none()).expect("one free column");
    let mut null: Vec<Rat> = vec![Rat::from_integer(Int::zero()); n];
    null[free_col] = Rat::from_integer(Int::one());
    for (col, piv) in pivot_of_col.iter().enumerate() {
        if let Some(r) = piv {
            null[col] = -work[*r][free_col].clone();
        }
    }
    // clear denominators, make primitive
    let mut lcm = Int::one();
    for v in &null {
        lcm = num_integer::lcm(lcm, v.denom().clone());
    }
    let ints: Vec<Int> = null
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let normal = primitive_vector(&ints).ok()?;
    let offset: Int = normal.iter().zip(points[0].iter()).map(|(a, b)| a * b).sum();
    Some((normal, offset))
}

fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn dot_rat_int(a: &[Int], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .map(|(x, y)| Rat::from_integer(x.clone()) * y)
        .sum()
}

/// Beneath-beyond hull of full-dimensional, deduplicated, lex-sorted integer
/// points. Returns the live simplicial boundary facets.
fn hull_fulldim(points: &[Vec<Int>], n: usize) -> Vec<SimpFacet> {
    assert!(n >= 1);
    // greedy affinely independent starting simplex
    let mut simplex = vec![0usize];
    for i in 1..points.len() {
        let cand: Vec<Vec<Rat>> = simplex
            .iter()
            .chain(std::iter::once(&i))
            .map(|&id| points[id].iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        if affine_rank(&cand) == simplex.len() {
            simplex.push(i);
        }
        if simplex.len() == n + 1 {
            break;
        }
    }
    assert_eq!(simplex.len(), n + 1, "points must span the ambient space");

    let centroid: Vec<Rat> = (0..n)
        .map(|j| {
            let sum: Int = simplex.iter().map(|&id| points[id][j].clone()).sum();
            Rat::new(sum, Int::from(n as i64 + 1))
        })
        .collect();

    let mut facets: Vec<SimpFacet> = Vec::new();
    let mut alive: Vec<bool> = Vec::new();
    let mut ridge_map: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();

    let push_facet = |verts: Vec<usize>,
                          facets: &mut Vec<SimpFacet>,
                          alive: &mut Vec<bool>,
                          ridge_map: &mut HashMap<Vec<usize>, Vec<usize>>| {
        let pts: Vec<&Vec<Int>> = verts.iter().map(|&v| &points[v]).collect();
        let (mut normal, mut offset) =
            integer_hyperplane(&pts).expect("facet points are affinely independent");
        // orient inward: the interior reference point satisfies normal.x > offset
        let at_centroid = dot_rat_int(&normal, &centroid);
        let off_rat = Rat::from_integer(offset.clone());
        debug_assert!(at_centroid != off_rat, "reference point on a facet plane");
        if at_centroid < off_rat {
            for x in normal.iter_mut() {
                *x = -x.clone();
            }
            offset = -offset;
        }
        let id = facets.len();
        for k in 0..verts.len() {
            let mut ridge = verts.clone();
            ridge.remove(k);
            ridge_map.entry(ridge).or_default().push(id);
        }
        facets.push(SimpFacet { verts, normal, offset });
        alive.push(true);
    };

    for k in 0..=n {
        let mut verts: Vec<usize> = simplex.clone();
        verts.remove(k);
        verts.sort_unstable();
        push_facet(verts, &mut facets, &mut alive, &mut ridge_map);
    }

    let in_simplex: std::collections::HashSet<usize> = simplex.iter().copied().collect();
    for p_id in 0..points.len() {
        if in_simplex.contains(&p_id) {
            continue;
        }
        let p = &points[p_id];
        let visible: Vec<usize> = (0..facets.len())
            .filter(|&f| alive[f] && dot_int(&facets[f].normal, p) < facets[f].offset)
            .collect();
        if visible.is_empty() {
            continue;
        }
        let visible_set: std::collections::HashSet<usize> = visible.iter().copied().collect();
        // horizon: ridges of visible facets whose partner facet is invisible
        let mut horizon: Vec<Vec<usize>> = Vec::new();
        for &f in &visible {
            for k in 0..facets[f].verts.len() {
                let mut ridge = facets[f].verts.clone();
                ridge.remove(k);
                let incident = ridge_map.get(&ridge).expect("ridge bookkeeping");
                let live: Vec<usize> = incident
                    .iter()
                    .copied()
                    .filter(|&g| alive[g])
                    .collect();
                debug_assert_eq!(live.len(), 2, "boundary complex must be closed");
                let other = if live[0] == f { live[1] } else { live[0] };
                if !visible_set.contains(&other) {
                    horizon.push(ridge);
                }
            }
        }
        for &f in &visible {
            alive[f] = false;
            for k in 0..facets[f].verts.len() {
                let mut ridge = facets[f].verts.clone();
                ridge.remove(k);
                if let Some(list) = ridge_map.get_mut(&ridge) {
                    list.retain(|&g| g != f);
                    if list.is_empty() {
                        ridge_map.remove(&ridge);
                    }
                }
            }
        }
        for ridge in horizon {
            let mut verts = ridge;
            verts.push(p_id);
            verts.sort_unstable();
            push_facet(verts, &mut facets, &mut alive, &mut ridge_map);
        }
    }

    facets
        .into_iter()
        .zip(alive)
        .filter_map(|(f, live)| live.then_some(f))
        .collect()
}

impl LatticePolytope {
    /// Convex hull of integer points: deduplicates, reduces to the affine
    /// span lattice, and keeps exactly the extreme points.
    pub fn from_points(points: &[Vec<Int>]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput("convex hull of no points".into()));
        }
        let ambient = points[0].len();
        if points.iter().any(|p| p.len() != ambient) {
            return Err(Error::DimensionMismatch(
                "hull input points have differing dimensions".into(),
            ));
        }
        let mut pts: Vec<Vec<Int>> = points.to_vec();
        pts.sort();
        pts.dedup();

        let span = AffineSpan::of_points(&pts)?;
        let r = span.dim();
        if r == 0 {
            let v = pts[0].clone();
            return Ok(LatticePolytope {
                ambient_dim: ambient,
                vertices: vec![v],
                span,
                span_vertices: vec![Vec::new()],
                facets: Vec::new(),
                volume: Int::one(),
            });
        }

        let span_pts: Vec<Vec<Int>> = pts
            .iter()
            .map(|p| span.to_span(p).expect("input point lies on its own span"))
            .collect();
        // keep the pairing but hull in sorted span order for determinism
        let mut order: Vec<usize> = (0..span_pts.len()).collect();
        order.sort_by(|&a, &b| span_pts[a].cmp(&span_pts[b]));
        let sorted_span: Vec<Vec<Int>> = order.iter().map(|&i| span_pts[i].clone()).collect();

        let simp = hull_fulldim(&sorted_span, r);

        // normalized volume: cone the boundary triangulation from the first
        // hull point; pieces through it contribute zero determinant
        let apex = &sorted_span[0];
        let mut volume = Int::zero();
        for f in &simp {
            let mat: Vec<Vec<Int>> = f
                .verts
                .iter()
                .map(|&v| {
                    sorted_span[v]
                        .iter()
                        .zip(apex)
                        .map(|(a, b)| a - b)
                        .collect()
                })
                .collect();
            volume += IntMatrix::from_rows(&mat).det().abs();
        }

        // group simplicial pieces into true facets
        let mut groups: HashMap<(Vec<Int>, Int), ()> = HashMap::new();
        for f in &simp {
            groups.entry((f.normal.clone(), f.offset.clone())).or_insert(());
        }
        let mut hyperplanes: Vec<(Vec<Int>, Int)> = groups.into_keys().collect();
        hyperplanes.sort();

        // vertex filter: boundary points whose active facet normals span
        let candidate_ids: std::collections::BTreeSet<usize> =
            simp.iter().flat_map(|f| f.verts.iter().copied()).collect();
        let mut vertex_span_pts: Vec<Vec<Int>> = Vec::new();
        for &id in &candidate_ids {
            let p = &sorted_span[id];
            let active: Vec<Vec<Rat>> = hyperplanes
                .iter()
                .filter(|(a, b)| dot_int(a, p) == *b)
                .map(|(a, _)| a.iter().map(|x| Rat::from_integer(x.clone())).collect())
                .collect();
            if linalg::rational_rank(&active) == r {
                vertex_span_pts.push(p.clone());
            }
        }
        vertex_span_pts.sort();

        let facets: Vec<Facet> = hyperplanes
            .into_iter()
            .map(|(normal, offset)| {
                let vertices: Vec<usize> = vertex_span_pts
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| dot_int(&normal, p) == offset)
                    .map(|(i, _)| i)
                    .collect();
                Facet { normal, offset, vertices }
            })
            .collect();

        let vertices: Vec<Vec<Int>> = vertex_span_pts.iter().map(|c| span.from_span(c)).collect();
        let mut poly = LatticePolytope {
            ambient_dim: ambient,
            vertices,
            span,
            span_vertices: vertex_span_pts,
            facets,
            volume,
        };
        // ambient vertex order must be the canonical (lex) one
        let mut order: Vec<usize> = (0..poly.vertices.len()).collect();
        order.sort_by(|&a, &b| poly.vertices[a].cmp(&poly.vertices[b]));
        if order.windows(2).any(|w| w[0] > w[1]) {
            let inv: HashMap<usize, usize> =
                order.iter().enumerate().map(|(new, &old)| (old, new)).collect();
            poly.vertices = order.iter().map(|&i| poly.vertices[i].clone()).collect();
            poly.span_vertices = order.iter().map(|&i| poly.span_vertices[i].clone()).collect();
            for f in poly.facets.iter_mut() {
                let mut vs: Vec<usize> = f.vertices.iter().map(|v| inv[v]).collect();
                vs.sort_unstable();
                f.vertices = vs;
            }
        }
        Ok(poly)
    }

    /// The standard unimodular simplex `conv(0, e_1, ..., e_n)`.
    pub fn simplex(n: usize) -> Self {
        let mut pts = vec![vec![Int::zero(); n]];
        for i in 0..n {
            let mut e = vec![Int::zero(); n];
            e[i] = Int::one();
            pts.push(e);
        }
        Self::from_points(&pts).expect("simplex is a valid polytope")
    }

    /// The unit cube `[0,1]^n`.
    pub fn cube(n: usize) -> Self {
        let mut pts = Vec::with_capacity(1 << n);
        for mask in 0..(1u64 << n) {
            pts.push(
                (0..n)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            Int::one()
                        } else {
                            Int::zero()
                        }
                    })
                    .collect(),
            );
        }
        Self::from_points(&pts).expect("cube is a valid polytope")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the polytope (its affine span).
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<Int>] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn span(&self) -> &AffineSpan {
        &self.span
    }

    pub fn span_vertices(&self) -> &[Vec<Int>] {
        &self.span_vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Normalized lattice volume: `dim!` times the Euclidean volume measured
    /// in the lattice of the affine span; 1 for a point.
    pub fn normalized_volume(&self) -> Int {
        self.volume.clone()
    }

    /// Vertex-set equality (hull-minimal vertex lists are canonical).
    pub fn lattice_equal(&self, other: &LatticePolytope) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }

    pub fn translate(&self, shift: &[Int]) -> Result<Self> {
        if shift.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch("translation vector".into()));
        }
        let pts: Vec<Vec<Int>> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(shift).map(|(a, b)| a + b).collect())
            .collect();
        Self::from_points(&pts)
    }

    /// Dilation `tP` for a positive integer `t`.
    pub fn dilate(&self, t: i64) -> Result<Self> {
        if t <= 0 {
            return Err(Error::InvalidParameter(format!(
                "dilation factor must be positive, got {t}"
            )));
        }
        let t = Int::from(t);
        let pts: Vec<Vec<Int>> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| x * &t).collect())
            .collect();
        Self::from_points(&pts)
    }

    /// Minkowski sum: hull of pairwise vertex sums.
    pub fn minkowski_sum(&self, other: &LatticePolytope) -> Result<Self> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "Minkowski sum of ambient dims {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        let mut pts = Vec::with_capacity(self.vertex_count() * other.vertex_count());
        for v in &self.vertices {
            for w in &other.vertices {
                pts.push(v.iter().zip(w).map(|(a, b)| a + b).collect());
            }
        }
        Self::from_points(&pts)
    }

    /// Image under a unimodular map plus translation (a lattice-affine
    /// isomorphism of the ambient space).
    pub fn apply_unimodular(&self, m: &IntMatrix, shift: &[Int]) -> Result<Self> {
        if m.rows() != self.ambient_dim || m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch("unimodular map shape".into()));
        }
        let pts: Vec<Vec<Int>> = self
            .vertices
            .iter()
            .map(|v| {
                m.mul_vec(v)
                    .into_iter()
                    .zip(shift)
                    .map(|(a, b)| a + b)
                    .collect()
            })
            .collect();
        Self::from_points(&pts)
    }

    /// Membership test for an ambient lattice point.
    pub fn contains(&self, p: &[Int]) -> bool {
        let Some(c) = self.span.to_span(p) else {
            return false;
        };
        self.facets
            .iter()
            .all(|f| dot_int(&f.normal, &c) >= f.offset)
    }

    /// Ambient irredundant H-description. For lower-dimensional polytopes the
    /// facet inequalities are lifted through a unimodular completion of the
    /// span basis and the span itself is pinned by equality rows.
    pub fn hrep(&self) -> HRep {
        let n = self.ambient_dim;
        if self.is_full_dimensional() {
            let a = IntMatrix::from_rows(
                &self.facets.iter().map(|f| f.normal.clone()).collect::<Vec<_>>(),
            );
            let b = self
                .facets
                .iter()
                .map(|f| Rat::from_integer(f.offset.clone()))
                .collect();
            return HRep {
                a,
                b,
                eq_a: IntMatrix::zero(0, n),
                eq_b: Vec::new(),
            };
        }
        let r = self.dim();
        let completion = complete_to_unimodular(&self.span.basis, n);
        let cinv = unimodular_inverse(&completion);
        let mut ineq_rows = Vec::new();
        let mut ineq_rhs = Vec::new();
        for f in &self.facets {
            // ambient normal a with a . basis_j = normal_j: a = C^{-1} (normal, 0)
            let mut ext = f.normal.clone();
            ext.resize(n, Int::zero());
            let a: Vec<Int> = (0..n)
                .map(|i| (0..n).map(|k| &cinv[(i, k)] * &ext[k]).sum())
                .collect();
            let b = dot_int(&a, &self.span.origin) + &f.offset;
            ineq_rows.push(a);
            ineq_rhs.push(Rat::from_integer(b));
        }
        let basis_mat = IntMatrix::from_rows(&self.span.basis);
        let perp = if r == 0 {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { Int::one() } else { Int::zero() })
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
        } else {
            // normals vanishing on every span direction
            let mut k = kernel_basis(&basis_mat);
            let (h, _) = linalg::hermite_normal_form(&IntMatrix::from_rows(&k));
            k = (0..k.len()).map(|i| h.row(i).to_vec()).collect();
            k
        };
        let eq_rhs: Vec<Rat> = perp
            .iter()
            .map(|a| Rat::from_integer(dot_int(a, &self.span.origin)))
            .collect();
        HRep {
            a: if ineq_rows.is_empty() {
                IntMatrix::zero(0, n)
            } else {
                IntMatrix::from_rows(&ineq_rows)
            },
            b: ineq_rhs,
            eq_a: IntMatrix::from_rows(&perp),
            eq_b: eq_rhs,
        }
    }
}

/// Convex hull with both descriptions: the vertex polytope and the ambient
/// irredundant H-description.
pub fn convex_hull(points: &[Vec<Int>]) -> Result<(LatticePolytope, HRep)> {
    let p = LatticePolytope::from_points(points)?;
    let h = p.hrep();
    Ok((p, h))
}

pub(crate) fn dot(a: &[Int], b: &[Int]) -> Int {
    dot_int(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    pub(crate) fn pts(coords: &[&[i64]]) -> Vec<Vec<Int>> {
        coords
            .iter()
            .map(|p| p.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn unit_square_hull() {
        let (p, h) = convex_hull(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(p.vertex_count(), 4);
        assert_eq!(p.facets().len(), 4);
        assert_eq!(h.a.rows(), 4);
        assert_eq!(h.eq_a.rows(), 0);
    }

    #[test]
    fn veronese_configuration_hull() {
        // six points of the quadric configuration; only the corners survive
        let (p, _) = convex_hull(&pts(&[
            &[0, 0],
            &[0, 1],
            &[1, 0],
            &[0, 2],
            &[1, 1],
            &[2, 0],
        ]))
        .unwrap();
        assert_eq!(p.vertices(), &pts(&[&[0, 0], &[0, 2], &[2, 0]])[..]);
    }

    #[test]
    fn collinear_points_reduce_to_segment() {
        let (p, h) = convex_hull(&pts(&[&[0, 0], &[1, 0], &[2, 0]])).unwrap();
        assert_eq!(p.dim(), 1);
        assert_eq!(p.vertices(), &pts(&[&[0, 0], &[2, 0]])[..]);
        assert_eq!(h.eq_a.rows(), 1); // one equality pins the line
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(
            convex_hull(&[]),
            Err(Error::EmptyInput(_))
        ));
    }

    #[test]
    fn hull_roundtrip_reproduces_vertices() {
        let square = LatticePolytope::from_points(&pts(&[&[0, 0], &[3, 0], &[0, 3], &[3, 3]]))
            .unwrap();
        let again = LatticePolytope::from_points(square.vertices()).unwrap();
        assert!(square.lattice_equal(&again));
    }

    #[test]
    fn interior_points_are_dropped() {
        let p = LatticePolytope::from_points(&pts(&[
            &[0, 0],
            &[4, 0],
            &[0, 4],
            &[4, 4],
            &[2, 2],
            &[1, 3],
        ]))
        .unwrap();
        assert_eq!(p.vertex_count(), 4);
    }

    #[test]
    fn boundary_non_vertices_are_dropped() {
        let p = LatticePolytope::from_points(&pts(&[&[0, 0], &[1, 0], &[2, 0], &[0, 2]]))
            .unwrap();
        assert_eq!(p.vertices(), &pts(&[&[0, 0], &[0, 2], &[2, 0]])[..]);
    }

    #[test]
    fn normalized_volume_examples() {
        let seg = LatticePolytope::from_points(&pts(&[&[0], &[1]])).unwrap();
        assert_eq!(seg.normalized_volume(), int(1));
        let two_delta2 =
            LatticePolytope::from_points(&pts(&[&[0, 0], &[2, 0], &[0, 2]])).unwrap();
        assert_eq!(two_delta2.normalized_volume(), int(4));
        let square = LatticePolytope::cube(2);
        assert_eq!(square.normalized_volume(), int(2));
    }

    #[test]
    fn volume_lives_in_the_span_lattice() {
        // segment from (0,0) to (2,2): lattice length 2 in its span
        let seg = LatticePolytope::from_points(&pts(&[&[0, 0], &[2, 2]])).unwrap();
        assert_eq!(seg.normalized_volume(), int(2));
        // triangle in a plane inside Z^3, unimodular in its span lattice
        let tri = LatticePolytope::from_points(&pts(&[
            &[0, 0, 0],
            &[1, 0, 1],
            &[0, 1, 1],
        ]))
        .unwrap();
        assert_eq!(tri.normalized_volume(), int(1));
    }

    #[test]
    fn dilate_examples() {
        let simplex = LatticePolytope::simplex(2);
        assert!(simplex.dilate(1).unwrap().lattice_equal(&simplex));
        let two = simplex.dilate(2).unwrap();
        assert_eq!(two.vertices(), &pts(&[&[0, 0], &[0, 2], &[2, 0]])[..]);
        let cube3 = LatticePolytope::cube(2).dilate(3).unwrap();
        assert_eq!(cube3.vertices(), &pts(&[&[0, 0], &[0, 3], &[3, 0], &[3, 3]])[..]);
        assert!(simplex.dilate(0).is_err());
        // the H-description scales as (A, t*b)
        let mut base: Vec<(Vec<Int>, Int)> = simplex
            .facets()
            .iter()
            .map(|f| (f.normal.clone(), f.offset.clone() * int(2)))
            .collect();
        let mut scaled: Vec<(Vec<Int>, Int)> = two
            .facets()
            .iter()
            .map(|f| (f.normal.clone(), f.offset.clone()))
            .collect();
        base.sort();
        scaled.sort();
        assert_eq!(base, scaled);
    }

    #[test]
    fn minkowski_examples() {
        let simplex = LatticePolytope::simplex(2);
        let square = LatticePolytope::cube(2);
        let sum = simplex.minkowski_sum(&square).unwrap();
        assert_eq!(
            sum.vertices(),
            &pts(&[&[0, 0], &[0, 2], &[1, 2], &[2, 0], &[2, 1]])[..]
        );
        // P + point = translate
        let point = LatticePolytope::from_points(&pts(&[&[5, 7]])).unwrap();
        let shifted = simplex.minkowski_sum(&point).unwrap();
        assert!(shifted.lattice_equal(&simplex.translate(&[int(5), int(7)]).unwrap()));
        // P + P = 2P
        let doubled = simplex.minkowski_sum(&simplex).unwrap();
        assert!(doubled.lattice_equal(&simplex.dilate(2).unwrap()));
    }

    #[test]
    fn hrep_of_lower_dimensional_polytope() {
        let seg = LatticePolytope::from_points(&pts(&[&[0, 0, 1], &[2, 2, 1]])).unwrap();
        let h = seg.hrep();
        assert_eq!(h.eq_a.rows(), 2);
        assert_eq!(h.a.rows(), 2);
        // every vertex satisfies all rows
        for v in seg.vertices() {
            for i in 0..h.a.rows() {
                let lhs = dot(h.a.row(i), v);
                assert!(Rat::from_integer(lhs) >= h.b[i]);
            }
            for i in 0..h.eq_a.rows() {
                let lhs = dot(h.eq_a.row(i), v);
                assert_eq!(Rat::from_integer(lhs), h.eq_b[i]);
            }
        }
    }

    #[test]
    fn contains_checks_span_membership() {
        let seg = LatticePolytope::from_points(&pts(&[&[0, 0], &[2, 2]])).unwrap();
        assert!(seg.contains(&[int(1), int(1)]));
        assert!(!seg.contains(&[int(1), int(0)]));
        assert!(!seg.contains(&[int(3), int(3)]));
    }

    #[test]
    fn cube_hull_structure() {
        let cube = LatticePolytope::cube(3);
        assert_eq!(cube.vertex_count(), 8);
        assert_eq!(cube.facets().len(), 6);
        assert_eq!(cube.normalized_volume(), int(6));
        for f in cube.facets() {
            assert_eq!(f.vertices.len(), 4);
        }
    }

    #[test]
    fn simplex_hull_structure() {
        for n in 1..=5 {
            let s = LatticePolytope::simplex(n);
            assert_eq!(s.vertex_count(), n + 1);
            assert_eq!(s.facets().len(), n + 1);
            assert_eq!(s.normalized_volume(), int(1));
        }
    }
}
