//! Polyhedral adjunction. For a full-dimensional polytope with minimal
//! description `A x >= b` (primitive rows), the adjoint polytope at
//! parameter `s >= 0` is `P^(s) = { x : A x >= b + s*1 }`. This module
//! computes:
//!
//! * `P^(s)` with exact rational vertices and its surviving facet rows;
//! * the Q-codegree `mu(P) = 1 / max{ s : P^(s) nonempty }` (the supremum
//!   is attained), via an exact simplex method;
//! * `core(P) = P^(1/mu)`;
//! * the nef value `tau(P) = 1 / sup{ s : N(P^(s)) = N(P) }` (the supremum
//!   is never attained), via parametric breakpoint enumeration over all
//!   full-rank facet subsets, validated by fan comparison at exact rational
//!   probes strictly inside each breakpoint interval;
//! * the codegree `cd(P)`: the least dilation factor whose dilate has
//!   interior lattice points.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::fan::{normal_fan, NormalFan};
use crate::lattice_points::has_interior_lattice_point;
use crate::linalg::{affine_rank, solve_rational};
use crate::lp::{maximize, LpOutcome};
use crate::polytope::LatticePolytope;
use crate::{Error, Int, Rat, Result};

/// Exact description of an adjoint polytope `P^(s)`.
#[derive(Clone, Debug)]
pub struct AdjointPolytope {
    pub s: Rat,
    /// exact rational vertices, lex-sorted; empty iff `P^(s)` is empty
    pub vertices: Vec<Vec<Rat>>,
    /// affine dimension, `None` when empty
    pub dim: Option<usize>,
    /// base facet rows still irredundant at this parameter (only computed
    /// for full-dimensional adjoints; degenerate ones report no rows)
    pub facet_rows: Vec<usize>,
    /// per-vertex sets of active facet rows, parallel to `vertices`
    pub active_rows: Vec<Vec<usize>>,
}

impl AdjointPolytope {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Nef value codomain. The infinity marker covers inputs whose normal fan
/// already changes for every positive parameter (possible at non-simple
/// vertices); simple polytopes always produce a finite value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NefValue {
    Finite(Rat),
    Infinite,
}

impl NefValue {
    pub fn as_finite(&self) -> Option<&Rat> {
        match self {
            NefValue::Finite(t) => Some(t),
            NefValue::Infinite => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AdjunctionProfile {
    pub mu: Rat,
    pub tau: NefValue,
    pub cd: usize,
    pub core: AdjointPolytope,
}

fn require_full_dim(p: &LatticePolytope) -> Result<()> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            dim: p.dim(),
            ambient: p.ambient_dim(),
        });
    }
    Ok(())
}

fn base_rows(p: &LatticePolytope) -> (Vec<Vec<Int>>, Vec<Int>) {
    let normals = p.facets().iter().map(|f| f.normal.clone()).collect();
    let offsets = p.facets().iter().map(|f| f.offset.clone()).collect();
    (normals, offsets)
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

/// The adjoint polytope `P^(s)` for a nonnegative rational `s`, by exact
/// vertex enumeration over full-rank facet subsets.
pub fn adjoint_polytope(p: &LatticePolytope, s: &Rat) -> Result<AdjointPolytope> {
    require_full_dim(p)?;
    if s.is_negative() {
        return Err(Error::InvalidParameter(format!(
            "adjoint parameter must be nonnegative, got {s}"
        )));
    }
    let n = p.dim();
    let (normals, offsets) = base_rows(p);
    let m = normals.len();
    let rat_rows: Vec<Vec<Rat>> = normals
        .iter()
        .map(|a| a.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let shifted: Vec<Rat> = offsets
        .iter()
        .map(|b| Rat::from_integer(b.clone()) + s)
        .collect();

    let mut vertices: Vec<Vec<Rat>> = Vec::new();
    for subset in combinations(m, n) {
        let sub_rows: Vec<Vec<Rat>> = subset.iter().map(|&i| rat_rows[i].clone()).collect();
        let sub_rhs: Vec<Rat> = subset.iter().map(|&i| shifted[i].clone()).collect();
        let Some(x) = solve_rational(&sub_rows, &sub_rhs) else {
            continue;
        };
        let feasible = (0..m).all(|i| {
            let lhs: Rat = rat_rows[i].iter().zip(&x).map(|(a, v)| a * v).sum();
            lhs >= shifted[i]
        });
        if feasible {
            vertices.push(x);
        }
    }
    vertices.sort();
    vertices.dedup();

    if vertices.is_empty() {
        return Ok(AdjointPolytope {
            s: s.clone(),
            vertices,
            dim: None,
            facet_rows: Vec::new(),
            active_rows: Vec::new(),
        });
    }
    let dim = affine_rank(&vertices);
    let mut facet_rows = Vec::new();
    let mut active_rows = vec![Vec::new(); vertices.len()];
    if dim == n {
        for i in 0..m {
            let on: Vec<usize> = vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| {
                    let lhs: Rat = rat_rows[i].iter().zip(v.iter()).map(|(a, x)| a * x).sum();
                    lhs == shifted[i]
                })
                .map(|(k, _)| k)
                .collect();
            if on.is_empty() {
                continue;
            }
            let pts: Vec<Vec<Rat>> = on.iter().map(|&k| vertices[k].clone()).collect();
            if affine_rank(&pts) == n - 1 {
                for &k in &on {
                    active_rows[k].push(facet_rows.len());
                }
                facet_rows.push(i);
            }
        }
        // remap: active_rows currently indexes into facet_rows positions
        for list in active_rows.iter_mut() {
            let mapped: Vec<usize> = list.iter().map(|&pos| facet_rows[pos]).collect();
            *list = mapped;
        }
    }
    Ok(AdjointPolytope {
        s: s.clone(),
        vertices,
        dim: Some(dim),
        facet_rows,
        active_rows,
    })
}

/// Normal fan of a full-dimensional adjoint polytope, in the same
/// representation as [`normal_fan`] so the two are directly comparable.
fn adjoint_fan(p: &LatticePolytope, adj: &AdjointPolytope) -> Option<NormalFan> {
    if adj.dim != Some(p.dim()) {
        return None;
    }
    let cones: BTreeSet<BTreeSet<Vec<Int>>> = adj
        .active_rows
        .iter()
        .map(|rows| {
            rows.iter()
                .map(|&i| p.facets()[i].normal.clone())
                .collect::<BTreeSet<_>>()
        })
        .collect();
    Some(NormalFan { cones })
}

/// Q-codegree: reciprocal of the largest `s` with `P^(s)` nonempty, via the
/// exact LP `max s subject to A x - s*1 >= b`. The supremum is attained.
pub fn q_codegree(p: &LatticePolytope) -> Result<Rat> {
    require_full_dim(p)?;
    let n = p.dim();
    let (normals, offsets) = base_rows(p);
    let mut rows = Vec::with_capacity(normals.len());
    let mut rhs = Vec::with_capacity(normals.len());
    for (a, b) in normals.iter().zip(&offsets) {
        let mut row: Vec<Rat> = a.iter().map(|x| Rat::from_integer(x.clone())).collect();
        row.push(-Rat::from_integer(Int::one()));
        rows.push(row);
        rhs.push(Rat::from_integer(b.clone()));
    }
    let mut objective = vec![Rat::from_integer(Int::zero()); n + 1];
    objective[n] = Rat::from_integer(Int::one());
    match maximize(&objective, &rows, &rhs) {
        LpOutcome::Optimal(s_max, _) => {
            assert!(
                s_max.is_positive(),
                "a full-dimensional polytope admits a positive shrink"
            );
            Ok(s_max.recip())
        }
        other => panic!("adjoint feasibility LP cannot be {other:?}"),
    }
}

/// The core of `P`: the nonempty adjoint polytope at the critical parameter
/// `1/mu(P)`.
pub fn core(p: &LatticePolytope) -> Result<AdjointPolytope> {
    let mu = q_codegree(p)?;
    let adj = adjoint_polytope(p, &mu.recip())?;
    assert!(!adj.is_empty(), "core is nonempty by maximality of 1/mu");
    Ok(adj)
}

/// Candidate breakpoints: parameters where the trajectory of some full-rank
/// facet subsystem meets another shifted facet. Between consecutive
/// candidates the combinatorics of `P^(s)` cannot change.
fn breakpoint_candidates(p: &LatticePolytope, s_max: &Rat) -> Vec<Rat> {
    let n = p.dim();
    let (normals, offsets) = base_rows(p);
    let m = normals.len();
    let rat_rows: Vec<Vec<Rat>> = normals
        .iter()
        .map(|a| a.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let one = Rat::from_integer(Int::one());
    let mut candidates: BTreeSet<Rat> = BTreeSet::new();
    candidates.insert(s_max.clone());
    for subset in combinations(m, n) {
        let sub_rows: Vec<Vec<Rat>> = subset.iter().map(|&i| rat_rows[i].clone()).collect();
        let rhs0: Vec<Rat> = subset
            .iter()
            .map(|&i| Rat::from_integer(offsets[i].clone()))
            .collect();
        let ones: Vec<Rat> = vec![one.clone(); n];
        let Some(x0) = solve_rational(&sub_rows, &rhs0) else {
            continue;
        };
        let d = solve_rational(&sub_rows, &ones).expect("same matrix stays invertible");
        // trajectory x(s) = x0 + s d meets row j when
        // (a_j . x0 - b_j) + s (a_j . d - 1) = 0
        for j in 0..m {
            if subset.contains(&j) {
                continue;
            }
            let at0: Rat = rat_rows[j].iter().zip(&x0).map(|(a, v)| a * v).sum::<Rat>()
                - Rat::from_integer(offsets[j].clone());
            let slope: Rat =
                rat_rows[j].iter().zip(&d).map(|(a, v)| a * v).sum::<Rat>() - &one;
            if slope.is_zero() {
                continue;
            }
            let s = -at0 / slope;
            if s.is_positive() && s < *s_max {
                candidates.insert(s);
            }
        }
    }
    candidates.into_iter().collect()
}

/// Nef value: reciprocal of the first parameter at which the normal fan of
/// `P^(s)` differs from the normal fan of `P`. The supremum defining it is
/// never attained. Returns the infinity marker when the fan changes
/// immediately for every positive parameter.
pub fn nef_value(p: &LatticePolytope) -> Result<NefValue> {
    require_full_dim(p)?;
    let mu = q_codegree(p)?;
    let s_max = mu.recip();
    let base_fan = normal_fan(p);
    let candidates = breakpoint_candidates(p, &s_max);
    let mut prev = Rat::from_integer(Int::zero());
    for s in &candidates {
        let probe = (&prev + s) / Rat::from_integer(Int::from(2));
        let adj = adjoint_polytope(p, &probe)?;
        let same = adjoint_fan(p, &adj).map(|f| f == base_fan).unwrap_or(false);
        if !same {
            return Ok(if prev.is_zero() {
                NefValue::Infinite
            } else {
                NefValue::Finite(prev.recip())
            });
        }
        prev = s.clone();
    }
    // fan equal on (0, s_max); the supremum s_max is not attained there
    Ok(NefValue::Finite(s_max.recip()))
}

/// Codegree: least positive dilation factor whose dilate contains interior
/// lattice points; at most `dim + 1`.
pub fn codegree(p: &LatticePolytope) -> Result<usize> {
    require_full_dim(p)?;
    let n = p.dim();
    for t in 1..=n + 1 {
        if has_interior_lattice_point(&p.dilate(t as i64)?) {
            return Ok(t);
        }
    }
    unreachable!("cd(P) <= dim + 1 for every lattice polytope");
}

/// All adjunction invariants, with the order relations `mu <= tau` and
/// `mu <= cd <= n+1` asserted before returning; a failure there is a kernel
/// bug, never a data condition.
pub fn adjunction_profile(p: &LatticePolytope) -> Result<AdjunctionProfile> {
    require_full_dim(p)?;
    let mu = q_codegree(p)?;
    let tau = nef_value(p)?;
    let cd = codegree(p)?;
    let core = core(p)?;
    if let NefValue::Finite(t) = &tau {
        assert!(mu <= *t, "mu <= tau must hold (mu={mu}, tau={t})");
    }
    let cd_rat = Rat::from_integer(Int::from(cd as i64));
    assert!(mu <= cd_rat, "mu <= cd must hold (mu={mu}, cd={cd})");
    assert!(cd <= p.dim() + 1, "cd <= n+1 must hold (cd={cd})");
    Ok(AdjunctionProfile { mu, tau, cd, core })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat, ratio};

    fn pts(coords: &[&[i64]]) -> Vec<Vec<Int>> {
        coords
            .iter()
            .map(|p| p.iter().map(|&x| int(x)).collect())
            .collect()
    }

    fn f1_polytope() -> LatticePolytope {
        LatticePolytope::from_points(&pts(&[&[0, 1], &[1, 1], &[1, 2], &[0, 3]])).unwrap()
    }

    fn pentagon() -> LatticePolytope {
        LatticePolytope::from_points(&pts(&[&[0, 0], &[4, 0], &[4, 1], &[2, 3], &[0, 3]]))
            .unwrap()
    }

    #[test]
    fn adjoint_at_zero_is_p() {
        let p = LatticePolytope::cube(2);
        let adj = adjoint_polytope(&p, &rat(0)).unwrap();
        let expected: Vec<Vec<Rat>> = p
            .vertices()
            .iter()
            .map(|v| v.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        assert_eq!(adj.vertices, expected);
        assert_eq!(adj.facet_rows.len(), 4);
    }

    #[test]
    fn adjoint_of_simplex_at_third() {
        let p = LatticePolytope::simplex(2);
        let adj = adjoint_polytope(&p, &ratio(1, 3)).unwrap();
        assert_eq!(adj.vertices, vec![vec![ratio(1, 3), ratio(1, 3)]]);
        assert_eq!(adj.dim, Some(0));
    }

    #[test]
    fn adjoint_of_square_at_quarter() {
        let p = LatticePolytope::cube(2);
        let adj = adjoint_polytope(&p, &ratio(1, 4)).unwrap();
        let q = ratio(1, 4);
        let q3 = ratio(3, 4);
        let expected = vec![
            vec![q.clone(), q.clone()],
            vec![q.clone(), q3.clone()],
            vec![q3.clone(), q.clone()],
            vec![q3.clone(), q3.clone()],
        ];
        assert_eq!(adj.vertices, expected);
    }

    #[test]
    fn adjoint_beyond_threshold_is_empty() {
        let p = LatticePolytope::simplex(2);
        let adj = adjoint_polytope(&p, &ratio(1, 2)).unwrap();
        assert!(adj.is_empty());
        assert_eq!(adj.dim, None);
    }

    #[test]
    fn q_codegree_examples() {
        for n in 1..=4 {
            assert_eq!(
                q_codegree(&LatticePolytope::simplex(n)).unwrap(),
                rat(n as i64 + 1)
            );
        }
        for n in 1..=3 {
            assert_eq!(q_codegree(&LatticePolytope::cube(n)).unwrap(), rat(2));
        }
        assert_eq!(q_codegree(&f1_polytope()).unwrap(), rat(2));
        assert_eq!(q_codegree(&pentagon()).unwrap(), ratio(2, 3));
    }

    #[test]
    fn core_examples() {
        let c = core(&LatticePolytope::simplex(2)).unwrap();
        assert_eq!(c.vertices, vec![vec![ratio(1, 3), ratio(1, 3)]]);

        let c = core(&LatticePolytope::cube(2)).unwrap();
        assert_eq!(c.vertices, vec![vec![ratio(1, 2), ratio(1, 2)]]);

        let c = core(&f1_polytope()).unwrap();
        assert_eq!(
            c.vertices,
            vec![
                vec![ratio(1, 2), ratio(3, 2)],
                vec![ratio(1, 2), rat(2)],
            ]
        );
        assert_eq!(c.dim, Some(1));
    }

    #[test]
    fn nef_value_examples() {
        for n in 1..=4 {
            assert_eq!(
                nef_value(&LatticePolytope::simplex(n)).unwrap(),
                NefValue::Finite(rat(n as i64 + 1))
            );
        }
        assert_eq!(
            nef_value(&LatticePolytope::cube(2)).unwrap(),
            NefValue::Finite(rat(2))
        );
    }

    /// Documented independent computation for the pentagon
    /// conv{(0,0),(4,0),(4,1),(2,3),(0,3)}. Facets: x >= 0, y >= 0,
    /// x <= 4, y <= 3, x + y <= 5. Shifting by s, the bottom-right corner
    /// (4-s, s) reaches the diagonal facet when (4-s) + s = 5 - s, i.e.
    /// s = 1: the fan changes there, so tau = 1/1 = 1. Feasibility persists
    /// until the horizontal strip collapses at s = 3/2, so mu = 2/3.
    #[test]
    fn pentagon_splits_tau_and_mu() {
        let p = pentagon();
        assert_eq!(q_codegree(&p).unwrap(), ratio(2, 3));
        assert_eq!(nef_value(&p).unwrap(), NefValue::Finite(rat(1)));
        // independent fan checks at probes on both sides of the breakpoint
        let base = normal_fan(&p);
        for (num, den, expect_equal) in [(1i64, 2i64, true), (5, 4, false), (7, 5, false)] {
            let adj = adjoint_polytope(&p, &ratio(num, den)).unwrap();
            let same = adjoint_fan(&p, &adj).map(|f| f == base).unwrap_or(false);
            assert_eq!(same, expect_equal, "probe {num}/{den}");
        }
    }

    #[test]
    fn codegree_examples() {
        for n in 1..=4 {
            assert_eq!(codegree(&LatticePolytope::simplex(n)).unwrap(), n + 1);
        }
        assert_eq!(codegree(&LatticePolytope::cube(2)).unwrap(), 2);
        assert_eq!(codegree(&f1_polytope()).unwrap(), 2);
        assert_eq!(codegree(&pentagon()).unwrap(), 1);
    }

    #[test]
    fn profiles() {
        let p = adjunction_profile(&LatticePolytope::simplex(2)).unwrap();
        assert_eq!(p.mu, rat(3));
        assert_eq!(p.tau, NefValue::Finite(rat(3)));
        assert_eq!(p.cd, 3);

        // Delta_1 x Delta_2 as a prism
        let prism = LatticePolytope::from_points(&pts(&[
            &[0, 0, 0],
            &[1, 0, 0],
            &[0, 1, 0],
            &[1, 1, 0],
            &[0, 0, 1],
            &[1, 0, 1],
        ]))
        .unwrap();
        let p = adjunction_profile(&prism).unwrap();
        assert_eq!(p.mu, rat(3));
        assert_eq!(p.tau, NefValue::Finite(rat(3)));
        assert_eq!(p.cd, 3);

        let p = adjunction_profile(&pentagon()).unwrap();
        assert_eq!(p.mu, ratio(2, 3));
        assert_eq!(p.tau, NefValue::Finite(rat(1)));
        assert_eq!(p.cd, 1);
    }

    #[test]
    fn monotonicity_of_adjoints() {
        let p = f1_polytope();
        // s >= s' implies P^(s) contained in P^(s')
        let pairs = [(ratio(1, 3), ratio(1, 5)), (ratio(2, 5), ratio(1, 4))];
        for (s_big, s_small) in pairs {
            let big = adjoint_polytope(&p, &s_big).unwrap();
            for v in &big.vertices {
                for f in p.facets() {
                    let lhs: Rat = f
                        .normal
                        .iter()
                        .zip(v)
                        .map(|(a, x)| Rat::from_integer(a.clone()) * x)
                        .sum();
                    assert!(lhs >= Rat::from_integer(f.offset.clone()) + &s_small);
                }
            }
        }
    }

    #[test]
    fn scaling_covariance() {
        // (tP)^(t s) = t * P^(s)
        let p = f1_polytope();
        let s = ratio(1, 3);
        for t in [2i64, 3] {
            let tp = p.dilate(t).unwrap();
            let lhs = adjoint_polytope(&tp, &(rat(t) * &s)).unwrap();
            let rhs: Vec<Vec<Rat>> = adjoint_polytope(&p, &s)
                .unwrap()
                .vertices
                .iter()
                .map(|v| v.iter().map(|x| x * rat(t)).collect())
                .collect();
            assert_eq!(lhs.vertices, rhs);
        }
    }

    #[test]
    fn mu_is_attained_tau_is_not() {
        let eps = ratio(1, 1000);
        for p in [
            LatticePolytope::simplex(2),
            LatticePolytope::cube(2),
            f1_polytope(),
            pentagon(),
        ] {
            let mu = q_codegree(&p).unwrap();
            let s_max = mu.recip();
            assert!(!adjoint_polytope(&p, &s_max).unwrap().is_empty());
            assert!(adjoint_polytope(&p, &(&s_max + &eps)).unwrap().is_empty());

            let NefValue::Finite(tau) = nef_value(&p).unwrap() else {
                panic!("finite nef value expected");
            };
            let s_tau = tau.recip();
            let base = normal_fan(&p);
            let at = adjoint_polytope(&p, &s_tau).unwrap();
            let same_at = adjoint_fan(&p, &at).map(|f| f == base).unwrap_or(false);
            assert!(!same_at, "the supremum is never a maximum");
            let before = adjoint_polytope(&p, &(&s_tau - &eps)).unwrap();
            let same_before = adjoint_fan(&p, &before)
                .map(|f| f == base)
                .unwrap_or(false);
            assert!(same_before);
        }
    }
}
