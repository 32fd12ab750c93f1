//! Cross-module verification of the smooth-polytope equivalences and the
//! Cayley-sum identity, on single polytopes and on corpora.
//!
//! For a smooth full-dimensional `P` with every lattice point used, the
//! following are checked against one another:
//!
//! * (a) `P` has a Cayley decomposition of length `cd(P)` with normally
//!   equivalent slices and `t = cd(P) - 1 > n/2`;
//! * (b) `cd(P) >= (n+3)/2` and `tau(P) = mu(P)`;
//! * (d) the alternating face-volume sum vanishes.
//!
//! Statement (b) uses the `(n+3)/2` bound; the strict form appearing next
//! to the final equivalence would exclude the triangle prism, which the
//! other statements include, so the weaker published bound is the one that
//! makes the equivalence hold. The discriminant statement itself is not
//! computed symbolically; it is implied by (d) in the smooth case.

use num_traits::{Signed, Zero};

use crate::adjunction::{adjunction_profile, NefValue};
use crate::cayley::{cayley_decompose, cayley_sum, CayleyDecomposition};
use crate::defect::jet1_chern_degree;
use crate::fan::normally_equivalent;
use crate::polytope::LatticePolytope;
use crate::regularity::regularity_report;
use crate::{Error, Int, Rat, Result};

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub dim: usize,
    pub cd: usize,
    pub mu: Rat,
    pub tau: NefValue,
    pub chern_sum: Int,
    pub flag_a: bool,
    pub flag_b: bool,
    pub flag_d: bool,
    pub consistent: bool,
    /// a witnessing decomposition when flag_a holds
    pub witness: Option<CayleyDecomposition>,
}

/// Evaluates the three computable statements of the smooth equivalence on
/// one polytope and reports whether they agree.
pub fn verify_equivalences(p: &LatticePolytope) -> Result<EquivalenceReport> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            dim: p.dim(),
            ambient: p.ambient_dim(),
        });
    }
    if !regularity_report(p).smooth {
        return Err(Error::NotSmooth(
            "the equivalence is stated for smooth polytopes".into(),
        ));
    }
    let n = p.dim();
    let profile = adjunction_profile(p)?;
    let cd = profile.cd;
    let chern = jet1_chern_degree(p)?;

    // (a): a Cayley structure of length exactly cd with t > n/2 and
    // normally equivalent slices
    let t0 = cd - 1;
    let mut witness = None;
    let flag_a = if t0 >= 1 && 2 * t0 > n && t0 <= n {
        let decs = cayley_decompose(p, t0)?;
        witness = decs.iter().find(|d| d.slices_normally_equivalent).cloned();
        witness.is_some()
    } else {
        false
    };

    // (b): cd >= (n+3)/2 and tau = mu
    let flag_b = 2 * cd >= n + 3
        && matches!(&profile.tau, NefValue::Finite(t) if *t == profile.mu);

    // (d): vanishing alternating face sum
    let flag_d = chern.is_zero();

    Ok(EquivalenceReport {
        dim: n,
        cd,
        mu: profile.mu,
        tau: profile.tau,
        chern_sum: chern,
        flag_a,
        flag_b,
        flag_d,
        consistent: flag_a == flag_b && flag_b == flag_d,
        witness,
    })
}

#[derive(Clone, Debug)]
pub struct CayleyLemmaReport {
    /// reason the check did not apply; precondition violations are skips,
    /// not failures
    pub skipped: Option<String>,
    pub t: usize,
    pub n: usize,
    pub expected: usize,
    pub mu: Option<Rat>,
    pub tau: Option<NefValue>,
    pub cd: Option<usize>,
    pub holds: bool,
}

/// Builds the Cayley sum of the given slices and checks that the Q-codegree,
/// the nef value and the codegree all equal the slice count exactly.
pub fn check_cayley_lemma(slices: &[LatticePolytope]) -> Result<CayleyLemmaReport> {
    let skip = |t: usize, n: usize, why: String| CayleyLemmaReport {
        skipped: Some(why),
        t,
        n,
        expected: t + 1,
        mu: None,
        tau: None,
        cd: None,
        holds: false,
    };
    if slices.len() < 2 {
        return Ok(skip(0, 0, "need at least two slices".into()));
    }
    let t = slices.len() - 1;
    let m = slices[0].ambient_dim();
    if slices.iter().any(|s| s.ambient_dim() != m) {
        return Ok(skip(t, 0, "slices have mixed ambient dimensions".into()));
    }
    if slices.iter().any(|s| !s.is_full_dimensional()) {
        return Ok(skip(t, m + t, "slices must be full-dimensional".into()));
    }
    let n = m + t;
    for other in slices.iter().skip(1) {
        if !normally_equivalent(&slices[0], other)? {
            return Ok(skip(t, n, "slices are not normally equivalent".into()));
        }
    }
    if 2 * t <= n {
        return Ok(skip(t, n, format!("t = {t} does not exceed n/2 = {n}/2")));
    }
    let sum = cayley_sum(slices)?;
    debug_assert!(sum.is_full_dimensional());
    let profile = adjunction_profile(&sum)?;
    let expected = t + 1;
    let expected_rat = Rat::from_integer(Int::from(expected as i64));
    let holds = profile.mu == expected_rat
        && matches!(&profile.tau, NefValue::Finite(v) if *v == expected_rat)
        && profile.cd == expected;
    Ok(CayleyLemmaReport {
        skipped: None,
        t,
        n,
        expected,
        mu: Some(profile.mu),
        tau: Some(profile.tau),
        cd: Some(profile.cd),
        holds,
    })
}

/// Checks selectable per-member properties over a corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    /// smooth members: the three-way equivalence must be consistent
    Equivalence,
    /// smooth members: the alternating face sum is nonnegative, zero exactly
    /// on the defective members
    Nonnegativity,
    /// lattice members: mu <= tau and mu <= cd <= n+1
    OrderInvariants,
    /// hulling the vertex list reproduces the polytope
    RoundTrips,
}

pub const ALL_CHECKS: [Check; 4] = [
    Check::Equivalence,
    Check::Nonnegativity,
    Check::OrderInvariants,
    Check::RoundTrips,
];

#[derive(Clone, Debug)]
pub struct MemberOutcome {
    pub index: usize,
    pub smooth: bool,
    pub violations: Vec<String>,
    pub equivalence: Option<EquivalenceReport>,
}

#[derive(Clone, Debug)]
pub struct CorpusReport {
    pub members: Vec<MemberOutcome>,
    pub checks: Vec<Check>,
}

impl CorpusReport {
    pub fn violations(&self) -> Vec<(usize, String)> {
        self.members
            .iter()
            .flat_map(|m| m.violations.iter().map(|v| (m.index, v.clone())))
            .collect()
    }

    pub fn is_clean(&self) -> bool {
        self.members.iter().all(|m| m.violations.is_empty())
    }
}

/// Applies the selected checks to every member. Individual failures are
/// recorded, never abort the run; ordering follows the input.
pub fn run_corpus(corpus: &[LatticePolytope], checks: &[Check]) -> CorpusReport {
    let mut members = Vec::with_capacity(corpus.len());
    for (index, p) in corpus.iter().enumerate() {
        let mut violations = Vec::new();
        let mut equivalence = None;
        let smooth = p.is_full_dimensional() && regularity_report(p).smooth;
        for check in checks {
            match check {
                Check::Equivalence => {
                    if smooth {
                        match verify_equivalences(p) {
                            Ok(rep) => {
                                if !rep.consistent {
                                    violations.push(format!(
                                        "equivalence flags disagree: a={} b={} d={}",
                                        rep.flag_a, rep.flag_b, rep.flag_d
                                    ));
                                }
                                equivalence = Some(rep);
                            }
                            Err(e) => violations.push(format!("equivalence check failed: {e}")),
                        }
                    }
                }
                Check::Nonnegativity => {
                    if smooth {
                        match jet1_chern_degree(p) {
                            Ok(c) => {
                                if c.is_negative() {
                                    violations
                                        .push(format!("negative alternating face sum: {c}"));
                                }
                            }
                            Err(e) => violations.push(format!("face sum failed: {e}")),
                        }
                    }
                }
                Check::OrderInvariants => {
                    if p.is_full_dimensional() {
                        match adjunction_order_invariants(p) {
                            Ok(Some(msg)) => violations.push(msg),
                            Ok(None) => {}
                            Err(e) => violations.push(format!("order invariants failed: {e}")),
                        }
                    }
                }
                Check::RoundTrips => match LatticePolytope::from_points(p.vertices()) {
                    Ok(q) => {
                        if !q.lattice_equal(p) {
                            violations.push("hull round trip changed the vertex set".into());
                        }
                    }
                    Err(e) => violations.push(format!("round trip failed: {e}")),
                },
            }
        }
        members.push(MemberOutcome {
            index,
            smooth,
            violations,
            equivalence,
        });
    }
    CorpusReport {
        members,
        checks: checks.to_vec(),
    }
}

/// `mu <= tau` and `mu <= cd <= n+1`, reported as a violation message
/// instead of the kernel assertion used by `adjunction_profile`.
fn adjunction_order_invariants(p: &LatticePolytope) -> Result<Option<String>> {
    let mu = crate::adjunction::q_codegree(p)?;
    let tau = crate::adjunction::nef_value(p)?;
    let cd = crate::adjunction::codegree(p)?;
    if let NefValue::Finite(t) = &tau {
        if mu > *t {
            return Ok(Some(format!("mu > tau: {mu} > {t}")));
        }
    }
    let cd_rat = Rat::from_integer(Int::from(cd as i64));
    if mu > cd_rat {
        return Ok(Some(format!("mu > cd: {mu} > {cd}")));
    }
    if cd > p.dim() + 1 {
        return Ok(Some(format!("cd exceeds n+1: {cd}")));
    }
    Ok(None)
}

/// All smooth lattice polygons (dimension 2) with vertices in
/// `[0, max_coord]^2`, by exhaustive convex-chain enumeration followed by a
/// smoothness filter. Every polygon appears once, anchored at its
/// lexicographically smallest vertex and traversed counterclockwise.
pub fn smooth_polygons_in_box(max_coord: i64) -> Vec<LatticePolytope> {
    convex_polygons_in_box(max_coord)
        .into_iter()
        .filter(|cycle| polygon_is_smooth(cycle))
        .map(|cycle| {
            let pts: Vec<Vec<Int>> = cycle
                .iter()
                .map(|&(x, y)| vec![Int::from(x), Int::from(y)])
                .collect();
            LatticePolytope::from_points(&pts).expect("polygon vertices form a hull")
        })
        .collect()
}

fn cross(a: (i64, i64), b: (i64, i64)) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

/// Angular class of a direction relative to the anchor edge: 0 on the
/// anchor ray, then counterclockwise classes 1 (left half-turn), 2
/// (opposite ray), 3 (right half-turn).
fn angle_class(anchor: (i64, i64), d: (i64, i64)) -> u8 {
    let c = cross(anchor, d);
    if c > 0 {
        return 1;
    }
    if c < 0 {
        return 3;
    }
    let dotp = anchor.0 * d.0 + anchor.1 * d.1;
    if dotp > 0 {
        0
    } else {
        2
    }
}

/// Strictly-before comparison of directions in the single revolution
/// starting at the anchor.
fn rank_less(anchor: (i64, i64), a: (i64, i64), b: (i64, i64)) -> bool {
    let (ca, cb) = (angle_class(anchor, a), angle_class(anchor, b));
    if ca != cb {
        return ca < cb;
    }
    matches!(ca, 1 | 3) && cross(a, b) > 0
}

/// All strictly convex lattice polygons (>= 3 vertices) with vertices in
/// the grid, as counterclockwise vertex cycles anchored at the lex-min
/// vertex. Edge directions strictly increase in angle within one
/// revolution, which excludes repeated windings.
fn convex_polygons_in_box(max_coord: i64) -> Vec<Vec<(i64, i64)>> {
    let m = max_coord;
    let mut out = Vec::new();
    let mut chain: Vec<(i64, i64)> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        v0: (i64, i64),
        cur: (i64, i64),
        anchor: (i64, i64),
        prev: (i64, i64),
        m: i64,
        chain: &mut Vec<(i64, i64)>,
        out: &mut Vec<Vec<(i64, i64)>>,
    ) {
        // try to close the polygon
        if chain.len() >= 3 {
            let e_close = (v0.0 - cur.0, v0.1 - cur.1);
            if cross(prev, e_close) > 0
                && rank_less(anchor, prev, e_close)
                && cross(e_close, anchor) > 0
            {
                out.push(chain.clone());
            }
        }
        for x in 0..=m {
            for y in 0..=m {
                let w = (x, y);
                if w <= v0 || w == cur {
                    continue;
                }
                let e = (w.0 - cur.0, w.1 - cur.1);
                if cross(prev, e) > 0 && rank_less(anchor, prev, e) {
                    chain.push(w);
                    dfs(v0, w, anchor, e, m, chain, out);
                    chain.pop();
                }
            }
        }
    }

    for x0 in 0..=m {
        for y0 in 0..=m {
            let v0 = (x0, y0);
            for x1 in 0..=m {
                for y1 in 0..=m {
                    let v1 = (x1, y1);
                    if v1 <= v0 {
                        continue;
                    }
                    let e0 = (v1.0 - v0.0, v1.1 - v0.1);
                    chain.clear();
                    chain.push(v0);
                    chain.push(v1);
                    dfs(v0, v1, e0, e0, m, &mut chain, &mut out);
                }
            }
        }
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn polygon_is_smooth(cycle: &[(i64, i64)]) -> bool {
    let k = cycle.len();
    for i in 0..k {
        let prev = cycle[(i + k - 1) % k];
        let cur = cycle[i];
        let next = cycle[(i + 1) % k];
        let din = (prev.0 - cur.0, prev.1 - cur.1);
        let dout = (next.0 - cur.0, next.1 - cur.1);
        let gi = gcd(din.0, din.1);
        let go = gcd(dout.0, dout.1);
        let pin = (din.0 / gi, din.1 / gi);
        let pout = (dout.0 / go, dout.1 / go);
        if cross(pin, pout).abs() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;
    use crate::rat;

    fn pts(coords: &[&[i64]]) -> Vec<Vec<Int>> {
        coords
            .iter()
            .map(|p| p.iter().map(|&x| int(x)).collect())
            .collect()
    }

    fn prism() -> LatticePolytope {
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
    fn prism_equivalence_all_true() {
        let rep = verify_equivalences(&prism()).unwrap();
        assert!(rep.flag_a && rep.flag_b && rep.flag_d);
        assert!(rep.consistent);
        assert_eq!(rep.cd, 3);
    }

    #[test]
    fn two_delta2_equivalence_all_false() {
        let p = LatticePolytope::simplex(2).dilate(2).unwrap();
        let rep = verify_equivalences(&p).unwrap();
        assert!(!rep.flag_a && !rep.flag_b && !rep.flag_d);
        assert!(rep.consistent);
    }

    #[test]
    fn simplex_equivalence_all_true() {
        let rep = verify_equivalences(&LatticePolytope::simplex(2)).unwrap();
        assert!(rep.flag_a && rep.flag_b && rep.flag_d);
        assert!(rep.consistent);
        assert_eq!(rep.chern_sum, int(0)); // 3 - 6 + 3
    }

    #[test]
    fn non_smooth_input_is_rejected() {
        let bad = LatticePolytope::from_points(&pts(&[&[0, 0], &[2, 0], &[0, 1]])).unwrap();
        assert!(matches!(
            verify_equivalences(&bad),
            Err(Error::NotSmooth(_))
        ));
    }

    #[test]
    fn cayley_lemma_triple_segment() {
        let seg = LatticePolytope::simplex(1);
        let rep = check_cayley_lemma(&[seg.clone(), seg.clone(), seg]).unwrap();
        assert!(rep.skipped.is_none());
        assert!(rep.holds);
        assert_eq!(rep.expected, 3);
        assert_eq!(rep.mu, Some(rat(3)));
    }

    #[test]
    fn cayley_lemma_mixed_dilates() {
        let slices = [
            LatticePolytope::from_points(&pts(&[&[0], &[2]])).unwrap(),
            LatticePolytope::from_points(&pts(&[&[0], &[3]])).unwrap(),
            LatticePolytope::from_points(&pts(&[&[0], &[1]])).unwrap(),
        ];
        let rep = check_cayley_lemma(&slices).unwrap();
        assert!(rep.skipped.is_none());
        assert!(rep.holds, "{rep:?}");
        assert_eq!(rep.cd, Some(3));
    }

    #[test]
    fn cayley_lemma_point_slices_give_simplex() {
        let point = LatticePolytope::from_points(&pts(&[&[0i64; 0]])).unwrap();
        let slices: Vec<LatticePolytope> = (0..4).map(|_| point.clone()).collect();
        let rep = check_cayley_lemma(&slices).unwrap();
        assert!(rep.skipped.is_none(), "{rep:?}");
        assert!(rep.holds);
        assert_eq!(rep.expected, 4); // Delta_3 boundary case
    }

    #[test]
    fn cayley_lemma_skips() {
        // t too small for the dimension: 2 slices of a 2-polytope
        let sq = LatticePolytope::cube(2);
        let rep = check_cayley_lemma(&[sq.clone(), sq.clone()]).unwrap();
        assert!(rep.skipped.is_some());
        // not normally equivalent
        let rep =
            check_cayley_lemma(&[LatticePolytope::simplex(1), LatticePolytope::simplex(1), {
                LatticePolytope::from_points(&pts(&[&[0]])).unwrap()
            }])
            .unwrap();
        assert!(rep.skipped.is_some());
    }

    #[test]
    fn corpus_run_on_named_polytopes() {
        let corpus = vec![
            LatticePolytope::simplex(2).dilate(2).unwrap(),
            prism(),
            LatticePolytope::cube(2),
            LatticePolytope::simplex(3),
            LatticePolytope::cube(3),
        ];
        let report = run_corpus(&corpus, &ALL_CHECKS);
        assert!(report.is_clean(), "{:?}", report.violations());
        assert_eq!(report.members.len(), 5);
    }

    #[test]
    fn empty_corpus_is_empty_report() {
        let report = run_corpus(&[], &ALL_CHECKS);
        assert!(report.members.is_empty());
        assert!(report.is_clean());
    }

    #[test]
    fn polygon_enumeration_small_boxes() {
        // unit box: four triangles with vertices among the corners plus
        // the square itself
        let polys = convex_polygons_in_box(1);
        assert_eq!(polys.len(), 5);
        // all are smooth at this size
        assert!(polys.iter().all(|c| polygon_is_smooth(c)));
        let smooth = smooth_polygons_in_box(1);
        assert_eq!(smooth.len(), 5);
        assert!(smooth.iter().all(|p| p.dim() == 2));
    }

    #[test]
    fn polygon_enumeration_counts_grow() {
        let c2 = convex_polygons_in_box(2);
        // cross-check with a brute-force hull census over point subsets:
        // every strictly-convex vertex set equals the hull vertex set of
        // some subset, so counting distinct hull vertex sets of all subsets
        // of the 3x3 grid with hull dimension 2 gives the same number
        let mut seen = std::collections::BTreeSet::new();
        let grid: Vec<(i64, i64)> = (0..=2)
            .flat_map(|x| (0..=2).map(move |y| (x, y)))
            .collect();
        for mask in 1u32..(1 << 9) {
            let subset: Vec<Vec<Int>> = (0..9)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| vec![int(grid[i].0), int(grid[i].1)])
                .collect();
            if subset.len() < 3 {
                continue;
            }
            let hull = LatticePolytope::from_points(&subset).unwrap();
            if hull.dim() == 2 {
                seen.insert(hull.vertices().to_vec());
            }
        }
        assert_eq!(c2.len(), seen.len());
    }
}
