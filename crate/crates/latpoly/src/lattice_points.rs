//! Lattice point enumeration by bounded search with exact interval pruning.
//! No epsilon anywhere: interior tests are strict rational comparisons.

use num_traits::Zero;

use crate::polytope::LatticePolytope;
use crate::{Int, Rat};

/// Inequality system `a . x >= b` (or `> b` when strict) over a box.
struct Enumerator<'a> {
    rows: &'a [(Vec<Int>, Rat)],
    lo: Vec<Int>,
    hi: Vec<Int>,
    strict: bool,
    /// suffix_max[r][k] = max over the box of sum_{j >= k} a_rj x_j
    suffix_max: Vec<Vec<Rat>>,
}

impl<'a> Enumerator<'a> {
    fn new(rows: &'a [(Vec<Int>, Rat)], lo: Vec<Int>, hi: Vec<Int>, strict: bool) -> Self {
        let n = lo.len();
        let suffix_max = rows
            .iter()
            .map(|(a, _)| {
                let mut suf = vec![Rat::from_integer(Int::zero()); n + 1];
                for k in (0..n).rev() {
                    let best = if a[k] >= Int::zero() {
                        &a[k] * &hi[k]
                    } else {
                        &a[k] * &lo[k]
                    };
                    suf[k] = &suf[k + 1] + Rat::from_integer(best);
                }
                suf
            })
            .collect();
        Enumerator {
            rows,
            lo,
            hi,
            strict,
            suffix_max,
        }
    }

    fn feasible(&self, row: usize, partial: &Rat, depth: usize) -> bool {
        let reach = partial + &self.suffix_max[row][depth];
        let b = &self.rows[row].1;
        if self.strict {
            reach > *b
        } else {
            reach >= *b
        }
    }

    fn run<F: FnMut(&[Int]) -> bool>(&self, visit: &mut F) -> bool {
        let n = self.lo.len();
        let mut point = vec![Int::zero(); n];
        let mut partials: Vec<Vec<Rat>> =
            vec![vec![Rat::from_integer(Int::zero()); self.rows.len()]];
        self.recurse(0, n, &mut point, &mut partials, visit)
    }

    fn recurse<F: FnMut(&[Int]) -> bool>(
        &self,
        depth: usize,
        n: usize,
        point: &mut Vec<Int>,
        partials: &mut Vec<Vec<Rat>>,
        visit: &mut F,
    ) -> bool {
        if depth == n {
            let last = partials.last().expect("partial stack");
            let ok = self.rows.iter().enumerate().all(|(r, (_, b))| {
                if self.strict {
                    last[r] > *b
                } else {
                    last[r] >= *b
                }
            });
            if ok {
                return visit(point);
            }
            return true;
        }
        let mut x = self.lo[depth].clone();
        while x <= self.hi[depth] {
            point[depth] = x.clone();
            let prev = partials.last().expect("partial stack").clone();
            let next: Vec<Rat> = self
                .rows
                .iter()
                .enumerate()
                .map(|(r, (a, _))| &prev[r] + Rat::from_integer(&a[depth] * &x))
                .collect();
            let ok = (0..self.rows.len()).all(|r| self.feasible(r, &next[r], depth + 1));
            if ok {
                partials.push(next);
                let keep_going = self.recurse(depth + 1, n, point, partials, visit);
                partials.pop();
                if !keep_going {
                    return false;
                }
            }
            x += 1;
        }
        true
    }
}

/// Integer points of the system `rows` inside `[lo, hi]`; `strict` demands
/// strict inequalities on every row.
pub fn points_in_system(
    rows: &[(Vec<Int>, Rat)],
    lo: &[Int],
    hi: &[Int],
    strict: bool,
) -> Vec<Vec<Int>> {
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let e = Enumerator::new(rows, lo.to_vec(), hi.to_vec(), strict);
    e.run(&mut |p: &[Int]| {
        out.push(p.to_vec());
        true
    });
    out
}

/// Early-exit existence test for the same system.
pub fn system_has_point(rows: &[(Vec<Int>, Rat)], lo: &[Int], hi: &[Int], strict: bool) -> bool {
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return false;
    }
    let mut found = false;
    let e = Enumerator::new(rows, lo.to_vec(), hi.to_vec(), strict);
    e.run(&mut |_p: &[Int]| {
        found = true;
        false
    });
    found
}

fn span_box(p: &LatticePolytope) -> (Vec<Int>, Vec<Int>) {
    let r = p.dim();
    let mut lo = vec![Int::zero(); r];
    let mut hi = vec![Int::zero(); r];
    for (i, item) in lo.iter_mut().zip(hi.iter_mut()).enumerate() {
        let (l, h) = item;
        *l = p
            .span_vertices()
            .iter()
            .map(|v| v[i].clone())
            .min()
            .expect("nonempty");
        *h = p
            .span_vertices()
            .iter()
            .map(|v| v[i].clone())
            .max()
            .expect("nonempty");
    }
    (lo, hi)
}

fn span_rows(p: &LatticePolytope) -> Vec<(Vec<Int>, Rat)> {
    p.facets()
        .iter()
        .map(|f| (f.normal.clone(), Rat::from_integer(f.offset.clone())))
        .collect()
}

/// All lattice points of a polytope, in ambient coordinates. With
/// `interior = true` only points strictly inside every facet are returned;
/// for lower-dimensional polytopes that is the relative interior.
pub fn lattice_points(p: &LatticePolytope, interior: bool) -> Vec<Vec<Int>> {
    if p.dim() == 0 {
        return vec![p.vertices()[0].clone()];
    }
    let (lo, hi) = span_box(p);
    let rows = span_rows(p);
    points_in_system(&rows, &lo, &hi, interior)
        .into_iter()
        .map(|c| p.span().from_span(&c))
        .collect()
}

/// Early-exit interior point existence; `interior` semantics as above.
pub fn has_interior_lattice_point(p: &LatticePolytope) -> bool {
    if p.dim() == 0 {
        return true;
    }
    let (lo, hi) = span_box(p);
    let rows = span_rows(p);
    system_has_point(&rows, &lo, &hi, true)
}

/// Number of lattice points in `p` (closed).
pub fn count_lattice_points(p: &LatticePolytope) -> usize {
    lattice_points(p, false).len()
}
