//! Dense exact simplex method over arbitrary-precision rationals.
//! Two phases, Bland's pivoting rule throughout, hence guaranteed
//! termination; sized for the small systems this crate produces.

use num_traits::{One, Signed, Zero};

use crate::{Int, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// optimal value and one optimizer
    Optimal(Rat, Vec<Rat>),
    Infeasible,
    Unbounded,
}

fn zero() -> Rat {
    Rat::from_integer(Int::zero())
}

struct Tableau {
    /// m x n constraint matrix, kept as B^{-1} A under pivoting
    a: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.a[row][col].recip();
        for j in 0..self.a[row].len() {
            self.a[row][j] = &self.a[row][j] * &inv;
        }
        self.rhs[row] = &self.rhs[row] * &inv;
        for i in 0..self.a.len() {
            if i == row || self.a[i][col].is_zero() {
                continue;
            }
            let f = self.a[i][col].clone();
            for j in 0..self.a[i].len() {
                let sub = &f * &self.a[row][j];
                self.a[i][j] = &self.a[i][j] - &sub;
            }
            let sub = &f * &self.rhs[row];
            self.rhs[i] = &self.rhs[i] - &sub;
        }
        self.basis[row] = col;
    }

    /// Maximizes `c . z` with Bland's rule. Returns `None` on unboundedness.
    fn optimize(&mut self, c: &[Rat]) -> Option<()> {
        loop {
            // reduced costs r_j = c_j - c_B . col_j
            let mut entering = None;
            'cols: for j in 0..c.len() {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut r = c[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !c[b].is_zero() && !self.a[i][j].is_zero() {
                        let sub = &c[b] * &self.a[i][j];
                        r = &r - &sub;
                    }
                }
                if r.is_positive() {
                    entering = Some(j);
                    break 'cols;
                }
            }
            let Some(col) = entering else {
                return Some(());
            };
            let mut leave: Option<(usize, Rat)> = None;
            for i in 0..self.a.len() {
                if self.a[i][col].is_positive() {
                    let ratio = &self.rhs[i] / &self.a[i][col];
                    leave = match leave {
                        None => Some((i, ratio)),
                        Some((bi, br)) => {
                            if ratio < br
                                || (ratio == br && self.basis[i] < self.basis[bi])
                            {
                                Some((i, ratio))
                            } else {
                                Some((bi, br))
                            }
                        }
                    };
                }
            }
            let (row, _) = leave?;
            self.pivot(row, col);
        }
    }

    fn objective_value(&self, c: &[Rat]) -> Rat {
        self.basis
            .iter()
            .enumerate()
            .map(|(i, &b)| &c[b] * &self.rhs[i])
            .sum()
    }
}

/// Maximizes `objective . y` over `{y : rows_i . y >= rhs_i}` with free
/// variables, exactly.
pub fn maximize(objective: &[Rat], rows: &[Vec<Rat>], rhs: &[Rat]) -> LpOutcome {
    let n = objective.len();
    let m = rows.len();
    debug_assert!(rows.iter().all(|r| r.len() == n));

    // y = u - w with u, w >= 0; slack t >= 0 turns >= into equality;
    // artificials close phase 1. column layout: [u | w | t | artificials]
    let nvars = 2 * n + m;
    let total = nvars + m;
    let mut a = vec![vec![zero(); total]; m];
    let mut d = Vec::with_capacity(m);
    for i in 0..m {
        let flip = rhs[i].is_negative();
        for j in 0..n {
            let v = if flip { -rows[i][j].clone() } else { rows[i][j].clone() };
            a[i][j] = v.clone();
            a[i][n + j] = -v;
        }
        let slack = if flip { Rat::from_integer(Int::one()) } else { -Rat::from_integer(Int::one()) };
        a[i][2 * n + i] = slack;
        a[i][nvars + i] = Rat::from_integer(Int::one());
        d.push(if flip { -rhs[i].clone() } else { rhs[i].clone() });
    }

    let mut t = Tableau {
        a,
        rhs: d,
        basis: (nvars..total).collect(),
    };

    // phase 1: drive the artificials to zero
    let mut c1 = vec![zero(); total];
    for item in c1.iter_mut().take(total).skip(nvars) {
        *item = -Rat::from_integer(Int::one());
    }
    t.optimize(&c1).expect("phase 1 is bounded by zero");
    if !t.objective_value(&c1).is_zero() {
        return LpOutcome::Infeasible;
    }
    // pivot basic artificials out (their rhs is zero); drop redundant rows
    let mut drop_rows = Vec::new();
    for i in 0..m {
        if t.basis[i] >= nvars {
            if let Some(j) = (0..nvars).find(|&j| !t.a[i][j].is_zero()) {
                t.pivot(i, j);
            } else {
                drop_rows.push(i);
            }
        }
    }
    for &i in drop_rows.iter().rev() {
        t.a.remove(i);
        t.rhs.remove(i);
        t.basis.remove(i);
    }
    for row in t.a.iter_mut() {
        row.truncate(nvars);
    }

    // phase 2
    let mut c2 = vec![zero(); nvars];
    for j in 0..n {
        c2[j] = objective[j].clone();
        c2[n + j] = -objective[j].clone();
    }
    if t.optimize(&c2).is_none() {
        return LpOutcome::Unbounded;
    }
    let value = t.objective_value(&c2);
    let mut y = vec![zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            y[b] = &y[b] + &t.rhs[i];
        } else if b < 2 * n {
            y[b - n] = &y[b - n] - &t.rhs[i];
        }
    }
    LpOutcome::Optimal(value, y)
}
