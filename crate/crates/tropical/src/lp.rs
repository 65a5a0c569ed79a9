//! Dense two-phase simplex for small equality-constrained LPs.
//!
//! Maximizes `c·x` subject to `A x = b`, `x >= 0`.  Bland's rule on both
//! the entering and leaving choices guarantees termination; everything is
//! tableau-based and sized for desk-scale problems (a few dozen
//! variables).

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum LpOutcome {
    Optimal { objective: f64, solution: Vec<f64> },
    Infeasible,
    Unbounded,
}

pub(crate) fn maximize(a: &[Vec<f64>], b: &[f64], c: &[f64], eps: f64) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    debug_assert!(a.iter().all(|row| row.len() == n));
    debug_assert_eq!(b.len(), m);

    // columns: n structural, m artificial, then the rhs
    let width = n + m + 1;
    let mut t: Vec<Vec<f64>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = if b[i] < 0.0 { -1.0 } else { 1.0 };
        let mut row = vec![0.0; width];
        for j in 0..n {
            row[j] = flip * a[i][j];
        }
        row[n + i] = 1.0;
        row[width - 1] = flip * b[i];
        t.push(row);
    }
    let mut basis: Vec<usize> = (0..m).map(|i| n + i).collect();

    // phase 1: maximize minus the sum of artificials
    let mut cost = vec![0.0; width];
    for slot in cost.iter_mut().take(n + m).skip(n) {
        *slot = -1.0;
    }
    let mut z = price_out(&mut cost, &t, &basis);
    if !run(&mut t, &mut basis, &mut cost, &mut z, n + m, eps) {
        unreachable!("phase-1 objective is bounded above by zero");
    }
    if z < -eps {
        return LpOutcome::Infeasible;
    }
    // pivot basic artificials onto structural columns where possible;
    // rows with no eligible column are redundant and stay at zero
    for r in 0..m {
        if basis[r] >= n {
            if let Some(j) = (0..n).find(|&j| t[r][j].abs() > eps) {
                pivot(&mut t, &mut basis, r, j);
            }
        }
    }

    // phase 2 over the structural columns only
    let mut cost = vec![0.0; width];
    cost[..n].copy_from_slice(c);
    let mut z = price_out(&mut cost, &t, &basis);
    if !run(&mut t, &mut basis, &mut cost, &mut z, n, eps) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![0.0; n];
    for r in 0..m {
        if basis[r] < n {
            x[basis[r]] = t[r][width - 1].max(0.0);
        }
    }
    LpOutcome::Optimal { objective: z, solution: x }
}

/// Reduces the cost row against the current basis; returns the objective
/// value of the basic solution.
fn price_out(cost: &mut [f64], t: &[Vec<f64>], basis: &[usize]) -> f64 {
    let width = cost.len();
    let mut z = 0.0;
    for (r, &bj) in basis.iter().enumerate() {
        let cb = cost[bj];
        if cb != 0.0 {
            for j in 0..width - 1 {
                cost[j] -= cb * t[r][j];
            }
            z += cb * t[r][width - 1];
        }
    }
    z
}

/// Pivots to optimality; returns false when the objective is unbounded.
fn run(
    t: &mut [Vec<f64>],
    basis: &mut [usize],
    cost: &mut [f64],
    z: &mut f64,
    active_cols: usize,
    eps: f64,
) -> bool {
    let width = cost.len();
    let mut iterations = 0usize;
    loop {
        iterations += 1;
        assert!(iterations < 100_000, "simplex failed to terminate");
        // Bland: the lowest-index improving column enters
        let Some(enter) = (0..active_cols).find(|&j| cost[j] > eps) else {
            return true;
        };
        let mut leave: Option<usize> = None;
        let mut best = f64::INFINITY;
        for (r, row) in t.iter().enumerate() {
            if row[enter] > eps {
                let ratio = row[width - 1] / row[enter];
                let take = match leave {
                    None => true,
                    Some(lr) => {
                        ratio < best - eps || (ratio <= best + eps && basis[r] < basis[lr])
                    }
                };
                if take {
                    leave = Some(r);
                    best = best.min(ratio);
                }
            }
        }
        let Some(r) = leave else {
            return false;
        };
        pivot(t, basis, r, enter);
        let ce = cost[enter];
        if ce != 0.0 {
            for j in 0..width - 1 {
                cost[j] -= ce * t[r][j];
            }
            *z += ce * t[r][width - 1];
        }
    }
}

fn pivot(t: &mut [Vec<f64>], basis: &mut [usize], r: usize, j: usize) {
    let p = t[r][j];
    for v in t[r].iter_mut() {
        *v /= p;
    }
    t[r][j] = 1.0;
    let pivot_row = t[r].clone();
    for (i, row) in t.iter_mut().enumerate() {
        if i != r {
            let f = row[j];
            if f != 0.0 {
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
                row[j] = 0.0;
            }
        }
    }
    basis[r] = j;
}
