//! Two-phase dense simplex used by the dictionary semi-norm.
//!
//! Solves `min c^T z` subject to `A z = b`, `z >= 0` with Bland's rule,
//! which cannot cycle. Sized for desk-scale problems (tens of constraints,
//! a few hundred variables).

const PIVOT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum LpOutcome {
    Optimal(f64),
    Infeasible,
    Unbounded,
}

pub(crate) struct StandardForm {
    pub constraints: Vec<Vec<f64>>,
    pub rhs: Vec<f64>,
    pub cost: Vec<f64>,
}

/// Minimizes `cost . z` over `constraints z = rhs`, `z >= 0`.
pub(crate) fn solve(mut lp: StandardForm) -> LpOutcome {
    let m = lp.constraints.len();
    let n = lp.cost.len();
    for row in &lp.constraints {
        assert_eq!(row.len(), n, "constraint width mismatch");
    }
    assert_eq!(lp.rhs.len(), m, "rhs length mismatch");

    // Nonnegative right-hand side so artificials form a feasible basis.
    for i in 0..m {
        if lp.rhs[i] < 0.0 {
            lp.rhs[i] = -lp.rhs[i];
            for v in lp.constraints[i].iter_mut() {
                *v = -*v;
            }
        }
    }

    let total = n + m; // real variables then one artificial per row
    let mut tableau: Vec<Vec<f64>> = (0..m)
        .map(|i| {
            let mut row = vec![0.0; total + 1];
            row[..n].copy_from_slice(&lp.constraints[i]);
            row[n + i] = 1.0;
            row[total] = lp.rhs[i];
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..total).collect();

    // Phase 1: minimize the sum of artificials.
    let mut phase1_cost = vec![0.0; total];
    for c in phase1_cost.iter_mut().skip(n) {
        *c = 1.0;
    }
    let feasible = run_simplex(&mut tableau, &mut basis, &phase1_cost, total, total + 1);
    match feasible {
        SimplexEnd::Optimal(value) => {
            if value > 1e-7 * scale_of(&lp.rhs) {
                return LpOutcome::Infeasible;
            }
        }
        SimplexEnd::Unbounded => unreachable!("phase-1 objective is bounded below by zero"),
    }

    // Drive artificials out of the basis; drop redundant rows.
    let mut keep_rows = Vec::new();
    for row in 0..basis.len() {
        if basis[row] >= n {
            let pivot_col = (0..n).find(|&j| tableau[row][j].abs() > PIVOT_TOL);
            match pivot_col {
                Some(j) => {
                    pivot(&mut tableau, row, j);
                    basis[row] = j;
                    keep_rows.push(row);
                }
                None => {
                    // Redundant constraint; the row carries no information.
                }
            }
        } else {
            keep_rows.push(row);
        }
    }
    if keep_rows.len() != basis.len() {
        tableau = keep_rows.iter().map(|&r| tableau[r].clone()).collect();
        basis = keep_rows.iter().map(|&r| basis[r]).collect();
    }

    // Phase 2: the real objective, with artificial columns barred from
    // entering via the `allowed_cols` cutoff. The basis is artificial-free
    // here, so their cost entries are never read.
    let mut phase2_cost = vec![0.0; total];
    phase2_cost[..n].copy_from_slice(&lp.cost);
    match run_simplex(&mut tableau, &mut basis, &phase2_cost, n, total + 1) {
        SimplexEnd::Optimal(value) => LpOutcome::Optimal(value),
        SimplexEnd::Unbounded => LpOutcome::Unbounded,
    }
}

enum SimplexEnd {
    Optimal(f64),
    Unbounded,
}

fn scale_of(rhs: &[f64]) -> f64 {
    rhs.iter().fold(1.0f64, |acc, v| acc.max(v.abs()))
}

/// Bland-rule simplex over columns `0..allowed_cols`.
fn run_simplex(
    tableau: &mut [Vec<f64>],
    basis: &mut [usize],
    cost: &[f64],
    allowed_cols: usize,
    width: usize,
) -> SimplexEnd {
    loop {
        // Reduced costs r_j = c_j - c_B . column_j for the current tableau.
        let entering = (0..allowed_cols).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let mut reduced = cost[j];
            for (row, &b) in basis.iter().enumerate() {
                reduced -= cost[b] * tableau[row][j];
            }
            reduced < -PIVOT_TOL
        });
        let Some(j) = entering else {
            let mut value = 0.0;
            for (row, &b) in basis.iter().enumerate() {
                value += cost[b] * tableau[row][width - 1];
            }
            return SimplexEnd::Optimal(value);
        };

        // Ratio test, ties broken by smallest basis index (Bland).
        let mut leaving: Option<(usize, f64)> = None;
        for row in 0..basis.len() {
            let a = tableau[row][j];
            if a > PIVOT_TOL {
                let ratio = tableau[row][width - 1] / a;
                let better = match leaving {
                    None => true,
                    Some((best_row, best_ratio)) => {
                        ratio < best_ratio - 1e-15
                            || (ratio <= best_ratio + 1e-15 && basis[row] < basis[best_row])
                    }
                };
                if better {
                    leaving = Some((row, ratio));
                }
            }
        }
        let Some((row, _)) = leaving else {
            return SimplexEnd::Unbounded;
        };
        pivot(tableau, row, j);
        basis[row] = j;
    }
}

fn pivot(tableau: &mut [Vec<f64>], row: usize, col: usize) {
    let p = tableau[row][col];
    for v in tableau[row].iter_mut() {
        *v /= p;
    }
    let pivot_row = tableau[row].clone();
    for (r, other) in tableau.iter_mut().enumerate() {
        if r == row {
            continue;
        }
        let f = other[col];
        if f != 0.0 {
            for (v, pv) in other.iter_mut().zip(pivot_row.iter()) {
                *v -= f * pv;
            }
            other[col] = 0.0;
        }
    }
}

/// Minimum l1-mass representation: `min sum |c_i|` subject to `Atoms c = x`,
/// where `columns[i]` is the i-th atom. Returns the optimal mass, or `None`
/// when `x` is not in the span.
pub(crate) fn min_l1_representation(columns: &[&[f64]], x: &[f64]) -> Option<f64> {
    let dim = x.len();
    let p = columns.len();
    // Split c = u - v with u, v >= 0; cost is the total of both parts.
    let constraints: Vec<Vec<f64>> = (0..dim)
        .map(|row| {
            let mut r = Vec::with_capacity(2 * p);
            for col in columns {
                r.push(col[row]);
            }
            for col in columns {
                r.push(-col[row]);
            }
            r
        })
        .collect();
    let lp = StandardForm {
        constraints,
        rhs: x.to_vec(),
        cost: vec![1.0; 2 * p],
    };
    match solve(lp) {
        LpOutcome::Optimal(v) => Some(v),
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("the l1 objective is bounded below by zero"),
    }
}
