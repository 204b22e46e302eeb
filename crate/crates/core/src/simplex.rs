//! Dense simplex solver for small linear programs in inequality form:
//! maximize `c.x` subject to `A x <= b`, `x >= 0`.
//!
//! Right-hand sides must be non-negative so the slack basis is an immediate
//! feasible start; the programs built elsewhere in this crate always satisfy
//! that. Entering and leaving variables follow Bland's rule, which cannot
//! cycle on the degenerate zero rows these programs contain.

pub const PIVOT_TOL: f64 = 1e-9;

const MAX_PIVOTS: usize = 50_000;

/// `maximize c.x  s.t.  rows[i] . x <= rhs[i],  x >= 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    pub objective: Vec<f64>,
    pub rows: Vec<Vec<f64>>,
    pub rhs: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub objective: f64,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimplexError {
    #[error("constraint {row} has {len} coefficients, expected {expected}")]
    BadShape { row: usize, len: usize, expected: usize },
    #[error("constraint {row} has negative right-hand side {value}")]
    NegativeRhs { row: usize, value: f64 },
    #[error("objective is unbounded along variable {column}")]
    Unbounded { column: usize },
    #[error("no optimum after {limit} pivots")]
    IterationLimit { limit: usize },
}

pub fn maximize(lp: &LinearProgram) -> Result<LpSolution, SimplexError> {
    let n = lp.objective.len();
    let m = lp.rows.len();
    for (row, coeffs) in lp.rows.iter().enumerate() {
        if coeffs.len() != n {
            return Err(SimplexError::BadShape { row, len: coeffs.len(), expected: n });
        }
    }
    for (row, &b) in lp.rhs.iter().enumerate() {
        if b < 0.0 {
            return Err(SimplexError::NegativeRhs { row, value: b });
        }
    }
    assert_eq!(lp.rhs.len(), m, "one right-hand side per constraint");

    // Tableau over structural + slack columns, slack basis to start.
    let cols = n + m;
    let mut tab: Vec<Vec<f64>> = lp
        .rows
        .iter()
        .enumerate()
        .map(|(i, coeffs)| {
            let mut row = vec![0.0; cols];
            row[..n].copy_from_slice(coeffs);
            row[n + i] = 1.0;
            row
        })
        .collect();
    let mut rhs = lp.rhs.clone();
    let mut reduced: Vec<f64> = {
        let mut r = vec![0.0; cols];
        r[..n].copy_from_slice(&lp.objective);
        r
    };
    let mut basis: Vec<usize> = (n..cols).collect();

    for _pivot in 0..MAX_PIVOTS {
        let Some(entering) = (0..cols).find(|&j| reduced[j] > PIVOT_TOL) else {
            let mut x = vec![0.0; n];
            for (i, &var) in basis.iter().enumerate() {
                if var < n {
                    x[var] = rhs[i].max(0.0);
                }
            }
            let objective = lp
                .objective
                .iter()
                .zip(&x)
                .map(|(c, v)| c * v)
                .sum();
            return Ok(LpSolution { x, objective });
        };

        let mut leaving: Option<(usize, f64)> = None;
        for i in 0..m {
            if tab[i][entering] > PIVOT_TOL {
                let ratio = rhs[i] / tab[i][entering];
                let better = match leaving {
                    None => true,
                    Some((best_row, best_ratio)) => {
                        ratio < best_ratio
                            || (ratio == best_ratio && basis[i] < basis[best_row])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
        }
        let Some((pivot_row, _)) = leaving else {
            return Err(SimplexError::Unbounded { column: entering });
        };

        let scale = tab[pivot_row][entering];
        for v in tab[pivot_row].iter_mut() {
            *v /= scale;
        }
        rhs[pivot_row] /= scale;
        for i in 0..m {
            if i != pivot_row && tab[i][entering] != 0.0 {
                let factor = tab[i][entering];
                for j in 0..cols {
                    tab[i][j] -= factor * tab[pivot_row][j];
                }
                rhs[i] -= factor * rhs[pivot_row];
                if rhs[i] < 0.0 && rhs[i] > -PIVOT_TOL {
                    rhs[i] = 0.0;
                }
            }
        }
        let factor = reduced[entering];
        for j in 0..cols {
            reduced[j] -= factor * tab[pivot_row][j];
        }
        basis[pivot_row] = entering;
    }
    Err(SimplexError::IterationLimit { limit: MAX_PIVOTS })
}
