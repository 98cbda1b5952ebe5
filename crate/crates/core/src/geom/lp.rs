//! Exact linear-programming feasibility: is a point a convex combination of
//! a given point set? Used to discard non-extreme vertices before the facet
//! scan. Phase-1 simplex with Bland's rule over exact rationals, so the
//! answer is never approximate and the iteration always terminates.

use crate::rat::Rat;

/// Returns true iff `target` lies in the convex hull of `points`.
///
/// Feasibility of `Σ μ_j p_j = target, Σ μ_j = 1, μ ≥ 0` is decided by
/// minimizing the sum of artificial variables.
// index loops: row operations touch two rows of the same tableau
#[allow(clippy::needless_range_loop)]
pub(crate) fn in_convex_hull(target: &[Rat], points: &[&[Rat]]) -> bool {
    let dim = target.len();
    let rows = dim + 1;
    let structural = points.len();
    if structural == 0 {
        return false;
    }
    let rhs_col = structural + rows;
    let width = rhs_col + 1;

    // Tableau rows: coordinate constraints then the convexity row, with an
    // artificial identity basis appended. Rows are sign-flipped so b ≥ 0.
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut row = vec![Rat::zero(); width];
        for (j, p) in points.iter().enumerate() {
            row[j] = if r < dim { p[r].clone() } else { Rat::one() };
        }
        row[rhs_col] = if r < dim {
            target[r].clone()
        } else {
            Rat::one()
        };
        if row[rhs_col].is_negative() {
            for v in row.iter_mut() {
                *v = -&*v;
            }
        }
        row[structural + r] = Rat::one();
        t.push(row);
    }
    let mut basis: Vec<usize> = (structural..structural + rows).collect();

    // Objective row for minimizing the artificial sum: w[j] = Σ_r t[r][j];
    // the reduced cost of column j is c_j − w_j with c_j = 1 on artificials.
    let mut w = vec![Rat::zero(); width];
    for row in &t {
        for (wj, v) in w.iter_mut().zip(row.iter()) {
            *wj += v;
        }
    }

    loop {
        // The objective (sum of artificials) is nonnegative and never
        // increases, so hitting zero decides feasibility immediately.
        if w[rhs_col].is_zero() {
            return true;
        }
        // Entering column by Bland's rule; artificial columns are never
        // allowed back in, which keeps the objective-row update exact.
        let entering = (0..structural).find(|&j| w[j].is_positive());
        let Some(enter) = entering else {
            // Optimal with artificial value remaining: infeasible.
            return false;
        };

        let mut leave: Option<usize> = None;
        for r in 0..rows {
            if t[r][enter].is_positive() {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        let cand = &t[r][rhs_col] / &t[r][enter];
                        let best = &t[l][rhs_col] / &t[l][enter];
                        cand < best || (cand == best && basis[r] < basis[l])
                    }
                };
                if better {
                    leave = Some(r);
                }
            }
        }
        let leave = leave.expect("phase-1 objective is bounded below");

        // Pivot on (leave, enter).
        let pivot = t[leave][enter].clone();
        for v in t[leave].iter_mut() {
            *v = &*v / &pivot;
        }
        for r in 0..rows {
            if r != leave && !t[r][enter].is_zero() {
                let factor = t[r][enter].clone();
                for c in 0..width {
                    let delta = &factor * &t[leave][c];
                    t[r][c] = &t[r][c] - &delta;
                }
            }
        }
        if !w[enter].is_zero() {
            let factor = w[enter].clone();
            for c in 0..width {
                let delta = &factor * &t[leave][c];
                w[c] = &w[c] - &delta;
            }
        }
        basis[leave] = enter;
    }
}
