//! Exhaustive grid search with one local refinement pass. A brute-force
//! oracle for cross-checking the closed-form solvers and the simplex stack
//! at desk scale; rejected above three dimensions by design.

use super::{check_bounds, OptError, OptResult};

fn sweep(
    objective: &(dyn Fn(&[f64]) -> f64 + Sync),
    lower: &[f64],
    upper: &[f64],
    points_per_dim: usize,
) -> (Vec<f64>, f64, usize) {
    let dim = lower.len();
    let counts = vec![points_per_dim; dim];
    let mut idx = vec![0usize; dim];
    let mut best_x = lower.to_vec();
    let mut best_f = f64::NEG_INFINITY;
    let mut evals = 0usize;
    let mut x = vec![0.0; dim];
    loop {
        for d in 0..dim {
            x[d] = if points_per_dim == 1 {
                0.5 * (lower[d] + upper[d])
            } else {
                lower[d] + (upper[d] - lower[d]) * idx[d] as f64 / (points_per_dim - 1) as f64
            };
        }
        let f = objective(&x);
        evals += 1;
        if f > best_f {
            best_f = f;
            best_x.copy_from_slice(&x);
        }
        // Odometer increment.
        let mut d = 0;
        loop {
            idx[d] += 1;
            if idx[d] < counts[d] {
                break;
            }
            idx[d] = 0;
            d += 1;
            if d == dim {
                return (best_x, best_f, evals);
            }
        }
    }
}

/// Maximizes over a regular grid, then re-grids once around the incumbent
/// at a window of one and a half grid cells per side.
pub fn grid_oracle(
    objective: &(dyn Fn(&[f64]) -> f64 + Sync),
    lower: &[f64],
    upper: &[f64],
    points_per_dim: usize,
) -> Result<OptResult, OptError> {
    let dim = lower.len();
    if dim > 3 {
        return Err(OptError::DimensionTooHigh(dim));
    }
    check_bounds(lower, upper)?;
    let (coarse_x, coarse_f, mut evals) = sweep(objective, lower, upper, points_per_dim);

    let mut fine_lower = vec![0.0; dim];
    let mut fine_upper = vec![0.0; dim];
    for d in 0..dim {
        let spacing = (upper[d] - lower[d]) / (points_per_dim.max(2) - 1) as f64;
        fine_lower[d] = (coarse_x[d] - 1.5 * spacing).max(lower[d]);
        fine_upper[d] = (coarse_x[d] + 1.5 * spacing).min(upper[d]);
    }
    let (fine_x, fine_f, fine_evals) = sweep(objective, &fine_lower, &fine_upper, points_per_dim);
    evals += fine_evals;

    let (x, f) = if fine_f >= coarse_f {
        (fine_x, fine_f)
    } else {
        (coarse_x, coarse_f)
    };
    Ok(OptResult {
        x,
        f,
        evals,
        converged: true,
        constraint_violation: 0.0,
        restart_dispersion: 0.0,
    })
}
