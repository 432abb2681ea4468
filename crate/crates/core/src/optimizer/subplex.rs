//! Subplex-style search: cyclic Nelder-Mead on low-dimensional subspaces.
//!
//! Coordinates are ranked by recent progress and partitioned into blocks of
//! at most `subspace_dim`; each block is optimized by a bounded simplex
//! while the rest of the vector is held fixed. Step sizes contract with the
//! observed progress between cycles and the run ends when they fall below
//! `xtol` or the evaluation budget is spent.

use super::nelder_mead;

pub struct SubplexOutcome {
    pub x: Vec<f64>,
    pub f: f64,
    pub evals: usize,
    pub converged: bool,
}

/// Splits coordinate indices (already ranked by progress) into blocks of at
/// most `max_dim`, avoiding a trailing singleton when it can be absorbed.
fn partition(ranked: &[usize], max_dim: usize) -> Vec<Vec<usize>> {
    let max_dim = max_dim.max(1);
    let mut blocks: Vec<Vec<usize>> = ranked.chunks(max_dim).map(|c| c.to_vec()).collect();
    if let [.., prev, last] = blocks.as_mut_slice() {
        if last.len() == 1 && prev.len() > 1 {
            let moved = prev.pop().expect("nonempty block");
            last.insert(0, moved);
        }
    }
    blocks
}

/// Minimizes `f` over the box. Deterministic for a fixed starting point.
#[allow(clippy::too_many_arguments)]
pub fn minimize(
    f: &mut dyn FnMut(&[f64]) -> f64,
    x0: &[f64],
    lower: &[f64],
    upper: &[f64],
    subspace_dim: usize,
    xtol: f64,
    ftol: f64,
    max_evals: usize,
) -> SubplexOutcome {
    let n = x0.len();
    let mut x = x0.to_vec();
    for i in 0..n {
        x[i] = x[i].clamp(lower[i], upper[i]);
    }
    let mut evals = 0usize;
    let mut f_best = f(&x);
    evals += 1;
    if f_best.is_nan() {
        f_best = f64::INFINITY;
    }

    // Initial steps: a tenth of each coordinate range.
    let mut steps: Vec<f64> = (0..n)
        .map(|i| (0.1 * (upper[i] - lower[i])).max(1e-12))
        .collect();
    let mut progress: Vec<f64> = steps.clone();

    let mut converged = false;
    let mut stagnant_cycles = 0usize;
    while evals < max_evals {
        let x_before = x.clone();
        let f_before = f_best;

        // Rank coordinates by last cycle's progress, largest first; ties by
        // index for determinism.
        let mut ranked: Vec<usize> = (0..n).collect();
        ranked.sort_by(|&a, &b| {
            progress[b]
                .abs()
                .partial_cmp(&progress[a].abs())
                .unwrap()
                .then(a.cmp(&b))
        });

        for block in partition(&ranked, subspace_dim) {
            if evals >= max_evals {
                break;
            }
            let dim = block.len();
            let sub_x0: Vec<f64> = block.iter().map(|&i| x[i]).collect();
            let sub_steps: Vec<f64> = block.iter().map(|&i| steps[i]).collect();
            let sub_lower: Vec<f64> = block.iter().map(|&i| lower[i]).collect();
            let sub_upper: Vec<f64> = block.iter().map(|&i| upper[i]).collect();
            let budget = (max_evals - evals).min(150 * (dim + 1));

            // The simplex must collapse well below the current step scale
            // before the block is considered done; function-spread
            // stagnation is judged only at the cycle level.
            let min_step = sub_steps.iter().fold(f64::INFINITY, |m, s| m.min(*s));
            let inner_xtol = (0.05 * min_step).max(1e-4 * xtol).max(f64::EPSILON);

            let mut host = x.clone();
            let mut sub_f = |sub: &[f64]| {
                for (&i, &v) in block.iter().zip(sub) {
                    host[i] = v;
                }
                f(&host)
            };
            let out = nelder_mead::minimize(
                &mut sub_f, &sub_x0, &sub_steps, &sub_lower, &sub_upper, inner_xtol, 0.0, budget,
            );
            evals += out.evals;
            if out.f < f_best {
                f_best = out.f;
                for (&i, &v) in block.iter().zip(&out.x) {
                    x[i] = v;
                }
            }
        }

        let mut max_step = 0.0_f64;
        for i in 0..n {
            progress[i] = x[i] - x_before[i];
            // Contract toward observed progress, keeping a floor so a
            // temporarily stuck coordinate can still move next cycle.
            steps[i] = (2.0 * progress[i].abs()).max(0.1 * steps[i]);
            max_step = max_step.max(steps[i]).max(progress[i].abs());
        }
        if max_step <= xtol {
            converged = true;
            break;
        }
        // Three simplex-restart cycles without meaningful improvement shrink
        // the steps a thousandfold past the stagnation onset; call it done.
        if ftol > 0.0 && (f_before - f_best) <= ftol * f_best.abs().max(1.0) {
            stagnant_cycles += 1;
            if stagnant_cycles >= 3 {
                converged = true;
                break;
            }
        } else {
            stagnant_cycles = 0;
        }
    }

    SubplexOutcome {
        x,
        f: f_best,
        evals,
        converged,
    }
}
