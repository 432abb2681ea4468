//! Bounded Nelder-Mead simplex search (minimization form).
//!
//! Coefficients are fixed at reflection 1, expansion 2, contraction 0.5,
//! shrink 0.5. Every candidate point is clamped into the box before
//! evaluation, so the objective is never called outside it.

pub const REFLECTION: f64 = 1.0;
pub const EXPANSION: f64 = 2.0;
pub const CONTRACTION: f64 = 0.5;
pub const SHRINK: f64 = 0.5;

pub struct NmOutcome {
    pub x: Vec<f64>,
    pub f: f64,
    pub evals: usize,
}

fn clamp_into(x: &mut [f64], lower: &[f64], upper: &[f64]) {
    for i in 0..x.len() {
        x[i] = x[i].clamp(lower[i], upper[i]);
    }
}

fn diameter(simplex: &[Vec<f64>]) -> f64 {
    let mut d = 0.0_f64;
    for v in &simplex[1..] {
        for (a, b) in v.iter().zip(&simplex[0]) {
            d = d.max((a - b).abs());
        }
    }
    d
}

/// Minimizes `f` over the box from `x0` with per-coordinate initial steps.
/// Stops when the simplex diameter falls below `xtol`, the function spread
/// below `ftol` (relative to the best value), or the budget is exhausted.
#[allow(clippy::too_many_arguments)]
pub fn minimize(
    f: &mut dyn FnMut(&[f64]) -> f64,
    x0: &[f64],
    steps: &[f64],
    lower: &[f64],
    upper: &[f64],
    xtol: f64,
    ftol: f64,
    max_evals: usize,
) -> NmOutcome {
    let n = x0.len();
    debug_assert!(n >= 1);
    let mut evals = 0usize;
    let mut eval = |x: &[f64], evals: &mut usize| -> f64 {
        *evals += 1;
        let v = f(x);
        if v.is_nan() {
            f64::INFINITY
        } else {
            v
        }
    };

    // Vertex i+1 steps along coordinate i; flip the step if it would leave
    // the box without moving.
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    let mut base = x0.to_vec();
    clamp_into(&mut base, lower, upper);
    simplex.push(base.clone());
    for i in 0..n {
        let mut v = base.clone();
        let stepped = v[i] + steps[i];
        v[i] = if stepped > upper[i] || stepped < lower[i] {
            (v[i] - steps[i]).clamp(lower[i], upper[i])
        } else {
            stepped
        };
        if v[i] == base[i] {
            // Degenerate coordinate range; nudge to the midpoint.
            v[i] = 0.5 * (lower[i] + upper[i]);
        }
        simplex.push(v);
    }
    let mut values: Vec<f64> = simplex.iter().map(|v| eval(v, &mut evals)).collect();

    let mut order: Vec<usize> = (0..=n).collect();
    loop {
        // Stable ordering: ties broken by index keeps runs deterministic.
        order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap().then(a.cmp(&b)));
        let best = order[0];
        let worst = order[n];
        let second_worst = order[n - 1];

        let dia = diameter(&simplex);
        let f_spread = values[worst] - values[best];
        if dia <= xtol
            || (ftol > 0.0 && f_spread <= ftol * (values[best].abs().max(1.0)))
            || evals >= max_evals
        {
            return NmOutcome {
                x: simplex[best].clone(),
                f: values[best],
                evals,
            };
        }

        // Centroid of all but the worst vertex.
        let mut centroid = vec![0.0; n];
        for &idx in order.iter().take(n) {
            for (c, xi) in centroid.iter_mut().zip(&simplex[idx]) {
                *c += xi / n as f64;
            }
        }

        let point_along = |t: f64| -> Vec<f64> {
            let mut p: Vec<f64> = centroid
                .iter()
                .zip(&simplex[worst])
                .map(|(c, w)| c + t * (c - w))
                .collect();
            clamp_into(&mut p, lower, upper);
            p
        };

        let reflected = point_along(REFLECTION);
        let f_reflected = eval(&reflected, &mut evals);

        if f_reflected < values[best] {
            let expanded = point_along(EXPANSION);
            let f_expanded = eval(&expanded, &mut evals);
            if f_expanded < f_reflected {
                simplex[worst] = expanded;
                values[worst] = f_expanded;
            } else {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
            }
        } else if f_reflected < values[second_worst] {
            simplex[worst] = reflected;
            values[worst] = f_reflected;
        } else {
            let contracted = if f_reflected < values[worst] {
                point_along(CONTRACTION)
            } else {
                point_along(-CONTRACTION)
            };
            let f_contracted = eval(&contracted, &mut evals);
            if f_contracted < values[worst].min(f_reflected) {
                simplex[worst] = contracted;
                values[worst] = f_contracted;
            } else {
                // Shrink toward the best vertex.
                let best_point = simplex[best].clone();
                for &idx in order.iter().skip(1) {
                    for (xi, bi) in simplex[idx].iter_mut().zip(&best_point) {
                        *xi = bi + SHRINK * (*xi - bi);
                    }
                    values[idx] = eval(&simplex[idx], &mut evals);
                }
            }
        }
    }
}
