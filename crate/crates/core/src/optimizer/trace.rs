//! Optional per-evaluation trace: wrap an objective so every call appends
//! one delimiter-separated row (evaluation index, coordinates, value,
//! constraint violation), ready for convergence plots.
//!
//! Rows are appended in evaluation order of the run that produced them;
//! with concurrent restarts the interleaving follows the schedule, so pin
//! `restarts: 1` (or build without the `parallel` feature) when a strictly
//! reproducible log matters more than wall-clock time.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

/// Equality-constraint system shape shared with the augmented Lagrangian.
pub type EqualitySystem<'a> = &'a (dyn Fn(&[f64]) -> Vec<f64> + Sync);

pub struct EvalTrace {
    rows: Mutex<String>,
    count: AtomicUsize,
}

impl EvalTrace {
    pub fn new(dim: usize) -> Self {
        let mut header = String::from("eval,f,violation");
        for d in 0..dim {
            header.push_str(&format!(",x{d}"));
        }
        header.push('\n');
        Self {
            rows: Mutex::new(header),
            count: AtomicUsize::new(0),
        }
    }

    /// Wraps an objective (and, for constrained runs, the equality system)
    /// so that evaluations are logged as a side effect.
    pub fn wrap<'a>(
        &'a self,
        objective: &'a (dyn Fn(&[f64]) -> f64 + Sync),
        equalities: Option<EqualitySystem<'a>>,
    ) -> impl Fn(&[f64]) -> f64 + Sync + 'a {
        move |x: &[f64]| {
            let f = objective(x);
            let violation = equalities
                .map(|h| h(x).iter().fold(0.0_f64, |m, v| m.max(v.abs())))
                .unwrap_or(0.0);
            let index = self.count.fetch_add(1, Ordering::Relaxed);
            let mut row = format!("{index},{f:.12e},{violation:.6e}");
            for v in x {
                row.push_str(&format!(",{v:.12e}"));
            }
            row.push('\n');
            self.rows.lock().expect("trace lock").push_str(&row);
            f
        }
    }

    pub fn evaluations(&self) -> usize {
        self.count.load(Ordering::Relaxed)
    }

    /// The accumulated log as delimiter-separated text.
    pub fn into_csv(self) -> String {
        self.rows.into_inner().expect("trace lock")
    }
}
