//! One-dimensional root finding: coarse bracket scan plus Brent refinement.
//!
//! All carbon price regimes reduce to a scalar defect function of the
//! uniform price (or are polished through one), so this is the workhorse
//! behind the exact solvers. Defect functions may return NaN on infeasible
//! price points (e.g. consumption driven nonpositive); the scanner treats
//! those as holes and brackets only across feasible segments.

#[derive(Debug, Clone, PartialEq)]
pub enum RootError {
    /// No sign change was found over the scanned interval.
    NoBracket,
    /// The iteration budget ran out before the tolerance was met.
    MaxIterations { best_x: f64, residual: f64 },
}

pub struct Bracket {
    pub a: f64,
    pub b: f64,
    pub fa: f64,
    pub fb: f64,
}

/// Scans `[lo, hi]` on `n` equal segments and returns the first sign-change
/// bracket. An exact zero short-circuits into a degenerate bracket.
pub fn scan_bracket(mut f: impl FnMut(f64) -> f64, lo: f64, hi: f64, n: usize) -> Option<Bracket> {
    assert!(n >= 1 && hi > lo);
    let mut prev: Option<(f64, f64)> = None;
    for i in 0..=n {
        let x = lo + (hi - lo) * i as f64 / n as f64;
        let fx = f(x);
        if !fx.is_finite() {
            prev = None;
            continue;
        }
        if fx == 0.0 {
            return Some(Bracket {
                a: x,
                b: x,
                fa: 0.0,
                fb: 0.0,
            });
        }
        if let Some((px, pfx)) = prev {
            if pfx.signum() != fx.signum() {
                return Some(Bracket {
                    a: px,
                    b: x,
                    fa: pfx,
                    fb: fx,
                });
            }
        }
        prev = Some((x, fx));
    }
    None
}

/// Brent's method on a sign-change bracket. Returns `(root, residual,
/// iterations)`; converges when the interval shrinks below `xtol` (plus a
/// relative term at machine precision) or the defect hits zero.
pub fn brent(
    mut f: impl FnMut(f64) -> f64,
    bracket: Bracket,
    xtol: f64,
    max_iter: usize,
) -> Result<(f64, f64, usize), RootError> {
    let Bracket {
        mut a,
        mut b,
        fa,
        fb,
    } = bracket;
    if fa == 0.0 {
        return Ok((a, 0.0, 0));
    }
    if fb == 0.0 {
        return Ok((b, 0.0, 0));
    }
    assert!(fa.signum() != fb.signum(), "brent requires a sign change");

    let (mut fa, mut fb) = (fa, fb);
    let mut c = a;
    let mut fc = fa;
    let (mut d, mut e) = (b - a, b - a);

    for iter in 1..=max_iter {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * xtol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok((b, fb.abs(), iter));
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // Inverse quadratic interpolation, falling back to secant.
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qq = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if d.abs() > tol1 {
            b += d;
        } else {
            b += tol1.copysign(xm);
        }
        fb = f(b);
        if !fb.is_finite() {
            // Robustness hatch: bisect back toward the feasible end.
            b = 0.5 * (a + c);
            fb = f(b);
            if !fb.is_finite() {
                return Err(RootError::MaxIterations {
                    best_x: a,
                    residual: fa.abs(),
                });
            }
        }
    }
    Err(RootError::MaxIterations {
        best_x: b,
        residual: fb.abs(),
    })
}

/// Convenience: scan then refine.
pub fn solve_scalar(
    mut f: impl FnMut(f64) -> f64,
    lo: f64,
    hi: f64,
    scan_points: usize,
    xtol: f64,
) -> Result<(f64, f64, usize), RootError> {
    let bracket = scan_bracket(&mut f, lo, hi, scan_points).ok_or(RootError::NoBracket)?;
    brent(f, bracket, xtol, 200)
}
