//! Bracketed root finding for monotone increasing scalar functions.
//!
//! Illinois-modified false position with a bisection fallback, plus geometric
//! growth of the upper end of the bracket.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootSettings {
    /// Absolute tolerance on `|f(x)|`.
    pub f_tol: f64,
    pub max_iterations: usize,
    /// Number of doublings allowed while searching for a sign change.
    pub max_expansions: usize,
}

impl Default for RootSettings {
    fn default() -> Self {
        RootSettings {
            f_tol: 0.0,
            max_iterations: 200,
            max_expansions: 200,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub x: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Finds `hi = lo + step * 2^k` with `f(hi) >= 0`, given `f(lo) <= 0`.
pub fn grow_bracket<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    step: f64,
    max_expansions: usize,
) -> Result<(f64, f64)> {
    let mut width = step;
    let mut a = lo;
    for _ in 0..=max_expansions {
        let hi = lo + width;
        let fh = f(hi);
        if fh.is_nan() {
            break;
        }
        if fh >= 0.0 {
            return Ok((a, hi));
        }
        a = hi;
        width *= 2.0;
    }
    Err(Error::Solver {
        lo: a,
        hi: lo + width,
        iterations: max_expansions,
    })
}

/// Root of an increasing `f` on `[lo, hi]` with `f(lo) <= 0 <= f(hi)`.
pub fn solve_bracketed<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    settings: &RootSettings,
) -> Result<Root> {
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa.abs() <= settings.f_tol {
        return Ok(Root {
            x: a,
            residual: fa,
            iterations: 0,
        });
    }
    if fb.abs() <= settings.f_tol {
        return Ok(Root {
            x: b,
            residual: fb,
            iterations: 0,
        });
    }
    if !(fa < 0.0 && fb > 0.0) {
        return Err(Error::Solver {
            lo,
            hi,
            iterations: 0,
        });
    }

    // +1 when the last update moved `b`, -1 when it moved `a`.
    let mut side = 0i8;
    for iteration in 1..=settings.max_iterations {
        let mut x = b - fb * (b - a) / (fb - fa);
        if !(x > a && x < b) {
            x = 0.5 * (a + b);
        }
        let fx = f(x);
        if fx.abs() <= settings.f_tol {
            return Ok(Root {
                x,
                residual: fx,
                iterations: iteration,
            });
        }
        if fx < 0.0 {
            a = x;
            fa = fx;
            if side == -1 {
                fb *= 0.5;
            }
            side = -1;
        } else {
            b = x;
            fb = fx;
            if side == 1 {
                fa *= 0.5;
            }
            side = 1;
        }
        if b - a <= 4.0 * f64::EPSILON * a.abs().max(b.abs()) {
            // bracket exhausted; accept the better end if it meets tolerance
            let (x, r) = if f(a).abs() <= f(b).abs() {
                (a, f(a))
            } else {
                (b, f(b))
            };
            if r.abs() <= settings.f_tol {
                return Ok(Root {
                    x,
                    residual: r,
                    iterations: iteration,
                });
            }
            return Err(Error::Solver {
                lo: a,
                hi: b,
                iterations: iteration,
            });
        }
    }
    Err(Error::Solver {
        lo: a,
        hi: b,
        iterations: settings.max_iterations,
    })
}
