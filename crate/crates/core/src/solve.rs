//! Scalar bracketing, Brent root refinement, and golden-section maximization.

use crate::error::{Error, Result};

const MAX_BRACKET_DOUBLINGS: usize = 80;
const MAX_BRENT_ITERATIONS: usize = 200;
pub(crate) const ROOT_TOLERANCE: f64 = 1e-12;

/// Walk intervals `[start 2^k, start 2^(k+1)]` until f changes sign.
pub(crate) fn bracket_sign_change<F: FnMut(f64) -> f64>(
    mut f: F,
    start: f64,
) -> Result<(f64, f64)> {
    let mut lo = start;
    let mut f_lo = f(lo);
    if f_lo == 0.0 {
        return Ok((lo, lo));
    }
    let mut hi = 2.0 * lo;
    for _ in 0..MAX_BRACKET_DOUBLINGS {
        let f_hi = f(hi);
        if f_hi == 0.0 || (f_lo < 0.0) != (f_hi < 0.0) {
            return Ok((lo, hi));
        }
        lo = hi;
        f_lo = f_hi;
        hi *= 2.0;
    }
    Err(Error::BracketingFailed {
        lo,
        hi,
        f_lo,
        f_hi: f(hi),
    })
}

/// Brent's method on a sign-changing interval, to absolute tolerance
/// [`ROOT_TOLERANCE`] in the abscissa.
pub(crate) fn brent_root<F: FnMut(f64) -> f64>(mut f: F, lo: f64, hi: f64) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    assert!(
        (fa < 0.0) != (fb < 0.0),
        "brent_root requires a sign change, got f({a}) = {fa}, f({b}) = {fb}"
    );
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = b - a;
    for _ in 0..MAX_BRENT_ITERATIONS {
        if (fb > 0.0) == (fc > 0.0) {
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
        let tol = 2.0 * f64::EPSILON * b.abs() + 0.5 * ROOT_TOLERANCE;
        let half = 0.5 * (c - b);
        if half.abs() <= tol || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            // Inverse quadratic or secant step.
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * half * s, 1.0 - s)
            } else {
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * half * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * half * q - (tol * q).abs()).min(e * q / 2.0).abs()
                && 2.0 * p < (3.0 * half * q).abs() - (tol * q).abs()
            {
                e = d;
                d = p / q;
            } else {
                d = half;
                e = d;
            }
        } else {
            d = half;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol {
            d
        } else if half > 0.0 {
            tol
        } else {
            -tol
        };
        fb = f(b);
    }
    Err(Error::RootIterationsExceeded(MAX_BRENT_ITERATIONS))
}

/// Golden-section maximization of a unimodal function on `[lo, hi]`.
pub(crate) fn golden_max<F: FnMut(f64) -> f64>(
    mut f: F,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}
