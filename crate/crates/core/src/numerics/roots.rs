//! Bracketed root finding and unimodal maximization.

use crate::error::{Error, Result};

/// Root of `f` on `[lo, hi]` given a sign change, located to bracket width
/// `tol`.
///
/// Brent's method: inverse quadratic / secant steps with a bisection fallback,
/// so convergence is guaranteed for any continuous `f`.
pub fn find_root_bracketed(
    f: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<f64> {
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa * fb >= 0.0 || fa.is_nan() || fb.is_nan() {
        return Err(Error::NoSignChange { lo, hi, flo: fa, fhi: fb });
    }

    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    let tol = tol.abs().max(0.0);

    for _ in 0..200 {
        if fb.abs() > fc.abs() {
            // b must carry the smallest residual; c the previous iterate
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                // secant
                (2.0 * xm * s, 1.0 - s)
            } else {
                // inverse quadratic interpolation
                let q = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0)),
                    (q - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * xm * q - (tol1 * q).abs()).min((e * q).abs()) {
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
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
        if (fb > 0.0) == (fc > 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
    }
    Ok(b)
}

const INV_GOLDEN: f64 = 0.618_033_988_749_894_9; // (sqrt(5) - 1) / 2

/// Golden-section maximization of a unimodal `f` on `[lo, hi]`.
///
/// Unimodality is the caller's responsibility; on a non-unimodal function the
/// result is some local maximum. Returns `(argmax, max)` with the final
/// bracket narrower than `tol`.
pub fn maximize_unimodal(
    f: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    tol: f64,
) -> (f64, f64) {
    let mut a = lo.min(hi);
    let mut b = lo.max(hi);
    let mut x1 = b - INV_GOLDEN * (b - a);
    let mut x2 = a + INV_GOLDEN * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while b - a > tol {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_GOLDEN * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_GOLDEN * (b - a);
            f1 = f(x1);
        }
        if x2 <= x1 {
            break; // interval no longer representable
        }
    }
    let xm = 0.5 * (a + b);
    let fm = f(xm);
    if fm >= f1 && fm >= f2 {
        (xm, fm)
    } else if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two() {
        let r = find_root_bracketed(|x| x * x - 2.0, 1.0, 2.0, 1e-12).unwrap();
        assert!((r - 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn linear_through_origin() {
        let r = find_root_bracketed(|x| x, -1.0, 1.0, 1e-10).unwrap();
        assert!(r.abs() < 1e-10);
    }

    #[test]
    fn rejects_same_sign_bracket() {
        assert!(matches!(
            find_root_bracketed(|x| x * x + 1.0, -1.0, 1.0, 1e-10),
            Err(Error::NoSignChange { .. })
        ));
    }

    #[test]
    fn returned_point_straddles_sign_change() {
        let f = |x: f64| (x - 0.737).tanh();
        let r = find_root_bracketed(f, 0.0, 2.0, 1e-13).unwrap();
        let h = 1e-12;
        assert!(f(r - h) * f(r + h) <= 0.0 || f(r).abs() < 1e-12);
    }

    #[test]
    fn golden_section_parabola() {
        let (x, v) = maximize_unimodal(|x| -(x - 0.3) * (x - 0.3), 0.0, 1.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-10);
        assert!(v.abs() < 1e-18);
    }

    #[test]
    fn golden_section_endpoint_maximum() {
        let (x, _) = maximize_unimodal(|x| x, 0.0, 1.0, 1e-12);
        assert!((x - 1.0).abs() < 1e-9);
    }
}
