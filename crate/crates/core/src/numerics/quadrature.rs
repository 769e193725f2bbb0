//! Adaptive composite Gauss–Legendre quadrature.
//!
//! 15-point panels, bisection of the worst panel by error estimate. The error
//! of a panel is gauged against the sum of its two half-panel evaluations.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::gauss::gauss_legendre;

const PANEL_POINTS: usize = 15;

/// Tolerances and truncation controls for the adaptive quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub relative_tolerance: f64,
    pub absolute_tolerance: f64,
    pub max_subdivisions: usize,
    /// Integration window for semi-infinite integrands, in units of the
    /// integrand's decay scale. At the default 9 the Gaussian tail is below
    /// 1e-35 of the peak.
    pub truncation_radius_in_decay_units: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            relative_tolerance: 1e-12,
            absolute_tolerance: 1e-15,
            max_subdivisions: 4096,
            truncation_radius_in_decay_units: 9.0,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.relative_tolerance > 0.0) || !(self.absolute_tolerance > 0.0) {
            return Err(Error::InvalidDomain(
                "quadrature tolerances must be positive".into(),
            ));
        }
        if !(self.truncation_radius_in_decay_units >= 6.0) {
            return Err(Error::InvalidDomain(
                "truncation radius below 6 decay units loses the tail bound".into(),
            ));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::InvalidDomain("max_subdivisions must be positive".into()));
        }
        Ok(())
    }
}

/// Value plus an a-posteriori error estimate and the evaluation count.
#[derive(Debug, Clone, Copy)]
pub struct IntegrationResult<T> {
    pub value: T,
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Scalar types the quadrature can accumulate: real and complex.
pub trait IntegrandValue: Copy {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    fn scale(self, s: f64) -> Self;
    fn norm(self) -> f64;
}

impl IntegrandValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn norm(self) -> f64 {
        self.abs()
    }
}

impl IntegrandValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn norm(self) -> f64 {
        num_complex::Complex::norm(self)
    }
}

fn panel_rule() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(PANEL_POINTS))
}

fn eval_panel<T: IntegrandValue>(f: &impl Fn(f64) -> T, a: f64, b: f64) -> T {
    let (nodes, weights) = panel_rule();
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut acc = T::zero();
    for (&x, &w) in nodes.iter().zip(weights) {
        acc = acc.add(f(c + h * x).scale(w));
    }
    acc.scale(h)
}

struct Panel<T> {
    a: f64,
    b: f64,
    /// Half-panel values; the panel's refined value is their sum.
    left: T,
    right: T,
    err: f64,
}

impl<T: IntegrandValue> Panel<T> {
    fn new(f: &impl Fn(f64) -> T, a: f64, b: f64, coarse: T) -> Self {
        let m = 0.5 * (a + b);
        let left = eval_panel(f, a, m);
        let right = eval_panel(f, m, b);
        let err = coarse.add(left.add(right).scale(-1.0)).norm();
        Panel { a, b, left, right, err }
    }

    fn value(&self) -> T {
        self.left.add(self.right)
    }

    fn key(&self) -> f64 {
        if self.err.is_nan() {
            f64::INFINITY
        } else {
            self.err
        }
    }
}

impl<T> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl<T> Eq for Panel<T> {}
impl<T: IntegrandValue> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: IntegrandValue> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().partial_cmp(&other.key()).unwrap_or(Ordering::Equal)
    }
}

/// Adaptive integration of `f` over `[a, b]`.
///
/// `max_panel_width` bounds the initial panel size; oscillatory integrands
/// pass half their local oscillation period here.
pub fn integrate_finite_capped<T: IntegrandValue>(
    f: impl Fn(f64) -> T,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
    max_panel_width: Option<f64>,
) -> Result<IntegrationResult<T>> {
    spec.validate()?;
    if !(b > a) {
        return Err(Error::InvalidDomain(format!(
            "integration bounds must satisfy a < b, got [{a}, {b}]"
        )));
    }

    let width = b - a;
    let mut initial = 4usize;
    if let Some(cap) = max_panel_width {
        if cap > 0.0 && cap.is_finite() {
            initial = initial.max((width / cap).ceil() as usize);
        }
    }
    if initial > spec.max_subdivisions {
        return Err(Error::NonConvergence {
            subdivisions: initial,
            error_estimate: f64::INFINITY,
        });
    }

    let mut evaluations = 0usize;
    let eval = |lo: f64, hi: f64, evals: &mut usize| -> T {
        *evals += PANEL_POINTS;
        eval_panel(&f, lo, hi)
    };

    let mut heap: BinaryHeap<Panel<T>> = BinaryHeap::new();
    // Panels whose midpoint is not representable; kept out of the refinement loop.
    let mut frozen_value = T::zero();
    let mut frozen_err = 0.0;

    for i in 0..initial {
        let lo = a + width * i as f64 / initial as f64;
        let hi = a + width * (i + 1) as f64 / initial as f64;
        let coarse = eval(lo, hi, &mut evaluations);
        evaluations += 2 * PANEL_POINTS;
        heap.push(Panel::new(&f, lo, hi, coarse));
    }

    let mut subdivisions = initial;
    loop {
        let mut total = frozen_value;
        let mut total_err = frozen_err;
        for p in heap.iter() {
            total = total.add(p.value());
            total_err += p.key();
        }
        let tol = spec
            .absolute_tolerance
            .max(spec.relative_tolerance * total.norm());
        if total_err <= tol || heap.is_empty() {
            return Ok(IntegrationResult {
                value: total,
                error_estimate: total_err,
                evaluations,
            });
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(Error::NonConvergence {
                subdivisions,
                error_estimate: total_err,
            });
        }

        let worst = heap.pop().expect("heap checked non-empty");
        let m = 0.5 * (worst.a + worst.b);
        if m <= worst.a || m >= worst.b {
            frozen_value = frozen_value.add(worst.value());
            frozen_err += worst.key();
            continue;
        }
        evaluations += 4 * PANEL_POINTS;
        heap.push(Panel::new(&f, worst.a, m, worst.left));
        heap.push(Panel::new(&f, m, worst.b, worst.right));
        subdivisions += 1;
    }
}

/// Adaptive integration of `f` over `[a, b]` with default panel seeding.
pub fn integrate_finite<T: IntegrandValue>(
    f: impl Fn(f64) -> T,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<IntegrationResult<T>> {
    integrate_finite_capped(f, a, b, spec, None)
}

/// Integration of `f` over `[0, inf)` for integrands dominated by a Gaussian
/// tail with the given decay scale. The domain is truncated at
/// `truncation_radius_in_decay_units * decay_scale`.
pub fn integrate_semi_infinite<T: IntegrandValue>(
    f: impl Fn(f64) -> T,
    decay_scale: f64,
    spec: &QuadratureSpec,
) -> Result<IntegrationResult<T>> {
    if !(decay_scale > 0.0) || !decay_scale.is_finite() {
        return Err(Error::InvalidDomain(format!(
            "decay scale must be positive and finite, got {decay_scale}"
        )));
    }
    integrate_finite(f, 0.0, spec.truncation_radius_in_decay_units * decay_scale, spec)
}
