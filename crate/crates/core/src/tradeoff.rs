//! Tradeoff indicator omega, its limits and monotonicity certificate, the
//! threshold lambda*, and the geometry of the combined SLD / lambda-LD
//! Cramér–Rao bounds on the (V11, V22) plane.
//!
//! A positive omega certifies that no measurement attains both
//! single-parameter optima; its magnitude is the V22 gap between the bound
//! intersection and the SLD corner.

use crate::error::{Error, Result};
use crate::fisher::{fim_lambda_inverse_scaled, HermitianMatrix2};
use crate::model::{ModelParams, ScalarFunctions};
use crate::numerics::roots::find_root_bracketed;

/// Diagonal of an MSE matrix; the plane the CR bounds live on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MsePoint {
    pub v11: f64,
    pub v22: f64,
}

impl MsePoint {
    pub fn new(v11: f64, v22: f64) -> Result<Self> {
        if !(v11 > 0.0 && v22 > 0.0) {
            return Err(Error::InvalidDomain(format!(
                "MSE diagonal must be positive, got ({v11}, {v22})"
            )));
        }
        Ok(MsePoint { v11, v22 })
    }
}

/// Classification of an MSE point against the two CR bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionVerdict {
    /// Satisfies both inequalities (the attainable corner region).
    AllowedByBoth,
    /// Violates one of the componentwise SLD bounds.
    ExcludedBySld,
    /// SLD-allowed but inside the lambda-LD hyperbola.
    ExcludedByLambdaOnly,
}

/// Intersections of the lambda-LD hyperbola with the SLD boundary lines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundIntersections {
    /// The two intersection points A (on V11 = J_S^-1_11) and A' (on
    /// V22 = J_S^-1_22).
    Points { a: MsePoint, a_prime: MsePoint },
    /// omega < 0: the hyperbola lies inside the SLD region.
    NoIntersection,
}

/// Quantities certifying that omega decreases strictly in lambda:
/// the quartic coefficients of -d(omega)/d(lambda)'s numerator and its
/// discriminant, which the closed form proves negative.
#[derive(Debug, Clone, Copy)]
pub struct MonotonicityCertificate {
    pub monotone: bool,
    /// b^2 - 4ac computed from the coefficients.
    pub discriminant: f64,
    /// The closed-form discriminant -4 zeta^2 xi^6 (1-zeta^2)^3 (Theta^2-1).
    pub closed_form_discriminant: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Everything the tradeoff analysis reports at one (lambda, kappa, V) point.
#[derive(Debug, Clone, Copy)]
pub struct TradeoffReport {
    pub lambda: f64,
    pub omega: f64,
    pub omega_prime: f64,
    pub omega_limit0: f64,
    pub omega_limit1: f64,
    pub lambda_star: f64,
    pub monotone_decreasing: bool,
    pub discriminant: f64,
}

/// zeta, xi and the kappa^2 unit evaluated once per parameter point; all
/// lambda sweeps run on top of this.
#[derive(Debug, Clone, Copy)]
pub struct TradeoffContext {
    sf: ScalarFunctions,
    kappa2: f64,
    velocity: f64,
}

impl TradeoffContext {
    pub fn new(params: &ModelParams) -> Result<Self> {
        Ok(TradeoffContext {
            sf: ScalarFunctions::compute(params)?,
            kappa2: params.spread() * params.spread(),
            velocity: params.velocity(),
        })
    }

    pub fn scalar_functions(&self) -> ScalarFunctions {
        self.sf
    }

    fn a(&self) -> f64 {
        1.0 - self.sf.zeta * self.sf.zeta
    }

    /// omega(lambda) in units of length^2. lambda in [0, 1]; negative lambda
    /// folds onto |lambda| by the evenness of the indicator. The endpoints
    /// dispatch to the closed-form limits (the generic quotient is 0/0 at
    /// lambda = 0 in the rest frame).
    pub fn omega(&self, lambda: f64) -> Result<f64> {
        let l = lambda.abs();
        if l > 1.0 {
            return Err(Error::LambdaOutOfRange(lambda));
        }
        if l == 0.0 {
            return Ok(self.omega_limit0());
        }
        if l == 1.0 {
            return Ok(self.omega_limit1());
        }
        let z2 = self.sf.zeta * self.sf.zeta;
        let x2 = self.sf.xi * self.sf.xi;
        let a = self.a();
        let l2 = l * l;
        let shifted = l2 * a + z2;
        let num = l2 * a * a - x2 * shifted * shifted;
        let den = x2 * shifted - a * a;
        if den >= -1e-14 {
            return Err(Error::DegenerateDenominator(den));
        }
        Ok(self.kappa2 / (2.0 * a) * num / den)
    }

    /// lambda -> 0 limit of omega; positive for V in (0, 1].
    ///
    /// Two algebraically equal closed forms are evaluated; their agreement is
    /// exposed through `omega_limit0_cross_check`.
    pub fn omega_limit0(&self) -> f64 {
        self.omega_limit0_forms().0
    }

    /// (Theta form, ratio form) of the lambda -> 0 limit.
    pub fn omega_limit0_forms(&self) -> (f64, f64) {
        let z2 = self.sf.zeta * self.sf.zeta;
        let x = self.sf.xi;
        let a = self.a();
        let theta = a / x;
        let theta_form = self.kappa2 * z2 * z2 / (2.0 * x * theta * (theta * theta - z2));
        let ratio_form = self.kappa2 / (2.0 * a) * x * x * z2 * z2 / (a * a - x * x * z2);
        (theta_form, ratio_form)
    }

    /// |difference| of the two closed forms of the lambda -> 0 limit,
    /// relative to the kappa^2 scale.
    pub fn omega_limit0_cross_check(&self) -> f64 {
        let (t, r) = self.omega_limit0_forms();
        (t - r).abs() / self.kappa2
    }

    /// lambda -> 1 limit: -kappa^2 / (2 (1 - zeta^2)), always negative.
    pub fn omega_limit1(&self) -> f64 {
        -self.kappa2 / (2.0 * self.a())
    }

    /// Unique zero of omega on (0, 1):
    /// `(1/(2 xi)) (1 - sqrt(1 - 4 xi^2 zeta^2 / (1 - zeta^2)))`,
    /// the smaller quadratic root (the larger one leaves (0,1) as xi -> 0).
    pub fn lambda_star(&self) -> Result<f64> {
        let z2 = self.sf.zeta * self.sf.zeta;
        let x = self.sf.xi;
        let radicand = 1.0 - 4.0 * x * x * z2 / (1.0 - z2);
        if radicand < 0.0 {
            return Err(Error::RadicandNegative(radicand));
        }
        Ok((1.0 - radicand.sqrt()) / (2.0 * x))
    }

    /// Independent verification of the closed form: bracketed root of
    /// omega(lambda) = 0.
    ///
    /// The bracket starts at [1e-9, 1 - 1e-9]; when lambda* sits below the
    /// lower end (slow observers push it toward zero quadratically) the lower
    /// end is shrunk geometrically until the sign change is captured.
    pub fn lambda_star_bisect(&self) -> Result<f64> {
        let f = |l: f64| self.omega(l).unwrap_or(f64::NAN);
        let hi = 1.0 - 1e-9;
        let mut lo = 1e-9;
        let f_hi = f(hi);
        let mut f_lo = f(lo);
        while f_lo <= 0.0 && lo > 1e-300 {
            lo *= 1e-3;
            f_lo = f(lo);
        }
        if !(f_lo > 0.0 && f_hi < 0.0) {
            return Err(Error::NoSignChange { lo, hi, flo: f_lo, fhi: f_hi });
        }
        find_root_bracketed(f, lo, hi, 1e-12)
    }

    /// Coefficients of the quartic controlling d(omega)/d(lambda), its
    /// discriminant, the closed-form discriminant, and a strict-decrease scan
    /// of omega over `samples` lambda values spanning [0, 1].
    pub fn monotonicity_certificate(&self, samples: usize) -> MonotonicityCertificate {
        let z2 = self.sf.zeta * self.sf.zeta;
        let x = self.sf.xi;
        let x2 = x * x;
        let a_big = self.a();

        let a = x2 * x2 * a_big * a_big;
        let b = -2.0 * x2 * a_big * (a_big * a_big - x2 * z2);
        let c = 1.0 - 3.0 * z2 * (x2 + 1.0) + z2 * z2 * (x2 * x2 + 5.0 * x2 + 3.0)
            - z2 * z2 * z2 * (2.0 * x2 + 1.0);
        let discriminant = b * b - 4.0 * a * c;
        let theta = a_big / x;
        let closed = -4.0 * z2 * x2 * x2 * x2 * a_big.powi(3) * (theta * theta - 1.0);

        let n = samples.max(2);
        let mut monotone = true;
        let mut prev = f64::INFINITY;
        for k in 0..n {
            let l = k as f64 / (n - 1) as f64;
            let w = match self.omega(l) {
                Ok(w) => w,
                Err(_) => {
                    monotone = false;
                    break;
                }
            };
            if w >= prev {
                monotone = false;
                break;
            }
            prev = w;
        }

        MonotonicityCertificate {
            monotone,
            discriminant,
            closed_form_discriminant: closed,
            a,
            b,
            c,
        }
    }

    /// Physical inverse lambda-LD matrix at this parameter point.
    pub fn fim_lambda_inverse(&self, lambda: f64) -> Result<HermitianMatrix2> {
        if lambda.abs() > 1.0 {
            return Err(Error::LambdaOutOfRange(lambda));
        }
        if lambda.abs() == 1.0 {
            return Ok(HermitianMatrix2::zero());
        }
        Ok(fim_lambda_inverse_scaled(lambda, &self.sf).scale(self.kappa2 / 2.0))
    }

    /// Physical SLD inverse at this parameter point.
    pub fn sld_inverse(&self) -> HermitianMatrix2 {
        HermitianMatrix2::scaled_identity(self.kappa2 / (2.0 * self.a()))
    }

    /// Classifies an MSE point against the SLD box and the lambda-LD
    /// hyperbola; boundary points count as allowed.
    pub fn region_check(&self, point: &MsePoint, lambda: f64) -> Result<RegionVerdict> {
        if !(lambda > 0.0 && lambda < 1.0) {
            return Err(Error::LambdaOutOfRange(lambda));
        }
        let js = self.sld_inverse();
        let jl = self.fim_lambda_inverse(lambda)?;
        if point.v11 < js.a11 || point.v22 < js.a22 {
            return Ok(RegionVerdict::ExcludedBySld);
        }
        let im2 = jl.a12.im * jl.a12.im;
        if (point.v11 - jl.a11) * (point.v22 - jl.a22) < im2 {
            return Ok(RegionVerdict::ExcludedByLambdaOnly);
        }
        Ok(RegionVerdict::AllowedByBoth)
    }

    /// Intersections of the lambda-LD boundary hyperbola with the two SLD
    /// boundary lines; `NoIntersection` exactly when omega < 0.
    pub fn bound_intersections(&self, lambda: f64) -> Result<BoundIntersections> {
        if !(lambda > 0.0 && lambda < 1.0) {
            return Err(Error::LambdaOutOfRange(lambda));
        }
        let js = self.sld_inverse();
        let jl = self.fim_lambda_inverse(lambda)?;
        let (omega, _) = omega_from_fims(&js, &jl)?;
        if omega < 0.0 {
            return Ok(BoundIntersections::NoIntersection);
        }
        let im2 = jl.a12.im * jl.a12.im;
        let a = MsePoint { v11: js.a11, v22: im2 / (js.a11 - jl.a11) + jl.a22 };
        let a_prime = MsePoint { v11: im2 / (js.a22 - jl.a22) + jl.a11, v22: js.a22 };
        Ok(BoundIntersections::Points { a, a_prime })
    }

    /// Full report at one lambda.
    pub fn report(&self, lambda: f64) -> Result<TradeoffReport> {
        let l = lambda.abs();
        let (omega, omega_prime) = if l == 0.0 || l == 1.0 {
            let w = self.omega(l)?;
            (w, w)
        } else {
            let js = self.sld_inverse();
            let jl = self.fim_lambda_inverse(l)?;
            omega_from_fims(&js, &jl)?
        };
        let cert = self.monotonicity_certificate(100);
        Ok(TradeoffReport {
            lambda,
            omega,
            omega_prime,
            omega_limit0: self.omega_limit0(),
            omega_limit1: self.omega_limit1(),
            lambda_star: self.lambda_star()?,
            monotone_decreasing: cert.monotone && self.velocity > 0.0,
            discriminant: cert.discriminant,
        })
    }
}

/// The indicator pair (omega, omega') from the two inverse Fisher matrices:
/// shared numerator `|Im J_l^-1_12|^2 - (D11)(D22)`, divided by the V11 or
/// V22 diagonal gap respectively. Zero of one is zero of the other.
pub fn omega_from_fims(
    js_inv: &HermitianMatrix2,
    jl_inv: &HermitianMatrix2,
) -> Result<(f64, f64)> {
    let d1 = js_inv.a11 - jl_inv.a11;
    let d2 = js_inv.a22 - jl_inv.a22;
    let scale = js_inv.frobenius_norm().max(f64::MIN_POSITIVE);
    if d1 <= 1e-15 * scale {
        return Err(Error::ZeroDenominator(1));
    }
    if d2 <= 1e-15 * scale {
        return Err(Error::ZeroDenominator(2));
    }
    let num = jl_inv.a12.im * jl_inv.a12.im - d1 * d2;
    Ok((num / d1, num / d2))
}

/// omega at (lambda, kappa, V); see [`TradeoffContext::omega`].
pub fn omega(lambda: f64, params: &ModelParams) -> Result<f64> {
    TradeoffContext::new(params)?.omega(lambda)
}

pub fn omega_limit0(params: &ModelParams) -> Result<f64> {
    Ok(TradeoffContext::new(params)?.omega_limit0())
}

pub fn omega_limit1(params: &ModelParams) -> Result<f64> {
    Ok(TradeoffContext::new(params)?.omega_limit1())
}

pub fn lambda_star(params: &ModelParams) -> Result<f64> {
    TradeoffContext::new(params)?.lambda_star()
}

pub fn lambda_star_bisect(params: &ModelParams) -> Result<f64> {
    TradeoffContext::new(params)?.lambda_star_bisect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(kp: f64, v: f64) -> TradeoffContext {
        TradeoffContext::new(&ModelParams::dimensionless(kp, v).unwrap()).unwrap()
    }

    #[test]
    fn rest_frame_parabola() {
        let c = ctx(1.0, 0.0);
        for &l in &[0.1, 0.5, 0.9] {
            let w = c.omega(l).unwrap();
            assert!((w + l * l / 2.0).abs() < 1e-12, "lambda = {l}");
        }
        assert_eq!(c.omega_limit0(), 0.0);
    }

    #[test]
    fn omega_even_in_lambda() {
        let c = ctx(1.0, 0.8);
        assert_eq!(c.omega(0.4).unwrap(), c.omega(-0.4).unwrap());
    }

    #[test]
    fn limit_values_and_signs() {
        let c = ctx(1.0, 1.0);
        assert!(c.omega_limit0() > 0.0);
        assert!(c.omega_limit1() < 0.0);
        // omega at lambda -> 0+ approaches the closed-form limit
        let w = c.omega(1e-6).unwrap();
        assert!((w - c.omega_limit0()).abs() < 1e-9);
        // omega(1) equals the limit
        assert_eq!(c.omega(1.0).unwrap(), c.omega_limit1());
        assert!(c.omega_limit0_cross_check() < 1e-12);
    }

    #[test]
    fn omega_matches_fim_composition() {
        for &(kp, v, l) in &[(1.0, 1.0, 0.3), (0.5, 0.7, 0.6), (2.0, 0.9, 0.15)] {
            let c = ctx(kp, v);
            let closed = c.omega(l).unwrap();
            let (w, wp) = omega_from_fims(&c.sld_inverse(), &c.fim_lambda_inverse(l).unwrap()).unwrap();
            assert!((closed - w).abs() < 1e-10 * (1.0 + closed.abs()));
            assert!((w - wp).abs() < 1e-12 * (1.0 + w.abs()), "symmetric model: omega = omega'");
        }
    }

    #[test]
    fn fims_without_imaginary_part_witness_nothing() {
        let js = HermitianMatrix2::scaled_identity(1.0);
        let eps = 0.01;
        let jl = HermitianMatrix2::scaled_identity(1.0 - eps);
        let (w, wp) = omega_from_fims(&js, &jl).unwrap();
        assert!((w + eps).abs() < 1e-15);
        assert!((wp + eps).abs() < 1e-15);
    }

    #[test]
    fn zero_denominator_detected() {
        let js = HermitianMatrix2::scaled_identity(1.0);
        assert!(matches!(
            omega_from_fims(&js, &js),
            Err(Error::ZeroDenominator(_))
        ));
    }

    #[test]
    fn lambda_star_closed_vs_bisect() {
        for &(kp, v) in &[(1.0, 1.0), (0.5, 0.3), (2.0, 0.9), (0.1, 0.6)] {
            let c = ctx(kp, v);
            let ls = c.lambda_star().unwrap();
            let lb = c.lambda_star_bisect().unwrap();
            assert!(ls > 0.0 && ls < 1.0);
            assert!((ls - lb).abs() < 1e-9, "kp={kp} v={v}: {ls} vs {lb}");
            assert!(c.omega(ls).unwrap().abs() < 1e-9 * kp * kp);
        }
    }

    #[test]
    fn lambda_star_slow_observer() {
        // lambda* sits below the default bracket here; the bisect shrinks it.
        let c = ctx(1.0, 1e-4);
        let ls = c.lambda_star().unwrap();
        let lb = c.lambda_star_bisect().unwrap();
        assert!(ls < 1e-3 && lb < 1e-3);
        assert!((ls - lb).abs() < 1e-9);
    }

    #[test]
    fn lambda_star_small_spread_taylor() {
        let c = ctx(0.01, 1.0);
        let ls = c.lambda_star().unwrap();
        let sf = c.scalar_functions();
        let taylor = sf.zeta * sf.zeta * sf.xi / (1.0 - sf.zeta * sf.zeta);
        assert!((ls - taylor).abs() / ls < 0.05);
        // Eq-28-style drop at tiny spread
        let tiny = ctx(1e-3, 1.0);
        assert!(tiny.lambda_star().unwrap() < 1e-2);
    }

    #[test]
    fn monotonicity_certificate_closed_form() {
        for &(kp, v) in &[(1.0, 1.0), (0.1, 0.2), (3.0, 0.7)] {
            let c = ctx(kp, v);
            let cert = c.monotonicity_certificate(100);
            assert!(cert.monotone, "kp={kp} v={v}");
            assert!(cert.a > 0.0);
            assert!(cert.discriminant < 0.0);
            let rel = (cert.discriminant - cert.closed_form_discriminant).abs()
                / cert.closed_form_discriminant.abs();
            assert!(rel < 1e-9, "kp={kp} v={v}: rel {rel}");
        }
    }

    #[test]
    fn region_classification() {
        let c = ctx(1.0, 1.0);
        let ls = c.lambda_star().unwrap();
        let l = 0.5 * ls; // below the threshold: omega > 0
        let js = c.sld_inverse();
        let w = c.omega(l).unwrap();
        assert!(w > 0.0);
        // the SLD corner violates the lambda-LD bound below lambda*
        let corner = MsePoint { v11: js.a11, v22: js.a22 };
        assert_eq!(
            c.region_check(&corner, l).unwrap(),
            RegionVerdict::ExcludedByLambdaOnly
        );
        // below the SLD line
        let below = MsePoint { v11: 0.9 * js.a11, v22: js.a22 };
        assert_eq!(c.region_check(&below, l).unwrap(), RegionVerdict::ExcludedBySld);
        // lifting V22 past omega clears both bounds
        let above = MsePoint { v11: js.a11, v22: js.a22 + w + 1e-9 };
        assert_eq!(c.region_check(&above, l).unwrap(), RegionVerdict::AllowedByBoth);
    }

    #[test]
    fn intersections_track_omega_sign() {
        let c = ctx(1.0, 1.0);
        let ls = c.lambda_star().unwrap();
        let js = c.sld_inverse();

        match c.bound_intersections(0.5 * ls).unwrap() {
            BoundIntersections::Points { a, a_prime } => {
                let w = c.omega(0.5 * ls).unwrap();
                assert!((a.v22 - js.a22 - w).abs() < 1e-10);
                assert!((a_prime.v11 - js.a11 - w).abs() < 1e-10);
                // the intersection point sits on both boundaries
                let jl = c.fim_lambda_inverse(0.5 * ls).unwrap();
                let lhs = (a.v11 - jl.a11) * (a.v22 - jl.a22);
                let rhs = jl.a12.im * jl.a12.im;
                assert!((lhs - rhs).abs() < 1e-8 * rhs.max(1e-30));
                assert!((a.v11 - js.a11).abs() < 1e-12);
            }
            BoundIntersections::NoIntersection => panic!("expected intersections"),
        }

        assert_eq!(
            c.bound_intersections(2.0 * ls.min(0.49)).unwrap(),
            BoundIntersections::NoIntersection
        );

        // continuity at the root
        for &l in &[ls - 1e-9, ls + 1e-9] {
            match c.bound_intersections(l).unwrap() {
                BoundIntersections::Points { a, .. } => {
                    assert!((a.v22 - js.a22).abs() < 1e-7);
                }
                BoundIntersections::NoIntersection => {
                    assert!(c.omega(l).unwrap() < 0.0);
                }
            }
        }
    }

    #[test]
    fn report_is_selfconsistent() {
        let p = ModelParams::dimensionless(1.0, 0.9).unwrap();
        let r = TradeoffReport::evaluate_at(0.2, &p).unwrap();
        assert!(r.omega_limit0 > 0.0);
        assert!(r.omega_limit1 < 0.0);
        assert!(r.lambda_star > 0.0 && r.lambda_star < 1.0);
        assert!(r.monotone_decreasing);
        assert!((r.omega - r.omega_prime).abs() < 1e-12 * (1.0 + r.omega.abs()));
    }
}

impl TradeoffReport {
    /// Evaluates the full report from scratch at one parameter point.
    pub fn evaluate_at(lambda: f64, params: &ModelParams) -> Result<Self> {
        TradeoffContext::new(params)?.report(lambda)
    }
}
