//! Scalar functions of the boosted Gaussian model: the integrals zeta and xi,
//! their closed forms in the relativistic limit, and the identities tying
//! them to the complementary error function.

pub mod wigner;

use crate::error::{Error, Result};
use crate::numerics::quadrature::{integrate_semi_infinite, QuadratureSpec};
use crate::numerics::special::erfcx;

/// Velocities at or above this are routed to the V = 1 closed forms; cosh of
/// the rapidity exceeds ~2e4 there and the quadrature no longer separates the
/// two branches.
pub const REL_LIMIT_THRESHOLD: f64 = 1.0 - 1e-9;

const SQRT_2: f64 = std::f64::consts::SQRT_2;
const SQRT_PI: f64 = 1.772_453_850_905_516;
const SQRT_2PI: f64 = 2.506_628_274_631_000_4;

/// Physical parameters: rest mass, wave-packet spread and observer velocity.
///
/// All scalar functions depend on the mass and spread only through the
/// dimensionless product `kappa_prime = m * kappa`; the spread re-enters at
/// the boundary as the `kappa^2` unit of every Fisher-matrix quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    mass: f64,
    spread: f64,
    velocity: f64,
}

impl ModelParams {
    pub fn new(mass: f64, spread: f64, velocity: f64) -> Result<Self> {
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(Error::InvalidDomain(format!("mass must be positive, got {mass}")));
        }
        if !(spread > 0.0) || !spread.is_finite() {
            return Err(Error::InvalidDomain(format!(
                "spread kappa must be positive, got {spread}"
            )));
        }
        if !(0.0..=1.0).contains(&velocity) {
            return Err(Error::InvalidDomain(format!(
                "velocity must lie in [0, 1], got {velocity}"
            )));
        }
        Ok(ModelParams { mass, spread, velocity })
    }

    /// Unit mass and the given dimensionless spread; the common test bench.
    pub fn dimensionless(kappa_prime: f64, velocity: f64) -> Result<Self> {
        ModelParams::new(1.0, kappa_prime, velocity)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn spread(&self) -> f64 {
        self.spread
    }

    pub fn velocity(&self) -> f64 {
        self.velocity
    }

    pub fn kappa_prime(&self) -> f64 {
        self.mass * self.spread
    }

    /// Rapidity chi = atanh(V); +inf at V = 1.
    pub fn rapidity(&self) -> f64 {
        self.velocity.atanh()
    }

    /// sqrt(1 - V^2), computed as sqrt((1-V)(1+V)) to keep precision near
    /// V = 1. Equals 1/cosh(chi).
    pub fn inv_cosh_chi(&self) -> f64 {
        ((1.0 - self.velocity) * (1.0 + self.velocity)).sqrt()
    }

    /// True when the parameters are routed to the V = 1 closed forms.
    pub fn in_relativistic_limit(&self) -> bool {
        self.velocity >= REL_LIMIT_THRESHOLD
    }

    fn warn_if_near_limit(&self) {
        if self.velocity >= REL_LIMIT_THRESHOLD && self.velocity < 1.0 {
            log::warn!(
                "velocity {} within 1e-9 of 1; substituting the V = 1 closed forms",
                self.velocity
            );
        }
    }
}

/// The integral zeta of the model; dimensionless, 0 <= zeta < 1.
///
/// V at or above `REL_LIMIT_THRESHOLD` is evaluated with the closed form
/// `zeta_rel`.
pub fn zeta(params: &ModelParams) -> Result<f64> {
    zeta_with_spec(params, &QuadratureSpec::default())
}

pub fn zeta_with_spec(params: &ModelParams, spec: &QuadratureSpec) -> Result<f64> {
    let kp = params.kappa_prime();
    if params.in_relativistic_limit() {
        params.warn_if_near_limit();
        return Ok(zeta_rel(kp));
    }
    let v = params.velocity();
    if v == 0.0 {
        return Ok(0.0);
    }
    let s = params.inv_cosh_chi();
    let r = integrate_semi_infinite(
        |t| {
            SQRT_2 * kp.powi(3) * v * t.powi(3) / ((1.0 + t * t).sqrt() + s)
                * (-kp * kp * t * t).exp()
        },
        1.0 / kp,
        spec,
    )?;
    Ok(r.value)
}

/// The integral xi of the model; dimensionless, 0 < xi <= 1.
pub fn xi(params: &ModelParams) -> Result<f64> {
    xi_with_spec(params, &QuadratureSpec::default())
}

pub fn xi_with_spec(params: &ModelParams, spec: &QuadratureSpec) -> Result<f64> {
    let kp = params.kappa_prime();
    if params.in_relativistic_limit() {
        params.warn_if_near_limit();
        return Ok(xi_rel(kp));
    }
    let s = params.inv_cosh_chi();
    let r = integrate_semi_infinite(
        |t| {
            let root = (1.0 + t * t).sqrt();
            kp * kp * 2.0 * t * (1.0 + root * s) / (root + s) * (-kp * kp * t * t).exp()
        },
        1.0 / kp,
        spec,
    )?;
    Ok(r.value)
}

/// Closed form of zeta at V = 1:
/// `kappa'/sqrt(2) + (sqrt(2 pi)/4) (1 - 2 kappa'^2) erfcx(kappa')`.
/// Monotone decreasing, from sqrt(2 pi)/4 at 0+ to 0 at infinity.
pub fn zeta_rel(kappa_prime: f64) -> f64 {
    kappa_prime / SQRT_2
        + SQRT_2PI / 4.0 * (1.0 - 2.0 * kappa_prime * kappa_prime) * erfcx(kappa_prime)
}

/// Closed form of xi at V = 1: `sqrt(pi) kappa' erfcx(kappa')`.
/// Monotone increasing, from 0 at 0+ to 1 at infinity.
pub fn xi_rel(kappa_prime: f64) -> f64 {
    SQRT_PI * kappa_prime * erfcx(kappa_prime)
}

/// Both integrals for one parameter point; evaluates the quadrature (or the
/// closed forms) once and is the entry point for everything downstream.
#[derive(Debug, Clone, Copy)]
pub struct ScalarFunctions {
    pub zeta: f64,
    pub xi: f64,
}

impl ScalarFunctions {
    pub fn compute(params: &ModelParams) -> Result<Self> {
        Self::compute_with_spec(params, &QuadratureSpec::default())
    }

    pub fn compute_with_spec(params: &ModelParams, spec: &QuadratureSpec) -> Result<Self> {
        Ok(ScalarFunctions {
            zeta: zeta_with_spec(params, spec)?,
            xi: xi_with_spec(params, spec)?,
        })
    }
}

/// Residual of the identity
/// `xi + sqrt(2) zeta / (kappa' V) = 1 + (sqrt(pi)/(2 kappa')) erfcx(kappa')`.
///
/// A joint certificate for zeta, xi and erfc: the left side is built from the
/// quadratures, the right side from the continued-fraction erfcx.
pub fn identity_residual(params: &ModelParams) -> Result<f64> {
    let v = params.velocity();
    if v == 0.0 {
        return Err(Error::DivisionByZero(
            "identity left-hand side has zeta/V which is 0/0 at V = 0".into(),
        ));
    }
    let kp = params.kappa_prime();
    let sf = ScalarFunctions::compute(params)?;
    // At the routed V = 1 limit the V in the identity is exactly 1.
    let v_eff = if params.in_relativistic_limit() { 1.0 } else { v };
    let lhs = sf.xi + SQRT_2 * sf.zeta / (kp * v_eff);
    let rhs = 1.0 + SQRT_PI / (2.0 * kp) * erfcx(kp);
    Ok(lhs - rhs)
}

/// The ratio Theta = (1 - zeta^2)/xi, provably > 1 for V in (0, 1].
///
/// A computed Theta <= 1 signals a quadrature fault and is reported as an
/// invariant violation.
pub fn theta_ratio(params: &ModelParams) -> Result<f64> {
    if params.velocity() == 0.0 {
        return Err(Error::InvalidDomain(
            "Theta > 1 holds for V in (0, 1]; V = 0 gives the degenerate Theta = 1".into(),
        ));
    }
    let sf = ScalarFunctions::compute(params)?;
    let theta = (1.0 - sf.zeta * sf.zeta) / sf.xi;
    if !(theta > 1.0) {
        return Err(Error::InvariantViolation(format!(
            "Theta = {theta} <= 1 (zeta = {}, xi = {})",
            sf.zeta, sf.xi
        )));
    }
    Ok(theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_validation() {
        assert!(ModelParams::new(1.0, 1.0, 0.5).is_ok());
        assert!(ModelParams::new(0.0, 1.0, 0.5).is_err());
        assert!(ModelParams::new(1.0, -1.0, 0.5).is_err());
        assert!(ModelParams::new(1.0, 1.0, 1.1).is_err());
        assert!(ModelParams::new(1.0, 1.0, 1.0).is_ok());
    }

    #[test]
    fn zeta_vanishes_in_rest_frame() {
        let p = ModelParams::dimensionless(1.0, 0.0).unwrap();
        assert_eq!(zeta(&p).unwrap(), 0.0);
    }

    #[test]
    fn xi_is_one_in_rest_frame() {
        let p = ModelParams::dimensionless(0.7, 0.0).unwrap();
        assert!((xi(&p).unwrap() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn quadrature_matches_frozen_oracle_values() {
        // 40-digit quadrature oracle, evaluated once per point.
        for &(kp, v, z_want, x_want) in &[
            (1.0, 0.5, 0.141_282_931_501_478_15, 0.979_327_602_348_217_3),
            (0.5, 0.3, 0.117_302_632_062_666_19, 0.985_342_900_429_536_8),
            (2.0, 0.9, 0.193_739_505_265_332_9, 0.960_953_131_432_134),
        ] {
            let p = ModelParams::dimensionless(kp, v).unwrap();
            assert!((zeta(&p).unwrap() - z_want).abs() < 1e-11);
            assert!((xi(&p).unwrap() - x_want).abs() < 1e-11);
        }
    }

    #[test]
    fn near_limit_velocity_routes_to_closed_forms() {
        let kp = 1.0;
        let p = ModelParams::dimensionless(kp, 1.0 - 1e-12).unwrap();
        assert!(p.in_relativistic_limit());
        assert_eq!(zeta(&p).unwrap(), zeta_rel(kp));
        assert_eq!(xi(&p).unwrap(), xi_rel(kp));
    }

    #[test]
    fn closed_forms_match_quadrature_near_limit() {
        // Direct quadrature just below the routing threshold; the closed
        // forms differ from it by O(sqrt(1 - V^2)).
        let v = 1.0 - 1e-11;
        for &kp in &[0.1, 0.5, 1.0, 2.0, 5.0] {
            let p = ModelParams::new(1.0, kp, v).unwrap();
            assert!((zeta(&p).unwrap() - zeta_rel(kp)).abs() < 1e-8);
            assert!((xi(&p).unwrap() - xi_rel(kp)).abs() < 1e-8);
        }
    }

    #[test]
    fn rel_limit_endpoints() {
        assert!((zeta_rel(1e-4) - SQRT_2PI / 4.0).abs() < 1e-4);
        assert!(xi_rel(1e-4) < 1e-3);
        assert!((xi_rel(50.0) - (1.0 - 1.0 / 5000.0)).abs() < 1e-6);
        assert!(zeta_rel(50.0) < 0.02);
    }

    #[test]
    fn small_kappa_rel_limit_value() {
        let p = ModelParams::dimensionless(0.01, 1.0).unwrap();
        assert!((zeta(&p).unwrap() - 0.626_657_068_657_750_1).abs() < 1e-3);
    }

    #[test]
    fn identity_residual_small_at_interior_points() {
        for &(kp, v) in &[(1.0, 0.5), (0.2, 0.9), (3.0, 1.0)] {
            let p = ModelParams::dimensionless(kp, v).unwrap();
            let r = identity_residual(&p).unwrap();
            assert!(r.abs() < 1e-9, "kp={kp} v={v}: {r}");
        }
    }

    #[test]
    fn identity_residual_rejects_rest_frame() {
        let p = ModelParams::dimensionless(1.0, 0.0).unwrap();
        assert!(matches!(identity_residual(&p), Err(Error::DivisionByZero(_))));
    }

    #[test]
    fn theta_exceeds_one() {
        for &(kp, v) in &[(1.0, 0.5), (0.05, 1.0), (5.0, 0.99)] {
            let p = ModelParams::dimensionless(kp, v).unwrap();
            assert!(theta_ratio(&p).unwrap() > 1.0);
        }
        // V -> 0: Theta -> 1 from above.
        let p = ModelParams::dimensionless(1.0, 1e-4).unwrap();
        let th = theta_ratio(&p).unwrap();
        assert!(th > 1.0 && th < 1.0 + 1e-6);
    }

    #[test]
    fn theta_rejects_rest_frame() {
        let p = ModelParams::dimensionless(1.0, 0.0).unwrap();
        assert!(theta_ratio(&p).is_err());
    }
}
