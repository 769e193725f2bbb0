//! Quantum Fisher information: the analytic 2x2 lambda-LD family of the
//! model and the general eigendecomposition-based algorithm for arbitrary
//! finite-dimensional states.
//!
//! The analytic matrices are stored dimensionless internally; the spread
//! enters once, as the 1/kappa^2 (or kappa^2) unit applied at the public
//! boundary.

pub mod general;
pub mod reduced;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mat2::CMat2;
use crate::model::{ModelParams, ScalarFunctions};

pub use general::{fim_lambda_general, FiniteModel, LambdaWeights};
pub use reduced::{build_reduced_model, PolarGridSpec};

/// Hermitian 2x2 matrix with equal-by-symmetry handling left to the caller:
/// real diagonal, single independent off-diagonal entry (a21 = conj(a12)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitianMatrix2 {
    pub a11: f64,
    pub a22: f64,
    pub a12: Complex64,
}

impl HermitianMatrix2 {
    pub fn new(a11: f64, a22: f64, a12: Complex64) -> Self {
        HermitianMatrix2 { a11, a22, a12 }
    }

    pub fn zero() -> Self {
        HermitianMatrix2::new(0.0, 0.0, Complex64::new(0.0, 0.0))
    }

    pub fn scaled_identity(s: f64) -> Self {
        HermitianMatrix2::new(s, s, Complex64::new(0.0, 0.0))
    }

    pub fn a21(&self) -> Complex64 {
        self.a12.conj()
    }

    pub fn trace(&self) -> f64 {
        self.a11 + self.a22
    }

    pub fn det(&self) -> f64 {
        self.a11 * self.a22 - self.a12.norm_sqr()
    }

    /// Eigenvalues in ascending order; real by hermiticity.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let mean = 0.5 * (self.a11 + self.a22);
        let delta = 0.5 * (self.a11 - self.a22);
        let r = (delta * delta + self.a12.norm_sqr()).sqrt();
        (mean - r, mean + r)
    }

    pub fn is_positive_semidefinite(&self, tol: f64) -> bool {
        self.eigenvalues().0 >= -tol * self.trace().abs().max(1.0)
    }

    pub fn scale(&self, s: f64) -> Self {
        HermitianMatrix2::new(self.a11 * s, self.a22 * s, self.a12 * s)
    }

    pub fn sub(&self, other: &Self) -> Self {
        HermitianMatrix2::new(self.a11 - other.a11, self.a22 - other.a22, self.a12 - other.a12)
    }

    pub fn to_cmat2(&self) -> CMat2 {
        CMat2::new(self.a11.into(), self.a12, self.a21(), self.a22.into())
    }

    pub fn frobenius_norm(&self) -> f64 {
        (self.a11 * self.a11 + self.a22 * self.a22 + 2.0 * self.a12.norm_sqr()).sqrt()
    }

    /// Frobenius distance of `self * other` from the identity.
    pub fn product_identity_residual(&self, other: &Self) -> f64 {
        (self.to_cmat2() * other.to_cmat2()).distance_to_identity()
    }
}

/// Dimensionless lambda-LD Fisher matrix (the kappa^2/2 unit stripped off):
/// `J~ = (1/((1-l^2)(1-l^2 xi^2))) [[1-z^2-l^2 xi^2, -i l z^2 xi], ...]`
/// so that J = (2/kappa^2) J~.
pub(crate) fn fim_lambda_scaled(lambda: f64, sf: &ScalarFunctions) -> HermitianMatrix2 {
    let (z2, x) = (sf.zeta * sf.zeta, sf.xi);
    let l2 = lambda * lambda;
    let pref = 1.0 / ((1.0 - l2) * (1.0 - l2 * x * x));
    let diag = pref * (1.0 - z2 - l2 * x * x);
    let off = Complex64::new(0.0, -lambda * z2 * x) * pref;
    HermitianMatrix2::new(diag, diag, off)
}

/// Dimensionless inverse (the 2/kappa^2 unit stripped off):
/// `J~^-1 = ((1-l^2)/((1-z^2)^2 - l^2 xi^2)) [[1-z^2-l^2 xi^2, +i l z^2 xi], ...]`
/// so that J^-1 = (kappa^2/2) J~^-1.
pub(crate) fn fim_lambda_inverse_scaled(lambda: f64, sf: &ScalarFunctions) -> HermitianMatrix2 {
    let (z2, x) = (sf.zeta * sf.zeta, sf.xi);
    let l2 = lambda * lambda;
    let a = 1.0 - z2;
    let pref = (1.0 - l2) / (a * a - l2 * x * x);
    let diag = pref * (1.0 - z2 - l2 * x * x);
    let off = Complex64::new(0.0, lambda * z2 * x) * pref;
    HermitianMatrix2::new(diag, diag, off)
}

/// Analytic lambda-LD Fisher information matrix of the model, |lambda| < 1.
///
/// Hermitian, positive definite, theta-independent; equal diagonal entries
/// and a purely imaginary off-diagonal. At |lambda| = 1 the family is
/// singular for this rank-deficient state and the call is rejected.
pub fn fim_lambda_analytic(lambda: f64, params: &ModelParams) -> Result<HermitianMatrix2> {
    if lambda.abs() >= 1.0 {
        return Err(Error::LambdaOutOfRange(lambda));
    }
    let sf = ScalarFunctions::compute(params)?;
    let kappa2 = params.spread() * params.spread();
    Ok(fim_lambda_scaled(lambda, &sf).scale(2.0 / kappa2))
}

/// Analytic inverse, |lambda| <= 1. At lambda = +-1 the inverse degenerates
/// to the zero matrix and the corresponding CR bound is trivial.
pub fn fim_lambda_inverse_analytic(lambda: f64, params: &ModelParams) -> Result<HermitianMatrix2> {
    if lambda.abs() > 1.0 {
        return Err(Error::LambdaOutOfRange(lambda));
    }
    if lambda.abs() == 1.0 {
        return Ok(HermitianMatrix2::zero());
    }
    let sf = ScalarFunctions::compute(params)?;
    let kappa2 = params.spread() * params.spread();
    Ok(fim_lambda_inverse_scaled(lambda, &sf).scale(kappa2 / 2.0))
}

/// Inverse of the SLD Fisher information matrix:
/// `kappa^2 / (2 (1 - zeta^2)) I`.
pub fn sld_fim_inverse(params: &ModelParams) -> Result<HermitianMatrix2> {
    let sf = ScalarFunctions::compute(params)?;
    let kappa2 = params.spread() * params.spread();
    Ok(HermitianMatrix2::scaled_identity(
        kappa2 / (2.0 * (1.0 - sf.zeta * sf.zeta)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rest_frame_sld_fim() {
        // V = 0: J_lambda at lambda = 0 is (2/kappa^2) I.
        let p = ModelParams::new(1.0, 2.0, 0.0).unwrap();
        let j = fim_lambda_analytic(0.0, &p).unwrap();
        assert!((j.a11 - 0.5).abs() < 1e-12);
        assert!((j.a22 - 0.5).abs() < 1e-12);
        assert!(j.a12.norm() < 1e-15);
    }

    #[test]
    fn off_diagonal_odd_in_lambda() {
        let p = ModelParams::dimensionless(1.0, 0.5).unwrap();
        let jp = fim_lambda_analytic(0.4, &p).unwrap();
        let jm = fim_lambda_analytic(-0.4, &p).unwrap();
        assert!((jp.a11 - jm.a11).abs() < 1e-12);
        assert!((jp.a12 + jm.a12).norm() < 1e-12);
        assert!(jp.a12.re.abs() < 1e-15, "off-diagonal purely imaginary");
    }

    #[test]
    fn product_with_inverse_is_identity() {
        for &lambda in &[0.0, 0.3, -0.3, 0.7, -0.7, 0.99, -0.99] {
            for &(kp, v) in &[(0.1, 0.2), (1.0, 0.8), (3.0, 1.0)] {
                let p = ModelParams::dimensionless(kp, v).unwrap();
                let j = fim_lambda_analytic(lambda, &p).unwrap();
                let ji = fim_lambda_inverse_analytic(lambda, &p).unwrap();
                let r = j.product_identity_residual(&ji);
                assert!(r < 1e-10, "lambda={lambda} kp={kp} v={v}: {r}");
            }
        }
    }

    #[test]
    fn rld_inverse_is_zero_matrix() {
        let p = ModelParams::dimensionless(1.0, 0.5).unwrap();
        let j = fim_lambda_inverse_analytic(1.0, &p).unwrap();
        assert_eq!(j, HermitianMatrix2::zero());
        let j = fim_lambda_inverse_analytic(-1.0, &p).unwrap();
        assert_eq!(j, HermitianMatrix2::zero());
    }

    #[test]
    fn lambda_out_of_range_rejected() {
        let p = ModelParams::dimensionless(1.0, 0.5).unwrap();
        assert!(matches!(
            fim_lambda_analytic(1.0, &p),
            Err(Error::LambdaOutOfRange(_))
        ));
        assert!(fim_lambda_inverse_analytic(1.5, &p).is_err());
    }

    #[test]
    fn sld_inverse_equals_family_at_lambda_zero() {
        let p = ModelParams::dimensionless(0.8, 0.9).unwrap();
        let a = sld_fim_inverse(&p).unwrap();
        let b = fim_lambda_inverse_analytic(0.0, &p).unwrap();
        assert!((a.a11 - b.a11).abs() < 1e-15);
        assert!((a.a22 - b.a22).abs() < 1e-15);
        assert!(b.a12.norm() < 1e-15);
    }

    #[test]
    fn rest_frame_sld_inverse() {
        let p = ModelParams::new(1.0, 1.0, 0.0).unwrap();
        let j = sld_fim_inverse(&p).unwrap();
        assert!((j.a11 - 0.5).abs() < 1e-12);
    }

    #[test]
    fn sld_inverse_rel_limit_small_spread() {
        // zeta -> sqrt(2 pi)/4 as kappa' -> 0 at V = 1, so the diagonal tends
        // to (kappa^2/2) / (1 - pi/8).
        let p = ModelParams::dimensionless(1e-4, 1.0).unwrap();
        let j = sld_fim_inverse(&p).unwrap();
        let want = 0.5e-8 / (1.0 - std::f64::consts::PI / 8.0);
        assert!((j.a11 - want).abs() < 1e-3 * want);
    }

    #[test]
    fn sld_inverse_diagonal_increases_with_velocity() {
        let mut prev = 0.0;
        for i in 0..20 {
            let v = 0.04 + 0.048 * i as f64;
            let p = ModelParams::dimensionless(1.0, v).unwrap();
            let j = sld_fim_inverse(&p).unwrap();
            assert!(j.a11 > prev, "v = {v}");
            prev = j.a11;
        }
    }

    #[test]
    fn family_monotone_inverse_trace() {
        // tr J_lambda^-1 <= tr J_S^-1, with the gap PSD.
        let p = ModelParams::dimensionless(1.0, 0.9).unwrap();
        let js = sld_fim_inverse(&p).unwrap();
        for &lambda in &[0.1, 0.3, 0.6, 0.9, 0.99] {
            let jl = fim_lambda_inverse_analytic(lambda, &p).unwrap();
            let gap = js.sub(&jl);
            assert!(gap.is_positive_semidefinite(1e-12), "lambda = {lambda}");
            assert!(jl.trace() <= js.trace() + 1e-15);
        }
    }
}
