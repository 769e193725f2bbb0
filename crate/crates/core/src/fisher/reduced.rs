//! Finite subspace reduction of the boosted two-parameter model.
//!
//! The state and its two parameter derivatives live in the span of the six
//! momentum-space functions {F_dn, F_up, p1 F_dn, p2 F_dn, p1 F_up, p2 F_up}.
//! Inner products are flat-measure integrals over (p1, p2): the boost
//! Jacobians cancel against the relativistic delta normalization, and the
//! remaining plane-wave delta factor divides out once the trace is
//! normalized to 1.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fisher::general::{FiniteModel, DEFAULT_EIGEN_RANK_TOL};
use crate::model::ModelParams;
use crate::numerics::gauss::gauss_legendre;
use crate::numerics::orthonormal::{orthonormalize, DEFAULT_RANK_TOL};

/// Polar momentum grid: radial Gauss–Legendre nodes on [0, 9/kappa'] in
/// m-scaled momentum, uniform trapezoid in angle. The trapezoid rule is
/// spectrally exact for the finite angular harmonics e^{0,+-1,+-2,+-3 i Phi}
/// present in the products.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarGridSpec {
    pub radial_nodes: usize,
    pub angular_nodes: usize,
}

impl Default for PolarGridSpec {
    fn default() -> Self {
        PolarGridSpec { radial_nodes: 200, angular_nodes: 64 }
    }
}

impl PolarGridSpec {
    pub fn validate(&self) -> Result<()> {
        if self.radial_nodes < 16 {
            return Err(Error::InvalidDomain(
                "radial grid needs at least 16 nodes".into(),
            ));
        }
        if self.angular_nodes < 32 {
            return Err(Error::InvalidDomain(
                "angular grid needs at least 32 nodes to resolve the harmonics".into(),
            ));
        }
        Ok(())
    }
}

/// Reduced model plus the diagnostics its construction certifies.
#[derive(Debug, Clone)]
pub struct ReducedModel {
    pub model: FiniteModel,
    /// Trace of the un-normalized state; 1 up to quadrature error.
    pub raw_trace: f64,
    /// Overlap of the spin-up and spin-down state vectors; 0 up to
    /// quadrature error.
    pub spin_overlap: Complex64,
    /// Squared norms of the spin-down / spin-up vectors (after trace
    /// normalization these are the two nonzero eigenvalues of rho).
    pub spin_weights: (f64, f64),
}

/// Builds the d <= 6 dimensional representation of rho(theta) and its two
/// parameter derivatives on the polar grid.
///
/// Rejects trace deviations beyond 1e-8 as a grid failure. Valid for
/// observer velocities strictly inside (0, 1).
pub fn build_reduced_model(
    params: &ModelParams,
    theta: (f64, f64),
    grid: &PolarGridSpec,
) -> Result<ReducedModel> {
    grid.validate()?;
    let v = params.velocity();
    if !(v > 0.0 && v < 1.0) {
        return Err(Error::InvalidDomain(format!(
            "subspace reduction requires 0 < V < 1, got {v}"
        )));
    }
    let m = params.mass();
    let kp = params.kappa_prime();
    let iv = params.inv_cosh_chi();

    let (rn, rw) = gauss_legendre(grid.radial_nodes);
    let t_hi = 9.0 / kp;
    let nphi = grid.angular_nodes;
    let wphi = 2.0 * std::f64::consts::PI / nphi as f64;

    let total = grid.radial_nodes * nphi;
    let mut weights = Vec::with_capacity(total);
    let mut vectors: Vec<Vec<Complex64>> = vec![Vec::with_capacity(total); 6];

    for k in 0..grid.radial_nodes {
        let t = 0.5 * (rn[k] + 1.0) * t_hi;
        let wt = 0.5 * rw[k] * t_hi;
        let root = (1.0 + t * t).sqrt();
        let cos_alpha = (root * iv + 1.0) / (root + iv);
        let cos_half = ((1.0 + cos_alpha) * 0.5).sqrt();
        let sin_half = -((1.0 - cos_alpha) * 0.5).max(0.0).sqrt();
        let gauss = (-0.5 * kp * kp * t * t).exp();
        for j in 0..nphi {
            let phi = wphi * j as f64;
            let (sin_phi, cos_phi) = phi.sin_cos();
            // physical momenta; theta carries inverse-momentum units
            let p1 = m * t * cos_phi;
            let p2 = m * t * sin_phi;
            let phase = Complex64::from_polar(1.0, -(p1 * theta.0 + p2 * theta.1));
            let e_iphi = Complex64::new(cos_phi, sin_phi);

            weights.push(kp * kp / std::f64::consts::PI * t * wt * wphi);
            let f_dn = phase * gauss * cos_half;
            let f_up = -phase * gauss * sin_half * e_iphi;
            vectors[0].push(f_dn);
            vectors[1].push(f_up);
            // m-scaled momentum multipliers; drho restores the factor m below
            vectors[2].push(f_dn * (t * cos_phi));
            vectors[3].push(f_dn * (t * sin_phi));
            vectors[4].push(f_up * (t * cos_phi));
            vectors[5].push(f_up * (t * sin_phi));
        }
    }

    let ip = |a: &[Complex64], b: &[Complex64]| -> Complex64 {
        a.iter()
            .zip(b)
            .zip(&weights)
            .map(|((x, y), &w)| x.conj() * y * w)
            .sum()
    };

    let ortho = orthonormalize(&vectors, ip, DEFAULT_RANK_TOL)?;
    let dim = ortho.basis.len();
    let coeff = &ortho.coefficients;
    let c_dn = &coeff[0];
    let c_up = &coeff[1];

    let dot = |a: &[Complex64], b: &[Complex64]| -> Complex64 {
        a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
    };
    let n_dn = dot(c_dn, c_dn).re;
    let n_up = dot(c_up, c_up).re;
    let raw_trace = n_dn + n_up;
    if (raw_trace - 1.0).abs() > 1e-8 {
        return Err(Error::GridTooCoarse((raw_trace - 1.0).abs()));
    }

    let outer = |a: &[Complex64], b: &[Complex64]| -> nalgebra::DMatrix<Complex64> {
        nalgebra::DMatrix::from_fn(dim, dim, |r, cidx| a[r] * b[cidx].conj())
    };

    let mut rho = outer(c_dn, c_dn) + outer(c_up, c_up);
    rho /= Complex64::new(raw_trace, 0.0);

    // d_j rho = -i m (|t^j F><F| - |F><t^j F|) summed over both spin parts
    let minus_i_m = Complex64::new(0.0, -m);
    let mut drhos = Vec::with_capacity(2);
    for j in 0..2 {
        let q_dn = &coeff[2 + j];
        let q_up = &coeff[4 + j];
        let mut d = (outer(q_dn, c_dn) - outer(c_dn, q_dn))
            + (outer(q_up, c_up) - outer(c_up, q_up));
        d *= minus_i_m / Complex64::new(raw_trace, 0.0);
        drhos.push(d);
    }

    let model = FiniteModel::new(rho, drhos, DEFAULT_EIGEN_RANK_TOL)?;
    Ok(ReducedModel {
        model,
        raw_trace,
        spin_overlap: dot(c_dn, c_up),
        spin_weights: (n_dn / raw_trace, n_up / raw_trace),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_rank_and_orthogonality() {
        let p = ModelParams::dimensionless(1.0, 0.5).unwrap();
        let r = build_reduced_model(&p, (0.0, 0.0), &PolarGridSpec::default()).unwrap();
        assert!((r.raw_trace - 1.0).abs() < 1e-9);
        assert!(r.spin_overlap.norm() < 1e-9);
        assert_eq!(r.model.rank().unwrap(), 2);
        assert_eq!(r.model.dim(), 6);
    }

    #[test]
    fn spin_up_weight_vanishes_with_velocity() {
        let p = ModelParams::dimensionless(1.0, 1e-3).unwrap();
        let r = build_reduced_model(&p, (0.0, 0.0), &PolarGridSpec::default()).unwrap();
        assert!(r.spin_weights.1 < 1e-5);
    }

    #[test]
    fn grid_validation() {
        let p = ModelParams::dimensionless(1.0, 0.5).unwrap();
        let bad = PolarGridSpec { radial_nodes: 200, angular_nodes: 8 };
        assert!(build_reduced_model(&p, (0.0, 0.0), &bad).is_err());
        assert!(build_reduced_model(
            &ModelParams::dimensionless(1.0, 0.0).unwrap(),
            (0.0, 0.0),
            &PolarGridSpec::default()
        )
        .is_err());
    }
}
