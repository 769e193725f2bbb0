//! General lambda-LD Fisher information for finite-dimensional, possibly
//! rank-deficient states, via the eigendecomposition of rho.
//!
//! Only support-indexed sums appear, so kernel eigenvalues are never divided
//! by. The lambda-LD operators themselves are not materialized: their
//! kernel-kernel block is undetermined, while the information matrix is
//! unique.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default eigenvalue classification threshold, relative to the largest
/// eigenvalue of rho.
pub const DEFAULT_EIGEN_RANK_TOL: f64 = 1e-12;

/// Density matrix with its parameter derivatives.
#[derive(Debug, Clone)]
pub struct FiniteModel {
    rho: DMatrix<Complex64>,
    drho: Vec<DMatrix<Complex64>>,
    rank_tol: f64,
}

fn hermiticity_residual(m: &DMatrix<Complex64>) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

fn hermitize(m: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    (m + m.adjoint()) * Complex64::new(0.5, 0.0)
}

impl FiniteModel {
    /// Validates hermiticity, unit trace of rho, tracelessness of every
    /// derivative and positive semidefiniteness of rho.
    pub fn new(
        rho: DMatrix<Complex64>,
        drho: Vec<DMatrix<Complex64>>,
        rank_tol: f64,
    ) -> Result<Self> {
        let d = rho.nrows();
        if rho.ncols() != d {
            return Err(Error::EigenFailure("rho is not square".into()));
        }
        if drho.is_empty() {
            return Err(Error::InvalidDomain("model needs at least one parameter".into()));
        }
        if !(rank_tol > 0.0 && rank_tol < 1.0) {
            return Err(Error::InvalidDomain(format!("rank_tol {rank_tol} outside (0, 1)")));
        }
        let scale = rho.norm().max(1.0);
        if hermiticity_residual(&rho) > 1e-9 * scale {
            return Err(Error::EigenFailure("rho is not Hermitian".into()));
        }
        let trace = rho.trace();
        if (trace.re - 1.0).abs() > 1e-10 || trace.im.abs() > 1e-10 {
            return Err(Error::InvalidDomain(format!(
                "trace(rho) = {trace} must be 1"
            )));
        }
        for (n, dm) in drho.iter().enumerate() {
            if dm.nrows() != d || dm.ncols() != d {
                return Err(Error::EigenFailure(format!(
                    "drho[{n}] dimension mismatch"
                )));
            }
            let s = dm.norm().max(1.0);
            if hermiticity_residual(dm) > 1e-9 * s {
                return Err(Error::EigenFailure(format!("drho[{n}] is not Hermitian")));
            }
            if dm.trace().norm() > 1e-10 * s {
                return Err(Error::InvalidDomain(format!(
                    "drho[{n}] must be traceless, trace = {}",
                    dm.trace()
                )));
            }
        }
        let rho = hermitize(&rho);
        let eigs = rho
            .clone()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .collect::<Vec<_>>();
        let min = eigs.iter().copied().fold(f64::INFINITY, f64::min);
        if min < -1e-12 {
            return Err(Error::InvalidDomain(format!(
                "rho has negative eigenvalue {min}"
            )));
        }
        Ok(FiniteModel {
            rho,
            drho: drho.iter().map(hermitize).collect(),
            rank_tol,
        })
    }

    pub fn dim(&self) -> usize {
        self.rho.nrows()
    }

    pub fn num_params(&self) -> usize {
        self.drho.len()
    }

    pub fn rho(&self) -> &DMatrix<Complex64> {
        &self.rho
    }

    pub fn drho(&self) -> &[DMatrix<Complex64>] {
        &self.drho
    }

    pub fn rank_tol(&self) -> f64 {
        self.rank_tol
    }

    /// Eigendecomposition split into support and kernel by `rank_tol`.
    fn decompose(&self) -> Result<(DVector<f64>, DMatrix<Complex64>, Vec<usize>)> {
        let se = self.rho.clone().symmetric_eigen();
        let max = se.eigenvalues.iter().copied().fold(0.0, f64::max);
        if !(max > 0.0) {
            return Err(Error::EigenFailure("rho has no positive eigenvalue".into()));
        }
        let support: Vec<usize> = (0..se.eigenvalues.len())
            .filter(|&i| se.eigenvalues[i] > self.rank_tol * max)
            .collect();
        Ok((se.eigenvalues, se.eigenvectors, support))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.decompose()?.2.len())
    }
}

/// Per-eigenvalue weights `(1 +- lambda)/2 * rho_i` entering the general
/// formula. For |lambda| < 1 both families are strictly positive on the
/// support and they sum to the eigenvalue itself.
#[derive(Debug, Clone)]
pub struct LambdaWeights {
    pub lambda: f64,
    pub plus: Vec<f64>,
    pub minus: Vec<f64>,
}

impl LambdaWeights {
    pub fn new(lambda: f64, support_eigenvalues: &[f64]) -> Self {
        LambdaWeights {
            lambda,
            plus: support_eigenvalues.iter().map(|&r| 0.5 * (1.0 + lambda) * r).collect(),
            minus: support_eigenvalues.iter().map(|&r| 0.5 * (1.0 - lambda) * r).collect(),
        }
    }
}

/// The lambda-LD Fisher information matrix of a finite model.
///
/// `|lambda| < 1` always works; `lambda = +-1` requires full rank and reduces
/// to the right/left logarithmic-derivative forms `tr(d_m rho rho^-1 d_n rho)`.
/// Index orientation matches the analytic family of this model (the m-th row
/// pairs with the daggered logarithmic derivative of parameter n).
pub fn fim_lambda_general(model: &FiniteModel, lambda: f64) -> Result<DMatrix<Complex64>> {
    if lambda.abs() > 1.0 {
        return Err(Error::LambdaOutOfRange(lambda));
    }
    let (eigs, vecs, support) = model.decompose()?;
    let d = model.dim();
    let p = model.num_params();
    if lambda.abs() == 1.0 && support.len() < d {
        return Err(Error::RldUndefined { rank: support.len(), dim: d });
    }

    // Parameter derivatives in the eigenbasis.
    let ms: Vec<DMatrix<Complex64>> =
        model.drho.iter().map(|dm| vecs.adjoint() * dm * &vecs).collect();

    let mut j = DMatrix::<Complex64>::zeros(p, p);

    if lambda.abs() == 1.0 {
        // J_mn = sum_i (M_a M_b)_{ii} / rho_i with (a, b) = (m, n) for the
        // RLD and (n, m) for the LLD.
        for m in 0..p {
            for n in 0..p {
                let (a, b) = if lambda > 0.0 { (m, n) } else { (n, m) };
                let prod = &ms[a] * &ms[b];
                let mut s = Complex64::new(0.0, 0.0);
                for &i in &support {
                    s += prod[(i, i)] / eigs[i];
                }
                j[(m, n)] = s;
            }
        }
        return Ok(j);
    }

    let sup_eigs: Vec<f64> = support.iter().map(|&i| eigs[i]).collect();
    let w = LambdaWeights::new(lambda, &sup_eigs);

    for m in 0..p {
        for n in 0..p {
            let mm_mn = &ms[m] * &ms[n];
            let mn_mm = &ms[n] * &ms[m];
            let mut s = Complex64::new(0.0, 0.0);
            for (k, &i) in support.iter().enumerate() {
                s += mm_mn[(i, i)] / w.plus[k] + mn_mm[(i, i)] / w.minus[k];
            }
            for (ki, &i) in support.iter().enumerate() {
                for (kj, &jx) in support.iter().enumerate() {
                    let lij = 0.5 * (1.0 + lambda) * sup_eigs[ki]
                        + 0.5 * (1.0 - lambda) * sup_eigs[kj];
                    let coeff = 1.0 / lij - 1.0 / w.plus[ki] - 1.0 / w.minus[kj];
                    s += coeff * ms[m][(i, jx)] * ms[n][(jx, i)];
                }
            }
            j[(m, n)] = s;
        }
    }
    Ok(j)
}
