//! Modified Gram–Schmidt orthonormalization under a user-supplied inner
//! product, with rank detection.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default rank tolerance; matches the quadrature accuracy of the inner
/// products feeding the subspace reduction.
pub const DEFAULT_RANK_TOL: f64 = 1e-10;

/// Orthonormal basis of the span of the inputs, plus the expansion
/// coefficients of every input in that basis.
#[derive(Debug, Clone)]
pub struct OrthonormalBasis {
    pub basis: Vec<Vec<Complex64>>,
    /// `coefficients[i][a]` is the component of input `i` on `basis[a]`,
    /// i.e. `v_i = sum_a coefficients[i][a] * basis[a]` up to the dropped
    /// null directions.
    pub coefficients: Vec<Vec<Complex64>>,
}

/// Modified Gram–Schmidt with one reorthogonalization pass.
///
/// `inner_product(v, w)` must be a Hermitian positive semidefinite
/// sesquilinear form, conjugate-linear in `v`. Vectors whose orthogonal
/// residual falls below `rank_tol` times the largest input norm are dropped
/// from the basis (their coefficients are still reported).
pub fn orthonormalize(
    vectors: &[Vec<Complex64>],
    inner_product: impl Fn(&[Complex64], &[Complex64]) -> Complex64,
    rank_tol: f64,
) -> Result<OrthonormalBasis> {
    if vectors.is_empty() {
        return Err(Error::DegenerateInput);
    }
    let norm = |v: &[Complex64]| inner_product(v, v).re.max(0.0).sqrt();
    let max_norm = vectors.iter().map(|v| norm(v)).fold(0.0, f64::max);
    if max_norm == 0.0 {
        return Err(Error::DegenerateInput);
    }
    let threshold = rank_tol * max_norm;

    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(vectors.len());
    for v in vectors {
        let mut w = v.clone();
        for _pass in 0..2 {
            for b in &basis {
                let c = inner_product(b, &w);
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi -= c * bi;
                }
            }
        }
        let nw = norm(&w);
        if nw > threshold {
            for wi in &mut w {
                *wi /= nw;
            }
            basis.push(w);
        }
    }
    if basis.is_empty() {
        return Err(Error::DegenerateInput);
    }

    let coefficients = vectors
        .iter()
        .map(|v| basis.iter().map(|b| inner_product(b, v)).collect())
        .collect();
    Ok(OrthonormalBasis { basis, coefficients })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn euclid(v: &[Complex64], w: &[Complex64]) -> Complex64 {
        v.iter().zip(w).map(|(a, b)| a.conj() * b).sum()
    }

    #[test]
    fn orthonormal_inputs_give_identity_coefficients() {
        let v1 = vec![c(1.0, 0.0), c(0.0, 0.0)];
        let v2 = vec![c(0.0, 0.0), c(0.0, 1.0)];
        let out = orthonormalize(&[v1, v2], euclid, DEFAULT_RANK_TOL).unwrap();
        assert_eq!(out.basis.len(), 2);
        assert!((out.coefficients[0][0] - c(1.0, 0.0)).norm() < 1e-14);
        assert!(out.coefficients[0][1].norm() < 1e-14);
        assert!(out.coefficients[1][0].norm() < 1e-14);
        assert!((out.coefficients[1][1].norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn linear_dependence_detected() {
        let v = vec![c(3.0, 0.0), c(0.0, 4.0)];
        let v2: Vec<_> = v.iter().map(|z| 2.0 * z).collect();
        let out = orthonormalize(&[v.clone(), v2], euclid, DEFAULT_RANK_TOL).unwrap();
        assert_eq!(out.basis.len(), 1);
        let nv = euclid(&v, &v).re.sqrt();
        assert!((out.coefficients[0][0].norm() - nv).abs() < 1e-12);
        assert!((out.coefficients[1][0].norm() - 2.0 * nv).abs() < 1e-12);
    }

    #[test]
    fn all_zero_input_rejected() {
        let z = vec![c(0.0, 0.0); 3];
        assert!(matches!(
            orthonormalize(&[z.clone(), z], euclid, DEFAULT_RANK_TOL),
            Err(Error::DegenerateInput)
        ));
    }

    #[test]
    fn reconstruction_of_random_inputs() {
        let mut state = 42u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let vectors: Vec<Vec<Complex64>> = (0..5)
            .map(|_| (0..8).map(|_| c(next(), next())).collect())
            .collect();
        let out = orthonormalize(&vectors, euclid, DEFAULT_RANK_TOL).unwrap();
        // Gram matrix of the basis is the identity.
        for (i, bi) in out.basis.iter().enumerate() {
            for (j, bj) in out.basis.iter().enumerate() {
                let g = euclid(bi, bj);
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((g - c(want, 0.0)).norm() < 1e-13);
            }
        }
        // Every input reconstructs from its coefficients.
        for (v, coeff) in vectors.iter().zip(&out.coefficients) {
            let mut rec = vec![c(0.0, 0.0); v.len()];
            for (cc, b) in coeff.iter().zip(&out.basis) {
                for (ri, bi) in rec.iter_mut().zip(b) {
                    *ri += cc * bi;
                }
            }
            let err: f64 = v
                .iter()
                .zip(&rec)
                .map(|(a, b)| (a - b).norm_sqr())
                .sum::<f64>()
                .sqrt();
            let nv = euclid(v, v).re.sqrt();
            assert!(err < 1e-9 * nv, "reconstruction error {err}");
        }
    }
}
