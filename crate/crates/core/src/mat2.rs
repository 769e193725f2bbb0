//! Small dense complex 2x2 matrix used for spin representations and Fisher
//! matrix algebra.

use num_complex::Complex64;
use std::ops::{Add, Mul, Sub};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMat2 {
    /// Row-major entries.
    pub m: [[Complex64; 2]; 2],
}

impl CMat2 {
    pub fn new(a11: Complex64, a12: Complex64, a21: Complex64, a22: Complex64) -> Self {
        CMat2 { m: [[a11, a12], [a21, a22]] }
    }

    pub fn zero() -> Self {
        let z = Complex64::new(0.0, 0.0);
        CMat2::new(z, z, z, z)
    }

    pub fn identity() -> Self {
        let z = Complex64::new(0.0, 0.0);
        let o = Complex64::new(1.0, 0.0);
        CMat2::new(o, z, z, o)
    }

    pub fn adjoint(&self) -> Self {
        CMat2::new(
            self.m[0][0].conj(),
            self.m[1][0].conj(),
            self.m[0][1].conj(),
            self.m[1][1].conj(),
        )
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = *self;
        for row in &mut out.m {
            for v in row {
                *v *= s;
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Frobenius distance to the identity; unitarity and inverse checks.
    pub fn distance_to_identity(&self) -> f64 {
        (*self - CMat2::identity()).frobenius_norm()
    }
}

impl Add for CMat2 {
    type Output = CMat2;
    fn add(self, rhs: CMat2) -> CMat2 {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] += rhs.m[i][j];
            }
        }
        out
    }
}

impl Sub for CMat2 {
    type Output = CMat2;
    fn sub(self, rhs: CMat2) -> CMat2 {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] -= rhs.m[i][j];
            }
        }
        out
    }
}

impl Mul for CMat2 {
    type Output = CMat2;
    fn mul(self, rhs: CMat2) -> CMat2 {
        let mut out = CMat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] =
                    self.m[i][0] * rhs.m[0][j] + self.m[i][1] * rhs.m[1][j];
            }
        }
        out
    }
}
