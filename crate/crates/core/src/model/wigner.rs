//! Momentum-dependent spin rotation seen by the boosted observer: rotation
//! angles, the 3x3 rotation matrix and its spin-1/2 representation.

use num_complex::Complex64;

use crate::mat2::CMat2;
use crate::model::ModelParams;

/// Rotation angle pair (alpha, phi) at momentum (p1, p2).
///
/// alpha is stored as its cosine/sine pair; the angle itself is extracted
/// with atan2 only on demand. For V >= 0 the sine is non-positive, so
/// alpha lies in [-pi, 0].
#[derive(Debug, Clone, Copy)]
pub struct WignerAngles {
    pub cos_alpha: f64,
    pub sin_alpha: f64,
    pub phi: f64,
    /// False only at |p| = 0, where the azimuth is a removable singularity;
    /// alpha = 0 there and phi is reported as 0.
    pub phase_defined: bool,
}

impl WignerAngles {
    pub fn alpha(&self) -> f64 {
        self.sin_alpha.atan2(self.cos_alpha)
    }
}

/// Real orthogonal 3x3 matrix with determinant +1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3 {
    pub entries: [[f64; 3]; 3],
}

impl Rotation3 {
    pub fn identity() -> Self {
        let mut entries = [[0.0; 3]; 3];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Rotation3 { entries }
    }

    pub fn mul(&self, other: &Rotation3) -> Rotation3 {
        let mut out = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = (0..3).map(|k| self.entries[i][k] * other.entries[k][j]).sum();
            }
        }
        Rotation3 { entries: out }
    }

    /// max |R^T R - I| entry.
    pub fn orthogonality_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                let dot: f64 = (0..3).map(|k| self.entries[k][i] * self.entries[k][j]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - want).abs());
            }
        }
        worst
    }

    pub fn det(&self) -> f64 {
        let m = &self.entries;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    pub fn max_abs_diff(&self, other: &Rotation3) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                worst = worst.max((self.entries[i][j] - other.entries[i][j]).abs());
            }
        }
        worst
    }
}

/// Rotation about z by phi.
pub fn rotation_z(phi: f64) -> Rotation3 {
    let (s, c) = phi.sin_cos();
    Rotation3 { entries: [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]] }
}

/// Rotation about y with the given cosine/sine of the angle, in the
/// convention `[[cos, 0, -sin], [0, 1, 0], [sin, 0, cos]]`.
pub fn rotation_y(cos_alpha: f64, sin_alpha: f64) -> Rotation3 {
    Rotation3 {
        entries: [
            [cos_alpha, 0.0, -sin_alpha],
            [0.0, 1.0, 0.0],
            [sin_alpha, 0.0, cos_alpha],
        ],
    }
}

/// Rotation angles at momentum (p1, p2), p3 = 0.
///
/// The cosine and sine are evaluated after dividing through by cosh(chi):
///   cos(alpha) = (p0 sqrt(1-V^2) + m) / (p0 + m sqrt(1-V^2)),
///   sin(alpha) = -|p| V / (p0 + m sqrt(1-V^2)),
/// a form that stays finite through V = 1.
pub fn wigner_angles(p1: f64, p2: f64, params: &ModelParams) -> WignerAngles {
    let m = params.mass();
    let pn = p1.hypot(p2);
    if pn == 0.0 {
        return WignerAngles { cos_alpha: 1.0, sin_alpha: 0.0, phi: 0.0, phase_defined: false };
    }
    let p0 = (m * m + pn * pn).sqrt();
    let iv = params.inv_cosh_chi();
    let den = p0 + m * iv;
    WignerAngles {
        cos_alpha: (p0 * iv + m) / den,
        sin_alpha: -pn * params.velocity() / den,
        phi: p2.atan2(p1),
        phase_defined: true,
    }
}

/// The 3x3 rotation at momentum (p1, p2): `R_z(-phi) R_y(alpha) R_z(phi)`,
/// written out entrywise in the cosines and sines so no angle extraction is
/// needed.
pub fn wigner_rotation_matrix(p1: f64, p2: f64, params: &ModelParams) -> Rotation3 {
    let a = wigner_angles(p1, p2, params);
    let (ca, sa) = (a.cos_alpha, a.sin_alpha);
    let pn = p1.hypot(p2);
    let (cphi, sphi) = if pn == 0.0 { (1.0, 0.0) } else { (p1 / pn, p2 / pn) };
    Rotation3 {
        entries: [
            [ca * cphi * cphi + sphi * sphi, sphi * cphi * (1.0 - ca), -sa * cphi],
            [sphi * cphi * (1.0 - ca), ca * sphi * sphi + cphi * cphi, sa * sphi],
            [sa * cphi, -sa * sphi, ca],
        ],
    }
}

/// Spin-1/2 representation of the rotation:
/// `[[cos(a/2), -e^{i phi} sin(a/2)], [e^{-i phi} sin(a/2), cos(a/2)]]`.
pub fn spin_half_rep(angles: &WignerAngles) -> CMat2 {
    let half = 0.5 * angles.alpha();
    let (s2, c2) = half.sin_cos();
    let e = Complex64::from_polar(1.0, angles.phi);
    CMat2::new(
        Complex64::new(c2, 0.0),
        -e * s2,
        e.conj() * s2,
        Complex64::new(c2, 0.0),
    )
}
