//! Self-contained numerical kernels: adaptive quadrature, special functions,
//! root finding, unimodal maximization and complex orthonormalization.
//!
//! Everything here is a pure function of its arguments and safe to call
//! concurrently.

pub mod gauss;
pub mod orthonormal;
pub mod quadrature;
pub mod roots;
pub mod special;

pub use gauss::gauss_legendre;
pub use orthonormal::{orthonormalize, OrthonormalBasis, DEFAULT_RANK_TOL};
pub use quadrature::{
    integrate_finite, integrate_finite_capped, integrate_semi_infinite, IntegrandValue,
    IntegrationResult, QuadratureSpec,
};
pub use roots::{find_root_bracketed, maximize_unimodal};
pub use special::{bessel_j1, erfc, erfcx};
