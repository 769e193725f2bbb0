//! Quantum Fisher information family and error-tradeoff analysis for the
//! unitary-shift model of a boosted spin-1/2 Gaussian wave packet.
//!
//! A moving observer who can access only the position degrees of freedom
//! sees the rest-frame Gaussian state mixed by the momentum-dependent spin
//! rotation. This crate computes, for that model:
//!
//! - the scalar integrals zeta and xi and their closed relativistic forms
//!   ([`model`]);
//! - the one-parameter lambda-LD family of quantum Fisher information
//!   matrices, both in closed form and through a general
//!   eigendecomposition-based algorithm valid for rank-deficient states
//!   ([`fisher`]);
//! - the tradeoff indicator omega, the threshold lambda* where it changes
//!   sign, and the Cramér–Rao bound geometry behind it ([`tradeoff`]);
//! - the coordinate-space spin-up amplitude and its off-axis density peak
//!   ([`wavepacket`]).
//!
//! The numerical kernels (adaptive Gauss–Legendre quadrature, erfc/erfcx,
//! Bessel J1, root bracketing, golden-section search, complex Gram–Schmidt)
//! live in [`numerics`] and carry no external special-function dependency.
//!
//! All operations are pure functions of their inputs and safe to call
//! concurrently.

pub mod error;
pub mod fisher;
pub mod mat2;
pub mod model;
pub mod numerics;
pub mod tradeoff;
pub mod wavepacket;

pub use error::{Error, Result};
pub use fisher::{
    build_reduced_model, fim_lambda_analytic, fim_lambda_general, fim_lambda_inverse_analytic,
    sld_fim_inverse, FiniteModel, HermitianMatrix2, LambdaWeights, PolarGridSpec,
};
pub use mat2::CMat2;
pub use model::wigner::{
    spin_half_rep, wigner_angles, wigner_rotation_matrix, Rotation3, WignerAngles,
};
pub use model::{
    identity_residual, theta_ratio, xi, xi_rel, zeta, zeta_rel, ModelParams, ScalarFunctions,
};
pub use numerics::QuadratureSpec;
pub use tradeoff::{
    lambda_star, lambda_star_bisect, omega, omega_from_fims, omega_limit0, omega_limit1,
    BoundIntersections, MonotonicityCertificate, MsePoint, RegionVerdict, TradeoffContext,
    TradeoffReport,
};
pub use wavepacket::{
    peak_radius, rotational_symmetry_residual, spin_up_amplitude, AmplitudeSample,
};
