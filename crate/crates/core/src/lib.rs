//! Two-dimensional gamma-matrix representations of the 2+1 dimensional Dirac
//! equation.
//!
//! Every 2x2 representation of `{gamma^mu, gamma^nu} = 2 g^{mu nu} I` with
//! metric `diag(1, -1, -1)` is fixed by a proper rotation `A` with rows
//! `(c, b, a)`. This crate builds those representations and verifies them,
//! solves for plane-wave spinors, applies boosts and parity, and finds the
//! similarity transform between any two representations.
//!
//! ```
//! use gamma2d::{build_representation, so3_random, verify_clifford};
//!
//! let rep = build_representation(&so3_random(7)).unwrap();
//! assert!(verify_clifford(&rep, 1e-12).passed());
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod clifford;
pub mod error;
pub mod intertwiner;
pub mod mat2;
pub mod planewave;
pub mod report;
pub mod so3;
pub mod transforms;

pub use clifford::{
    anticommutator, build_representation, check_properties, clifford_report,
    conjugate_representation, eigen_gamma, element_relations_check, full_check, lower_index,
    preset_standard, product_identities_check, verify_clifford, GammaRep, Metric, DEFAULT_TOL,
};
pub use error::{Error, Result};
pub use intertwiner::{
    clifford_basis_rank, commutant_dimension, find_intertwiner, matrix_collinearity,
    verify_intertwiner, IntertwinerResult,
};
pub use mat2::{c64, Complex64, Mat2, Spinor};
pub use planewave::{
    adjoint_spinor, bilinear_current, bilinear_scalar, dirac_matrix, dispersion,
    normalization_denominator, nullspace_oracle, spinor, Branch, Momentum, Normalization,
    PlaneWaveSolution, EPS_DENOM,
};
pub use report::{Check, VerificationReport};
pub use so3::{
    so3_from_euler, so3_from_matrix, so3_from_quaternion, so3_random, so3_random_with,
    so3_validate, Admission, SO3Params,
};
pub use transforms::{
    boost_compose, boost_operator, boost_spinor, covariance_check, parity_apply, parity_check,
    parity_momentum, parity_operator, BoostAxis, BoostOp, ParityOp, Rapidity,
};
