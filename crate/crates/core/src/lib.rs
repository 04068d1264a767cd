//! Tropical duality of quadrics over the max-plus semiring.
//!
//! Scalars are exact rationals extended by `-inf`. A quadric in `n`
//! variables is stored as its symmetric `(n+1)×(n+1)` coefficient matrix;
//! its tropical dual is the tropical adjoint of that matrix. The
//! [`symbolic`], [`classical`] and [`tropicalize`] modules provide the
//! classical side used to check the tropical constructions.

#![allow(clippy::needless_range_loop)]

pub mod batch;
pub mod classical;
pub mod curve;
pub mod error;
pub mod matrix;
pub mod polynomial;
pub mod quadric;
pub mod semiring;
pub mod subdivision;
pub mod symbolic;
pub mod tropicalize;

pub use curve::{tropical_curve, TropicalCurve};
pub use error::{Error, Result};
pub use matrix::{trop_adjoint, trop_det, trop_minor, TropDetResult, TropMatrix};
pub use polynomial::{Sign, TropPolynomial};
pub use quadric::{
    distortion_matrix, dual_quadric, is_regular, matrix_from_poly, poly_from_matrix, DistortionMatrix, QuadricMatrix,
    RegularityStatus, RegularityVerdict,
};
pub use semiring::{rat, Rational, TropValue, NEG_INF};
pub use subdivision::{induced_subdivision, node_classification, NodeClass, Subdivision};
