//! Spectral radius and Hamiltonicity toolkit for small graphs.
//!
//! The crate builds the graph families that appear in spectral conditions
//! for Hamilton paths and cycles, computes spectral radii with a certified
//! two-sided bracket, decides Hamiltonicity exactly, and runs exhaustive
//! verification scans over all labeled graphs of small order.
//!
//! Floating-point routines are generic over [`Scalar`] (`f32` or `f64`);
//! exact routines are generic over integer or rational types from the
//! `num` family. The aliases below fix the common choices.

pub mod error;
pub mod graph;
pub mod hamilton;
pub mod spectral;
pub mod verify;

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

pub use error::{Error, Result};
pub use graph::{DegreeSequence, FamilySpec, Graph};

/// Floating-point type the numeric routines run on.
pub trait Scalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Smallest bisection width worth asking for at this precision.
    fn bisection_floor() -> Self;
}

impl Scalar for f32 {
    fn bisection_floor() -> Self {
        1e-6
    }
}

impl Scalar for f64 {
    fn bisection_floor() -> Self {
        1e-12
    }
}

pub type Estimate = spectral::SpectralEstimate<f64>;
pub type EstimateF32 = spectral::SpectralEstimate<f32>;

/// Exact integer type for characteristic polynomials.
pub type ExactInt = num_bigint::BigInt;
/// Exact rational type for sign checks on polynomials.
pub type ExactRatio = num_rational::BigRational;
