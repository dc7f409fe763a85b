//! Quantum brachistochrone flows on 4×4 spinor representations.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod angmom4;
pub mod cliffrep;
pub mod error;
pub mod frames;
pub mod matcore;
pub mod propagate;
pub mod qbe;
pub mod scalar;
pub mod scatter;
pub mod suite;

pub use error::{Error, Result};
pub use frames::Verdict;
pub use matcore::{ComplexMat, KronLabel, Spinor};
pub use scalar::{Real, Scalar};

/// Double-precision matrices, the default for numerics.
pub type Mat = ComplexMat<f64>;
pub type Mat32 = ComplexMat<f32>;
/// Exact rational matrices for algebraic identities.
pub type RationalMat = ComplexMat<num_rational::Rational64>;
