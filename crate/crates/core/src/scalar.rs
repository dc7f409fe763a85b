//! Scalar traits the matrix algebra is generic over.
//!
//! Ring-only operations (products, commutators, traces, Kronecker products)
//! need nothing beyond [`Scalar`], so they run unchanged on exact rationals.
//! Anything touching square roots, exponentials or tolerances needs [`Real`].

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, Num};

/// A commutative ring element usable as the real part of a matrix entry.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + 'static {
    /// Small integer constant, built from `one()` so it exists for any ring.
    fn int(n: i32) -> Self {
        let mut acc = Self::zero();
        for _ in 0..n.unsigned_abs() {
            acc = acc + Self::one();
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }
}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> + 'static {}

/// Floating-point scalar (`f32` or `f64`).
pub trait Real: Scalar + Copy + Float + FloatConst + FromPrimitive + Display + Send + Sync {
    /// Converts an `f64` literal. Never fails for `f32`/`f64`.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable")
    }

    /// Converts to `f64` for reporting.
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl<T> Real for T where T: Scalar + Copy + Float + FloatConst + FromPrimitive + Display + Send + Sync {}

/// `i` in any ring.
pub fn imag_unit<T: Scalar>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}

/// Real number lifted to a complex entry.
pub fn re<T: Scalar>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

/// `e^{iθ}`.
pub fn cis<T: Real>(theta: T) -> Complex<T> {
    Complex::new(theta.cos(), theta.sin())
}
