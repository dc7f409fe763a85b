//! Dense complex 2×2 / 4×4 matrices and the Pauli–Kronecker operator basis.
//!
//! Every operator in the crate is a [`ComplexMat`]. Entries are stored
//! row-major. Ring operations are generic over [`Scalar`], so the same code
//! runs in `f64`, `f32` and exact rational arithmetic.

mod eigh;
mod expm;
mod json;
mod pauli;

pub use eigh::{eigh, Eigh};
pub use expm::{expm, mat_exp_diag, DIAGONAL_TOL};
pub use json::MatJson;
pub use pauli::{basis16, pauli, KronLabel, Pauli};

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

/// Default absolute comparison tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Complex 4-component state vector.
pub type Spinor<T> = [Complex<T>; 4];

/// Dense square complex matrix of dimension 2 or 4.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMat<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

fn check_dim(dim: usize) -> Result<()> {
    match dim {
        2 | 4 => Ok(()),
        d => Err(Error::InvalidDim(d)),
    }
}

impl<T: Scalar> ComplexMat<T> {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            dim,
            data: vec![Complex::zero(); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for k in 0..dim {
            m.data[k * dim + k] = Complex::one();
        }
        Ok(m)
    }

    /// Builds a matrix from row-major entries.
    pub fn from_row_major(dim: usize, data: Vec<Complex<T>>) -> Result<Self> {
        check_dim(dim)?;
        if data.len() != dim * dim {
            return Err(Error::EntryCount {
                expected: dim * dim,
                got: data.len(),
            });
        }
        Ok(Self { dim, data })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Result<Self> {
        check_dim(dim)?;
        let data = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Ok(Self { dim, data })
    }

    /// 4×4 matrix with small-integer real entries, as printed in the literature.
    pub fn from_int_rows(rows: [[i32; 4]; 4]) -> Self {
        Self::from_fn(4, |r, c| Complex::new(T::int(rows[r][c]), T::zero())).expect("4 is a valid dimension")
    }

    /// Diagonal matrix with the given entries (length 2 or 4).
    pub fn diag(entries: &[Complex<T>]) -> Result<Self> {
        let dim = entries.len();
        Self::from_fn(dim, |r, c| if r == c { entries[r].clone() } else { Complex::zero() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn get(&self, row: usize, col: usize) -> &Complex<T> {
        &self.data[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Complex<T>) {
        self.data[row * self.dim + col] = value;
    }

    pub fn diagonal(&self) -> Vec<Complex<T>> {
        (0..self.dim).map(|k| self.get(k, k).clone()).collect()
    }

    pub fn trace(&self) -> Complex<T> {
        self.diagonal().into_iter().fold(Complex::zero(), |acc, z| acc + z)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        Self {
            dim: n,
            data: (0..n * n).map(|k| self.get(k % n, k / n).conj()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        Self {
            dim: n,
            data: (0..n * n).map(|k| self.get(k % n, k / n).clone()).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn map(&self, f: impl Fn(&Complex<T>) -> Complex<T>) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, s: &Complex<T>) -> Self {
        self.map(|z| z.clone() * s.clone())
    }

    pub fn scale_re(&self, s: &T) -> Self {
        self.map(|z| z.clone() * s.clone())
    }

    fn same_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        Ok(Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn try_matmul(&self, other: &Self) -> Result<Self> {
        self.same_dim(other)?;
        let n = self.dim;
        let mut out = vec![Complex::zero(); n * n];
        for r in 0..n {
            for k in 0..n {
                let a = &self.data[r * n + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    out[r * n + c] = out[r * n + c].clone() + a.clone() * other.data[k * n + c].clone();
                }
            }
        }
        Ok(Self { dim: n, data: out })
    }

    /// Matrix–vector product for 4×4 matrices.
    pub fn apply(&self, v: &Spinor<T>) -> Result<Spinor<T>> {
        if self.dim != 4 {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: 4,
            });
        }
        Ok(std::array::from_fn(|r| {
            (0..4).fold(Complex::zero(), |acc, c| acc + self.get(r, c).clone() * v[c].clone())
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.is_zero())
    }
}

impl<T: Real> ComplexMat<T> {
    /// Largest entry magnitude.
    pub fn max_abs(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// `max |a_ij - b_ij|`; infinite on a dimension mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        match self.try_sub(other) {
            Ok(d) => d.max_abs(),
            Err(_) => T::infinity(),
        }
    }

    /// Largest magnitude away from the diagonal.
    pub fn offdiag_max(&self) -> T {
        let n = self.dim;
        (0..n * n)
            .filter(|k| k / n != k % n)
            .map(|k| self.data[k].norm())
            .fold(T::zero(), T::max)
    }

    /// Largest imaginary-part magnitude.
    pub fn max_imag(&self) -> T {
        self.data.iter().map(|z| z.im.abs()).fold(T::zero(), T::max)
    }

    pub fn hermiticity_residual(&self) -> T {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.hermiticity_residual() <= tol
    }

    /// `max |U†U - 1|`.
    pub fn unitarity_residual(&self) -> T {
        let id = Self::identity(self.dim).expect("valid dim");
        (&self.adjoint() * self).max_abs_diff(&id)
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        self.unitarity_residual() <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Hermitian part with the trace removed: the orthogonal projection onto
    /// traceless Hermitian matrices.
    pub fn traceless_hermitian_part(&self) -> Self {
        let half = T::lit(0.5);
        let herm = self.try_add(&self.adjoint()).expect("same dim").scale_re(&half);
        let shift = herm.trace().re / T::from_usize(self.dim).expect("small dim");
        let mut out = herm;
        for k in 0..self.dim {
            let z = *out.get(k, k);
            out.set(k, k, Complex::new(z.re - shift, T::zero()));
        }
        out
    }

    /// Determinant (4×4 by cofactor expansion, 2×2 directly).
    pub fn det(&self) -> Complex<T> {
        fn det_rec<T: Real>(m: &[Complex<T>], n: usize) -> Complex<T> {
            if n == 1 {
                return m[0];
            }
            let mut acc = Complex::zero();
            for c in 0..n {
                let minor: Vec<Complex<T>> = (1..n)
                    .flat_map(|r| (0..n).filter(move |&cc| cc != c).map(move |cc| (r, cc)))
                    .map(|(r, cc)| m[r * n + cc])
                    .collect();
                let term = m[c] * det_rec(&minor, n - 1);
                acc = if c % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
        det_rec(&self.data, self.dim)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $try:ident) => {
        impl<T: Scalar> $trait<&ComplexMat<T>> for &ComplexMat<T> {
            type Output = ComplexMat<T>;
            /// Panics on a dimension mismatch; use the `try_` form for fallible use.
            fn $method(self, rhs: &ComplexMat<T>) -> ComplexMat<T> {
                self.$try(rhs).expect("matrix dimensions agree")
            }
        }
        impl<T: Scalar> $trait<ComplexMat<T>> for ComplexMat<T> {
            type Output = ComplexMat<T>;
            fn $method(self, rhs: ComplexMat<T>) -> ComplexMat<T> {
                self.$try(&rhs).expect("matrix dimensions agree")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_matmul);

impl<T: Scalar> Neg for &ComplexMat<T> {
    type Output = ComplexMat<T>;
    fn neg(self) -> ComplexMat<T> {
        self.map(|z| -z.clone())
    }
}

impl<T: Scalar> Neg for ComplexMat<T> {
    type Output = ComplexMat<T>;
    fn neg(self) -> ComplexMat<T> {
        -&self
    }
}

/// Kronecker product of two 2×2 matrices.
pub fn kron<T: Scalar>(a: &ComplexMat<T>, b: &ComplexMat<T>) -> Result<ComplexMat<T>> {
    for m in [a, b] {
        if m.dim != 2 {
            return Err(Error::DimensionMismatch { left: m.dim, right: 2 });
        }
    }
    ComplexMat::from_fn(4, |r, c| a.get(r / 2, c / 2).clone() * b.get(r % 2, c % 2).clone())
}

/// `[a, b] = ab - ba`.
pub fn commutator<T: Scalar>(a: &ComplexMat<T>, b: &ComplexMat<T>) -> Result<ComplexMat<T>> {
    a.try_matmul(b)?.try_sub(&b.try_matmul(a)?)
}

/// `{a, b} = ab + ba`.
pub fn anticommutator<T: Scalar>(a: &ComplexMat<T>, b: &ComplexMat<T>) -> Result<ComplexMat<T>> {
    a.try_matmul(b)?.try_add(&b.try_matmul(a)?)
}

/// `Tr[ab]` without forming the product.
pub fn trace_pair<T: Scalar>(a: &ComplexMat<T>, b: &ComplexMat<T>) -> Result<Complex<T>> {
    a.same_dim(b)?;
    let n = a.dim;
    let mut acc = Complex::zero();
    for r in 0..n {
        for k in 0..n {
            acc = acc + a.data[r * n + k].clone() * b.data[k * n + r].clone();
        }
    }
    Ok(acc)
}

/// `⟨u|v⟩`.
pub fn inner<T: Scalar>(u: &Spinor<T>, v: &Spinor<T>) -> Complex<T> {
    u.iter()
        .zip(v)
        .fold(Complex::zero(), |acc, (a, b)| acc + a.conj() * b.clone())
}

pub fn spinor_norm<T: Real>(v: &Spinor<T>) -> T {
    inner(v, v).re.sqrt()
}
