use num_complex::Complex;
use num_traits::{One, Zero};

use super::ComplexMat;
use crate::scalar::Real;

/// Eigen-decomposition of a Hermitian matrix.
#[derive(Clone, Debug)]
pub struct Eigh<T> {
    /// Eigenvalues, descending.
    pub values: Vec<T>,
    /// Orthonormal eigenvectors as columns, in the order of `values`.
    pub vectors: ComplexMat<T>,
}

/// Cyclic complex Jacobi eigensolver for small Hermitian matrices.
///
/// Output is deterministic: columns are sorted by descending eigenvalue and
/// each column is phased so that its largest-magnitude entry (lowest row index
/// on ties) is real and positive.
pub fn eigh<T: Real>(h: &ComplexMat<T>) -> Eigh<T> {
    let n = h.dim();
    let mut a = h.traceless_hermitian_part();
    let shift = h.trace().re / T::from_usize(n).expect("small");
    let mut v = ComplexMat::identity(n).expect("valid dim");
    let scale = a.max_abs().max(T::min_positive_value());

    for _sweep in 0..64 {
        let off: T = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a.get(p, q).norm_sqr())
            .fold(T::zero(), |x, y| x + y);
        if off.sqrt() <= T::epsilon() * T::lit(1e-2) * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = *a.get(p, q);
                let b = apq.norm();
                if b <= T::min_positive_value() {
                    continue;
                }
                let phase = apq / b;
                let tau = (a.get(q, q).re - a.get(p, p).re) / (b + b);
                let t = if tau >= T::zero() {
                    T::one() / (tau + (T::one() + tau * tau).sqrt())
                } else {
                    -T::one() / (-tau + (T::one() + tau * tau).sqrt())
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                let mut j = ComplexMat::identity(n).expect("valid dim");
                j.set(p, p, Complex::new(c, T::zero()));
                j.set(p, q, Complex::new(s, T::zero()));
                j.set(q, p, phase.conj() * (-s));
                j.set(q, q, phase.conj() * c);
                a = &(&j.adjoint() * &a) * &j;
                v = &v * &j;
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<T> = (0..n).map(|k| a.get(k, k).re + shift).collect();
    order.sort_by(|&x, &y| diag[y].partial_cmp(&diag[x]).unwrap_or(std::cmp::Ordering::Equal));

    let mut vectors = ComplexMat::zeros(n).expect("valid dim");
    for (col, &src) in order.iter().enumerate() {
        let column: Vec<Complex<T>> = (0..n).map(|r| *v.get(r, src)).collect();
        let peak = column.iter().map(|z| z.norm()).fold(T::zero(), T::max);
        let pivot = column
            .iter()
            .position(|z| z.norm() >= peak * (T::one() - T::lit(1e-9)))
            .unwrap_or(0);
        let rot = if column[pivot].is_zero() {
            Complex::one()
        } else {
            column[pivot].conj() / column[pivot].norm()
        };
        for (r, z) in column.into_iter().enumerate() {
            vectors.set(r, col, z * rot);
        }
    }
    Eigh {
        values: order.iter().map(|&k| diag[k]).collect(),
        vectors,
    }
}
