use num_complex::Complex;

use super::ComplexMat;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Off-diagonal magnitude above which a matrix is not treated as diagonal.
pub const DIAGONAL_TOL: f64 = 1e-12;

/// `exp(-i t d)` for diagonal `d`, evaluated entrywise.
pub fn mat_exp_diag<T: Real>(d: &ComplexMat<T>, t: T) -> Result<ComplexMat<T>> {
    let off = d.offdiag_max();
    if off >= T::lit(DIAGONAL_TOL) {
        return Err(Error::NotDiagonal { offdiag: off.as_f64() });
    }
    let minus_it = Complex::new(T::zero(), -t);
    let entries: Vec<Complex<T>> = d.diagonal().into_iter().map(|z| (minus_it * z).exp()).collect();
    ComplexMat::diag(&entries)
}

/// General matrix exponential `exp(a)` by scaling and squaring with a
/// truncated Taylor series.
pub fn expm<T: Real>(a: &ComplexMat<T>) -> ComplexMat<T> {
    let norm = a.max_abs() * T::from_usize(a.dim()).expect("small");
    let mut squarings = 0u32;
    let mut scale = T::one();
    while norm * scale > T::lit(0.25) {
        scale = scale * T::lit(0.5);
        squarings += 1;
    }
    let scaled = a.scale_re(&scale);
    let id = ComplexMat::identity(a.dim()).expect("valid dim");
    let mut term = id.clone();
    let mut sum = id;
    for k in 1..=24 {
        term = (&term * &scaled).scale_re(&(T::one() / T::from_usize(k).expect("small")));
        sum = &sum + &term;
        if term.max_abs() < T::epsilon() * T::lit(1e-3) {
            break;
        }
    }
    for _ in 0..squarings {
        sum = &sum * &sum;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{basis16, KronLabel, Pauli};

    fn c(re: f64) -> Complex<f64> {
        Complex::new(re, 0.0)
    }

    #[test]
    fn diagonal_exponential_matches_closed_form() {
        let e = 1.7;
        let t = 0.37;
        let d = ComplexMat::diag(&[c(e), c(e), c(-e), c(-e)]).unwrap();
        let u = mat_exp_diag(&d, t).unwrap();
        let a = Complex::new(0.0, -e * t).exp();
        let expected = ComplexMat::diag(&[a, a, a.conj(), a.conj()]).unwrap();
        assert!(u.max_abs_diff(&expected) < 1e-15);
        assert!(u.is_unitary(1e-14));
        assert_eq!(mat_exp_diag(&d, 0.0).unwrap(), ComplexMat::identity(4).unwrap());
    }

    #[test]
    fn rejects_non_diagonal() {
        let m = KronLabel::new(Pauli::X, Pauli::I).matrix::<f64>();
        assert!(matches!(mat_exp_diag(&m, 1.0), Err(Error::NotDiagonal { .. })));
    }

    #[test]
    fn series_agrees_with_diagonal_path() {
        let d = ComplexMat::diag(&[c(0.3), c(2.5), c(-1.1), c(-1.7)]).unwrap();
        for t in [0.0, 0.4, 3.0, 11.0] {
            let general = expm(&d.scale(&Complex::new(0.0, -t)));
            let diag = mat_exp_diag(&d, t).unwrap();
            assert!(general.max_abs_diff(&diag) < 1e-12, "t = {t}");
        }
    }

    #[test]
    fn exponential_of_pauli_rotation() {
        // exp(-i θ σ) = cos θ - i sin θ σ for any involutory σ
        for (_, s) in basis16::<f64>().into_iter().skip(1) {
            let theta = 0.83;
            let u = expm(&s.scale(&Complex::new(0.0, -theta)));
            let id = ComplexMat::identity(4).unwrap();
            let expected = &id.scale_re(&theta.cos()) + &s.scale(&Complex::new(0.0, -theta.sin()));
            assert!(u.max_abs_diff(&expected) < 1e-13);
        }
    }
}
