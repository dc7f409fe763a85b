//! The 4-D angular-momentum tensor `M^{νρ}` as a toy Hamiltonian `H = iM`.

use num_complex::Complex;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{expm, trace_pair, ComplexMat, KronLabel};
use crate::qbe::{complement_span, integrate_qbe, span_coefficients, BrachSystem};
use crate::scalar::Real;

/// Boosts `n = (N_x, N_y, N_z)` and rotations `l = (L_yz, L_zx, L_xy)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AngMomTensor<T> {
    pub n: [T; 3],
    pub l: [T; 3],
}

/// Real antisymmetric `M̃` with first row `(0, −N_x, −N_y, −N_z)`.
pub fn assemble_tensor<T: Real>(n: [T; 3], l: [T; 3]) -> ComplexMat<T> {
    let z = T::zero();
    let [nx, ny, nz] = n;
    let [lyz, lzx, lxy] = l;
    let rows = [
        [z, -nx, -ny, -nz],
        [nx, z, lxy, -lzx],
        [ny, -lxy, z, lyz],
        [nz, lzx, -lyz, z],
    ];
    ComplexMat::from_fn(4, |r, c| Complex::new(rows[r][c], z)).expect("4x4")
}

impl<T: Real> AngMomTensor<T> {
    pub fn matrix(&self) -> ComplexMat<T> {
        assemble_tensor(self.n, self.l)
    }

    /// `H = iM̃`.
    pub fn hamiltonian(&self) -> ComplexMat<T> {
        self.matrix().scale(&Complex::new(T::zero(), T::one()))
    }

    /// Reads `(n, l)` back from a Hamiltonian `H = iM̃`.
    pub fn from_hamiltonian(h: &ComplexMat<T>) -> Self {
        let m = |r, c| h.get(r, c).im;
        Self {
            n: [m(1, 0), m(2, 0), m(3, 0)],
            l: [m(2, 3), m(3, 1), m(1, 2)],
        }
    }

    /// `[N_x, N_y, N_z, L_yz, L_zx, L_xy]`.
    pub fn components(&self) -> [T; 6] {
        [self.n[0], self.n[1], self.n[2], self.l[0], self.l[1], self.l[2]]
    }
}

/// Labels spanning `iM̃`: those with an odd number of `σ_y` factors.
pub fn angmom_span() -> Vec<KronLabel> {
    use crate::matcore::Pauli::Y;
    KronLabel::traceless()
        .filter(|l| (l.left == Y) != (l.right == Y))
        .collect()
}

/// `Tr[(iM̃)²/2]`.
pub fn angmom_invariant<T: Real>(n: [T; 3], l: [T; 3]) -> T {
    let h = AngMomTensor { n, l }.hamiltonian();
    trace_pair(&h, &h).expect("4x4").re * T::lit(0.5)
}

/// Brachistochrone system for `H = iM̃` with a real symmetric traceless constraint.
pub fn angmom_system<T: Real>(tensor: &AngMomTensor<T>, f0: &ComplexMat<T>) -> Result<BrachSystem<T>> {
    let h = tensor.hamiltonian();
    let scale = f0.max_abs().max(T::one());
    let asym = f0.max_abs_diff(&f0.transpose()).max(f0.max_imag());
    if asym > T::lit(1e-12) * scale {
        return Err(Error::InvalidConstraint(asym.as_f64()));
    }
    let tr = f0.trace().norm();
    if tr > T::lit(1e-12) * scale {
        return Err(Error::NotTraceless(tr.as_f64()));
    }
    let hf = trace_pair(&h, f0)?.norm();
    if hf > T::lit(1e-12) * scale * h.max_abs().max(T::one()) {
        return Err(Error::NotOrthogonal(hf.as_f64()));
    }
    let span = angmom_span();
    let lambda = span_coefficients(f0, &complement_span(&span)?);
    BrachSystem::new(h, span, lambda)
}

/// Drift figures for an integrated angular-momentum trajectory.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConservationReport {
    pub tensor: AngMomTensor<f64>,
    pub t_end: f64,
    pub step: f64,
    pub samples: usize,
    /// `max_t ‖H(t) − H(0)‖_max`.
    pub max_h_drift: f64,
    /// Per component `[N_x, N_y, N_z, L_yz, L_zx, L_xy]`, `max_t |c(t) − c(0)|`.
    pub component_drift: [f64; 6],
    /// `max_t ‖F(t) − exp(M̃t) F(0) exp(−M̃t)‖_max`.
    pub f_flow_residual: f64,
    pub invariant: f64,
    pub invariant_drift: f64,
}

/// Integrates the brachistochrone flow for `H = iM̃` and measures how far
/// `M̃` and the constraint flow depart from the closed forms.
pub fn qbe_conservation(
    tensor: AngMomTensor<f64>,
    f0: &ComplexMat<f64>,
    t_end: f64,
    step: f64,
) -> Result<ConservationReport> {
    let sys = angmom_system(&tensor, f0)?;
    let traj = integrate_qbe(&sys, t_end, step)?;
    let m = tensor.matrix();
    let c0 = tensor.components();
    let mut component_drift = [0.0f64; 6];
    let mut max_h_drift = 0.0f64;
    let mut f_flow_residual = 0.0f64;
    for ((t, h), f) in traj.times.iter().zip(&traj.h_t).zip(&traj.f_t) {
        max_h_drift = max_h_drift.max(h.max_abs_diff(&sys.h0));
        let ct = AngMomTensor::from_hamiltonian(h).components();
        for k in 0..6 {
            component_drift[k] = component_drift[k].max((ct[k] - c0[k]).abs());
        }
        let fwd = expm(&m.scale_re(t));
        let back = expm(&m.scale_re(&-t));
        f_flow_residual = f_flow_residual.max(f.max_abs_diff(&(&(&fwd * f0) * &back)));
    }
    let invariant = angmom_invariant(tensor.n, tensor.l);
    Ok(ConservationReport {
        tensor,
        t_end,
        step: traj.step,
        samples: traj.len(),
        max_h_drift,
        component_drift,
        f_flow_residual,
        invariant,
        invariant_drift: traj.isotropic_drift(invariant),
    })
}

/// Seeded tensor with entries in `[−1, 1]` and a random real symmetric
/// traceless constraint.
pub fn random_case(seed: u64) -> (AngMomTensor<f64>, ComplexMat<f64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || rng.gen_range(-1.0..=1.0);
    let tensor = AngMomTensor {
        n: [draw(), draw(), draw()],
        l: [draw(), draw(), draw()],
    };
    let mut f = ComplexMat::zeros(4).expect("4x4");
    for r in 0..4 {
        for c in r..4 {
            let v = Complex::new(draw(), 0.0);
            f.set(r, c, v);
            f.set(c, r, v);
        }
    }
    let shift = f.trace() * 0.25;
    for k in 0..4 {
        let v = f.get(k, k) - shift;
        f.set(k, k, v);
    }
    (tensor, f)
}

/// Printed block rotation for the reduced data `N_y = N_z = 0`, `L_zx = L_xy = 0`.
pub fn block_propagator<T: Real>(n_x: T, l_yz: T, t: T) -> ComplexMat<T> {
    let z = T::zero();
    let (cn, sn) = ((n_x * t).cos(), (n_x * t).sin());
    let (cl, sl) = ((l_yz * t).cos(), (l_yz * t).sin());
    let rows = [[cn, -sn, z, z], [sn, cn, z, z], [z, z, cl, -sl], [z, z, sl, cl]];
    ComplexMat::from_fn(4, |r, c| Complex::new(rows[r][c], z)).expect("4x4")
}

/// Reduced Hamiltonian `i[[0,−N_x],[N_x,0]] ⊕ i[[0,−L_yz],[L_yz,0]]` as displayed.
pub fn reduced_hamiltonian<T: Real>(n_x: T, l_yz: T) -> ComplexMat<T> {
    let mut h = ComplexMat::zeros(4).expect("4x4");
    let i = |x: T| Complex::new(T::zero(), x);
    h.set(0, 1, i(-n_x));
    h.set(1, 0, i(n_x));
    h.set(2, 3, i(-l_yz));
    h.set(3, 2, i(l_yz));
    h
}

/// Printed eigenmatrix `W` and `D = diag(N_x, −N_x, L_yz, −L_yz)` of the reduced system.
pub fn block_eigenframe<T: Real>(n_x: T, l_yz: T) -> (ComplexMat<T>, ComplexMat<T>) {
    let o = Complex::new(T::one(), T::zero());
    let i = Complex::new(T::zero(), T::one());
    let z = Complex::zero();
    let w = ComplexMat::from_row_major(4, vec![-i, i, z, z, o, o, z, z, z, z, -i, i, z, z, o, o]).expect("4x4");
    let r = |x: T| Complex::new(x, T::zero());
    let d = ComplexMat::diag(&[r(n_x), r(-n_x), r(l_yz), r(-l_yz)]).expect("4x4");
    (w, d)
}

/// Pauli–Lubanski vector with lower index, metric `(+,−,−,−)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PLVector<T> {
    /// `W_μ`.
    pub w: [T; 4],
}

impl<T: Real> PLVector<T> {
    /// `W^μ`.
    pub fn upper(&self) -> [T; 4] {
        [self.w[0], -self.w[1], -self.w[2], -self.w[3]]
    }

    /// `W_μ P^μ` for upper-index `p`.
    pub fn dot(&self, p: &[T; 4]) -> T {
        (0..4).fold(T::zero(), |acc, k| acc + self.w[k] * p[k])
    }
}

/// Sign of the permutation `idx` of `(0,1,2,3)`, zero on repeats; `ε_{0123} = +1`.
pub fn levi_civita(idx: [usize; 4]) -> i32 {
    let mut sign = 1;
    for a in 0..4 {
        for b in a + 1..4 {
            if idx[a] == idx[b] {
                return 0;
            }
            if idx[a] > idx[b] {
                sign = -sign;
            }
        }
    }
    sign
}

/// `W_μ = ½ ε_{μνρσ} M^{νρ} P^σ` with `M^{νρ}` the assembled tensor and
/// `p = (P^0, P^1, P^2, P^3)`.
pub fn pauli_lubanski<T: Real>(n: [T; 3], l: [T; 3], p: [T; 4]) -> PLVector<T> {
    let m = assemble_tensor(n, l);
    let half = T::lit(0.5);
    let mut w = [T::zero(); 4];
    for (mu, slot) in w.iter_mut().enumerate() {
        for nu in 0..4 {
            for rho in 0..4 {
                for (sigma, &ps) in p.iter().enumerate() {
                    let e = levi_civita([mu, nu, rho, sigma]);
                    if e != 0 {
                        *slot = *slot + T::lit(e as f64) * half * m.get(nu, rho).re * ps;
                    }
                }
            }
        }
    }
    PLVector { w }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn tensor_layout() {
        let m = assemble_tensor([1.0, 0.0, 0.0], [0.0; 3]);
        assert_eq!(*m.get(0, 1), Complex::new(-1.0, 0.0));
        assert_eq!(*m.get(1, 0), Complex::new(1.0, 0.0));
        assert_eq!(m.max_abs(), 1.0);
        assert!(assemble_tensor([0.0; 3], [0.0; 3]).is_zero());
        let m = assemble_tensor([0.3, -0.2, 0.5], [1.5, -0.7, 0.25]);
        assert!((&m + &m.transpose()).is_zero());
        let h = AngMomTensor {
            n: [0.3, -0.2, 0.5],
            l: [1.5, -0.7, 0.25],
        }
        .hamiltonian();
        assert!(h.is_hermitian(0.0));
        assert_eq!(h.trace(), Complex::zero());
    }

    #[test]
    fn span_is_imaginary_antisymmetric() {
        let span = angmom_span();
        assert_eq!(span.len(), 6);
        for l in &span {
            let m = l.matrix::<f64>();
            assert!(m.entries().iter().all(|z| z.re == 0.0));
            assert!((&m + &m.transpose()).is_zero());
        }
        let t = AngMomTensor {
            n: [0.3, -0.2, 0.5],
            l: [1.5, -0.7, 0.25],
        };
        let h = t.hamiltonian();
        assert!(crate::qbe::project_onto(&h, &span).max_abs_diff(&h) < 1e-15);
        assert_eq!(AngMomTensor::from_hamiltonian(&h), t);
    }

    #[test]
    fn invariant_values() {
        assert_eq!(angmom_invariant([1.0, 0.0, 0.0], [0.0; 3]), 1.0);
        assert_eq!(angmom_invariant([0.0; 3], [0.0; 3]), 0.0);
        let (n, l) = ([0.3, -0.2, 0.5], [1.5, -0.7, 0.25]);
        let m = assemble_tensor(n, l);
        let oracle: f64 = (0..4)
            .flat_map(|r| (0..4).map(move |c| (r, c)))
            .map(|(r, c)| m.get(r, c).re * m.get(c, r).re)
            .sum::<f64>()
            * -0.5;
        assert!((angmom_invariant(n, l) - oracle).abs() < 1e-12);
    }

    #[test]
    fn conservation_and_flow() {
        let (tensor, f0) = random_case(3);
        let r = qbe_conservation(tensor, &f0, 1.0, 1e-3).unwrap();
        assert!(r.max_h_drift < 1e-12, "{}", r.max_h_drift);
        assert!(r.component_drift.iter().all(|d| *d < 1e-12));
        assert!(r.f_flow_residual < 1e-9, "{}", r.f_flow_residual);
    }

    #[test]
    fn zero_constraint_is_static() {
        let t = AngMomTensor {
            n: [0.5, 0.0, 0.1],
            l: [0.2, 0.3, 0.0],
        };
        let sys = angmom_system(&t, &ComplexMat::zeros(4).unwrap()).unwrap();
        let traj = integrate_qbe(&sys, 0.5, 1e-2).unwrap();
        assert!(traj.f_t.iter().all(|f| f.max_abs() < 1e-15));
        assert!(traj.h_t.iter().all(|h| h.max_abs_diff(&sys.h0) < 1e-15));
    }

    #[test]
    fn rejects_non_symmetric_constraint() {
        let t = AngMomTensor {
            n: [1.0, 0.0, 0.0],
            l: [0.0; 3],
        };
        let mut f = ComplexMat::zeros(4).unwrap();
        f.set(0, 1, Complex::new(1.0, 0.0));
        assert!(matches!(angmom_system(&t, &f), Err(Error::InvalidConstraint(_))));
        let f = ComplexMat::identity(4).unwrap();
        assert!(matches!(angmom_system(&t, &f), Err(Error::NotTraceless(_))));
    }

    #[test]
    fn block_propagator_entries() {
        let (nx, lyz, t) = (1.0f64, 2.0, 0.5);
        let u = block_propagator(nx, lyz, t);
        assert_eq!(u.get(0, 0).re, (nx * t).cos());
        assert_eq!(u.get(2, 3).re, -(lyz * t).sin());
        assert_eq!(block_propagator(nx, lyz, 0.0), ComplexMat::identity(4).unwrap());
    }

    #[test]
    fn block_propagator_matches_eigenframe_product() {
        for (nx, lyz, t) in [(1.0, 2.0, 0.5), (-0.3, 0.7, 2.2), (2.5, -1.1, -0.9)] {
            let (w, d) = block_eigenframe(nx, lyz);
            let inv = block_inverse(&w);
            let prod = &(&w * &crate::matcore::mat_exp_diag(&d, t).unwrap()) * &inv;
            assert!(prod.max_abs_diff(&block_propagator(nx, lyz, t)) < 1e-14);
            let h = reduced_hamiltonian(nx, lyz);
            assert!((&(&w * &d) * &inv).max_abs_diff(&h) < 1e-14);
            let oracle = expm(&h.scale(&Complex::new(0.0, -t)));
            assert!(oracle.max_abs_diff(&block_propagator(nx, lyz, t)) < 1e-13);
        }
    }

    fn block_inverse(w: &ComplexMat<f64>) -> ComplexMat<f64> {
        // each 2×2 block [[−i, i], [1, 1]] has inverse ½[[i, 1], [−i, 1]]
        let mut inv = ComplexMat::zeros(4).unwrap();
        for b in [0, 2] {
            let (a, bb, c, d) = (*w.get(b, b), *w.get(b, b + 1), *w.get(b + 1, b), *w.get(b + 1, b + 1));
            let det = a * d - bb * c;
            inv.set(b, b, d / det);
            inv.set(b, b + 1, -bb / det);
            inv.set(b + 1, b, -c / det);
            inv.set(b + 1, b + 1, a / det);
        }
        inv
    }

    #[test]
    fn levi_civita_signs() {
        assert_eq!(levi_civita([0, 1, 2, 3]), 1);
        assert_eq!(levi_civita([1, 0, 2, 3]), -1);
        assert_eq!(levi_civita([1, 2, 3, 0]), -1);
        assert_eq!(levi_civita([0, 0, 2, 3]), 0);
    }

    #[test]
    fn pauli_lubanski_cases() {
        let (m, l) = (2.0f64, [0.3, -0.4, 1.1]);
        let pl = pauli_lubanski([0.0; 3], l, [m, 0.0, 0.0, 0.0]);
        assert_eq!(pl.w[0], 0.0);
        for (w, lk) in pl.upper()[1..].iter().zip(l) {
            assert!((w - m * lk).abs() < 1e-15);
        }
        let zero = pauli_lubanski([0.0; 3], [0.0; 3], [1.0, 2.0, 3.0, 4.0]);
        assert_eq!(zero.w, [0.0; 4]);
    }

    proptest! {
        #[test]
        fn pauli_lubanski_is_orthogonal(n in prop::array::uniform3(-2.0f64..2.0), l in prop::array::uniform3(-2.0f64..2.0),
                                        p in prop::array::uniform4(-3.0f64..3.0)) {
            prop_assert!(pauli_lubanski(n, l, p).dot(&p).abs() < 1e-12);
        }

        #[test]
        fn pauli_lubanski_is_bilinear(n in prop::array::uniform3(-2.0f64..2.0), l in prop::array::uniform3(-2.0f64..2.0),
                                      p in prop::array::uniform4(-3.0f64..3.0), q in prop::array::uniform4(-3.0f64..3.0),
                                      s in -2.0f64..2.0) {
            let pq: [f64; 4] = std::array::from_fn(|k| p[k] + s * q[k]);
            let lhs = pauli_lubanski(n, l, pq).w;
            let (a, b) = (pauli_lubanski(n, l, p).w, pauli_lubanski(n, l, q).w);
            for k in 0..4 {
                prop_assert!((lhs[k] - a[k] - s * b[k]).abs() < 1e-12);
            }
            let n2: [f64; 3] = std::array::from_fn(|k| 2.0 * n[k]);
            let l2: [f64; 3] = std::array::from_fn(|k| 2.0 * l[k]);
            let doubled = pauli_lubanski(n2, l2, p).w;
            for k in 0..4 {
                prop_assert!((doubled[k] - 2.0 * a[k]).abs() < 1e-12);
            }
        }

        #[test]
        fn block_propagator_is_special_orthogonal(nx in -3.0f64..3.0, lyz in -3.0f64..3.0, t in -4.0f64..4.0) {
            let u = block_propagator(nx, lyz, t);
            prop_assert!((&u.transpose() * &u).max_abs_diff(&ComplexMat::identity(4).unwrap()) < 1e-12);
            prop_assert!((u.det() - Complex::new(1.0, 0.0)).norm() < 1e-12);
            let h = reduced_hamiltonian(nx, lyz);
            let moved = &(&u * &h) * &u.adjoint();
            let k0 = trace_pair(&h, &h).unwrap().re;
            prop_assert!((trace_pair(&moved, &moved).unwrap().re - k0).abs() < 1e-12);
        }
    }
}
