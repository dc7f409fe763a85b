//! Equivalence of the fixed-operator and fixed-state pictures for the
//! Majorana Hamiltonian, checked through four bilinear identities.
//!
//! With `H(t) = U H(0) U†` and `U = U(t,0)`, the equality
//! `⟨w|H(0)|w⟩ = ⟨v|H(t)|v⟩` for every `v` requires `w = U† v = U(0,t) v`.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cliffrep::build_majorana;
use crate::error::{Error, Result};
use crate::matcore::{inner, spinor_norm, ComplexMat, Spinor};
use crate::propagate::{evolve_hamiltonian, majorana_eigenframe, propagator};
use crate::scalar::cis;

/// Tolerance on every residual for a PASS verdict.
pub const FRAME_TOL: f64 = 1e-10;

/// `ψ† h ψ`.
pub fn expectation(h: &ComplexMat<f64>, psi: &Spinor<f64>) -> Result<Complex<f64>> {
    Ok(inner(psi, &h.apply(psi)?))
}

/// Seeded state with entries uniform in the unit square, normalized.
pub fn random_state(rng: &mut impl Rng) -> Spinor<f64> {
    let raw: Spinor<f64> = std::array::from_fn(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let n = spinor_norm(&raw);
    raw.map(|z| z / n)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FrameCase {
    pub m: f64,
    pub p: [f64; 3],
    pub t: f64,
    /// `Ψ(0)`.
    pub v: Spinor<f64>,
    /// `Ψ(t)`.
    pub w: Spinor<f64>,
}

impl FrameCase {
    /// `w = U(0,t) v`.
    pub fn evolved(m: f64, p: [f64; 3], t: f64, v: Spinor<f64>) -> Result<Self> {
        let u = propagator(majorana_eigenframe(m, p)?).u(0.0, t);
        Ok(Self {
            m,
            p,
            t,
            w: u.apply(&v)?,
            v,
        })
    }

    /// `w = v`, the negative control.
    pub fn unevolved(m: f64, p: [f64; 3], t: f64, v: Spinor<f64>) -> Self {
        Self { m, p, t, v, w: v }
    }

    pub fn seeded(m: f64, p: [f64; 3], t: f64, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::evolved(m, p, t, random_state(&mut rng))
    }

    pub fn energy(&self) -> f64 {
        (self.m * self.m + self.p.iter().map(|x| x * x).sum::<f64>()).sqrt()
    }
}

/// Left and right sides of the four bilinear identities, `ζ = e^{−2iEt}`.
fn bilinears(v: &Spinor<f64>, w: &Spinor<f64>, zeta: Complex<f64>) -> [(Complex<f64>, Complex<f64>); 4] {
    let b = |a: &Spinor<f64>, i: usize, j: usize| a[i].conj() * a[j];
    let zb = zeta.conj();
    [
        (
            b(w, 0, 0) - b(w, 2, 2) + b(w, 3, 3) - b(w, 1, 1),
            b(v, 0, 0) - b(v, 2, 2) + b(v, 3, 3) - b(v, 1, 1),
        ),
        (
            b(w, 0, 1) + b(w, 1, 0) - b(w, 2, 3) - b(w, 3, 2),
            b(v, 0, 1) + b(v, 1, 0) - b(v, 2, 3) - b(v, 3, 2),
        ),
        (
            b(w, 0, 2) + b(w, 2, 0) + b(w, 1, 3) + b(w, 3, 1),
            b(v, 0, 2) * zeta + b(v, 2, 0) * zb + b(v, 1, 3) * zeta + b(v, 3, 1) * zb,
        ),
        (
            b(w, 0, 2) - b(w, 2, 0) + b(w, 1, 3) - b(w, 3, 1),
            b(v, 0, 2) * zeta - b(v, 2, 0) * zb + b(v, 1, 3) * zeta - b(v, 3, 1) * zb,
        ),
    ]
}

/// The printed expansion of `⟨v|H(t)|v⟩` in terms of `v̄_i v_j`.
pub fn expanded_expectation(m: f64, p: [f64; 3], t: f64, v: &Spinor<f64>) -> Complex<f64> {
    let e = (m * m + p.iter().map(|x| x * x).sum::<f64>()).sqrt();
    let [px_term, pz_term, py_term, mass_term] = bilinears(v, v, cis(-2.0 * e * t)).map(|(_, rhs)| rhs);
    Complex::new(0.0, m) * mass_term + px_term * p[0] + py_term * p[1] + pz_term * p[2]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FrameReport {
    pub verdict: Verdict,
    /// `|w|²` balance, `p_z` bilinear, `p_y` phased bilinear, mass phased bilinear.
    pub identities: [f64; 4],
    /// `|⟨w|H(0)|w⟩ − ⟨v|H(t)|v⟩|`.
    pub headline: f64,
    /// `|⟨w|w⟩ − ⟨v|v⟩|`.
    pub norm: f64,
    /// `max(|⟨v|H(t)²|v⟩ − ⟨w|H(0)²|w⟩|, |⟨v|H(t)²|v⟩ − ‖v‖²E²|)`.
    pub squared: f64,
    /// `diag(a, a, 1, 1)` with `a` read off the phased bilinears.
    pub recovered_unitary: ComplexMat<f64>,
    /// `max|recovered − U(t,0)†|`.
    pub unitary_residual: f64,
}

impl FrameReport {
    pub fn max_residual(&self) -> f64 {
        self.identities
            .iter()
            .chain([&self.headline, &self.norm, &self.squared])
            .fold(0.0, |a, b| a.max(*b))
    }
}

/// `diag(a, a, 1, 1)` with `ā = (w̄₁w₃ + w̄₂w₄)/(v̄₁v₃ + v̄₂v₄)`, or the identity if the
/// denominator vanishes.
pub fn recover_unitary(v: &Spinor<f64>, w: &Spinor<f64>) -> ComplexMat<f64> {
    let num = w[0].conj() * w[2] + w[1].conj() * w[3];
    let den = v[0].conj() * v[2] + v[1].conj() * v[3];
    let one = Complex::new(1.0, 0.0);
    let a = if den.norm() > 1e-300 { (num / den).conj() } else { one };
    ComplexMat::diag(&[a, a, one, one]).expect("4x4")
}

pub fn check_frame_equivalence(case: &FrameCase) -> Result<FrameReport> {
    let e = case.energy();
    let frame = majorana_eigenframe(case.m, case.p)?;
    let h0 = build_majorana::<f64>().hamiltonian(case.m, case.p);
    let ht = evolve_hamiltonian(&frame, &h0, case.t)?;
    let (v, w) = (&case.v, &case.w);
    let identities = bilinears(v, w, cis(-2.0 * e * case.t)).map(|(l, r)| (l - r).norm());
    let headline = (expectation(&h0, w)? - expectation(&ht, v)?).norm();
    let norm = (spinor_norm(w).powi(2) - spinor_norm(v).powi(2)).abs();
    let sq_t = expectation(&(&ht * &ht), v)?;
    let sq_0 = expectation(&(&h0 * &h0), w)?;
    let kg = Complex::new(spinor_norm(v).powi(2) * e * e, 0.0);
    let squared = (sq_t - sq_0).norm().max((sq_t - kg).norm());
    let recovered_unitary = recover_unitary(v, w);
    let u_adj = propagator(frame).u(case.t, 0.0).adjoint();
    let unitary_residual = recovered_unitary.max_abs_diff(&u_adj);
    let mut report = FrameReport {
        verdict: Verdict::Fail,
        identities,
        headline,
        norm,
        squared,
        recovered_unitary,
        unitary_residual,
    };
    if report.max_residual() <= FRAME_TOL {
        report.verdict = Verdict::Pass;
    }
    Ok(report)
}

/// `max_t ‖H(t)² − (m² + |p|²)·1‖_max`.
pub fn check_klein_gordon(m: f64, p: [f64; 3], t_grid: &[f64]) -> Result<f64> {
    if t_grid.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidParameter("non-finite time".into()));
    }
    let h0 = build_majorana::<f64>().hamiltonian(m, p);
    let e2 = m * m + p.iter().map(|x| x * x).sum::<f64>();
    let target = ComplexMat::identity(4)?.scale_re(&e2);
    if e2 == 0.0 {
        return Ok((&h0 * &h0).max_abs_diff(&target));
    }
    let frame = majorana_eigenframe(m, p)?;
    t_grid.iter().try_fold(0.0f64, |acc, &t| {
        let h = evolve_hamiltonian(&frame, &h0, t)?;
        Ok(acc.max((&h * &h).max_abs_diff(&target)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const P: [f64; 3] = [1.0, 1.0, 1.0];

    #[test]
    fn expectation_basics() {
        let id = ComplexMat::identity(4).unwrap();
        let psi: Spinor<f64> = [
            Complex::new(0.5, 0.5),
            Complex::new(0.0, 0.5),
            Complex::new(0.5, 0.0),
            Complex::new(0.0, 0.0),
        ];
        assert!((expectation(&id, &psi).unwrap() - Complex::new(1.0, 0.0)).norm() < 1e-15);
        let h = build_majorana::<f64>().hamiltonian(0.3, [0.2, -1.0, 0.7]);
        assert!(expectation(&h, &psi).unwrap().im.abs() < 1e-12);
        let small = ComplexMat::identity(2).unwrap();
        assert!(expectation(&small, &psi).is_err());
    }

    #[test]
    fn expansion_matches_quadratic_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (m, p, t) = (0.8, [0.3, -0.6, 1.1], 0.45);
        let frame = majorana_eigenframe(m, p).unwrap();
        let ht = evolve_hamiltonian(&frame, &build_majorana::<f64>().hamiltonian(m, p), t).unwrap();
        for _ in 0..10 {
            let v = random_state(&mut rng);
            let direct = expectation(&ht, &v).unwrap();
            assert!((expanded_expectation(m, p, t, &v) - direct).norm() < 1e-13);
        }
    }

    #[test]
    fn evolved_case_passes() {
        let case = FrameCase::seeded(1.0, P, 0.7, 11).unwrap();
        let r = check_frame_equivalence(&case).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert!(r.unitary_residual < 1e-12);
        let a = cis(2.0 * 2.0 * 0.7);
        assert!((r.recovered_unitary.get(0, 0) - a).norm() < 1e-12);
    }

    #[test]
    fn zero_time_is_exact() {
        let case = FrameCase::seeded(1.0, P, 0.0, 3).unwrap();
        let r = check_frame_equivalence(&case).unwrap();
        assert!(r.max_residual() < 1e-15);
    }

    #[test]
    fn unevolved_state_fails() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let case = FrameCase::unevolved(1.0, P, 0.7, random_state(&mut rng));
        let r = check_frame_equivalence(&case).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.identities[2] > 1e-3 || r.identities[3] > 1e-3);
    }

    #[test]
    fn forward_propagated_state_fails() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let v = random_state(&mut rng);
        let u = propagator(majorana_eigenframe(1.0, P).unwrap()).u(0.7, 0.0);
        let case = FrameCase {
            m: 1.0,
            p: P,
            t: 0.7,
            v,
            w: u.apply(&v).unwrap(),
        };
        assert_eq!(check_frame_equivalence(&case).unwrap().verdict, Verdict::Fail);
    }

    #[test]
    fn klein_gordon_cases() {
        let grid: Vec<f64> = (0..20).map(|k| k as f64 * 0.25).collect();
        assert!(check_klein_gordon(1.0, P, &grid).unwrap() < 1e-12);
        assert_eq!(check_klein_gordon(0.0, [0.0; 3], &grid).unwrap(), 0.0);
    }

    proptest! {
        #[test]
        fn random_cases_pass(m in 0.1f64..2.0, p in prop::array::uniform3(-2.0f64..2.0), t in -3.0f64..3.0, seed in 0u64..1000) {
            let case = FrameCase::seeded(m, p, t, seed).unwrap();
            let r = check_frame_equivalence(&case).unwrap();
            prop_assert_eq!(r.verdict, Verdict::Pass);
        }

        #[test]
        fn klein_gordon_random(m in -2.0f64..2.0, p in prop::array::uniform3(-2.0f64..2.0), t in 0.0f64..5.0) {
            prop_assume!(m.abs() + p[1].abs() > 1e-3);
            let h = build_majorana::<f64>().hamiltonian(m, p);
            let h = evolve_hamiltonian(&majorana_eigenframe(m, p).unwrap(), &h, t).unwrap();
            let direct = ComplexMat::from_fn(4, |r, c| (0..4).map(|k| h.get(r, k) * h.get(k, c)).sum()).unwrap();
            let e2 = m * m + p.iter().map(|x| x * x).sum::<f64>();
            let got = check_klein_gordon(m, p, &[t]).unwrap();
            let want = direct.max_abs_diff(&ComplexMat::identity(4).unwrap().scale_re(&e2));
            prop_assert!((got - want).abs() < 1e-12);
        }
    }
}
