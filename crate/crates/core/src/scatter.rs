//! Compton kinematics with four-momenta embedded as 4×4 matrices, and the
//! phase-deformed anticommutator identities.
//!
//! A momentum `(E, p_x, p_y)` is written `E·T + p_x·X + p_y·Y`. In the gamma
//! representation `T = γ_t`, `X = iγ_x`, `Y = iγ_y`; in the Majorana
//! representation `T = iG`, `X = α_x`, `Y = α_y` where `G = iβ` is the mass
//! generator. `T² = η·1` and `X² = Y² = −η·1`, so every matrix square is
//! `η(E² − |p|²)·1` with `η = +1` (gamma) or `η = −1` (Majorana).

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::cliffrep::{build_dirac, build_gamma_scatter, build_majorana, RepKind};
use crate::error::{Error, Result};
use crate::matcore::{anticommutator, commutator, pauli, ComplexMat, Pauli};
use crate::scalar::{cis, Real};

/// Matrices carrying the time and planar spatial components of a momentum.
#[derive(Clone, Debug)]
pub struct ScatterBasis<T> {
    pub rep: RepKind,
    pub t: ComplexMat<T>,
    pub x: ComplexMat<T>,
    pub y: ComplexMat<T>,
    /// `T² = η·1`.
    pub eta: T,
}

pub fn scatter_basis<T: Real>(rep: RepKind) -> Result<ScatterBasis<T>> {
    let i = Complex::new(T::zero(), T::one());
    match rep {
        RepKind::GammaScatter => {
            let g = build_gamma_scatter::<T>();
            Ok(ScatterBasis {
                rep,
                x: g.x.scale(&i),
                y: g.y.scale(&i),
                t: g.t,
                eta: T::one(),
            })
        }
        RepKind::Majorana => {
            let r = build_majorana::<T>();
            Ok(ScatterBasis {
                rep,
                t: r.mass_generator().scale(&i),
                x: r.alpha[0].clone(),
                y: r.alpha[1].clone(),
                eta: -T::one(),
            })
        }
        RepKind::Dirac => Err(Error::InvalidParameter(
            "scattering is defined for the gamma and majorana representations".into(),
        )),
    }
}

impl<T: Real> ScatterBasis<T> {
    /// `e·T + px·X + py·Y`.
    pub fn momentum(&self, e: T, px: T, py: T) -> ComplexMat<T> {
        &(&self.t.scale_re(&e) + &self.x.scale_re(&px)) + &self.y.scale_re(&py)
    }
}

/// Compton scattering inputs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScatterConfig {
    pub m: f64,
    pub omega1: f64,
    pub theta: f64,
    /// Recoil angle; solved from momentum conservation when absent.
    pub phi: Option<f64>,
    /// Scattered frequency; taken from the Compton relation when absent.
    pub omega2: Option<f64>,
    pub rep: RepKind,
    /// Reserved: a time-dependent Majorana mass in the scattering matrices.
    #[serde(default)]
    pub rotating_mass: bool,
}

impl ScatterConfig {
    pub fn new(rep: RepKind, m: f64, omega1: f64, theta: f64) -> Self {
        Self {
            m,
            omega1,
            theta,
            phi: None,
            omega2: None,
            rep,
            rotating_mass: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.rotating_mass {
            return Err(Error::InvalidParameter(
                "rotating mass is not supported in scattering".into(),
            ));
        }
        if !(self.m > 0.0) || !self.m.is_finite() {
            return Err(Error::InvalidParameter(format!("m must be positive, got {}", self.m)));
        }
        if !(self.omega1 > 0.0) || !self.omega1.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "omega1 must be positive, got {}",
                self.omega1
            )));
        }
        if !(0.0..=std::f64::consts::PI).contains(&self.theta) {
            return Err(Error::InvalidParameter(format!(
                "theta must lie in [0, pi], got {}",
                self.theta
            )));
        }
        Ok(())
    }
}

/// `ω₂ = 1/(1/ω₁ + (1 − cosθ)/m)`.
pub fn compton_omega2(m: f64, omega1: f64, theta: f64) -> f64 {
    1.0 / (1.0 / omega1 + (1.0 - theta.cos()) / m)
}

/// Scalar part `Tr[a]/4` and the largest departure of `a` from that multiple of `1`.
pub fn scalar_part<T: Real>(a: &ComplexMat<T>) -> (Complex<T>, T) {
    let s = a.trace() * T::lit(0.25);
    let id = ComplexMat::identity(a.dim()).expect("valid dim");
    (s, a.max_abs_diff(&id.scale(&s)))
}

/// `ω₂` solved from the matrix conservation law `{q₁ − q₂, p₁} = {q₁, q₂}`.
pub fn solve_omega2(rep: RepKind, m: f64, omega1: f64, theta: f64) -> Result<f64> {
    let b = scatter_basis::<f64>(rep)?;
    let p1 = b.momentum(m, 0.0, 0.0);
    let n1 = b.momentum(1.0, 1.0, 0.0);
    let n2 = b.momentum(1.0, theta.cos(), theta.sin());
    let a = scalar_part(&anticommutator(&n1, &p1)?).0.re * 0.5;
    let c = scalar_part(&anticommutator(&n1, &n2)?).0.re * 0.5;
    let w = omega1 * a / (a + omega1 * c);
    if !(w > 0.0) || !w.is_finite() {
        return Err(Error::Kinematics(format!("omega2 = {w} is not positive")));
    }
    Ok(w)
}

/// Outgoing electron data fixed by energy–momentum conservation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Kinematics {
    pub omega2: f64,
    pub e2: f64,
    pub p2: f64,
    pub phi: f64,
}

pub fn kinematics(cfg: &ScatterConfig) -> Result<Kinematics> {
    cfg.validate()?;
    let omega2 = cfg
        .omega2
        .unwrap_or_else(|| compton_omega2(cfg.m, cfg.omega1, cfg.theta));
    if !(omega2 > 0.0) || !omega2.is_finite() {
        return Err(Error::Kinematics(format!("omega2 = {omega2} is not positive")));
    }
    let (px, py) = (cfg.omega1 - omega2 * cfg.theta.cos(), -omega2 * cfg.theta.sin());
    Ok(Kinematics {
        omega2,
        e2: cfg.m + cfg.omega1 - omega2,
        p2: px.hypot(py),
        phi: cfg.phi.unwrap_or_else(|| py.atan2(px)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentumKind {
    Timelike,
    Lightlike,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MatMomentum {
    pub mat: ComplexMat<f64>,
    pub kind: MomentumKind,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Momenta {
    pub p1: MatMomentum,
    pub p2: MatMomentum,
    pub q1: MatMomentum,
    pub q2: MatMomentum,
    pub kinematics: Kinematics,
    pub eta: f64,
}

/// `p₁ = mT`, `p₂ = E₂T + p₂(cosφ X + sinφ Y)`, `q₁ = ω₁(T + X)`,
/// `q₂ = ω₂(T + cosθ X + sinθ Y)`.
pub fn build_momenta(cfg: &ScatterConfig) -> Result<Momenta> {
    let k = kinematics(cfg)?;
    let b = scatter_basis::<f64>(cfg.rep)?;
    let timelike = |mat| MatMomentum {
        mat,
        kind: MomentumKind::Timelike,
    };
    let lightlike = |mat| MatMomentum {
        mat,
        kind: MomentumKind::Lightlike,
    };
    Ok(Momenta {
        p1: timelike(b.momentum(cfg.m, 0.0, 0.0)),
        p2: timelike(b.momentum(k.e2, k.p2 * k.phi.cos(), k.p2 * k.phi.sin())),
        q1: lightlike(b.momentum(cfg.omega1, cfg.omega1, 0.0)),
        q2: lightlike(b.momentum(k.omega2, k.omega2 * cfg.theta.cos(), k.omega2 * cfg.theta.sin())),
        kinematics: k,
        eta: b.eta,
    })
}

/// Residuals of the scattering identities for one configuration.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConservationResiduals {
    pub kinematics: Kinematics,
    /// `|E₂² − p₂² − m²|`.
    pub energy: f64,
    /// `|2m(ω₁ − ω₂) − 2ω₁ω₂(1 − cosθ)|`.
    pub compton: f64,
    /// `max|p₂² − (p₁² + {q₁ − q₂, p₁} − {q₁, q₂})|`.
    pub matrix: f64,
    /// `max|p₂ − (p₁ + q₁ − q₂)|`.
    pub momentum: f64,
    /// `max(|q₁²|, |q₂²|)`.
    pub lightlike: f64,
    /// `max|p₁² − ηm²·1|`.
    pub rest: f64,
    /// `max|{q₁ − q₂, p₁} − 2ηm(ω₁ − ω₂)·1|`.
    pub mass_anticommutator: f64,
    /// `max|{q₁, q₂} − 2ηω₁ω₂(1 − cosθ)·1|`.
    pub photon_anticommutator: f64,
}

impl ConservationResiduals {
    pub fn max(&self) -> f64 {
        [
            self.energy,
            self.compton,
            self.matrix,
            self.momentum,
            self.lightlike,
            self.rest,
            self.mass_anticommutator,
            self.photon_anticommutator,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

pub fn verify_conservation(cfg: &ScatterConfig) -> Result<ConservationResiduals> {
    let mom = build_momenta(cfg)?;
    let k = mom.kinematics;
    let (p1, p2, q1, q2) = (&mom.p1.mat, &mom.p2.mat, &mom.q1.mat, &mom.q2.mat);
    let id = ComplexMat::<f64>::identity(4)?;
    let scalar = |x: f64| id.scale_re(&x);
    let (m, w1, w2, c) = (cfg.m, cfg.omega1, k.omega2, cfg.theta.cos());
    let q_diff = q1 - q2;
    let anti_mass = anticommutator(&q_diff, p1)?;
    let anti_photon = anticommutator(q1, q2)?;
    let rhs = &(&(p1 * p1) + &anti_mass) - &anti_photon;
    Ok(ConservationResiduals {
        kinematics: k,
        energy: (k.e2 * k.e2 - k.p2 * k.p2 - m * m).abs(),
        compton: (2.0 * m * (w1 - w2) - 2.0 * w1 * w2 * (1.0 - c)).abs(),
        matrix: (p2 * p2).max_abs_diff(&rhs),
        momentum: p2.max_abs_diff(&(&(p1 + q1) - q2)),
        lightlike: (q1 * q1).max_abs().max((q2 * q2).max_abs()),
        rest: (p1 * p1).max_abs_diff(&scalar(mom.eta * m * m)),
        mass_anticommutator: anti_mass.max_abs_diff(&scalar(2.0 * mom.eta * m * (w1 - w2))),
        photon_anticommutator: anti_photon.max_abs_diff(&scalar(2.0 * mom.eta * w1 * w2 * (1.0 - c))),
    })
}

/// `max|q₁†q₁ − ω₁²(2·1 + i[γ_t, γ_x])|` for the gamma representation.
pub fn photon_norm_identity(omega1: f64) -> f64 {
    let g = build_gamma_scatter::<f64>();
    let b = scatter_basis::<f64>(RepKind::GammaScatter).expect("gamma basis");
    let q1 = b.momentum(omega1, omega1, 0.0);
    let id = ComplexMat::<f64>::identity(4).expect("4x4");
    let comm = commutator(&g.t, &g.x).expect("4x4").scale(&Complex::new(0.0, 1.0));
    let rhs = (&id.scale_re(&2.0) + &comm).scale_re(&(omega1 * omega1));
    (&q1.adjoint() * &q1).max_abs_diff(&rhs)
}

fn sigma_dot<T: Real>(v: [T; 3]) -> ComplexMat<T> {
    let [x, y, z] = [Pauli::X, Pauli::Y, Pauli::Z].map(pauli::<T>);
    &(&x.scale_re(&v[0]) + &y.scale_re(&v[1])) + &z.scale_re(&v[2])
}

fn blocks<T: Real>(a: &ComplexMat<T>, b: &ComplexMat<T>, c: &ComplexMat<T>, d: &ComplexMat<T>) -> ComplexMat<T> {
    ComplexMat::from_fn(4, |r, col| {
        let src = match (r < 2, col < 2) {
            (true, true) => a,
            (true, false) => b,
            (false, true) => c,
            (false, false) => d,
        };
        *src.get(r % 2, col % 2)
    })
    .expect("4x4")
}

/// `[[0, −i e^{−iθ} p·σ], [i e^{iθ} p·σ, 0]]`.
pub fn phased_block_momentum<T: Real>(p: [T; 3], theta: T) -> ComplexMat<T> {
    let s = sigma_dot(p);
    let zero = ComplexMat::zeros(2).expect("2x2");
    let upper = s.scale(&(cis(-theta) * Complex::new(T::zero(), -T::one())));
    let lower = s.scale(&(cis(theta) * Complex::new(T::zero(), T::one())));
    blocks(&zero, &upper, &lower, &zero)
}

/// `½(pq + qp)` for `p` phased by `θ` and `q` unphased:
/// `cosθ (p·q) 1 + sinθ · blockdiag((p×q)·σ, −(p×q)·σ)`.
pub fn phased_anticommutator_block<T: Real>(p: [T; 3], q: [T; 3], theta: T) -> ComplexMat<T> {
    let dot = p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
    let cross = [
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    ];
    let x = sigma_dot(cross).scale_re(&theta.sin());
    let id2 = ComplexMat::identity(2).expect("2x2").scale_re(&(theta.cos() * dot));
    let zero = ComplexMat::zeros(2).expect("2x2");
    blocks(&(&id2 + &x), &zero, &zero, &(&id2 - &x))
}

/// `p(φ) = p_x α_x + p_z α_z + p_y [[0, e^{−iφ}], [e^{iφ}, 0]]⊗1`.
pub fn majorana_phased_momentum<T: Real>(p: [T; 3], phi: T) -> ComplexMat<T> {
    let r = build_majorana::<T>();
    let id2 = ComplexMat::identity(2).expect("2x2");
    let zero = ComplexMat::zeros(2).expect("2x2");
    let y = blocks(&zero, &id2.scale(&cis(-phi)), &id2.scale(&cis(phi)), &zero);
    &(&r.alpha[0].scale_re(&p[0]) + &r.alpha[2].scale_re(&p[2])) + &y.scale_re(&p[1])
}

/// `p_x q_x + cosφ p_y q_y + p_z q_z`.
pub fn majorana_phased_dot<T: Real>(p: [T; 3], q: [T; 3], phi: T) -> T {
    p[0] * q[0] + phi.cos() * p[1] * q[1] + p[2] * q[2]
}

/// `[β, −βα_x, −βα_y, −βα_z]` in the Dirac representation, equal to `[γ_t, iγ_x, iγ_y, iγ_z]`.
pub fn gamma_from_dirac<T: Real>() -> [ComplexMat<T>; 4] {
    let d = build_dirac::<T>();
    let minus = |a: &ComplexMat<T>| (&d.beta * a).scale_re(&-T::one());
    [
        d.beta.clone(),
        minus(&d.alpha[0]),
        minus(&d.alpha[1]),
        minus(&d.alpha[2]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    const REPS: [RepKind; 2] = [RepKind::GammaScatter, RepKind::Majorana];

    #[test]
    fn bases_square_correctly() {
        for rep in REPS {
            let b = scatter_basis::<f64>(rep).unwrap();
            let id = ComplexMat::<f64>::identity(4).unwrap();
            assert!((&b.t * &b.t).max_abs_diff(&id.scale_re(&b.eta)) == 0.0);
            assert!((&b.x * &b.x).max_abs_diff(&id.scale_re(&-b.eta)) == 0.0);
            assert!((&b.y * &b.y).max_abs_diff(&id.scale_re(&-b.eta)) == 0.0);
            assert!(anticommutator(&b.t, &b.x).unwrap().is_zero());
            assert!(anticommutator(&b.x, &b.y).unwrap().is_zero());
        }
        assert!(scatter_basis::<f64>(RepKind::Dirac).is_err());
        let g = scatter_basis::<f64>(RepKind::GammaScatter).unwrap();
        let d = gamma_from_dirac::<f64>();
        assert_eq!(g.t, d[0]);
        assert_eq!(g.x, d[1]);
    }

    #[test]
    fn literal_majorana_beta_is_not_lightlike() {
        let r = build_majorana::<f64>();
        let q1 = &r.beta.scale(&Complex::new(0.0, 1.0)) + &r.alpha[0];
        assert!((&q1 * &q1).max_abs() > 1.0);
    }

    #[test]
    fn compton_values() {
        assert_eq!(compton_omega2(1.0, 0.7, 0.0), 0.7);
        assert!((compton_omega2(1.0, 1.0, FRAC_PI_2) - 0.5).abs() < 1e-15);
        assert!((compton_omega2(2.0, 1.0, PI) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn matrix_route_matches_closed_form() {
        for rep in REPS {
            for (m, w, th) in [(1.0, 1.0, FRAC_PI_2), (2.0, 1.0, PI), (0.5, 3.0, 1.1)] {
                let got = solve_omega2(rep, m, w, th).unwrap();
                assert!((got - compton_omega2(m, w, th)).abs() < 1e-14, "{rep} {got}");
            }
        }
    }

    #[test]
    fn forward_scattering() {
        let cfg = ScatterConfig::new(RepKind::GammaScatter, 1.0, 0.8, 0.0);
        let mom = build_momenta(&cfg).unwrap();
        assert_eq!(mom.q1.mat, mom.q2.mat);
        let r = verify_conservation(&cfg).unwrap();
        assert_eq!(r.energy, 0.0);
        assert_eq!(r.compton, 0.0);
    }

    #[test]
    fn quarter_turn_residuals() {
        for rep in REPS {
            let r = verify_conservation(&ScatterConfig::new(rep, 1.0, 1.0, FRAC_PI_2)).unwrap();
            assert!(r.max() < 1e-12, "{rep}: {r:?}");
        }
    }

    #[test]
    fn config_validation() {
        let mut cfg = ScatterConfig::new(RepKind::Majorana, 1.0, 1.0, 0.5);
        cfg.rotating_mass = true;
        assert!(matches!(build_momenta(&cfg), Err(Error::InvalidParameter(_))));
        assert!(build_momenta(&ScatterConfig::new(RepKind::Majorana, -1.0, 1.0, 0.5)).is_err());
        assert!(build_momenta(&ScatterConfig::new(RepKind::Majorana, 1.0, 1.0, 4.0)).is_err());
        let mut cfg = ScatterConfig::new(RepKind::GammaScatter, 1.0, 1.0, 0.5);
        cfg.omega2 = Some(-0.2);
        assert!(matches!(build_momenta(&cfg), Err(Error::Kinematics(_))));
    }

    #[test]
    fn photon_norm() {
        for w in [0.1, 1.0, 3.7] {
            assert!(photon_norm_identity(w) < 1e-13);
        }
    }

    #[test]
    fn phased_block_at_zero() {
        let (p, q) = ([0.3, -1.2, 0.5], [2.0, 0.1, -0.7]);
        let dot: f64 = p.iter().zip(q).map(|(a, b)| a * b).sum();
        let want = ComplexMat::<f64>::identity(4).unwrap().scale_re(&dot);
        assert!(phased_anticommutator_block(p, q, 0.0).max_abs_diff(&want) < 1e-15);
        let par = [0.6, -2.4, 1.0];
        let want = ComplexMat::<f64>::identity(4)
            .unwrap()
            .scale_re(&(0.8f64.cos() * 2.0 * (0.09 + 1.44 + 0.25)));
        assert!(phased_anticommutator_block(p, par, 0.8).max_abs_diff(&want) < 1e-14);
    }

    #[test]
    fn printed_cross_term_disagrees() {
        let (p, q, th) = ([0.3, -1.2, 0.5], [2.0, 0.1, -0.7], 0.9f64);
        let (pm, qm) = (phased_block_momentum(p, th), phased_block_momentum(q, 0.0));
        let brute = anticommutator(&pm, &qm).unwrap().scale_re(&0.5);
        let ours = phased_anticommutator_block(p, q, th);
        assert!(brute.max_abs_diff(&ours) < 1e-14);
        let dot: f64 = p.iter().zip(q).map(|(a, b)| a * b).sum();
        let corrected_cross = &ours - &ComplexMat::identity(4).unwrap().scale_re(&(th.cos() * dot));
        let printed_cross = corrected_cross.scale(&Complex::new(0.0, -1.0));
        let printed = &ComplexMat::identity(4).unwrap().scale_re(&(th.cos() * dot)) + &printed_cross;
        assert!(brute.max_abs_diff(&printed) > 0.1);
    }

    #[test]
    fn phased_block_derivative() {
        let (p, q) = ([0.3, -1.2, 0.5], [2.0, 0.1, -0.7]);
        let h = 1e-6;
        let fd = (&phased_anticommutator_block(p, q, h) - &phased_anticommutator_block(p, q, -h)).scale_re(&(0.5 / h));
        let cross = [
            p[1] * q[2] - p[2] * q[1],
            p[2] * q[0] - p[0] * q[2],
            p[0] * q[1] - p[1] * q[0],
        ];
        let x = sigma_dot(cross);
        let zero = ComplexMat::zeros(2).unwrap();
        let exact = blocks(&x, &zero, &zero, &x.scale_re(&-1.0));
        assert!(fd.max_abs_diff(&exact) < 1e-6);
    }

    #[test]
    fn majorana_phased_cases() {
        assert_eq!(majorana_phased_dot([1.0, 2.0, 3.0], [4.0, 5.0, 6.0], 0.0), 32.0);
        assert_eq!(majorana_phased_dot([0.0, 1.0, 0.0], [0.0, 1.0, 0.0], PI), -1.0);
        let p = [0.4, -0.3, 1.2];
        let h = build_majorana::<f64>().hamiltonian(0.0, p);
        assert!(majorana_phased_momentum(p, 0.0).max_abs_diff(&h) < 1e-15);
    }

    proptest! {
        #[test]
        fn lightlike_nilpotent(w in 0.01f64..10.0, th in 0.0f64..PI) {
            for rep in REPS {
                let b = scatter_basis::<f64>(rep).unwrap();
                let q = b.momentum(w, w * th.cos(), w * th.sin());
                prop_assert!((&q * &q).max_abs() < 1e-12 * w * w.max(1.0));
            }
        }

        #[test]
        fn conservation_random(m in 0.1f64..3.0, w in 0.1f64..3.0, th in 0.0f64..PI) {
            for rep in REPS {
                let r = verify_conservation(&ScatterConfig::new(rep, m, w, th)).unwrap();
                prop_assert!(r.max() < 1e-12, "{:?}", r);
            }
            let a = solve_omega2(RepKind::GammaScatter, m, w, th).unwrap();
            let b = solve_omega2(RepKind::Majorana, m, w, th).unwrap();
            prop_assert!((a - b).abs() <= 1e-15);
        }

        #[test]
        fn phased_block_oracle(p in prop::array::uniform3(-2.0f64..2.0), q in prop::array::uniform3(-2.0f64..2.0), th in -PI..PI) {
            let brute = anticommutator(&phased_block_momentum(p, th), &phased_block_momentum(q, 0.0)).unwrap().scale_re(&0.5);
            prop_assert!(brute.max_abs_diff(&phased_anticommutator_block(p, q, th)) < 1e-12);
        }

        #[test]
        fn majorana_phased_oracle(p in prop::array::uniform3(-2.0f64..2.0), q in prop::array::uniform3(-2.0f64..2.0), phi in -PI..PI) {
            let brute = anticommutator(&majorana_phased_momentum(p, phi), &majorana_phased_momentum(q, 0.0)).unwrap().scale_re(&0.5);
            let want = ComplexMat::<f64>::identity(4).unwrap().scale_re(&majorana_phased_dot(p, q, phi));
            prop_assert!(brute.max_abs_diff(&want) < 1e-12);
        }
    }
}
