//! Eigenframes, the two-time propagator `U(t,s) = W(t)W⁻¹(s)` and the
//! mass-constancy classifier.

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cliffrep::{build_majorana, RepKind, SpinorRep};
use crate::error::{Error, Result};
use crate::matcore::{eigh, mat_exp_diag, trace_pair, ComplexMat, KronLabel};
use crate::scalar::{cis, Real};

/// `|p_y − im| / E` at or below which the closed-form frame is replaced by a
/// numerical one.
pub const DEGENERACY_THRESHOLD: f64 = 1e-9;

/// Eigenvector matrix `W`, its inverse and `D = W⁻¹ H W`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "T: Real + Serialize"))]
pub struct EigenFrame<T> {
    pub w: ComplexMat<T>,
    pub w_inv: ComplexMat<T>,
    pub d: ComplexMat<T>,
    pub energy: T,
    /// True when the frame came from the numerical eigensolver.
    pub fallback: bool,
}

fn energy_of<T: Real>(m: T, p: [T; 3]) -> Result<T> {
    let e = (m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    if !(e > T::zero()) || !e.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "energy must be positive and finite, got {e}"
        )));
    }
    Ok(e)
}

fn standard_d<T: Real>(e: T) -> ComplexMat<T> {
    let (up, down) = (Complex::new(e, T::zero()), Complex::new(-e, T::zero()));
    ComplexMat::diag(&[up, up, down, down]).expect("4x4")
}

/// Closed-form frame of the Majorana Hamiltonian `iβm + α·p`.
pub fn majorana_eigenframe<T: Real>(m: T, p: [T; 3]) -> Result<EigenFrame<T>> {
    let e = energy_of(m, p)?;
    let denom = Complex::new(p[1], -m);
    if denom.norm() <= T::lit(DEGENERACY_THRESHOLD) * e {
        return hermitian_eigenframe(&build_majorana::<T>().hamiltonian(m, p));
    }
    let c = |x: T| Complex::new(x, T::zero());
    let (px, pz) = (p[0], p[2]);
    let (ep, em) = (e + px, e - px);
    let zero = Complex::zero();
    let one = c(T::one());
    let w = ComplexMat::from_row_major(
        4,
        vec![
            c(pz) / denom,
            c(ep) / denom,
            c(pz) / denom,
            c(-em) / denom,
            c(em) / denom,
            c(pz) / denom,
            c(-ep) / denom,
            c(pz) / denom,
            zero,
            one,
            zero,
            one,
            one,
            zero,
            one,
            zero,
        ],
    )?;
    let s = T::one() / (e + e);
    let w_inv = ComplexMat::from_row_major(
        4,
        vec![
            zero,
            denom,
            c(-pz),
            c(ep),
            denom,
            zero,
            c(em),
            c(-pz),
            zero,
            -denom,
            c(pz),
            c(em),
            -denom,
            zero,
            c(ep),
            c(pz),
        ],
    )?
    .scale_re(&s);
    Ok(EigenFrame {
        w,
        w_inv,
        d: standard_d(e),
        energy: e,
        fallback: false,
    })
}

/// Numerical frame of any traceless Hermitian `h` with spectrum `(E, E, −E, −E)`.
pub fn hermitian_eigenframe<T: Real>(h: &ComplexMat<T>) -> Result<EigenFrame<T>> {
    let eig = eigh(h);
    let e = eig.values[0];
    let tol = T::lit(1e-9) * e.abs().max(T::one());
    let expected = [e, e, -e, -e];
    let gap = eig
        .values
        .iter()
        .zip(expected)
        .map(|(a, b)| (*a - b).abs())
        .fold(T::zero(), T::max);
    if !(e > T::zero()) || gap > tol {
        return Err(Error::FrameMismatch(gap.as_f64()));
    }
    Ok(EigenFrame {
        w_inv: eig.vectors.adjoint(),
        w: eig.vectors,
        d: standard_d(e),
        energy: e,
        fallback: true,
    })
}

/// Frame matching the Hamiltonian of `rep`.
pub fn frame_for<T: Real>(rep: &SpinorRep<T>, m: T, p: [T; 3]) -> Result<EigenFrame<T>> {
    match rep.kind {
        RepKind::Majorana => majorana_eigenframe(m, p),
        _ => {
            energy_of(m, p)?;
            hermitian_eigenframe(&rep.hamiltonian(m, p))
        }
    }
}

/// Global phase attached to `W(t)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseConvention {
    /// `W(t) = e^{−iEt} exp(−itD) W(0)`; `U(t,s) = diag(e^{−2iE(t−s)}, e^{−2iE(t−s)}, 1, 1)`.
    #[default]
    Printed,
    /// `W(t) = exp(−itD) W(0)`.
    Bare,
}

impl<T: Real> EigenFrame<T> {
    fn phase(&self, t: T, convention: PhaseConvention) -> Complex<T> {
        match convention {
            PhaseConvention::Printed => cis(-self.energy * t),
            PhaseConvention::Bare => Complex::new(T::one(), T::zero()),
        }
    }

    /// `W(t)` under `convention`.
    pub fn at(&self, t: T, convention: PhaseConvention) -> ComplexMat<T> {
        let rot = mat_exp_diag(&self.d, t).expect("diagonal by construction");
        (&rot * &self.w).scale(&self.phase(t, convention))
    }

    /// `W(t)⁻¹` under `convention`.
    pub fn inverse_at(&self, t: T, convention: PhaseConvention) -> ComplexMat<T> {
        let rot = mat_exp_diag(&self.d, -t).expect("diagonal by construction");
        (&self.w_inv * &rot).scale(&self.phase(t, convention).conj())
    }

    /// `max|W W⁻¹ − 1|` and the off-diagonal size of `W⁻¹ H W − D`.
    pub fn residuals(&self, h: &ComplexMat<T>) -> (T, T) {
        let id = ComplexMat::identity(4).expect("4x4");
        let inv = (&self.w * &self.w_inv).max_abs_diff(&id);
        let diag = (&(&self.w_inv * h) * &self.w).max_abs_diff(&self.d);
        (inv, diag)
    }
}

/// `W(t) = exp(−itD) W(0)` in the printed phase convention.
pub fn eigenframe_at<T: Real>(frame: &EigenFrame<T>, t: T) -> ComplexMat<T> {
    frame.at(t, PhaseConvention::Printed)
}

/// Two-time propagator built from an eigenframe.
#[derive(Clone, Debug)]
pub struct Propagator<T> {
    pub frame: EigenFrame<T>,
    pub convention: PhaseConvention,
}

impl<T: Real> Propagator<T> {
    pub fn new(frame: EigenFrame<T>, convention: PhaseConvention) -> Self {
        Self { frame, convention }
    }

    /// `U(t,s) = W(t) W⁻¹(s)`.
    pub fn u(&self, t: T, s: T) -> ComplexMat<T> {
        &self.frame.at(t, self.convention) * &self.frame.inverse_at(s, self.convention)
    }
}

/// Propagator in the printed convention.
pub fn propagator<T: Real>(frame: EigenFrame<T>) -> Propagator<T> {
    Propagator::new(frame, PhaseConvention::Printed)
}

/// `H(t) = U(t,0) H(0) U†(t,0)`, rejecting `h0` whose spectrum differs from the frame.
pub fn evolve_hamiltonian<T: Real>(frame: &EigenFrame<T>, h0: &ComplexMat<T>, t: T) -> Result<ComplexMat<T>> {
    let spectrum = eigh(h0).values;
    let gap = spectrum
        .iter()
        .zip(frame.d.diagonal())
        .map(|(a, b)| (*a - b.re).abs())
        .fold(T::zero(), T::max);
    if gap > T::lit(1e-9) * frame.energy.max(T::one()) {
        return Err(Error::FrameMismatch(gap.as_f64()));
    }
    let u = Propagator::new(frame.clone(), PhaseConvention::Printed).u(t, T::zero());
    Ok(&(&u * h0) * &u.adjoint())
}

/// `c_a = Tr[h Υ_a]/4` in canonical label order.
pub fn project_coeffs<T: Real>(h: &ComplexMat<T>) -> Vec<(KronLabel, Complex<T>)> {
    KronLabel::all()
        .map(|l| (l, trace_pair(h, &l.matrix()).expect("4x4") * T::lit(0.25)))
        .collect()
}

/// `Σ c_a Υ_a`.
pub fn reconstruct<T: Real>(coeffs: &[(KronLabel, Complex<T>)]) -> ComplexMat<T> {
    coeffs.iter().fold(ComplexMat::zeros(4).expect("4x4"), |acc, (l, c)| {
        &acc + &l.matrix().scale(c)
    })
}

/// Mass-channel amplitude `Tr[H K†]/Tr[K K†]`, where `K` keeps the lower
/// triangle (diagonal included) of the mass generator.
pub fn mass_channel<T: Real>(mass_generator: &ComplexMat<T>, h: &ComplexMat<T>) -> Complex<T> {
    let k = ComplexMat::from_fn(4, |r, c| {
        if r >= c {
            *mass_generator.get(r, c)
        } else {
            Complex::zero()
        }
    })
    .expect("4x4");
    let ka = k.adjoint();
    trace_pair(h, &ka).expect("4x4") / trace_pair(&k, &ka).expect("4x4")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MassVerdict {
    Constant,
    Rotating,
    Unclassified,
}

/// Thresholds used by [`classify_mass`], relative to `max(1, |m₀|)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MassTolerances {
    pub constant: f64,
    pub modulus: f64,
    pub phase_fit: f64,
}

impl Default for MassTolerances {
    fn default() -> Self {
        Self {
            constant: 1e-10,
            modulus: 1e-10,
            phase_fit: 1e-8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MassResiduals {
    /// `max|m(t) − m(0)|`.
    pub constant: f64,
    /// `max||m(t)| − |m(0)||`.
    pub modulus: f64,
    /// Largest deviation of the unwrapped phase from its linear fit.
    pub phase_fit: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MassReport {
    pub rep: RepKind,
    pub verdict: MassVerdict,
    pub times: Vec<f64>,
    /// `m(t)` as `[re, im]` pairs.
    pub series: Vec<[f64; 2]>,
    pub modulus_series: Vec<f64>,
    pub phase_rate: f64,
    pub expected_rate: f64,
    pub residuals: MassResiduals,
    pub fallback_frame: bool,
}

/// Least-squares slope and largest residual of `y` against `x`.
fn linear_fit(x: &[f64], y: &[f64]) -> (f64, f64) {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let resid = x
        .iter()
        .zip(y)
        .map(|(a, b)| (b - (my + slope * (a - mx))).abs())
        .fold(0.0, f64::max);
    (slope, resid)
}

fn unwrap_phase(z: &[Complex<f64>]) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::with_capacity(z.len());
    for w in z {
        let raw = w.arg();
        let v = match out.last() {
            None => raw,
            Some(&prev) => {
                let tau = std::f64::consts::TAU;
                raw + tau * ((prev - raw) / tau).round()
            }
        };
        out.push(v);
    }
    out
}

/// Verdict, fitted phase rate and residuals for a sampled complex series.
pub fn classify_series(
    times: &[f64],
    series: &[Complex<f64>],
    tol: MassTolerances,
) -> (MassVerdict, f64, MassResiduals) {
    let scale = series[0].norm().max(1.0);
    let first = series[0];
    let constant = series.iter().map(|z| (z - first).norm()).fold(0.0, f64::max);
    let modulus = series
        .iter()
        .map(|z| (z.norm() - first.norm()).abs())
        .fold(0.0, f64::max);
    let (rate, phase_fit) = if first.norm() > 0.0 && times.len() >= 2 {
        linear_fit(times, &unwrap_phase(series))
    } else {
        (0.0, 0.0)
    };
    let verdict = if constant <= tol.constant * scale {
        MassVerdict::Constant
    } else if modulus <= tol.modulus * scale && phase_fit <= tol.phase_fit {
        MassVerdict::Rotating
    } else {
        MassVerdict::Unclassified
    };
    let rate = if verdict == MassVerdict::Constant { 0.0 } else { rate };
    let residuals = MassResiduals {
        constant,
        modulus,
        phase_fit,
    };
    (verdict, rate, residuals)
}

/// Tracks the mass coefficient of `H(t) = U(t,0) H(0) U†(t,0)` and
/// classifies it as constant, rotating at a fitted rate, or neither.
pub fn classify_mass(rep: &SpinorRep<f64>, m0: f64, p: [f64; 3], t_grid: &[f64]) -> Result<MassReport> {
    classify_mass_with(rep, m0, p, t_grid, MassTolerances::default())
}

pub fn classify_mass_with(
    rep: &SpinorRep<f64>,
    m0: f64,
    p: [f64; 3],
    t_grid: &[f64],
    tol: MassTolerances,
) -> Result<MassReport> {
    if t_grid.is_empty() {
        return Err(Error::InvalidParameter("t_grid must be non-empty".into()));
    }
    if t_grid.iter().any(|t| !t.is_finite()) || !m0.is_finite() || p.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidParameter("non-finite input".into()));
    }
    let frame = frame_for(rep, m0, p)?;
    let h0 = rep.hamiltonian(m0, p);
    let g = rep.mass_generator();
    let c0 = mass_channel(&g, &h0);
    let series: Vec<Complex<f64>> = t_grid
        .iter()
        .map(|&t| {
            let h = evolve_hamiltonian(&frame, &h0, t)?;
            Ok(if c0.norm() == 0.0 {
                Complex::zero()
            } else {
                mass_channel(&g, &h) / c0 * m0
            })
        })
        .collect::<Result<_>>()?;
    let (verdict, phase_rate, residuals) = classify_series(t_grid, &series, tol);
    let expected_rate = match rep.kind {
        RepKind::Majorana if m0 != 0.0 => 2.0 * frame.energy,
        _ => 0.0,
    };
    Ok(MassReport {
        rep: rep.kind,
        verdict,
        times: t_grid.to_vec(),
        series: series.iter().map(|z| [z.re, z.im]).collect(),
        modulus_series: series.iter().map(|z| z.norm()).collect(),
        phase_rate,
        expected_rate,
        residuals,
        fallback_frame: frame.fallback,
    })
}
