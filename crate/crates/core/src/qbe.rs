//! Brachistochrone systems: a Hamiltonian spanned by a set of Kronecker
//! labels, a constraint spanned by the complementary labels, and numerical
//! integration of `i d/dt (H + F) = [H, F]`.
//!
//! The integrator advances the combined matrix `A = H + F` with classical
//! RK4 on `dA/dt = -i[P_H(A), A]`, where `P_H` projects onto the Hamiltonian
//! span. After every step `A` is re-projected onto traceless Hermitian
//! matrices; `H(t)` and `F(t)` are then read back by trace projection.

use std::collections::BTreeSet;

use num_complex::Complex;
use num_traits::Zero;

use crate::cliffrep::build_majorana;
use crate::error::{Error, Result};
use crate::matcore::{commutator, eigh, inner, spinor_norm, trace_pair, ComplexMat, KronLabel, Pauli, Spinor};
use crate::scalar::{Real, Scalar};

/// Hamiltonian span of the Majorana system: mass `iβ = −σ_y⊗1`, then
/// `α_x = σ_z⊗σ_z`, `α_y = σ_x⊗1`, `α_z = σ_z⊗σ_x`.
pub const MAJORANA_SPAN: [KronLabel; 4] = [
    KronLabel::new(Pauli::Y, Pauli::I),
    KronLabel::new(Pauli::Z, Pauli::Z),
    KronLabel::new(Pauli::X, Pauli::I),
    KronLabel::new(Pauli::Z, Pauli::X),
];

/// Constraint label that generates the block phase `diag(e^{-iEt}, e^{-iEt}, e^{iEt}, e^{iEt})`.
pub const BLOCK_PHASE_LABEL: KronLabel = KronLabel::new(Pauli::Z, Pauli::I);

/// Membership-checked label set: non-empty, no identity, no duplicates.
fn validate_span(span: &[KronLabel]) -> Result<BTreeSet<KronLabel>> {
    if span.is_empty() {
        return Err(Error::EmptySpan);
    }
    let mut set = BTreeSet::new();
    for l in span {
        if l.is_identity() {
            return Err(Error::IdentityInSpan);
        }
        if !set.insert(*l) {
            return Err(Error::DuplicateLabel(l.to_string()));
        }
    }
    Ok(set)
}

/// Traceless labels not in `h_span`, in canonical order.
pub fn complement_span(h_span: &[KronLabel]) -> Result<Vec<KronLabel>> {
    let set = validate_span(h_span)?;
    Ok(KronLabel::traceless().filter(|l| !set.contains(l)).collect())
}

/// `F = Σ λ_a Υ_a`.
pub fn assemble_constraint<T: Scalar>(f_span: &[KronLabel], lambda: &[T]) -> Result<ComplexMat<T>> {
    if f_span.len() != lambda.len() {
        return Err(Error::LengthMismatch {
            labels: f_span.len(),
            coeffs: lambda.len(),
        });
    }
    let mut f = ComplexMat::zeros(4)?;
    for (l, c) in f_span.iter().zip(lambda) {
        f = &f + &l.matrix().scale_re(c);
    }
    Ok(f)
}

/// `Tr[[h, f] g]`.
pub fn trace_project_rhs<T: Scalar>(h: &ComplexMat<T>, f: &ComplexMat<T>, g: &ComplexMat<T>) -> Result<Complex<T>> {
    trace_pair(&commutator(h, f)?, g)
}

/// Real coefficients `Re Tr[a Υ]/4` over `span`.
pub fn span_coefficients<T: Real>(a: &ComplexMat<T>, span: &[KronLabel]) -> Vec<T> {
    let quarter = T::lit(0.25);
    span.iter()
        .map(|l| trace_pair(a, &l.matrix()).expect("4x4").re * quarter)
        .collect()
}

/// Orthogonal projection of `a` onto the real span of `span`.
pub fn project_onto<T: Real>(a: &ComplexMat<T>, span: &[KronLabel]) -> ComplexMat<T> {
    let coeffs = span_coefficients(a, span);
    assemble_constraint(span, &coeffs).expect("lengths agree")
}

/// `|Tr[h²/2] − k|`.
pub fn check_isotropic<T: Real>(h: &ComplexMat<T>, k: T) -> T {
    let half = trace_pair(h, h)
        .map(|z| z * T::lit(0.5))
        .unwrap_or_else(|_| Complex::zero());
    (half - Complex::new(k, T::zero())).norm()
}

/// Normalization tolerance for states.
pub const NORM_TOL: f64 = 1e-12;

/// `⟨ψ|H²|ψ⟩ − ⟨ψ|H|ψ⟩²` for a normalized state.
pub fn energy_variance<T: Real>(h: &ComplexMat<T>, psi: &Spinor<T>) -> Result<T> {
    let norm = spinor_norm(psi);
    if (norm - T::one()).abs() > T::lit(NORM_TOL) {
        return Err(Error::NotNormalized { norm: norm.as_f64() });
    }
    let h_psi = h.apply(psi)?;
    let mean = inner(psi, &h_psi).re;
    let mean_sq = inner(&h_psi, &h_psi).re;
    Ok((mean_sq - mean * mean).max(T::zero()))
}

/// A Hamiltonian together with its constraint data.
#[derive(Clone, Debug, PartialEq)]
pub struct BrachSystem<T> {
    pub h0: ComplexMat<T>,
    pub h_span: Vec<KronLabel>,
    pub f_span: Vec<KronLabel>,
    /// Initial constraint coefficients over `f_span`.
    pub lambda0: Vec<T>,
    /// Isotropic constraint value `Tr[H(0)²/2]`.
    pub k: T,
}

impl<T: Real> BrachSystem<T> {
    /// Validates the span bookkeeping and the initial invariants.
    pub fn new(h0: ComplexMat<T>, h_span: Vec<KronLabel>, lambda0: Vec<T>) -> Result<Self> {
        let f_span = complement_span(&h_span)?;
        if h0.dim() != 4 {
            return Err(Error::DimensionMismatch {
                left: h0.dim(),
                right: 4,
            });
        }
        let tol = T::lit(1e-10) * h0.max_abs().max(T::one());
        let tr = h0.trace().norm();
        if tr > tol {
            return Err(Error::NotTraceless(tr.as_f64()));
        }
        let outside = h0.max_abs_diff(&project_onto(&h0, &h_span));
        if outside > tol {
            return Err(Error::OutsideSpan(outside.as_f64()));
        }
        let f0 = assemble_constraint(&f_span, &lambda0)?;
        let hf = trace_pair(&h0, &f0)?.norm();
        if hf > tol * f0.max_abs().max(T::one()) {
            return Err(Error::NotOrthogonal(hf.as_f64()));
        }
        let k = trace_pair(&h0, &h0)?.re * T::lit(0.5);
        Ok(Self {
            h0,
            h_span,
            f_span,
            lambda0,
            k,
        })
    }

    /// Builds the constraint from `(label, value)` pairs; unlisted labels are zero.
    pub fn with_lambda(h0: ComplexMat<T>, h_span: Vec<KronLabel>, lambda: &[(KronLabel, T)]) -> Result<Self> {
        let f_span = complement_span(&h_span)?;
        let mut lambda0 = vec![T::zero(); f_span.len()];
        for (label, value) in lambda {
            let idx = f_span
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| Error::InvalidParameter(format!("label {label} is not in the constraint span")))?;
            lambda0[idx] = *value;
        }
        Self::new(h0, h_span, lambda0)
    }

    pub fn f0(&self) -> ComplexMat<T> {
        assemble_constraint(&self.f_span, &self.lambda0).expect("validated lengths")
    }

    /// Majorana system `H(0) = iβm + α·p` with the given constraint values.
    pub fn majorana(m: T, p: [T; 3], lambda: &[(KronLabel, T)]) -> Result<Self> {
        let h0 = build_majorana::<T>().hamiltonian(m, p);
        Self::with_lambda(h0, MAJORANA_SPAN.to_vec(), lambda)
    }

    /// Majorana system whose constraint `F = −E σ_z⊗1` makes the flow
    /// `H(t) = U(t,0) H(0) U†(t,0)` with `U = diag(e^{−2iEt}, e^{−2iEt}, 1, 1)`
    /// up to global phase.
    pub fn majorana_rotating(m: T, p: [T; 3]) -> Result<Self> {
        let energy = (m * m + p.iter().fold(T::zero(), |acc, &x| acc + x * x)).sqrt();
        Self::majorana(m, p, &[(BLOCK_PHASE_LABEL, -energy)])
    }
}

/// Sampled solution of the brachistochrone equation.
#[derive(Clone, Debug)]
pub struct Trajectory<T> {
    pub times: Vec<T>,
    pub h_t: Vec<ComplexMat<T>>,
    pub f_t: Vec<ComplexMat<T>>,
    /// Step actually used (`t_end / n_steps`, never larger than requested).
    pub step: T,
    /// Largest `|Tr A|` of the raw RK4 update before re-projection.
    pub raw_trace_max: T,
    /// Largest anti-Hermitian residual of the raw RK4 update.
    pub raw_hermiticity_max: T,
}

impl<T: Real> Trajectory<T> {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn combined(&self, idx: usize) -> ComplexMat<T> {
        &self.h_t[idx] + &self.f_t[idx]
    }

    /// `max_t |Tr[A(t)²] − Tr[A(0)²]|`.
    pub fn trace_square_drift(&self) -> T {
        let a0 = self.combined(0);
        let base = trace_pair(&a0, &a0).expect("4x4");
        (0..self.len())
            .map(|k| {
                let a = self.combined(k);
                (trace_pair(&a, &a).expect("4x4") - base).norm()
            })
            .fold(T::zero(), T::max)
    }

    /// `max_t |Tr[H(t)F(t)]|`.
    pub fn trace_hf_max(&self) -> T {
        self.h_t
            .iter()
            .zip(&self.f_t)
            .map(|(h, f)| trace_pair(h, f).expect("4x4").norm())
            .fold(T::zero(), T::max)
    }

    /// `max_t |Tr[H(t)²/2] − k|`.
    pub fn isotropic_drift(&self, k: T) -> T {
        self.h_t.iter().map(|h| check_isotropic(h, k)).fold(T::zero(), T::max)
    }

    /// Largest change of any eigenvalue of `H + F` relative to `t = 0`.
    pub fn spectrum_drift(&self) -> T {
        let base = eigh(&self.combined(0)).values;
        (0..self.len())
            .map(|k| {
                eigh(&self.combined(k))
                    .values
                    .iter()
                    .zip(&base)
                    .map(|(a, b)| (*a - *b).abs())
                    .fold(T::zero(), T::max)
            })
            .fold(T::zero(), T::max)
    }
}

/// Fixed-step RK4 integration storing every step.
pub fn integrate_qbe<T: Real>(sys: &BrachSystem<T>, t_end: T, step: T) -> Result<Trajectory<T>> {
    integrate_qbe_sampled(sys, t_end, step, 1)
}

/// As [`integrate_qbe`], storing every `stride`-th step plus the final one.
pub fn integrate_qbe_sampled<T: Real>(sys: &BrachSystem<T>, t_end: T, step: T, stride: usize) -> Result<Trajectory<T>> {
    if !(step > T::zero()) || !step.is_finite() {
        return Err(Error::InvalidParameter(format!("step must be positive, got {step}")));
    }
    if !(t_end > T::zero()) || !t_end.is_finite() {
        return Err(Error::InvalidParameter(format!("t_end must be positive, got {t_end}")));
    }
    if stride == 0 {
        return Err(Error::InvalidParameter("stride must be at least 1".into()));
    }
    let n_steps = (t_end / step - T::lit(1e-9)).ceil().to_usize().unwrap_or(1).max(1);
    let dt = t_end / T::from_usize(n_steps).expect("step count fits");
    let minus_i = Complex::new(T::zero(), -T::one());
    let span = &sys.h_span;
    let rhs = |a: &ComplexMat<T>| -> ComplexMat<T> {
        let h = project_onto(a, span);
        commutator(&h, a).expect("4x4").scale(&minus_i)
    };

    let mut a = &sys.h0 + &sys.f0();
    let mut traj = Trajectory {
        times: vec![T::zero()],
        h_t: vec![project_onto(&a, span)],
        f_t: vec![project_onto(&a, &sys.f_span)],
        step: dt,
        raw_trace_max: T::zero(),
        raw_hermiticity_max: T::zero(),
    };
    let half = T::lit(0.5);
    let sixth = T::one() / T::lit(6.0);
    for k in 1..=n_steps {
        let k1 = rhs(&a);
        let k2 = rhs(&(&a + &k1.scale_re(&(dt * half))));
        let k3 = rhs(&(&a + &k2.scale_re(&(dt * half))));
        let k4 = rhs(&(&a + &k3.scale_re(&dt)));
        let incr = &(&k1 + &k2.scale_re(&T::lit(2.0))) + &(&k3.scale_re(&T::lit(2.0)) + &k4);
        let raw = &a + &incr.scale_re(&(dt * sixth));
        let t = dt * T::from_usize(k).expect("step index fits");
        if !raw.is_finite() {
            return Err(Error::NonFinite { time: t.as_f64() });
        }
        traj.raw_trace_max = traj.raw_trace_max.max(raw.trace().norm());
        traj.raw_hermiticity_max = traj.raw_hermiticity_max.max(raw.hermiticity_residual());
        a = raw.traceless_hermitian_part();
        if k % stride == 0 || k == n_steps {
            traj.times.push(t);
            traj.h_t.push(project_onto(&a, span));
            traj.f_t.push(project_onto(&a, &sys.f_span));
        }
    }
    Ok(traj)
}
