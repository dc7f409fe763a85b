//! Majorana, Dirac and scattering-gamma representations of the 4×4 Clifford
//! algebra, with derived `γ₀` and spin matrices.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matcore::{anticommutator, commutator, ComplexMat, KronLabel, Pauli};
use crate::scalar::{imag_unit, Real, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepKind {
    Majorana,
    Dirac,
    GammaScatter,
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepKind::Majorana => "majorana",
            RepKind::Dirac => "dirac",
            RepKind::GammaScatter => "gamma_scatter",
        })
    }
}

impl FromStr for RepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "majorana" => Ok(RepKind::Majorana),
            "dirac" => Ok(RepKind::Dirac),
            "gamma" | "gamma_scatter" => Ok(RepKind::GammaScatter),
            other => Err(Error::InvalidParameter(format!("unknown representation {other:?}"))),
        }
    }
}

/// Generator matrices of one representation.
///
/// `spin[i] = ½[α_j, α_k]` for cyclic `(i, j, k)`; `gamma0 = β α_x α_y α_z`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorRep<T> {
    pub kind: RepKind,
    pub beta: ComplexMat<T>,
    pub alpha: [ComplexMat<T>; 3],
    pub gamma0: ComplexMat<T>,
    pub spin: [ComplexMat<T>; 3],
}

impl<T: Scalar> SpinorRep<T> {
    /// Assembles a representation from `β` and `α`, deriving `γ₀` and spin.
    pub fn from_generators(kind: RepKind, beta: ComplexMat<T>, alpha: [ComplexMat<T>; 3]) -> Self {
        let gamma0 = &(&(&beta * &alpha[0]) * &alpha[1]) * &alpha[2];
        let spin = derived_spin(&alpha);
        Self {
            kind,
            beta,
            alpha,
            gamma0,
            spin,
        }
    }

    /// The Hermitian matrix multiplying the mass in the Hamiltonian.
    ///
    /// For the Majorana representation `β` is real antisymmetric (`β² = −1`),
    /// so the mass enters as `iβ`; otherwise it is `β` itself.
    pub fn mass_generator(&self) -> ComplexMat<T> {
        match self.kind {
            RepKind::Majorana => self.beta.scale(&imag_unit()),
            _ => self.beta.clone(),
        }
    }

    /// `H = m·G + α·p` with `G` the mass generator.
    pub fn hamiltonian(&self, m: T, p: [T; 3]) -> ComplexMat<T> {
        let mut h = self.mass_generator().scale_re(&m);
        for (a, pk) in self.alpha.iter().zip(p) {
            h = &h + &a.scale_re(&pk);
        }
        h
    }

    /// Hermitian spin operators `Σ_i = i S_i`.
    pub fn hermitian_spin(&self) -> [ComplexMat<T>; 3] {
        let i = imag_unit::<T>();
        std::array::from_fn(|k| self.spin[k].scale(&i))
    }
}

fn derived_spin<T: Scalar>(alpha: &[ComplexMat<T>; 3]) -> [ComplexMat<T>; 3] {
    let half = Complex::new(T::one(), T::zero()) / Complex::new(T::int(2), T::zero());
    std::array::from_fn(|i| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        commutator(&alpha[j], &alpha[k]).expect("4x4").scale(&half)
    })
}

/// Real Majorana representation with integer entries.
pub fn build_majorana<T: Scalar>() -> SpinorRep<T> {
    let beta = ComplexMat::from_int_rows([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]);
    let ax = ComplexMat::from_int_rows([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]);
    let ay = ComplexMat::from_int_rows([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]);
    let az = ComplexMat::from_int_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]]);
    SpinorRep::from_generators(RepKind::Majorana, beta, [ax, ay, az])
}

/// Kronecker form of the Majorana generators: each matrix is `coeff · (σ_l ⊗ σ_r)`.
///
/// `β = i σ_y⊗1`, `α_x = σ_z⊗σ_z`, `α_y = σ_x⊗1`, `α_z = σ_z⊗σ_x`.
pub fn majorana_kron_decomposition<T: Scalar>() -> [(Complex<T>, KronLabel); 4] {
    let one = Complex::new(T::one(), T::zero());
    [
        (imag_unit(), KronLabel::new(Pauli::Y, Pauli::I)),
        (one.clone(), KronLabel::new(Pauli::Z, Pauli::Z)),
        (one.clone(), KronLabel::new(Pauli::X, Pauli::I)),
        (one, KronLabel::new(Pauli::Z, Pauli::X)),
    ]
}

/// Dirac–Pauli representation: `β = σ_z⊗1`, `α_i = σ_x⊗σ_i`.
pub fn build_dirac<T: Scalar>() -> SpinorRep<T> {
    let beta = KronLabel::new(Pauli::Z, Pauli::I).matrix();
    let alpha = [Pauli::X, Pauli::Y, Pauli::Z].map(|p| KronLabel::new(Pauli::X, p).matrix());
    SpinorRep::from_generators(RepKind::Dirac, beta, alpha)
}

pub fn build(kind: RepKind) -> SpinorRep<f64> {
    match kind {
        RepKind::Majorana => build_majorana(),
        RepKind::Dirac | RepKind::GammaScatter => build_dirac(),
    }
}

/// Gamma matrices used for the scattering embedding.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaSet<T> {
    pub t: ComplexMat<T>,
    pub x: ComplexMat<T>,
    pub y: ComplexMat<T>,
    pub z: ComplexMat<T>,
}

impl<T> GammaSet<T> {
    pub fn spatial(&self) -> [&ComplexMat<T>; 3] {
        [&self.x, &self.y, &self.z]
    }
}

/// `γ_t = β`, `γ_i = iβα_i` from the Dirac representation: all four square to
/// the identity and mutually anticommute.
pub fn build_gamma_scatter<T: Scalar>() -> GammaSet<T> {
    let d = build_dirac::<T>();
    let i = imag_unit::<T>();
    let [x, y, z] = d.alpha.clone().map(|a| (&d.beta * &a).scale(&i));
    GammaSet { t: d.beta, x, y, z }
}

/// Maximum residual per relation. `relations` gate the verdict; `notes` are
/// informational identities that are known not to hold for every input.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub rep: RepKind,
    pub relations: BTreeMap<String, f64>,
    pub notes: BTreeMap<String, f64>,
}

impl AlgebraReport {
    pub fn max_violation(&self) -> f64 {
        self.relations.values().copied().fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max_violation() < tol
    }
}

fn max_of<T: Real>(xs: impl IntoIterator<Item = T>) -> f64 {
    xs.into_iter().map(Real::as_f64).fold(0.0, f64::max)
}

pub fn verify_algebra<T: Real>(rep: &SpinorRep<T>) -> AlgebraReport {
    let id = ComplexMat::<T>::identity(4).expect("4x4");
    let g = rep.mass_generator();
    let a = &rep.alpha;
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let anti = |x: &ComplexMat<T>, y: &ComplexMat<T>| anticommutator(x, y).expect("4x4").max_abs();

    let mut relations = BTreeMap::new();
    relations.insert(
        "anticomm_beta_alpha".to_string(),
        max_of(a.iter().map(|ai| anti(&rep.beta, ai))),
    );
    relations.insert(
        "anticomm_mass_alpha".to_string(),
        max_of(a.iter().map(|ai| anti(&g, ai))),
    );
    relations.insert(
        "anticomm_alpha_alpha".to_string(),
        max_of(pairs.iter().map(|&(i, j)| anti(&a[i], &a[j]))),
    );
    relations.insert(
        "square_alpha".to_string(),
        max_of(a.iter().map(|ai| (ai * ai).max_abs_diff(&id))),
    );
    relations.insert("square_mass".to_string(), (&g * &g).max_abs_diff(&id).as_f64());
    relations.insert(
        "anticomm_gamma0".to_string(),
        max_of(std::iter::once(&rep.beta).chain(a.iter()).map(|x| anti(&rep.gamma0, x))),
    );
    let product = &(&(&rep.beta * &a[0]) * &a[1]) * &a[2];
    relations.insert("gamma0_product".to_string(), rep.gamma0.max_abs_diff(&product).as_f64());
    let spin = derived_spin(a);
    relations.insert(
        "spin_definition".to_string(),
        max_of((0..3).map(|k| rep.spin[k].max_abs_diff(&spin[k]))),
    );
    let sigma = rep.hermitian_spin();
    let half_i = imag_unit::<T>() * T::lit(0.5);
    relations.insert(
        "spin_closure".to_string(),
        max_of((0..3).map(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let rhs = commutator(&sigma[j], &sigma[k]).expect("4x4").scale(&half_i);
            sigma[i].max_abs_diff(&rhs)
        })),
    );

    let mut notes = BTreeMap::new();
    notes.insert(
        "beta_square_minus_identity".to_string(),
        (&rep.beta * &rep.beta).max_abs_diff(&id).as_f64(),
    );
    notes.insert(
        "beta_square_plus_identity".to_string(),
        (&(&rep.beta * &rep.beta) + &id).max_abs().as_f64(),
    );
    notes.insert(
        "spin_closure_unhermitian".to_string(),
        max_of((0..3).map(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            let rhs = commutator(&rep.spin[j], &rep.spin[k]).expect("4x4").scale(&half_i);
            rep.spin[i].max_abs_diff(&rhs)
        })),
    );

    AlgebraReport {
        rep: rep.kind,
        relations,
        notes,
    }
}

/// Anticommutation relations of a gamma set plus the commutator-closure note
/// `[γ_i, γ_j] = ε_ijk γ_k`, which this normalization does not satisfy.
pub fn verify_gamma<T: Real>(g: &GammaSet<T>) -> AlgebraReport {
    let id = ComplexMat::<T>::identity(4).expect("4x4");
    let sp = g.spatial();
    let anti = |x: &ComplexMat<T>, y: &ComplexMat<T>| anticommutator(x, y).expect("4x4");
    let mut relations = BTreeMap::new();
    relations.insert(
        "square_gamma".to_string(),
        max_of(std::iter::once(&g.t).chain(sp).map(|m| (m * m).max_abs_diff(&id))),
    );
    relations.insert(
        "anticomm_t_spatial".to_string(),
        max_of(sp.iter().map(|m| anti(&g.t, m).max_abs())),
    );
    let two = id.scale_re(&T::lit(2.0));
    relations.insert(
        "anticomm_spatial".to_string(),
        max_of((0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| {
            let ac = anti(sp[i], sp[j]);
            if i == j {
                ac.max_abs_diff(&two)
            } else {
                ac.max_abs()
            }
        })),
    );
    relations.insert(
        "hermitian".to_string(),
        max_of(std::iter::once(&g.t).chain(sp).map(|m| m.hermiticity_residual())),
    );
    let mut notes = BTreeMap::new();
    notes.insert(
        "commutator_closure".to_string(),
        max_of((0..3).map(|i| {
            let (j, k) = ((i + 1) % 3, (i + 2) % 3);
            commutator(sp[j], sp[k]).expect("4x4").max_abs_diff(sp[i])
        })),
    );
    AlgebraReport {
        rep: RepKind::GammaScatter,
        relations,
        notes,
    }
}

/// Report for any named representation.
pub fn verify_kind(kind: RepKind) -> AlgebraReport {
    match kind {
        RepKind::GammaScatter => verify_gamma(&build_gamma_scatter::<f64>()),
        k => verify_algebra(&build(k)),
    }
}
