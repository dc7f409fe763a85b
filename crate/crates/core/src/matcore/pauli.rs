use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{kron, ComplexMat};
use crate::error::Error;
use crate::scalar::Scalar;

/// Index into `{1, σx, σy, σz}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    fn symbol(self) -> char {
        match self {
            Pauli::I => '1',
            Pauli::X => 'x',
            Pauli::Y => 'y',
            Pauli::Z => 'z',
        }
    }

    fn from_symbol(c: char) -> Option<Self> {
        match c {
            '1' | 'i' | 't' => Some(Pauli::I),
            'x' => Some(Pauli::X),
            'y' => Some(Pauli::Y),
            'z' => Some(Pauli::Z),
            _ => None,
        }
    }
}

/// 2×2 Pauli matrix or identity.
pub fn pauli<T: Scalar>(index: Pauli) -> ComplexMat<T> {
    let o = Complex::<T>::zero;
    let one = Complex::<T>::one;
    let i = || Complex::new(T::zero(), T::one());
    let data = match index {
        Pauli::I => vec![one(), o(), o(), one()],
        Pauli::X => vec![o(), one(), one(), o()],
        Pauli::Y => vec![o(), -i(), i(), o()],
        Pauli::Z => vec![one(), o(), o(), -one()],
    };
    ComplexMat::from_row_major(2, data).expect("2x2")
}

/// Label of `σ_left ⊗ σ_right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KronLabel {
    pub left: Pauli,
    pub right: Pauli,
}

impl KronLabel {
    pub const IDENTITY: KronLabel = KronLabel::new(Pauli::I, Pauli::I);

    pub const fn new(left: Pauli, right: Pauli) -> Self {
        Self { left, right }
    }

    /// All 16 labels, left index major, in `1, x, y, z` order.
    pub fn all() -> impl Iterator<Item = KronLabel> {
        Pauli::ALL
            .into_iter()
            .flat_map(|l| Pauli::ALL.into_iter().map(move |r| KronLabel::new(l, r)))
    }

    /// The 15 traceless labels.
    pub fn traceless() -> impl Iterator<Item = KronLabel> {
        Self::all().filter(|l| !l.is_identity())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn matrix<T: Scalar>(&self) -> ComplexMat<T> {
        kron(&pauli(self.left), &pauli(self.right)).expect("2x2 factors")
    }
}

impl fmt::Display for KronLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.left.symbol(), self.right.symbol())
    }
}

impl FromStr for KronLabel {
    type Err = Error;

    /// Parses two-character labels such as `xz`, `1y` or `z1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<char> = s.trim().to_ascii_lowercase().chars().collect();
        match chars.as_slice() {
            [a, b] => match (Pauli::from_symbol(*a), Pauli::from_symbol(*b)) {
                (Some(l), Some(r)) => Ok(KronLabel::new(l, r)),
                _ => Err(Error::InvalidParameter(format!("bad Kronecker label {s:?}"))),
            },
            _ => Err(Error::InvalidParameter(format!("bad Kronecker label {s:?}"))),
        }
    }
}

impl Serialize for KronLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for KronLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The 16 matrices `σ_i ⊗ σ_j` with their labels.
pub fn basis16<T: Scalar>() -> Vec<(KronLabel, ComplexMat<T>)> {
    KronLabel::all().map(|l| (l, l.matrix())).collect()
}
