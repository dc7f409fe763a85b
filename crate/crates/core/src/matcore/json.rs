use num_complex::Complex;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ComplexMat;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Wire form of a matrix: `{"dim": n, "re": [...], "im": [...]}`, row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatJson<T> {
    pub dim: usize,
    pub re: Vec<T>,
    pub im: Vec<T>,
}

impl<T: Scalar> From<&ComplexMat<T>> for MatJson<T> {
    fn from(m: &ComplexMat<T>) -> Self {
        Self {
            dim: m.dim(),
            re: m.entries().iter().map(|z| z.re.clone() + T::zero()).collect(),
            im: m.entries().iter().map(|z| z.im.clone() + T::zero()).collect(),
        }
    }
}

impl<T: Scalar> TryFrom<MatJson<T>> for ComplexMat<T> {
    type Error = Error;

    fn try_from(j: MatJson<T>) -> Result<Self> {
        if j.re.len() != j.im.len() {
            return Err(Error::EntryCount {
                expected: j.re.len(),
                got: j.im.len(),
            });
        }
        let data = j.re.into_iter().zip(j.im).map(|(r, i)| Complex::new(r, i)).collect();
        ComplexMat::from_row_major(j.dim, data)
    }
}

impl<T: Scalar + Serialize> Serialize for ComplexMat<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatJson::from(self).serialize(s)
    }
}

impl<'de, T: Scalar + Deserialize<'de>> Deserialize<'de> for ComplexMat<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MatJson::<T>::deserialize(d)?;
        ComplexMat::try_from(j).map_err(serde::de::Error::custom)
    }
}
