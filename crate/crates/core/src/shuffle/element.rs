use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::RatV;
use crate::polyring::{ColorVar, DegreeVector, MultiLaurent};

/// Element `F = f / prod_{i} prod_{r,r'} (x_{i,r} - x_{i+1,r'})` of the shuffle algebra.
///
/// Only the numerator `f` is stored; the pole product is implied by the degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ShuffleElement {
    numerator: MultiLaurent,
}

impl ShuffleElement {
    /// Checks same-color symmetry of the numerator.
    pub fn new(numerator: MultiLaurent) -> Result<Self> {
        if !numerator.is_symmetric() {
            return Err(Error::Precondition(
                "numerator is not symmetric in same-color variables".into(),
            ));
        }
        Ok(Self { numerator })
    }

    pub(crate) fn from_numerator_unchecked(numerator: MultiLaurent) -> Self {
        Self { numerator }
    }

    /// Unit of degree zero.
    pub fn unit(rank: usize) -> Self {
        Self::constant(rank, DegreeVector::zero(rank), RatV::one())
    }

    pub fn zero(rank: usize, degree: DegreeVector) -> Self {
        Self {
            numerator: MultiLaurent::zero(rank, degree),
        }
    }

    pub fn constant(rank: usize, degree: DegreeVector, c: RatV) -> Self {
        Self {
            numerator: MultiLaurent::constant(rank, degree, c),
        }
    }

    pub fn rank(&self) -> usize {
        self.numerator.rank()
    }

    pub fn degree(&self) -> &DegreeVector {
        self.numerator.degree()
    }

    pub fn numerator(&self) -> &MultiLaurent {
        &self.numerator
    }

    /// Total loop mode: numerator degree minus the number of pole factors.
    /// `None` for zero or inhomogeneous numerators.
    pub fn mode(&self) -> Option<i64> {
        let d = self.numerator.poly().homogeneous_degree()?;
        Some(d as i64 - self.pole_factors().len() as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            numerator: self.numerator.add(&other.numerator)?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(Self {
            numerator: self.numerator.sub(&other.numerator)?,
        })
    }

    pub fn scale(&self, s: &RatV) -> Self {
        Self {
            numerator: self.numerator.scalar_mul(s),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            numerator: self.numerator.neg(),
        }
    }

    /// The implied pole product as linear factors.
    pub fn pole_factors(&self) -> Vec<(ColorVar, ColorVar)> {
        pole_factors(self.degree())
    }
}

/// `(x_{i,r}, x_{i+1,r'})` for every adjacent-color pair in the degree.
pub fn pole_factors(degree: &DegreeVector) -> Vec<(ColorVar, ColorVar)> {
    let mut out = Vec::new();
    for i in 1..degree.num_colors() {
        for r in 1..=degree.get(i) {
            for s in 1..=degree.get(i + 1) {
                out.push((ColorVar::new(i, r), ColorVar::new(i + 1, s)));
            }
        }
    }
    out
}

/// `(x_{i,r}, x_{i,r'})` with `r < r'` for every color.
pub fn vandermonde_factors(degree: &DegreeVector) -> Vec<(ColorVar, ColorVar)> {
    let mut out = Vec::new();
    for i in 1..=degree.num_colors() {
        for r in 1..=degree.get(i) {
            for s in r + 1..=degree.get(i) {
                out.push((ColorVar::new(i, r), ColorVar::new(i, s)));
            }
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    rank: usize,
    degree: Vec<usize>,
    numerator: MultiLaurent,
}

impl Serialize for ShuffleElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            rank: self.rank(),
            degree: self.degree().0.clone(),
            numerator: self.numerator.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ShuffleElement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ElementRepr::deserialize(d)?;
        if r.rank != r.numerator.rank() || r.degree != r.numerator.degree().0 {
            return Err(D::Error::custom("element header disagrees with its numerator"));
        }
        ShuffleElement::new(r.numerator).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let d = DegreeVector(vec![1, 1]);
        let p = MultiLaurent::monomial(3, d, &[(ColorVar::new(1, 1), -2)], RatV::v_pow(3)).unwrap();
        let e = ShuffleElement::new(p).unwrap();
        let s = serde_json::to_string(&e).unwrap();
        assert!(s.starts_with(r#"{"rank":3,"degree":[1,1],"numerator":{"#));
        let back: ShuffleElement = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn rejects_asymmetric_numerator() {
        let d = DegreeVector(vec![2]);
        let p = MultiLaurent::monomial(2, d, &[(ColorVar::new(1, 1), 1)], RatV::one()).unwrap();
        assert!(ShuffleElement::new(p).is_err());
    }

    #[test]
    fn pole_product_shape() {
        let d = DegreeVector(vec![2, 1, 1]);
        assert_eq!(pole_factors(&d).len(), 3);
        assert_eq!(vandermonde_factors(&d).len(), 1);
    }
}
