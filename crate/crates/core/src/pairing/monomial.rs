use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::DegreeVector;
use crate::shuffle::{Decomposition, Root};

/// Ordered product `f~_{beta_1,r_1} ... f~_{beta_N,r_N}` of rescaled root currents' coefficients.
///
/// The checked constructor enforces the opposite of the `(root, mode)` order:
/// keys are non-increasing from left to right.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FPBWDMonomial {
    factors: Vec<Decomposition>,
}

fn key(d: &Decomposition) -> (Root, i64) {
    (d.root, d.mode())
}

impl FPBWDMonomial {
    pub fn new(factors: Vec<Decomposition>) -> Result<Self> {
        for w in factors.windows(2) {
            if key(&w[0]) < key(&w[1]) {
                return Err(Error::Unsorted(format!("{} before {}", w[0], w[1])));
            }
        }
        Ok(Self { factors })
    }

    /// Any factor order; the pairing itself does not depend on ordering conventions.
    pub fn new_unchecked(factors: Vec<Decomposition>) -> Self {
        Self { factors }
    }

    pub fn factors(&self) -> &[Decomposition] {
        &self.factors
    }

    pub fn degree(&self, rank: usize) -> DegreeVector {
        let mut d = DegreeVector::zero(rank);
        for f in &self.factors {
            for c in f.root.colors() {
                d.0[c - 1] += 1;
            }
        }
        d
    }

    pub fn total_mode(&self) -> i64 {
        self.factors.iter().map(Decomposition::mode).sum()
    }
}

impl fmt::Display for FPBWDMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (t, d) in self.factors.iter().enumerate() {
            if t > 0 {
                write!(f, "*")?;
            }
            write!(f, "f{d}")?;
        }
        Ok(())
    }
}
