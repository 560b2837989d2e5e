//! Symmetric q-integers and q-factorials.

use super::{LaurentV, RatV};
use crate::error::{Error, Result};

/// `[k]_v = (v^k - v^{-k}) / (v - v^{-1}) = v^{k-1} + v^{k-3} + ... + v^{1-k}`.
pub fn qint(k: i64) -> Result<LaurentV> {
    if k < 0 {
        return Err(Error::NegativeArgument(k));
    }
    Ok(LaurentV::from_pairs((0..k).map(|t| (k - 1 - 2 * t, 1))))
}

/// `[k]_v! = [1]_v [2]_v ... [k]_v`.
pub fn qfact(k: i64) -> Result<LaurentV> {
    if k < 0 {
        return Err(Error::NegativeArgument(k));
    }
    let mut out = LaurentV::one();
    for l in 1..=k {
        out = &out * &qint(l)?;
    }
    Ok(out)
}

/// Membership in `Q[v, v^{-1}]`.
pub fn is_laurent_polynomial(x: &RatV) -> bool {
    x.is_laurent_polynomial()
}

/// Whether `(v - v^{-1})^k` divides `x` in `Q[v, v^{-1}]`.
pub fn divides_power(x: &LaurentV, k: u32) -> bool {
    x.divides_power(k)
}
