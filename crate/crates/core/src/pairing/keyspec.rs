use serde::Serialize;

use super::monomial::FPBWDMonomial;
use super::series::{pair, vmv_pow};
use crate::error::{Error, Result};
use crate::exactalg::RatV;
use crate::polyring::{ColorVar, DegreeVector, MultiLaurent};
use crate::shuffle::{Decomposition, Root, ShuffleElement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KeySpecReport {
    pub holds: bool,
    /// Number of `z`-coefficients compared.
    pub compared: usize,
    pub mismatch: Option<String>,
}

/// Closed form of the pairing of `p / prod (x_k - x_{k+1})` against the series
/// `(v - v^{-1}) [..[f_j(z), f_{j+1,r_{j+1}}]_v, .., f_{i,r_i}]_v`, valid when
/// `r_k + a_k < 0` for `k > j`: the monomial
/// `(v - v^{-1})^{j-i} v^A z^B p(z, v^{-1} z, ..., v^{j-i} z)` with
/// `A = sum_{k>j} (j-k)(r_k - 1 + [k = i])` and `B = sum_{k>j} (r_k - 1)`.
///
/// Returns `(z-exponent, coefficient)`.
pub fn key_specialization_rhs(j: usize, i: usize, a: &[i32], r_tail: &[i64]) -> (i64, RatV) {
    let mut big_a = 0i64;
    let mut big_b = 0i64;
    for k in j + 1..=i {
        let rk = r_tail[k - j - 1];
        let delta = i64::from(k == i);
        big_a += (j as i64 - k as i64) * (rk - 1 + delta);
        big_b += rk - 1;
    }
    // p(z, v^{-1} z, ...) = v^{-sum (k-j) a_k} z^{sum a_k}
    let mut pv = 0i64;
    let mut pz = 0i64;
    for (t, &ak) in a.iter().enumerate() {
        pv -= t as i64 * ak as i64;
        pz += ak as i64;
    }
    let coeff = &vmv_pow(j as i64 - i as i64) * &RatV::v_pow(big_a + pv);
    (big_b + pz, coeff)
}

/// Compares `pair(x, f~_{beta,(r_j, r_tail)})` with the closed form for every
/// `r_j` within `window` of the homogeneous value.
pub fn key_specialization_check(
    rank: usize,
    j: usize,
    i: usize,
    a: &[i32],
    r_tail: &[i64],
    window: i64,
) -> Result<KeySpecReport> {
    let root = Root::new(j, i)?;
    root.check_rank(rank)?;
    if a.len() != root.len() || r_tail.len() + 1 != root.len() {
        return Err(Error::Precondition("exponent or mode vector of wrong length".into()));
    }
    for k in j + 1..=i {
        if r_tail[k - j - 1] + a[k - j] as i64 >= 0 {
            return Err(Error::Precondition(format!(
                "r_{k} + a_{k} = {} is not negative",
                r_tail[k - j - 1] + a[k - j] as i64
            )));
        }
    }
    let deg = DegreeVector::interval(rank, j, i);
    let exps: Vec<(ColorVar, i32)> = root.colors().map(|k| (ColorVar::new(k, 1), a[k - j])).collect();
    let x = ShuffleElement::new(MultiLaurent::monomial(rank, deg, &exps, RatV::one())?)?;

    let (zexp, coeff) = key_specialization_rhs(j, i, a, r_tail);
    let center = -zexp;
    let mut compared = 0;
    for rj in center - window..=center + window {
        let mut r = vec![rj];
        r.extend_from_slice(r_tail);
        let m = FPBWDMonomial::new(vec![Decomposition::new(root, r)?])?;
        let lhs = pair(&x, &m)?;
        let rhs = if rj == center { coeff.clone() } else { RatV::zero() };
        compared += 1;
        if lhs != rhs {
            return Ok(KeySpecReport {
                holds: false,
                compared,
                mismatch: Some(format!("z^{}: pairing {lhs}, closed form {rhs}", -rj)),
            });
        }
    }
    Ok(KeySpecReport {
        holds: true,
        compared,
        mismatch: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_three() {
        for (a, b) in [(0, 0), (1, -2), (-1, 3)] {
            let rep = key_specialization_check(3, 1, 2, &[a, b], &[-(b as i64) - 3], 2).unwrap();
            assert!(rep.holds, "{rep:?}");
        }
    }

    #[test]
    fn simple_root_reduces_to_base_case() {
        let (e, c) = key_specialization_rhs(1, 1, &[2], &[]);
        assert_eq!((e, c), (2, RatV::one()));
        assert!(key_specialization_check(2, 1, 1, &[2], &[], 2).unwrap().holds);
    }

    #[test]
    fn precondition_enforced() {
        assert!(key_specialization_check(3, 1, 2, &[0, 1], &[-1], 1).is_err());
    }
}
