use std::ops::RangeInclusive;

use serde::Serialize;

use super::element::ShuffleElement;
use super::product::star_with;
use super::roots::RootSystemData;
use crate::error::Result;
use crate::exactalg::RatV;
use crate::polyring::{ColorVar, DegreeVector, MultiLaurent};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub checked: usize,
    /// First failing identity, if any.
    pub counterexample: Option<String>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn gen(rs: &RootSystemData, i: usize, r: i64) -> ShuffleElement {
    let d = DegreeVector::unit(rs.n(), i);
    let p = MultiLaurent::monomial(rs.n(), d, &[(ColorVar::new(i, 1), r as i32)], RatV::one())
        .expect("color checked by caller");
    ShuffleElement::from_numerator_unchecked(p)
}

/// Checks the quadratic and Serre relations among `x_{i,1}^r` over a mode window.
///
/// Quadratic, for all colors `i, j` and modes `r, s`:
/// `e_{i,r+1} e_{j,s} - v^c e_{i,r} e_{j,s+1} = v^c e_{j,s} e_{i,r+1} - e_{j,s+1} e_{i,r}`.
/// Serre, for adjacent `i, j`:
/// `[e_{i,r1}, [e_{i,r2}, e_{j,s}]_{v^-1}]_v + (r1 <-> r2) = 0`.
pub fn check_relations(rs: &RootSystemData, modes: RangeInclusive<i64>) -> Result<RelationReport> {
    let colors = rs.num_colors();
    let mut checked = 0;
    let report = |checked, msg: Option<String>| RelationReport {
        n: rs.n(),
        checked,
        counterexample: msg,
    };
    for i in 1..=colors {
        for j in 1..=colors {
            let vc = RatV::v_pow(rs.cartan(i, j) as i64);
            for r in modes.clone() {
                for s in modes.clone() {
                    let lhs = star_with(rs, &gen(rs, i, r + 1), &gen(rs, j, s))?
                        .sub(&star_with(rs, &gen(rs, i, r), &gen(rs, j, s + 1))?.scale(&vc))?;
                    let rhs = star_with(rs, &gen(rs, j, s), &gen(rs, i, r + 1))?
                        .scale(&vc)
                        .sub(&star_with(rs, &gen(rs, j, s + 1), &gen(rs, i, r))?)?;
                    checked += 1;
                    if lhs != rhs {
                        return Ok(report(
                            checked,
                            Some(format!("quadratic relation fails at i={i}, j={j}, r={r}, s={s}")),
                        ));
                    }
                }
            }
        }
    }
    let v = RatV::v_pow(1);
    let vinv = RatV::v_pow(-1);
    let br = |a: &ShuffleElement, b: &ShuffleElement, x: &RatV| -> Result<ShuffleElement> {
        star_with(rs, a, b)?.sub(&star_with(rs, b, a)?.scale(x))
    };
    for i in 1..=colors {
        for j in [i.wrapping_sub(1), i + 1] {
            if j == 0 || j > colors {
                continue;
            }
            for r1 in modes.clone() {
                for r2 in modes.clone() {
                    if r2 < r1 {
                        continue;
                    }
                    for s in modes.clone() {
                        let (a1, a2, b) = (gen(rs, i, r1), gen(rs, i, r2), gen(rs, j, s));
                        let t1 = br(&a1, &br(&a2, &b, &vinv)?, &v)?;
                        let t2 = br(&a2, &br(&a1, &b, &vinv)?, &v)?;
                        checked += 1;
                        if !t1.add(&t2)?.is_zero() {
                            return Ok(report(
                                checked,
                                Some(format!("Serre relation fails at i={i}, j={j}, r1={r1}, r2={r2}, s={s}")),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(report(checked, None))
}
