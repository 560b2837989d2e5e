use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use super::series::{DirectedFactor, PairingExpression};
use crate::error::{Error, Result};
use crate::exactalg::{LaurentV, RatV, Rational};
use crate::polyring::Poly;

/// Variables ordered so that every factor's small variable precedes its big one.
fn elimination_order(nz: usize, factors: &[DirectedFactor]) -> Result<Vec<usize>> {
    let mut indeg = vec![0usize; nz];
    for f in factors {
        if f.big == f.small {
            return Err(Error::CyclicDirectionGraph);
        }
        indeg[f.big] += 1;
    }
    let mut ready: BTreeSet<usize> = (0..nz).filter(|&z| indeg[z] == 0).collect();
    let mut order = Vec::with_capacity(nz);
    while let Some(z) = ready.pop_first() {
        order.push(z);
        for f in factors.iter().filter(|f| f.small == z) {
            indeg[f.big] -= 1;
            if indeg[f.big] == 0 {
                ready.insert(f.big);
            }
        }
    }
    if order.len() != nz {
        return Err(Error::CyclicDirectionGraph);
    }
    Ok(order)
}

struct Enumerator<'a> {
    factors: &'a [DirectedFactor],
    order: Vec<usize>,
    small_of: Vec<Vec<usize>>,
    big_of: Vec<Vec<usize>>,
}

impl Enumerator<'_> {
    /// Adds `v^e` to `counts` for every choice of series indices hitting `need`.
    fn run(&self, pos: usize, need_base: &[i64], m: &mut Vec<i64>, vexp: i64, counts: &mut BTreeMap<i64, u64>) {
        if pos == self.order.len() {
            *counts.entry(vexp).or_insert(0) += 1;
            return;
        }
        let z = self.order[pos];
        let need = need_base[z] + self.big_of[z].iter().map(|&f| m[f] + 1).sum::<i64>();
        let smalls = &self.small_of[z];
        if smalls.is_empty() {
            if need == 0 {
                self.run(pos + 1, need_base, m, vexp, counts);
            }
            return;
        }
        if need < 0 {
            return;
        }
        self.compose(pos, smalls, 0, need, need_base, m, vexp, counts);
    }

    #[allow(clippy::too_many_arguments)]
    fn compose(
        &self,
        pos: usize,
        smalls: &[usize],
        at: usize,
        left: i64,
        need_base: &[i64],
        m: &mut Vec<i64>,
        vexp: i64,
        counts: &mut BTreeMap<i64, u64>,
    ) {
        let f = smalls[at];
        let fac = &self.factors[f];
        let weight = |k: i64| fac.small_scale * k - fac.big_scale * (k + 1);
        if at + 1 == smalls.len() {
            m[f] = left;
            self.run(pos + 1, need_base, m, vexp + weight(left), counts);
            return;
        }
        for k in 0..=left {
            m[f] = k;
            self.compose(pos, smalls, at + 1, left - k, need_base, m, vexp + weight(k), counts);
        }
    }
}

/// Exact coefficient of `prod z^{target}` in the expression, each factor
/// `1/(B - S)` read as `sum_{m >= 0} B^{-m-1} S^m`.
///
/// Variables are processed small-before-big. At a variable `z`, the indices
/// of the factors in which `z` is small must sum to `target_z - e_z + sum (m_f + 1)`
/// over factors where `z` is big, all of which are already fixed, so every
/// sum is finite.
pub fn extract_coefficient(expr: &PairingExpression, target: &[i64]) -> Result<RatV> {
    let nz = expr.vars.len();
    if target.len() != nz {
        return Err(Error::Precondition(format!(
            "target has {} entries for {nz} variables",
            target.len()
        )));
    }
    let order = elimination_order(nz, &expr.factors)?;
    let mut small_of = vec![Vec::new(); nz];
    let mut big_of = vec![Vec::new(); nz];
    for (i, f) in expr.factors.iter().enumerate() {
        small_of[f.small].push(i);
        big_of[f.big].push(i);
    }
    let en = Enumerator {
        factors: &expr.factors,
        order,
        small_of,
        big_of,
    };
    let mut acc = RatV::zero();
    let mut m = vec![0i64; expr.factors.len()];
    for (e, c) in expr.numerator.terms() {
        let need_base: Vec<i64> = target.iter().zip(e).map(|(t, x)| t - *x as i64).collect();
        let mut counts = BTreeMap::new();
        en.run(0, &need_base, &mut m, 0, &mut counts);
        if counts.is_empty() {
            continue;
        }
        let w = LaurentV::from_terms(
            counts
                .into_iter()
                .map(|(k, n)| (k, Rational::from_integer(BigInt::from(n)))),
        );
        acc += &(c * &RatV::from_laurent(w));
    }
    Ok(&acc * &expr.scalar)
}

/// Coefficient by multiplying series truncated at index `order`.
///
/// Cross-check for [`extract_coefficient`]; not exact unless `order` is large enough.
pub fn extract_truncated(expr: &PairingExpression, target: &[i64], order: u32) -> RatV {
    let nz = expr.vars.len();
    let mut prod = expr.numerator.clone();
    for f in &expr.factors {
        let mut series = Poly::zero(nz);
        for m in 0..=order as i32 {
            let mut e = vec![0; nz];
            e[f.big] = -m - 1;
            e[f.small] = m;
            let c = f.small_scale * m as i64 - f.big_scale * (m as i64 + 1);
            series.add_term(e, RatV::v_pow(c));
        }
        prod = &prod * &series;
    }
    let t: Vec<i32> = target.iter().map(|&x| x as i32).collect();
    &prod.coeff(&t) * &expr.scalar
}

/// Raises the truncation order until the value is unchanged over two increments.
///
/// Heuristic only: the value can sit at zero for several orders before the
/// first contributing index is reached. Prefer a fixed order known to be large enough.
pub fn extract_truncated_stable(expr: &PairingExpression, target: &[i64], max_order: u32) -> Option<RatV> {
    let mut prev = extract_truncated(expr, target, 0);
    let mut same = 0;
    for n in 1..=max_order {
        let cur = extract_truncated(expr, target, n);
        if cur == prev {
            same += 1;
            if same == 2 {
                return Some(cur);
            }
        } else {
            same = 0;
        }
        prev = cur;
    }
    None
}
