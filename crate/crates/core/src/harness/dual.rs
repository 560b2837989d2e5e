use std::cmp::Ordering;

use serde::Serialize;

use super::enumerate::key_multisets;
use super::gram::block_entries;
use super::window::WindowConfig;
use crate::error::Result;
use crate::exactalg::{qfact, RatV, Rational};
use crate::pairing::FPBWDMonomial;
use crate::polyring::DegreeVector;
use crate::shuffle::{e_tilde, star_all, Root, RootSystemData, ShuffleElement};

/// Slope order on `(root, mode)`: by `r / len`, then by root length, then by the last color.
pub fn slope_cmp(a: &(Root, i64), b: &(Root, i64)) -> Ordering {
    let (la, lb) = (a.0.len() as i64, b.0.len() as i64);
    (a.1 * lb).cmp(&(b.1 * la)).then(la.cmp(&lb)).then(a.0.i.cmp(&b.0.i))
}

/// Which side carries the increasing slope order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FactorOrder {
    /// E-factors increasing, F-factors decreasing.
    EIncreasing,
    /// E-factors decreasing, F-factors increasing.
    EDecreasing,
}

#[derive(Clone, Debug, Serialize)]
pub struct Normalization {
    pub row: String,
    pub col: String,
    pub sign: i8,
    pub v_exponent: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualBlock {
    pub degree: Vec<usize>,
    pub total_mode: i64,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<RatV>>,
    pub permutation_monomial: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualBasesReport {
    pub order: FactorOrder,
    pub blocks: Vec<DualBlock>,
    pub normalizations: Vec<Normalization>,
    pub passed: bool,
}

/// Every `(root, mode)` multiset of the given degree and total mode in the window.
fn multisets(n: usize, degree: &DegreeVector, total: i64, lo: i64, hi: i64) -> Vec<Vec<(Root, i64)>> {
    key_multisets(n, degree, total, lo, hi)
        .into_iter()
        .map(|runs| {
            runs.iter()
                .flat_map(|f| std::iter::repeat_n((f.root, f.mode), f.power))
                .collect()
        })
        .collect()
}

fn monomial_unit(x: &RatV) -> Option<(i8, i64)> {
    let l = x.as_laurent()?;
    if l.len() != 1 {
        return None;
    }
    let (e, c) = l.terms().next()?;
    if c == &Rational::from_integer(1.into()) {
        Some((1, e))
    } else if c == &Rational::from_integer((-1).into()) {
        Some((-1, e))
    } else {
        None
    }
}

/// Gram blocks of `E~`-monomials against divided-power `F`-monomials, both
/// split by the slope decomposition, for total degree up to the window bound
/// and `|total mode| <= mode_bound`. A block passes when it has exactly one
/// nonzero entry per row and column and each is `+-v^m`.
pub fn verify_dual_bases(cfg: &WindowConfig, mode_bound: i64, order: FactorOrder) -> Result<DualBasesReport> {
    let n = cfg.n;
    let rs = RootSystemData::sl(n);
    let mut blocks = Vec::new();
    let mut normalizations = Vec::new();
    for d in cfg.degrees() {
        for t in -mode_bound..=mode_bound {
            let mut es = multisets(n, &d, t, cfg.mode_min, cfg.mode_max);
            let mut fs = multisets(n, &d, -t, -cfg.mode_max, -cfg.mode_min);
            if es.is_empty() && fs.is_empty() {
                continue;
            }
            let (e_rev, f_rev) = match order {
                FactorOrder::EIncreasing => (false, true),
                FactorOrder::EDecreasing => (true, false),
            };
            for m in es.iter_mut() {
                m.sort_by(|a, b| if e_rev { slope_cmp(b, a) } else { slope_cmp(a, b) });
            }
            for m in fs.iter_mut() {
                m.sort_by(|a, b| if f_rev { slope_cmp(b, a) } else { slope_cmp(a, b) });
            }
            let mut rows = Vec::with_capacity(es.len());
            let mut row_labels = Vec::with_capacity(es.len());
            for m in &es {
                let items = m
                    .iter()
                    .map(|&(b, r)| e_tilde(n, &cfg.strategy.decompose(b, r)?))
                    .collect::<Result<Vec<ShuffleElement>>>()?;
                rows.push(star_all(&rs, &items)?);
                let names: Vec<String> = m.iter().map(|(b, r)| format!("E~{b}@{r}")).collect();
                row_labels.push(names.join("*"));
            }
            let mut cols = Vec::with_capacity(fs.len());
            let mut scalars = Vec::with_capacity(fs.len());
            let mut col_labels = Vec::with_capacity(fs.len());
            for m in &fs {
                let factors = m
                    .iter()
                    .map(|&(b, r)| cfg.strategy.decompose(b, r))
                    .collect::<Result<Vec<_>>>()?;
                // each run of k equal factors is (f~ / (v - v^{-1}))^k / [k]!
                let mut scalar = RatV::one();
                let mut names = Vec::new();
                let mut s = 0;
                while s < m.len() {
                    let mut e = s;
                    while e < m.len() && m[e] == m[s] {
                        e += 1;
                    }
                    let k = (e - s) as i64;
                    let denom = &RatV::v_minus_v_inv().pow(k as i32)? * &RatV::from_laurent(qfact(k)?);
                    scalar = &scalar * &denom.inv()?;
                    names.push(format!("F{}@{}^({k})", m[s].0, m[s].1));
                    s = e;
                }
                cols.push(FPBWDMonomial::new_unchecked(factors));
                scalars.push(scalar);
                col_labels.push(names.join("*"));
            }
            let raw = block_entries(&rows, &cols)?;
            let entries: Vec<Vec<RatV>> = raw
                .into_iter()
                .map(|row| row.iter().zip(&scalars).map(|(p, s)| p * s).collect())
                .collect();
            let nz_rows: Vec<usize> = entries
                .iter()
                .map(|r| r.iter().filter(|x| !x.is_zero()).count())
                .collect();
            let nz_cols: Vec<usize> = (0..cols.len())
                .map(|j| entries.iter().filter(|r| !r[j].is_zero()).count())
                .collect();
            let mut ok = nz_rows.iter().all(|&c| c == 1) && nz_cols.iter().all(|&c| c == 1);
            for (i, row) in entries.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    match monomial_unit(x) {
                        Some((sign, v_exponent)) => normalizations.push(Normalization {
                            row: row_labels[i].clone(),
                            col: col_labels[j].clone(),
                            sign,
                            v_exponent,
                        }),
                        None => ok = false,
                    }
                }
            }
            blocks.push(DualBlock {
                degree: d.0.clone(),
                total_mode: t,
                rows: row_labels,
                cols: col_labels,
                entries,
                permutation_monomial: ok,
            });
        }
    }
    let passed = blocks.iter().all(|b| b.permutation_monomial);
    Ok(DualBasesReport {
        order,
        blocks,
        normalizations,
        passed,
    })
}
