use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_e_monomials, enumerate_f_monomials};
use super::window::WindowConfig;
use crate::error::Result;
use crate::pairing::{key_specialization_check, pair, pair_via_words};
use crate::shuffle::build_e_pbwd;

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub compared: usize,
    pub nonzero: usize,
    pub mismatch: Option<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares the orientation-sum pairing with the word expansion on every
/// window pair whose F-monomial has at most `max_factors` factors.
pub fn verify_oracle(cfg: &WindowConfig, max_factors: usize) -> Result<OracleReport> {
    let mut jobs = Vec::new();
    for d in cfg.degrees() {
        let units = d.total() as i64;
        for t in units * cfg.mode_min..=units * cfg.mode_max {
            let es = enumerate_e_monomials(cfg, &d, t);
            if es.is_empty() {
                continue;
            }
            let fs: Vec<_> = enumerate_f_monomials(cfg, &d, -t)?
                .into_iter()
                .filter(|m| m.factors().len() <= max_factors)
                .collect();
            for e in &es {
                let x = build_e_pbwd(cfg.n, e)?;
                for f in &fs {
                    jobs.push((e.to_string(), x.clone(), f.clone()));
                }
            }
        }
    }
    let results: Vec<(bool, Option<String>)> = jobs
        .par_iter()
        .map(|(label, x, f)| {
            let a = pair(x, f)?;
            let b = pair_via_words(x, f)?;
            let mismatch = (a != b).then(|| format!("{label} vs {f}: {a} != {b}"));
            Ok((!a.is_zero(), mismatch))
        })
        .collect::<Result<_>>()?;
    Ok(OracleReport {
        compared: results.len(),
        nonzero: results.iter().filter(|r| r.0).count(),
        mismatch: results.into_iter().find_map(|r| r.1),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct KeySpecSweep {
    pub n: usize,
    pub cases: usize,
    pub compared: usize,
    pub mismatch: Option<String>,
}

impl KeySpecSweep {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// The closed-form specialization for the longest root `[1..n-1]` against
/// monomial numerators with exponents in `exps` and tail modes in `tails`.
pub fn verify_key_specialization(n: usize, exps: &[i32], tails: &[i64], window: i64) -> Result<KeySpecSweep> {
    let i = n - 1;
    let mut a_all: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 1..=i {
        a_all = a_all
            .into_iter()
            .flat_map(|a| exps.iter().map(move |&e| [a.clone(), vec![e]].concat()))
            .collect();
    }
    let mut r_all: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 2..=i {
        r_all = r_all
            .into_iter()
            .flat_map(|r| tails.iter().map(move |&t| [r.clone(), vec![t]].concat()))
            .collect();
    }
    let mut cases = 0;
    let mut compared = 0;
    for a in &a_all {
        for r in &r_all {
            if r.iter().zip(&a[1..]).any(|(&rk, &ak)| rk + ak as i64 >= 0) {
                continue;
            }
            let rep = key_specialization_check(n, 1, i, a, r, window)?;
            cases += 1;
            compared += rep.compared;
            if let Some(m) = rep.mismatch {
                return Ok(KeySpecSweep {
                    n,
                    cases,
                    compared,
                    mismatch: Some(format!("a={a:?} r_tail={r:?}: {m}")),
                });
            }
        }
    }
    Ok(KeySpecSweep {
        n,
        cases,
        compared,
        mismatch: None,
    })
}
