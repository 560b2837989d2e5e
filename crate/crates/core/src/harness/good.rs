use serde::Serialize;

use super::enumerate::enumerate_f_monomials;
use super::gram::{block_entries, GramRow};
use super::window::WindowConfig;
use crate::error::{Error, Result};
use crate::pairing::{pair, FPBWDMonomial};
use crate::shuffle::{build_e_pbwd, Decomposition, EFactor, EPBWDMonomial, RootSystemData, ShuffleElement};
use crate::special::{enumerate_plans, is_good, GoodCertificate};

#[derive(Clone, Debug, Serialize)]
pub struct GoodSampleResult {
    pub label: String,
    pub good: bool,
    pub certificate: Option<GoodCertificate>,
    /// Number of window pairings computed and whether all were Laurent polynomials.
    pub window_pairings: usize,
    pub window_laurent: bool,
    /// A pairing with a non-polynomial value, for elements that are not good.
    pub witness: Option<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GoodCriterionReport {
    pub samples: Vec<GoodSampleResult>,
    pub passed: bool,
}

/// Divided powers `e_{beta,r}^{(k)}` for every root, `1 <= k <= k_max` and `r` in the window.
pub fn divided_root_samples(cfg: &WindowConfig, k_max: usize) -> Result<Vec<GramRow>> {
    let mut out = Vec::new();
    for b in RootSystemData::sl(cfg.n).positive_roots() {
        for k in 1..=k_max {
            for r in cfg.mode_min..=cfg.mode_max {
                let m = EPBWDMonomial::new(vec![EFactor::new(b, r, k)])?;
                out.push(GramRow {
                    label: m.to_string(),
                    element: build_e_pbwd(cfg.n, &m)?,
                });
            }
        }
    }
    Ok(out)
}

/// Monomials of the element's degree whose non-leading decomposition entries
/// are all `-depth`, with leading entries spread over `-spread..=spread`
/// around an even share of the remaining mode.
fn deep_monomials(x: &ShuffleElement, depth: i64, spread: i64) -> Result<Vec<FPBWDMonomial>> {
    let target = -x
        .mode()
        .ok_or_else(|| Error::Precondition("element is not mode-homogeneous".into()))?;
    let mut out = Vec::new();
    for plan in enumerate_plans(x.degree()) {
        let roots: Vec<_> = plan.entries().flat_map(|(b, m)| std::iter::repeat_n(b, m)).collect();
        let tails: i64 = roots.iter().map(|b| -depth * (b.len() as i64 - 1)).sum();
        let heads_total = target - tails;
        let share = heads_total.div_euclid(roots.len() as i64);
        let mut heads = vec![0i64; roots.len()];
        let mut push = |heads: &[i64]| -> Result<()> {
            let mut fs = Vec::with_capacity(roots.len());
            for (b, &h) in roots.iter().zip(heads) {
                let mut r = vec![-depth; b.len()];
                r[0] = h;
                fs.push(Decomposition::new(*b, r)?);
            }
            fs.sort_by_key(|d| std::cmp::Reverse((d.root, d.mode())));
            out.push(FPBWDMonomial::new_unchecked(fs));
            Ok(())
        };
        spread_heads(&mut heads, 0, heads_total, share, spread, &mut push)?;
    }
    Ok(out)
}

fn spread_heads(
    heads: &mut Vec<i64>,
    at: usize,
    left: i64,
    share: i64,
    spread: i64,
    emit: &mut impl FnMut(&[i64]) -> Result<()>,
) -> Result<()> {
    if at + 1 == heads.len() {
        heads[at] = left;
        return emit(heads);
    }
    for h in share - spread..=share + spread {
        heads[at] = h;
        spread_heads(heads, at + 1, left - h, share, spread, emit)?;
    }
    Ok(())
}

/// Largest exponent of any variable in the numerator, at least zero.
fn max_exponent(x: &ShuffleElement) -> i64 {
    x.numerator()
        .poly()
        .terms()
        .flat_map(|(e, _)| e.iter().copied())
        .max()
        .unwrap_or(0)
        .max(0) as i64
}

/// Scans deep decompositions for a pairing that is not a Laurent polynomial.
pub fn find_witness(x: &ShuffleElement) -> Result<Option<String>> {
    let base = max_exponent(x) + 1;
    for depth in base..=base + 1 {
        for m in deep_monomials(x, depth, 2)? {
            let p = pair(x, &m)?;
            if !p.is_laurent_polynomial() {
                return Ok(Some(format!("phi(x, {m}) = {p}")));
            }
        }
    }
    Ok(None)
}

/// For each sample: a good element pairs polynomially with the whole window,
/// and an element failing the divisibility test has a non-polynomial pairing
/// with some deep monomial of the same degree. A window of polynomial
/// pairings alone does not make an element good; the deep scan decides.
pub fn verify_good_criterion(cfg: &WindowConfig, samples: &[GramRow]) -> Result<GoodCriterionReport> {
    let mut results = Vec::with_capacity(samples.len());
    for s in samples {
        let x = &s.element;
        let rep = is_good(x)?;
        let t = x
            .mode()
            .ok_or_else(|| Error::Precondition(format!("{} is not mode-homogeneous", s.label)))?;
        let cols = enumerate_f_monomials(cfg, x.degree(), -t)?;
        let entries = block_entries(std::slice::from_ref(x), &cols)?;
        let window_laurent = entries.iter().flatten().all(|p| p.is_laurent_polynomial());
        let witness = if rep.good { None } else { find_witness(x)? };
        let passed = if rep.good { window_laurent } else { witness.is_some() };
        results.push(GoodSampleResult {
            label: s.label.clone(),
            good: rep.good,
            certificate: rep.certificate,
            window_pairings: cols.len(),
            window_laurent,
            witness,
            passed,
        });
    }
    let passed = results.iter().all(|r| r.passed);
    Ok(GoodCriterionReport {
        samples: results,
        passed,
    })
}
