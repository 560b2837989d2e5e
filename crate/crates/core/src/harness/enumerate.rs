use super::window::WindowConfig;
use crate::error::Result;
use crate::pairing::FPBWDMonomial;
use crate::polyring::DegreeVector;
use crate::shuffle::{EFactor, EPBWDMonomial, Root, RootSystemData};

/// Multisets of `(root, mode)` keys with the given degree and mode sum, as
/// runs of equal keys in increasing key order.
pub(crate) fn key_multisets(n: usize, degree: &DegreeVector, total_mode: i64, lo: i64, hi: i64) -> Vec<Vec<EFactor>> {
    let keys: Vec<(Root, i64)> = RootSystemData::sl(n)
        .positive_roots()
        .into_iter()
        .flat_map(|b| (lo..=hi).map(move |r| (b, r)))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut left = degree.0.clone();
    walk(&keys, 0, &mut left, total_mode, lo, hi, &mut cur, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn walk(
    keys: &[(Root, i64)],
    at: usize,
    left: &mut Vec<usize>,
    mode_left: i64,
    lo: i64,
    hi: i64,
    cur: &mut Vec<EFactor>,
    out: &mut Vec<Vec<EFactor>>,
) {
    let units: i64 = left.iter().sum::<usize>() as i64;
    if units == 0 {
        if mode_left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    // every factor still to come has at least one unit of degree and mode in [lo, hi]
    if at == keys.len() || mode_left < lo * units.min(1) + lo.min(0) * (units - 1) {
        return;
    }
    if mode_left > hi * units.min(1) + hi.max(0) * (units - 1) {
        return;
    }
    let (b, r) = keys[at];
    let mut k = 0;
    loop {
        if k > 0 {
            cur.push(EFactor::new(b, r, k));
        }
        walk(keys, at + 1, left, mode_left - k as i64 * r, lo, hi, cur, out);
        if k > 0 {
            cur.pop();
        }
        if !b.colors().all(|c| left[c - 1] > 0) {
            break;
        }
        for c in b.colors() {
            left[c - 1] -= 1;
        }
        k += 1;
    }
    for c in b.colors() {
        left[c - 1] += k;
    }
}

/// Ordered divided-power monomials of the given degree and total mode with
/// every factor mode in `[mode_min, mode_max]`.
pub fn enumerate_e_monomials(cfg: &WindowConfig, degree: &DegreeVector, total_mode: i64) -> Vec<EPBWDMonomial> {
    let mut out: Vec<EPBWDMonomial> = key_multisets(cfg.n, degree, total_mode, cfg.mode_min, cfg.mode_max)
        .into_iter()
        .map(|fs| EPBWDMonomial::new(fs).expect("keys are generated in increasing order"))
        .collect();
    out.sort_by_cached_key(|m| {
        m.factors()
            .iter()
            .map(|f| (f.root, f.mode, f.power))
            .collect::<Vec<_>>()
    });
    out
}

/// Opposite-ordered monomials in the `f~` root currents, factor modes in the
/// mirrored window `[-mode_max, -mode_min]`, split by the configured strategy.
/// Repeated keys appear as repeated factors.
pub fn enumerate_f_monomials(cfg: &WindowConfig, degree: &DegreeVector, total_mode: i64) -> Result<Vec<FPBWDMonomial>> {
    let mut sets = key_multisets(cfg.n, degree, total_mode, -cfg.mode_max, -cfg.mode_min);
    sets.sort_by_cached_key(|fs| fs.iter().rev().map(|f| (f.root, f.mode, f.power)).collect::<Vec<_>>());
    let mut out = Vec::with_capacity(sets.len());
    for fs in sets {
        let mut factors = Vec::new();
        for f in fs.iter().rev() {
            let d = cfg.strategy.decompose(f.root, f.mode)?;
            for _ in 0..f.power {
                factors.push(d.clone());
            }
        }
        out.push(FPBWDMonomial::new(factors)?);
    }
    Ok(out)
}
