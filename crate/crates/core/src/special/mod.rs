//! Specialization maps collapsing interval copies of roots, and the
//! good-element test characterizing the divided-power lattice.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{LaurentV, RatV};
use crate::polyring::perm::for_each_block_permutation;
use crate::polyring::{ColorVar, DegreeVector, Poly};
use crate::shuffle::{Root, RootSystemData, ShuffleElement};

/// Multiplicities `d_beta > 0`; roots with `d_beta = 0` are omitted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SpecializationPlan {
    d: BTreeMap<Root, usize>,
}

impl SpecializationPlan {
    pub fn new<I: IntoIterator<Item = (Root, usize)>>(entries: I) -> Self {
        let mut d = BTreeMap::new();
        for (b, m) in entries {
            if m > 0 {
                *d.entry(b).or_insert(0) += m;
            }
        }
        Self { d }
    }

    pub fn entries(&self) -> impl Iterator<Item = (Root, usize)> + '_ {
        self.d.iter().map(|(b, m)| (*b, *m))
    }

    pub fn multiplicity(&self, b: Root) -> usize {
        self.d.get(&b).copied().unwrap_or(0)
    }

    pub fn degree(&self, rank: usize) -> DegreeVector {
        let mut deg = DegreeVector::zero(rank);
        for (b, m) in self.entries() {
            for c in b.colors() {
                deg.0[c - 1] += m;
            }
        }
        deg
    }

    /// `sum_beta d_beta (i(beta) - j(beta))`.
    pub fn required_power(&self) -> u32 {
        self.entries().map(|(b, m)| (m * (b.i - b.j)) as u32).sum()
    }

    /// Number of `y` variables.
    pub fn num_vars(&self) -> usize {
        self.d.values().sum()
    }

    /// `{"<j>-<i>": mult}`.
    pub fn to_map(&self) -> BTreeMap<String, usize> {
        self.entries().map(|(b, m)| (b.key(), m)).collect()
    }
}

impl fmt::Display for SpecializationPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (t, (b, m)) in self.entries().enumerate() {
            if t > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{b}: {m}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for SpecializationPlan {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_map().serialize(s)
    }
}

/// Polynomial in `y_{beta,s}`, variables laid out root by root in plan order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpecializedPoly {
    pub plan: SpecializationPlan,
    pub poly: Poly,
}

impl SpecializedPoly {
    /// Symmetry in `{y_{beta,s}}_s` for every `beta`.
    pub fn is_block_symmetric(&self) -> bool {
        let blocks: Vec<usize> = self.plan.entries().map(|(_, m)| m).collect();
        let n = self.poly.nvars();
        let mut ok = true;
        for_each_block_permutation(&blocks, |perm, _| {
            if ok && self.poly.permute(perm, n) != self.poly {
                ok = false;
            }
        });
        ok
    }
}

/// `x_{k,r} -> v^{-k} y_{beta,s}` under the canonical splitting: intervals in
/// root order, copies consecutive, same-color variables consumed by index.
pub fn specialize(f: &ShuffleElement, plan: &SpecializationPlan) -> Result<SpecializedPoly> {
    let order: Vec<Vec<usize>> = f.degree().blocks().iter().map(|&k| (1..=k).collect()).collect();
    specialize_with_order(f, plan, &order)
}

/// As [`specialize`], consuming the variables of color `c` in the order `order[c-1]`.
pub fn specialize_with_order(
    f: &ShuffleElement,
    plan: &SpecializationPlan,
    order: &[Vec<usize>],
) -> Result<SpecializedPoly> {
    let rank = f.rank();
    let deg = plan.degree(rank);
    if &deg != f.degree() {
        return Err(Error::DegreeMismatch(format!(
            "plan {plan} has degree {deg}, element has {}",
            f.degree()
        )));
    }
    let mut next = vec![0usize; deg.num_colors()];
    let mut asg: BTreeMap<ColorVar, (usize, RatV)> = BTreeMap::new();
    let mut y = 0;
    for (b, m) in plan.entries() {
        for _ in 0..m {
            for k in b.colors() {
                let idx = order[k - 1][next[k - 1]];
                next[k - 1] += 1;
                asg.insert(ColorVar::new(k, idx), (y, RatV::v_pow(-(k as i64))));
            }
            y += 1;
        }
    }
    let poly = f.numerator().substitute(&asg, plan.num_vars())?;
    Ok(SpecializedPoly {
        plan: plan.clone(),
        poly,
    })
}

/// All plans `d >= 0` with `sum d_beta beta = k`, by depth-first search over
/// roots in root order, larger multiplicities first.
pub fn enumerate_plans(k: &DegreeVector) -> Vec<SpecializationPlan> {
    let rank = k.num_colors() + 1;
    let roots = RootSystemData::sl(rank).positive_roots();
    let mut out = Vec::new();
    let mut remaining = k.0.clone();
    let mut chosen: Vec<(Root, usize)> = Vec::new();
    dfs(&roots, 0, &mut remaining, &mut chosen, &mut out);
    out
}

fn dfs(
    roots: &[Root],
    at: usize,
    remaining: &mut Vec<usize>,
    chosen: &mut Vec<(Root, usize)>,
    out: &mut Vec<SpecializationPlan>,
) {
    if at == roots.len() {
        if remaining.iter().all(|&x| x == 0) {
            out.push(SpecializationPlan::new(chosen.iter().copied()));
        }
        return;
    }
    let b = roots[at];
    // colors below j(b) can no longer be covered by later roots
    if remaining[..b.j - 1].iter().any(|&x| x > 0) {
        return;
    }
    let max = b.colors().map(|c| remaining[c - 1]).min().unwrap_or(0);
    for m in (0..=max).rev() {
        for c in b.colors() {
            remaining[c - 1] -= m;
        }
        chosen.push((b, m));
        dfs(roots, at + 1, remaining, chosen, out);
        chosen.pop();
        for c in b.colors() {
            remaining[c - 1] += m;
        }
    }
}

/// Why an element is not good.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GoodCertificate {
    /// `None` when a numerator coefficient is not a Laurent polynomial.
    pub plan: Option<SpecializationPlan>,
    pub required_power: u32,
    pub failing_coefficient: RatV,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GoodReport {
    pub good: bool,
    pub certificate: Option<GoodCertificate>,
}

/// Integral coefficients, and every specialization divisible by `(v - v^{-1})^{sum d_beta (i - j)}`.
///
/// Reports the first violation in plan enumeration order.
pub fn is_good(f: &ShuffleElement) -> Result<GoodReport> {
    for (_, c) in f.numerator().sorted_terms() {
        if !c.is_laurent_polynomial() {
            return Ok(GoodReport {
                good: false,
                certificate: Some(GoodCertificate {
                    plan: None,
                    required_power: 0,
                    failing_coefficient: c,
                }),
            });
        }
    }
    for plan in enumerate_plans(f.degree()) {
        let p = plan.required_power();
        if p == 0 {
            continue;
        }
        let sp = specialize(f, &plan)?;
        for (_, c) in sp.poly.terms() {
            let l: &LaurentV = c.as_laurent().expect("integral numerator specializes integrally");
            if !l.divides_power(p) {
                return Ok(GoodReport {
                    good: false,
                    certificate: Some(GoodCertificate {
                        plan: Some(plan.clone()),
                        required_power: p,
                        failing_coefficient: c.clone(),
                    }),
                });
            }
        }
    }
    Ok(GoodReport {
        good: true,
        certificate: None,
    })
}
