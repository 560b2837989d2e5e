use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactalg::RatV;

pub type Exps = Vec<i32>;

/// Sparse Laurent polynomial in `nvars` numbered variables over `Q(v)`.
///
/// Variables are addressed by position; callers own the naming.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exps, RatV>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: RatV) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, RatV::one())
    }

    pub fn monomial(exps: Exps, c: RatV) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    /// The single variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, RatV::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &RatV)> + '_ {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Exps, RatV> {
        self.terms
    }

    pub fn coeff(&self, exps: &[i32]) -> RatV {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exps: Exps, c: RatV) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Poly) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn scale(&self, s: &RatV) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `sa * x_a - sb * x_b`.
    pub fn mul_linear(&self, a: usize, sa: &RatV, b: usize, sb: &RatV) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut ea = e.clone();
            ea[a] += 1;
            out.add_term(ea, c * sa);
            let mut eb = e.clone();
            eb[b] += 1;
            out.add_term(eb, -(c * sb));
        }
        out
    }

    /// Exact quotient by `x_a - x_b`, or `None` if it does not divide.
    pub fn divide_linear(&self, a: usize, b: usize) -> Option<Self> {
        assert_ne!(a, b);
        if self.is_zero() {
            return Some(self.clone());
        }
        // group by the power of x_a
        let mut by_deg: BTreeMap<i32, BTreeMap<Exps, RatV>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let d = rest[a];
            rest[a] = 0;
            by_deg.entry(d).or_default().insert(rest, c.clone());
        }
        let lo = *by_deg.keys().next().unwrap();
        let hi = *by_deg.keys().next_back().unwrap();
        if lo == hi {
            return None;
        }
        let mut out = Self::zero(self.nvars);
        // q_{d-1} = c_d + x_b q_d, from the top down
        let mut q: BTreeMap<Exps, RatV> = BTreeMap::new();
        for d in (lo + 1..=hi).rev() {
            let mut next: BTreeMap<Exps, RatV> = BTreeMap::new();
            for (e, c) in q {
                let mut e2 = e;
                e2[b] += 1;
                next.insert(e2, c);
            }
            if let Some(cd) = by_deg.get(&d) {
                for (e, c) in cd {
                    let slot = next.entry(e.clone()).or_default();
                    *slot += c;
                }
                next.retain(|_, c| !c.is_zero());
            }
            for (e, c) in &next {
                let mut full = e.clone();
                full[a] = d - 1;
                out.add_term(full, c.clone());
            }
            q = next;
        }
        // remainder: c_lo + x_b q_lo must vanish
        let mut rem: BTreeMap<Exps, RatV> = BTreeMap::new();
        for (e, c) in q {
            let mut e2 = e;
            e2[b] += 1;
            rem.insert(e2, c);
        }
        if let Some(cl) = by_deg.get(&lo) {
            for (e, c) in cl {
                let slot = rem.entry(e.clone()).or_default();
                *slot += c;
            }
        }
        if rem.values().any(|c| !c.is_zero()) {
            return None;
        }
        Some(out)
    }

    /// Renames variable `i` to `perm[i]` in a space of `new_nvars` variables.
    pub fn permute(&self, perm: &[usize], new_nvars: usize) -> Self {
        let mut out = Self::zero(new_nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; new_nvars];
            for (i, &x) in e.iter().enumerate() {
                ne[perm[i]] += x;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    /// Substitutes `x_i -> scalar_i * y_{target_i}` into a space of `new_nvars` variables.
    pub fn substitute_monomial(&self, images: &[(usize, RatV)], new_nvars: usize) -> Self {
        assert_eq!(images.len(), self.nvars);
        let mut out = Self::zero(new_nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0; new_nvars];
            let mut coeff = c.clone();
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let (t, s) = &images[i];
                ne[*t] += x;
                if !s.is_one() {
                    coeff = &coeff * &s.pow(x).expect("zero substitution scalar");
                }
            }
            out.add_term(ne, coeff);
        }
        out
    }

    /// Total degree of every term, if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<i32>());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Per-variable minimum exponents over all terms.
    pub fn min_exps(&self) -> Option<Exps> {
        let mut it = self.terms.keys();
        let mut m = it.next()?.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        Some(m)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_ref(&-rhs);
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divide_linear_round_trip() {
        let p = &Poly::var(3, 0) * &Poly::var(3, 2);
        let q = p.mul_linear(0, &RatV::one(), 1, &RatV::one());
        assert_eq!(q.divide_linear(0, 1), Some(p));
    }

    #[test]
    fn divide_linear_with_negative_exponents() {
        let mut p = Poly::zero(2);
        p.add_term(vec![-2, 1], RatV::from_int(3));
        p.add_term(vec![1, -1], RatV::v_pow(2));
        let q = p.mul_linear(1, &RatV::one(), 0, &RatV::one());
        assert_eq!(q.divide_linear(1, 0), Some(p.clone()));
        assert_eq!(q.divide_linear(0, 1), Some(-&p));
    }

    #[test]
    fn non_divisible_detected() {
        assert_eq!(Poly::var(2, 0).divide_linear(0, 1), None);
        let mut p = Poly::var(2, 0);
        p.add_term(vec![0, 1], RatV::from_int(2));
        assert_eq!(p.divide_linear(0, 1), None);
    }
}
