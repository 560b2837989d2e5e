use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Laurent polynomial in the quantum parameter `v` with rational coefficients.
///
/// Stored sparsely as exponent -> coefficient; zero coefficients are never kept.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentV {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentV {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(exp: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `v^k`.
    pub fn v_pow(k: i64) -> Self {
        Self::monomial(k, Rational::one())
    }

    /// `v - v^{-1}`.
    pub fn v_minus_v_inv() -> Self {
        Self::from_pairs([(1, 1), (-1, -1)])
    }

    /// Builds from `(exponent, integer coefficient)` pairs, summing repeats.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in pairs {
            out.add_term(e, Rational::from_integer(BigInt::from(c)));
        }
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(pairs: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in pairs {
            out.add_term(e, c);
        }
        out
    }

    pub fn add_term(&mut self, exp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// A single monomial `c v^k` with `c != 0`: the units of `Q[v, v^{-1}]`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `v`.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    /// The bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Dense coefficient vector of `v^{-min} * self`, lowest degree first.
    fn dense(&self) -> (i64, Vec<Rational>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut out = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            out[(e - lo) as usize] = c.clone();
        }
        (lo, out)
    }

    fn from_dense(offset: i64, coeffs: &[Rational]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(i, c)| (offset + i as i64, c.clone())))
    }

    /// Exact quotient `self / d` in `Q[v, v^{-1}]`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (na, a) = self.dense();
        let (nd, b) = d.dense();
        let (q, r) = poly_divrem(&a, &b);
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense(na - nd, &q))
    }

    /// Monic gcd normalized to have lowest exponent zero. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() && other.is_zero() {
            return Self::zero();
        }
        let (_, mut a) = self.dense();
        let (_, mut b) = other.dense();
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            let (_, r) = poly_divrem(&a, &b);
            a = b;
            b = r;
            trim(&mut b);
        }
        let lead = a.last().unwrap().clone();
        let monic: Vec<Rational> = a.iter().map(|c| c / &lead).collect();
        Self::from_dense(0, &monic).normalize_low()
    }

    /// Shift so that the lowest exponent is zero.
    pub(crate) fn normalize_low(&self) -> Self {
        match self.min_exp() {
            Some(lo) if lo != 0 => self.shift(-lo),
            _ => self.clone(),
        }
    }

    /// True iff `(v - v^{-1})^k` divides `self` in `Q[v, v^{-1}]`.
    pub fn divides_power(&self, k: u32) -> bool {
        self.divisible_power_of_vmv(k).is_some()
    }

    /// Divides by `(v - v^{-1})^k` when possible.
    pub fn divisible_power_of_vmv(&self, k: u32) -> Option<Self> {
        // v - v^{-1} = v^{-1}(v^2 - 1); v is a unit.
        let v2m1 = Self::from_pairs([(2, 1), (0, -1)]);
        let mut cur = self.clone();
        for _ in 0..k {
            cur = cur.div_exact(&v2m1)?;
        }
        Some(cur.shift(k as i64))
    }

    /// Largest `k` with `(v - v^{-1})^k | self`; `None` for zero.
    pub fn vmv_valuation(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let v2m1 = Self::from_pairs([(2, 1), (0, -1)]);
        let mut cur = self.clone();
        let mut k = 0;
        while let Some(q) = cur.div_exact(&v2m1) {
            cur = q;
            k += 1;
        }
        Some(k)
    }

    /// Serialized form of a coefficient: `p/q`, or `p` when `q = 1`.
    pub fn rational_to_string(c: &Rational) -> String {
        if c.denom().is_one() {
            c.numer().to_string()
        } else {
            format!("{}/{}", c.numer(), c.denom())
        }
    }
}

fn trim(a: &mut Vec<Rational>) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

/// Dense univariate division over Q, coefficients lowest degree first.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r: Vec<Rational> = a.to_vec();
    let mut bb = b.to_vec();
    trim(&mut r);
    trim(&mut bb);
    let db = bb.len() - 1;
    let lead = bb[db].clone();
    if r.len() < bb.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &lead;
        for (i, bc) in bb.iter().enumerate() {
            let t = &c * bc;
            r[k + i] -= t;
        }
        q[k] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

impl Add for &LaurentV {
    type Output = LaurentV;
    fn add(self, rhs: &LaurentV) -> LaurentV {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentV {
    type Output = LaurentV;
    fn add(mut self, rhs: LaurentV) -> LaurentV {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentV> for LaurentV {
    fn add_assign(&mut self, rhs: &LaurentV) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentV> for LaurentV {
    fn sub_assign(&mut self, rhs: &LaurentV) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Sub for &LaurentV {
    type Output = LaurentV;
    fn sub(self, rhs: &LaurentV) -> LaurentV {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentV {
    type Output = LaurentV;
    fn sub(mut self, rhs: LaurentV) -> LaurentV {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentV {
    type Output = LaurentV;
    fn neg(self) -> LaurentV {
        LaurentV {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Neg for LaurentV {
    type Output = LaurentV;
    fn neg(self) -> LaurentV {
        -&self
    }
}

impl Mul for &LaurentV {
    type Output = LaurentV;
    fn mul(self, rhs: &LaurentV) -> LaurentV {
        let mut out = LaurentV::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentV {
    type Output = LaurentV;
    fn mul(self, rhs: LaurentV) -> LaurentV {
        &self * &rhs
    }
}

impl fmt::Display for LaurentV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let cs = LaurentV::rational_to_string(&a);
            match (*e, a.is_one()) {
                (0, _) => write!(f, "{cs}")?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{cs}*v")?,
                (e, true) => write!(f, "v^{e}")?,
                (e, false) => write!(f, "{cs}*v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentV({self})")
    }
}
