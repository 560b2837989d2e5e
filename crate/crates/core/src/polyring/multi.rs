use std::fmt;

use num_bigint::BigInt;

use super::perm::for_each_block_permutation;
use super::poly::{Exps, Poly};
use crate::error::{Error, Result};
use crate::exactalg::{RatV, Rational};

/// The variable `x_{color,index}`; colors run over `1..n`, indices from 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ColorVar {
    pub color: usize,
    pub index: usize,
}

impl ColorVar {
    pub fn new(color: usize, index: usize) -> Self {
        Self { color, index }
    }
}

impl fmt::Display for ColorVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x_{}_{}", self.color, self.index)
    }
}

/// `(k_1, ..., k_{n-1})`: how many variables of each color.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct DegreeVector(pub Vec<usize>);

impl DegreeVector {
    pub fn zero(rank: usize) -> Self {
        Self(vec![0; rank.saturating_sub(1)])
    }

    /// `1_i` for rank `n`.
    pub fn unit(rank: usize, color: usize) -> Self {
        let mut d = Self::zero(rank);
        d.0[color - 1] = 1;
        d
    }

    /// `1_j + ... + 1_i`.
    pub fn interval(rank: usize, j: usize, i: usize) -> Self {
        let mut d = Self::zero(rank);
        for c in j..=i {
            d.0[c - 1] += 1;
        }
        d
    }

    pub fn num_colors(&self) -> usize {
        self.0.len()
    }

    /// Number of variables of `color` (1-based).
    pub fn get(&self, color: usize) -> usize {
        self.0[color - 1]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `k! = prod_i k_i!`.
    pub fn factorial(&self) -> BigInt {
        self.0
            .iter()
            .map(|&k| (1..=k).map(BigInt::from).product::<BigInt>())
            .product()
    }

    /// Flat position of `x_{color,index}` in the `(color, index)`-ordered layout.
    pub fn position(&self, v: ColorVar) -> Option<usize> {
        if v.color == 0 || v.color > self.0.len() || v.index == 0 || v.index > self.get(v.color) {
            return None;
        }
        Some(self.0[..v.color - 1].iter().sum::<usize>() + v.index - 1)
    }

    /// The variables in layout order.
    pub fn vars(&self) -> Vec<ColorVar> {
        let mut out = Vec::with_capacity(self.total());
        for (c, &k) in self.0.iter().enumerate() {
            for r in 1..=k {
                out.push(ColorVar::new(c + 1, r));
            }
        }
        out
    }

    /// Block sizes per color, for same-color permutation groups.
    pub fn blocks(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

/// Laurent polynomial in the colored variables allowed by a degree vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiLaurent {
    rank: usize,
    degree: DegreeVector,
    poly: Poly,
}

impl MultiLaurent {
    pub fn zero(rank: usize, degree: DegreeVector) -> Self {
        let n = degree.total();
        Self {
            rank,
            degree,
            poly: Poly::zero(n),
        }
    }

    pub fn constant(rank: usize, degree: DegreeVector, c: RatV) -> Self {
        let n = degree.total();
        Self {
            rank,
            degree,
            poly: Poly::constant(n, c),
        }
    }

    pub fn from_poly(rank: usize, degree: DegreeVector, poly: Poly) -> Result<Self> {
        if poly.nvars() != degree.total() {
            return Err(Error::DegreeMismatch(format!(
                "{} variables for degree {}",
                poly.nvars(),
                degree
            )));
        }
        if degree.num_colors() != rank.saturating_sub(1) {
            return Err(Error::DegreeMismatch(format!("degree {degree} for rank {rank}")));
        }
        Ok(Self { rank, degree, poly })
    }

    /// `c * prod x^e` for a list of `(variable, exponent)` pairs.
    pub fn monomial(rank: usize, degree: DegreeVector, exps: &[(ColorVar, i32)], c: RatV) -> Result<Self> {
        let mut e = vec![0; degree.total()];
        for (v, x) in exps {
            let p = degree
                .position(*v)
                .ok_or_else(|| Error::DegreeMismatch(format!("{v} not allowed in degree {degree}")))?;
            e[p] += x;
        }
        Self::from_poly(rank, degree, Poly::monomial(e, c))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn degree(&self) -> &DegreeVector {
        &self.degree
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn position(&self, v: ColorVar) -> Result<usize> {
        self.degree
            .position(v)
            .ok_or_else(|| Error::DegreeMismatch(format!("{v} not allowed in degree {}", self.degree)))
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!("{} vs {}", self.degree, other.degree)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            rank: self.rank,
            degree: self.degree.clone(),
            poly: &self.poly + &other.poly,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            rank: self.rank,
            degree: self.degree.clone(),
            poly: &self.poly - &other.poly,
        })
    }

    /// Product over the same variable set.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(Self {
            rank: self.rank,
            degree: self.degree.clone(),
            poly: &self.poly * &other.poly,
        })
    }

    /// Product over disjoint variable sets: `other`'s variables of each color are
    /// appended after `self`'s, so the result lives in degree `k + l`.
    pub fn mul_disjoint(&self, other: &Self) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let deg = self.degree.add(&other.degree);
        let n = deg.total();
        let left: Vec<usize> = self
            .degree
            .vars()
            .into_iter()
            .map(|v| deg.position(v).unwrap())
            .collect();
        let right: Vec<usize> = other
            .degree
            .vars()
            .into_iter()
            .map(|v| {
                deg.position(ColorVar::new(v.color, v.index + self.degree.get(v.color)))
                    .unwrap()
            })
            .collect();
        let a = self.poly.permute(&left, n);
        let b = other.poly.permute(&right, n);
        Ok(Self {
            rank: self.rank,
            degree: deg,
            poly: &a * &b,
        })
    }

    pub fn scalar_mul(&self, s: &RatV) -> Self {
        Self {
            rank: self.rank,
            degree: self.degree.clone(),
            poly: self.poly.scale(s),
        }
    }

    pub fn neg(&self) -> Self {
        self.scalar_mul(&RatV::from_int(-1))
    }

    /// `Sym(p) = (1/m!) sum over same-color permutations`.
    pub fn symmetrize(&self) -> Self {
        self.block_average(false)
    }

    /// `(1/m!) sum sign(sigma) sigma(p)` over same-color permutations.
    pub fn antisymmetrize(&self) -> Self {
        self.block_average(true)
    }

    fn block_average(&self, signed: bool) -> Self {
        let n = self.degree.total();
        let mut acc = Poly::zero(n);
        for_each_block_permutation(self.degree.blocks(), |perm, sign| {
            let t = self.poly.permute(perm, n);
            if signed && sign < 0 {
                acc.add_assign_ref(&-&t);
            } else {
                acc.add_assign_ref(&t);
            }
        });
        let inv = Rational::new(BigInt::from(1), self.degree.factorial());
        Self {
            rank: self.rank,
            degree: self.degree.clone(),
            poly: acc.scale(&RatV::from_rational(inv)),
        }
    }

    /// Same-color relabeling by a permutation of flat positions.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        Self {
            rank: self.rank,
            degree: self.degree.clone(),
            poly: self.poly.permute(perm, self.degree.total()),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.degree.total();
        let mut ok = true;
        for_each_block_permutation(self.degree.blocks(), |perm, _| {
            if ok && self.poly.permute(perm, n) != self.poly {
                ok = false;
            }
        });
        ok
    }

    /// Image under `x -> scalar * y_target` for every variable.
    ///
    /// The result is a polynomial in `new_nvars` numbered variables.
    pub fn substitute(
        &self,
        assignment: &std::collections::BTreeMap<ColorVar, (usize, RatV)>,
        new_nvars: usize,
    ) -> Result<Poly> {
        let mut images = Vec::with_capacity(self.degree.total());
        for v in self.degree.vars() {
            let img = assignment
                .get(&v)
                .ok_or_else(|| Error::PartialAssignment(v.to_string()))?;
            images.push(img.clone());
        }
        Ok(self.poly.substitute_monomial(&images, new_nvars))
    }

    /// `q` with `q * prod (x_a - x_b) = self`.
    pub fn exact_divide_linear(&self, factors: &[(ColorVar, ColorVar)]) -> Result<Self> {
        let mut cur = self.poly.clone();
        for (a, b) in factors {
            let pa = self.position(*a)?;
            let pb = self.position(*b)?;
            cur = cur.divide_linear(pa, pb).ok_or_else(|| Error::NonDivisible {
                a: a.to_string(),
                b: b.to_string(),
            })?;
        }
        Ok(Self {
            rank: self.rank,
            degree: self.degree.clone(),
            poly: cur,
        })
    }

    /// Multiplies by `prod (x_a - x_b)`.
    pub fn mul_linear_factors(&self, factors: &[(ColorVar, ColorVar)]) -> Result<Self> {
        let mut cur = self.poly.clone();
        let one = RatV::one();
        for (a, b) in factors {
            cur = cur.mul_linear(self.position(*a)?, &one, self.position(*b)?, &one);
        }
        Ok(Self {
            rank: self.rank,
            degree: self.degree.clone(),
            poly: cur,
        })
    }

    /// Terms as `(variable exponents, coefficient)`, graded then lexicographic in
    /// `(color, index)` variable order.
    pub fn sorted_terms(&self) -> Vec<(Exps, RatV)> {
        let mut v: Vec<(Exps, RatV)> = self.poly.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
        v.sort_by(|a, b| {
            let da: i32 = a.0.iter().sum();
            let db: i32 = b.0.iter().sum();
            da.cmp(&db).then_with(|| a.0.cmp(&b.0))
        });
        v
    }
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let vars = self.degree.vars();
        for (i, (e, c)) in self.sorted_terms().iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, x) in vars.iter().zip(e) {
                if *x != 0 {
                    write!(f, "*{v}^{x}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::LaurentV;

    fn x(c: usize, i: usize) -> ColorVar {
        ColorVar::new(c, i)
    }

    #[test]
    fn additive_inverse_vanishes() {
        let d = DegreeVector(vec![1]);
        let p = MultiLaurent::monomial(2, d, &[(x(1, 1), 1)], RatV::one()).unwrap();
        assert!(p.add(&p.neg()).unwrap().is_zero());
    }

    #[test]
    fn disjoint_product() {
        let a = MultiLaurent::monomial(3, DegreeVector(vec![1, 0]), &[(x(1, 1), 1)], RatV::one()).unwrap();
        let b = MultiLaurent::monomial(3, DegreeVector(vec![0, 1]), &[(x(2, 1), 1)], RatV::one()).unwrap();
        let ab = a.mul_disjoint(&b).unwrap();
        let expect =
            MultiLaurent::monomial(3, DegreeVector(vec![1, 1]), &[(x(1, 1), 1), (x(2, 1), 1)], RatV::one()).unwrap();
        assert_eq!(ab, expect);
    }

    #[test]
    fn scalar_action_keeps_negative_exponent() {
        let p = MultiLaurent::monomial(2, DegreeVector(vec![1]), &[(x(1, 1), -2)], RatV::one()).unwrap();
        let q = p.scalar_mul(&RatV::v_pow(1));
        assert_eq!(q.poly().coeff(&[-2]), RatV::v_pow(1));
    }

    #[test]
    fn add_rejects_degree_mismatch() {
        let a = MultiLaurent::zero(3, DegreeVector(vec![1, 0]));
        let b = MultiLaurent::zero(3, DegreeVector(vec![0, 1]));
        assert!(matches!(a.add(&b), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn symmetrize_single_variable() {
        let d = DegreeVector(vec![2]);
        let p = MultiLaurent::monomial(2, d.clone(), &[(x(1, 1), 1)], RatV::one()).unwrap();
        let half = RatV::from_rational(Rational::new(1.into(), 2.into()));
        let mut expect = Poly::zero(2);
        expect.add_term(vec![1, 0], half.clone());
        expect.add_term(vec![0, 1], half);
        assert_eq!(p.symmetrize().poly(), &expect);
        assert_eq!(p.symmetrize().symmetrize(), p.symmetrize());
    }

    #[test]
    fn symmetrize_kills_antisymmetric() {
        let d = DegreeVector(vec![2]);
        let a = MultiLaurent::monomial(2, d.clone(), &[(x(1, 1), 1)], RatV::one()).unwrap();
        let b = MultiLaurent::monomial(2, d, &[(x(1, 2), 1)], RatV::one()).unwrap();
        assert!(a.sub(&b).unwrap().symmetrize().is_zero());
    }

    #[test]
    fn substitution_examples() {
        use std::collections::BTreeMap;
        let vinv = RatV::v_pow(-1);
        let d = DegreeVector(vec![1, 0]);
        let p = MultiLaurent::monomial(3, d, &[(x(1, 1), 3)], RatV::one()).unwrap();
        let mut asg = BTreeMap::new();
        asg.insert(x(1, 1), (0usize, vinv.clone()));
        let img = p.substitute(&asg, 1).unwrap();
        assert_eq!(img, Poly::monomial(vec![3], RatV::v_pow(-3)));

        let d = DegreeVector(vec![1, 1]);
        let p = MultiLaurent::monomial(3, d, &[(x(1, 1), 1), (x(2, 1), 1)], RatV::one()).unwrap();
        asg.insert(x(2, 1), (0usize, RatV::v_pow(-2)));
        assert_eq!(p.substitute(&asg, 1).unwrap(), Poly::monomial(vec![2], RatV::v_pow(-3)));
        asg.remove(&x(2, 1));
        assert!(matches!(p.substitute(&asg, 1), Err(Error::PartialAssignment(_))));
    }

    #[test]
    fn divide_difference_of_squares() {
        let d = DegreeVector(vec![1, 1]);
        let a = MultiLaurent::monomial(3, d.clone(), &[(x(1, 1), 2)], RatV::one()).unwrap();
        let b = MultiLaurent::monomial(3, d.clone(), &[(x(2, 1), 2)], RatV::one()).unwrap();
        let q = a.sub(&b).unwrap().exact_divide_linear(&[(x(1, 1), x(2, 1))]).unwrap();
        let s = MultiLaurent::monomial(3, d.clone(), &[(x(1, 1), 1)], RatV::one())
            .unwrap()
            .add(&MultiLaurent::monomial(3, d.clone(), &[(x(2, 1), 1)], RatV::one()).unwrap())
            .unwrap();
        assert_eq!(q, s);
        assert!(matches!(
            MultiLaurent::monomial(3, d.clone(), &[(x(1, 1), 1)], RatV::one())
                .unwrap()
                .exact_divide_linear(&[(x(1, 1), x(2, 1))]),
            Err(Error::NonDivisible { .. })
        ));
        // (1 - v^2) x_{1,1}^{r+1} does not vanish on x_{1,1} = x_{2,1}
        let c = RatV::from_laurent(LaurentV::from_pairs([(0, 1), (2, -1)]));
        let p = MultiLaurent::monomial(3, d, &[(x(1, 1), 3)], c).unwrap();
        assert!(p.exact_divide_linear(&[(x(1, 1), x(2, 1))]).is_err());
    }
}
