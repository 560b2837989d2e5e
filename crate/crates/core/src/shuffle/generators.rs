use std::fmt;

use super::element::ShuffleElement;
use super::product::star_with;
use super::roots::{Decomposition, Root, RootSystemData};
use crate::error::{Error, Result};
use crate::exactalg::{qfact, RatV};
use crate::polyring::{ColorVar, DegreeVector, MultiLaurent};

fn exponent(r: i64) -> Result<i32> {
    i32::try_from(r).map_err(|_| Error::Precondition(format!("mode {r} out of range")))
}

/// Image of `e_{i,r}`: the monomial `x_{i,1}^r` in degree `1_i`.
pub fn gen_e(rank: usize, i: usize, r: i64) -> Result<ShuffleElement> {
    RootSystemData::sl(rank).check_color(i)?;
    let d = DegreeVector::unit(rank, i);
    let p = MultiLaurent::monomial(rank, d, &[(ColorVar::new(i, 1), exponent(r)?)], RatV::one())?;
    Ok(ShuffleElement::from_numerator_unchecked(p))
}

/// `[a, b]_x = a * b - x * b * a`.
pub fn qbracket(a: &ShuffleElement, b: &ShuffleElement, x: &RatV) -> Result<ShuffleElement> {
    qbracket_with(&RootSystemData::sl(a.rank()), a, b, x)
}

pub fn qbracket_with(rs: &RootSystemData, a: &ShuffleElement, b: &ShuffleElement, x: &RatV) -> Result<ShuffleElement> {
    let ab = star_with(rs, a, b)?;
    let ba = star_with(rs, b, a)?;
    ab.sub(&ba.scale(x))
}

/// Left-nested `v`-bracket `[..[[e_{j,r_j}, e_{j+1,r_{j+1}}]_v, ..]_v, e_{i,r_i}]_v`.
fn nested_bracket(rank: usize, d: &Decomposition) -> Result<ShuffleElement> {
    d.root.check_rank(rank)?;
    let rs = RootSystemData::sl(rank);
    let v = RatV::v_pow(1);
    let mut acc = gen_e(rank, d.root.j, d.at(d.root.j))?;
    for k in d.root.j + 1..=d.root.i {
        acc = qbracket_with(&rs, &acc, &gen_e(rank, k, d.at(k))?, &v)?;
    }
    Ok(acc)
}

/// `(v - v^{-1})` times the nested bracket over the decomposition.
pub fn e_tilde(rank: usize, d: &Decomposition) -> Result<ShuffleElement> {
    Ok(nested_bracket(rank, d)?.scale(&RatV::v_minus_v_inv()))
}

/// Undivided root vector `e_{beta,r}` on the decomposition `(r, 0, ..., 0)`.
pub fn e_root(rank: usize, beta: Root, r: i64) -> Result<ShuffleElement> {
    nested_bracket(rank, &Decomposition::zero_tail(beta, r))
}

/// `F^k / [k]_v!`, by repeated star and one scalar division.
pub fn divided_power(f: &ShuffleElement, k: usize) -> Result<ShuffleElement> {
    if k == 0 {
        return Err(Error::Precondition("divided power of order 0".into()));
    }
    let rs = RootSystemData::sl(f.rank());
    let mut acc = f.clone();
    for _ in 1..k {
        acc = star_with(&rs, &acc, f)?;
    }
    let q = RatV::from_laurent(qfact(k as i64)?);
    Ok(acc.scale(&q.inv()?))
}

/// One factor `e_{beta,r}^{(power)}` of an ordered PBWD monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct EFactor {
    pub root: Root,
    pub mode: i64,
    pub power: usize,
}

impl EFactor {
    pub fn new(root: Root, mode: i64, power: usize) -> Self {
        Self { root, mode, power }
    }

    fn key(&self) -> (Root, i64) {
        (self.root, self.mode)
    }
}

impl fmt::Display for EFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}@{}^{}", self.root, self.mode, self.power)
    }
}

/// Ordered product of divided powers, factors strictly increasing in `(root, mode)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EPBWDMonomial {
    factors: Vec<EFactor>,
}

impl EPBWDMonomial {
    /// Merges equal adjacent `(root, mode)` entries; rejects decreasing pairs.
    pub fn new(factors: Vec<EFactor>) -> Result<Self> {
        let mut out: Vec<EFactor> = Vec::with_capacity(factors.len());
        for f in factors {
            if f.power == 0 {
                return Err(Error::Precondition(format!("zero power in {f}")));
            }
            if let Some(last) = out.last_mut() {
                if last.key() == f.key() {
                    last.power += f.power;
                    continue;
                }
                if last.key() > f.key() {
                    return Err(Error::Unsorted(format!("{last} before {f}")));
                }
            }
            out.push(f);
        }
        Ok(Self { factors: out })
    }

    pub fn factors(&self) -> &[EFactor] {
        &self.factors
    }

    pub fn degree(&self, rank: usize) -> DegreeVector {
        let mut d = DegreeVector::zero(rank);
        for f in &self.factors {
            for c in f.root.colors() {
                d.0[c - 1] += f.power;
            }
        }
        d
    }

    pub fn total_mode(&self) -> i64 {
        self.factors.iter().map(|f| f.mode * f.power as i64).sum()
    }
}

impl fmt::Display for EPBWDMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (t, x) in self.factors.iter().enumerate() {
            if t > 0 {
                write!(f, "*")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Left-to-right star product of `e_root(beta, r)^{(k)}`.
pub fn build_e_pbwd(rank: usize, m: &EPBWDMonomial) -> Result<ShuffleElement> {
    let rs = RootSystemData::sl(rank);
    let mut acc = ShuffleElement::unit(rank);
    for f in m.factors() {
        let x = divided_power(&e_root(rank, f.root, f.mode)?, f.power)?;
        acc = star_with(&rs, &acc, &x)?;
    }
    Ok(acc)
}
