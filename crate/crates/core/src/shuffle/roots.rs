use std::fmt;

use crate::error::{Error, Result};
use crate::polyring::DegreeVector;

/// Cartan data of `sl_n` together with the exponents used in the zeta factors.
///
/// `zeta_exp(i, j)` is the `e` in `zeta_{i,j}(z) = (z - v^e)/(z - 1)`; for the
/// genuine algebra `e = -c_{ij}`. Test fixtures may perturb it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemData {
    n: usize,
    zeta_exp: Vec<Vec<i32>>,
}

impl RootSystemData {
    pub fn sl(n: usize) -> Self {
        let r = n.saturating_sub(1);
        let mut zeta_exp = vec![vec![0; r]; r];
        for i in 1..=r {
            for j in 1..=r {
                zeta_exp[i - 1][j - 1] = -cartan_entry(i, j);
            }
        }
        Self { n, zeta_exp }
    }

    /// Replaces the zeta exponent of the ordered pair `(i, j)`. Only same or
    /// adjacent colors may be perturbed, so the pole structure is unchanged.
    pub fn perturbed(mut self, i: usize, j: usize, exp: i32) -> Result<Self> {
        self.check_color(i)?;
        self.check_color(j)?;
        if i.abs_diff(j) > 1 {
            return Err(Error::Precondition(
                "only same or adjacent colors can be perturbed".into(),
            ));
        }
        self.zeta_exp[i - 1][j - 1] = exp;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_colors(&self) -> usize {
        self.n.saturating_sub(1)
    }

    pub fn cartan(&self, i: usize, j: usize) -> i32 {
        cartan_entry(i, j)
    }

    pub fn check_color(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.num_colors() {
            return Err(Error::ColorOutOfRange {
                color: i,
                max: self.num_colors(),
            });
        }
        Ok(())
    }

    /// `zeta_{i,j}`; trivial (identically 1) when the colors are not adjacent or equal.
    pub fn zeta(&self, i: usize, j: usize) -> Result<Zeta> {
        self.check_color(i)?;
        self.check_color(j)?;
        if i.abs_diff(j) > 1 {
            return Ok(Zeta::Trivial);
        }
        Ok(Zeta::Ratio {
            v_exp: self.zeta_exp[i - 1][j - 1],
        })
    }

    /// All positive roots in the order `j < j'`, or `j = j'` and `i <= i'`.
    pub fn positive_roots(&self) -> Vec<Root> {
        let r = self.num_colors();
        let mut out = Vec::new();
        for j in 1..=r {
            for i in j..=r {
                out.push(Root { j, i });
            }
        }
        out
    }
}

fn cartan_entry(i: usize, j: usize) -> i32 {
    if i == j {
        2
    } else if i.abs_diff(j) == 1 {
        -1
    } else {
        0
    }
}

/// `zeta(z) = (z - v^e)/(z - 1)` in a formal ratio variable `z`, or `1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Zeta {
    Trivial,
    Ratio { v_exp: i32 },
}

impl Zeta {
    /// Numerator as `(constant coefficient, coefficient of z)`: `(-v^e, 1)`, or `(1, 0)` when trivial.
    pub fn numerator(&self) -> (crate::exactalg::LaurentV, crate::exactalg::LaurentV) {
        use crate::exactalg::LaurentV;
        match self {
            Zeta::Trivial => (LaurentV::one(), LaurentV::zero()),
            Zeta::Ratio { v_exp } => (-LaurentV::v_pow(*v_exp as i64), LaurentV::one()),
        }
    }

    /// Denominator in the same encoding: `(-1, 1)`, or `(1, 0)` when trivial.
    pub fn denominator(&self) -> (crate::exactalg::LaurentV, crate::exactalg::LaurentV) {
        use crate::exactalg::LaurentV;
        match self {
            Zeta::Trivial => (LaurentV::one(), LaurentV::zero()),
            Zeta::Ratio { .. } => (LaurentV::from_int(-1), LaurentV::one()),
        }
    }
}

/// Positive root `alpha_j + ... + alpha_i`, `j <= i`. Derived ordering is the
/// root order: `j < j'`, or `j = j'` and `i <= i'`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Root {
    pub j: usize,
    pub i: usize,
}

impl Root {
    pub fn new(j: usize, i: usize) -> Result<Self> {
        if j == 0 || j > i {
            return Err(Error::Precondition(format!("invalid root [{j}..{i}]")));
        }
        Ok(Self { j, i })
    }

    pub fn simple(i: usize) -> Self {
        Self { j: i, i }
    }

    /// Number of simple roots in the interval.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.i - self.j + 1
    }

    pub fn is_simple(&self) -> bool {
        self.i == self.j
    }

    pub fn colors(&self) -> std::ops::RangeInclusive<usize> {
        self.j..=self.i
    }

    pub fn degree(&self, rank: usize) -> DegreeVector {
        DegreeVector::interval(rank, self.j, self.i)
    }

    /// Key used in certificates and plan JSON: `"<j>-<i>"`.
    pub fn key(&self) -> String {
        format!("{}-{}", self.j, self.i)
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.i >= rank {
            return Err(Error::ColorOutOfRange {
                color: self.i,
                max: rank.saturating_sub(1),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.j, self.i)
    }
}

/// A decomposition `(r_j, ..., r_i)` of a mode across the root's interval.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Decomposition {
    pub root: Root,
    pub r: Vec<i64>,
}

impl Decomposition {
    pub fn new(root: Root, r: Vec<i64>) -> Result<Self> {
        if r.len() != root.len() {
            return Err(Error::Precondition(format!(
                "decomposition of length {} for root {root}",
                r.len()
            )));
        }
        Ok(Self { root, r })
    }

    /// `(r, 0, ..., 0)`.
    pub fn zero_tail(root: Root, r: i64) -> Self {
        let mut v = vec![0; root.len()];
        v[0] = r;
        Self { root, r: v }
    }

    /// Balanced decomposition `r_k = floor(r(k-j+1)/L) - floor(r(k-j)/L)`, `L = i-j+1`.
    pub fn slope(root: Root, r: i64) -> Self {
        let l = root.len() as i64;
        let v = (0..l)
            .map(|t| (r * (t + 1)).div_euclid(l) - (r * t).div_euclid(l))
            .collect();
        Self { root, r: v }
    }

    pub fn mode(&self) -> i64 {
        self.r.iter().sum()
    }

    /// Mode of color `k` in the interval.
    pub fn at(&self, k: usize) -> i64 {
        self.r[k - self.root.j]
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@(", self.root)?;
        for (t, x) in self.r.iter().enumerate() {
            if t > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_values() {
        let rs = RootSystemData::sl(2);
        assert_eq!(rs.zeta(1, 1).unwrap(), Zeta::Ratio { v_exp: -2 });
        let rs = RootSystemData::sl(5);
        assert_eq!(rs.zeta(1, 3).unwrap(), Zeta::Trivial);
        let rs = RootSystemData::sl(3);
        assert_eq!(rs.zeta(1, 2).unwrap(), Zeta::Ratio { v_exp: 1 });
        assert!(rs.zeta(0, 1).is_err());
        assert!(rs.zeta(1, 3).is_err());
    }

    #[test]
    fn cartan_is_symmetric_sl() {
        let rs = RootSystemData::sl(5);
        for i in 1..=4 {
            for j in 1..=4 {
                assert_eq!(rs.cartan(i, j), rs.cartan(j, i));
            }
            assert_eq!(rs.cartan(i, i), 2);
        }
        assert_eq!(rs.cartan(2, 3), -1);
        assert_eq!(rs.cartan(1, 4), 0);
    }

    #[test]
    fn root_order() {
        let rs = RootSystemData::sl(4);
        let roots: Vec<String> = rs.positive_roots().iter().map(|r| r.to_string()).collect();
        assert_eq!(roots, ["[1..1]", "[1..2]", "[1..3]", "[2..2]", "[2..3]", "[3..3]"]);
    }

    #[test]
    fn slope_decomposition() {
        let b = Root::new(1, 2).unwrap();
        assert_eq!(Decomposition::slope(b, -1).r, vec![-1, 0]);
        assert_eq!(Decomposition::slope(b, 3).r, vec![1, 2]);
        let b = Root::new(1, 3).unwrap();
        for r in -7..=7 {
            assert_eq!(Decomposition::slope(b, r).mode(), r);
        }
        assert_eq!(Decomposition::zero_tail(b, 4).r, vec![4, 0, 0]);
    }
}
