use std::fmt;

use super::extract::extract_coefficient;
use super::monomial::FPBWDMonomial;
use crate::error::{Error, Result};
use crate::exactalg::{RatV, Rational};
use crate::polyring::{ColorVar, DegreeVector, Poly};
use crate::shuffle::{pole_factors, Root, RootSystemData, ShuffleElement};

/// `z^{(group)}_{color}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupVar {
    pub group: usize,
    pub color: usize,
}

impl fmt::Display for GroupVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z{}_{}", self.group, self.color)
    }
}

/// The series `f~_{j;i}(z_j, ..., z_i)` occupying group `group`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FSeriesSpec {
    pub root: Root,
    pub group: usize,
}

/// Orientation of the chain `j - (j+1) - ... - i`; `edges[k - j]` is true for `k -> k+1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orientation {
    pub root: Root,
    pub edges: Vec<bool>,
}

impl Orientation {
    /// All `2^{i-j}` orientations; entry `c` has edge `e` forward iff bit `e` of `c` is clear.
    pub fn all(root: Root) -> Vec<Orientation> {
        let ne = root.len() - 1;
        (0..1usize << ne)
            .map(|c| Orientation {
                root,
                edges: (0..ne).map(|e| c >> e & 1 == 0).collect(),
            })
            .collect()
    }

    pub fn backward_count(&self) -> usize {
        self.edges.iter().filter(|f| !**f).count()
    }
}

/// `1 / (v^{big_scale} z_big - v^{small_scale} z_small)`, expanded in `z_small / z_big`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DirectedFactor {
    pub big: usize,
    pub big_scale: i64,
    pub small: usize,
    pub small_scale: i64,
}

/// `scalar * numerator * prod factors`, over the variables `vars`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairingExpression {
    pub scalar: RatV,
    pub vars: Vec<GroupVar>,
    pub numerator: Poly,
    pub factors: Vec<DirectedFactor>,
}

/// Edge `k -> k+1` gives `(z_k - z_{k+1}) / (z_k - v z_{k+1})`; edge `k <- k+1`
/// gives `v (z_k - z_{k+1}) / (z_{k+1} - v z_k)`.
///
/// Returns the scalar's `v`-exponent, the numerator `(z_k, z_{k+1})` and the factor.
pub fn oriented_zeta_inv(
    pi: &Orientation,
    k: usize,
    zk: usize,
    zk1: usize,
) -> Result<(i64, (usize, usize), DirectedFactor)> {
    if k < pi.root.j || k >= pi.root.i {
        return Err(Error::Precondition(format!("edge {k} outside {}", pi.root)));
    }
    let (scalar, factor) = if pi.edges[k - pi.root.j] {
        (
            0,
            DirectedFactor {
                big: zk,
                big_scale: 0,
                small: zk1,
                small_scale: 1,
            },
        )
    } else {
        (
            1,
            DirectedFactor {
                big: zk1,
                big_scale: 0,
                small: zk,
                small_scale: 1,
            },
        )
    };
    Ok((scalar, (zk, zk1), factor))
}

/// `delta_{i,j} delta_{r+s,0} / (v - v^{-1})`.
pub fn base_pair(i: usize, r: i64, j: usize, s: i64) -> RatV {
    if i == j && r + s == 0 {
        RatV::v_minus_v_inv().inv().expect("nonzero")
    } else {
        RatV::zero()
    }
}

/// Removes every pole factor `(a, b)` from `nums`, matching `(a, b)` or `(b, a)`;
/// returns the accumulated sign.
pub(crate) fn cancel_poles(
    poles: &[(usize, usize)],
    nums: &mut Vec<(usize, usize)>,
    describe: impl Fn(usize, usize) -> String,
) -> Result<bool> {
    let mut negative = false;
    for &(a, b) in poles {
        if let Some(p) = nums.iter().position(|&x| x == (a, b)) {
            nums.swap_remove(p);
        } else if let Some(p) = nums.iter().position(|&x| x == (b, a)) {
            nums.swap_remove(p);
            negative = !negative;
        } else {
            return Err(Error::ExactCancellationFailure(describe(a, b)));
        }
    }
    Ok(negative)
}

/// Specializes the numerator of `x` by `image(color, index) -> variable`.
pub(crate) fn specialize_numerator(x: &ShuffleElement, nz: usize, image: impl Fn(ColorVar) -> usize) -> Result<Poly> {
    let asg = x
        .degree()
        .vars()
        .into_iter()
        .map(|v| (v, (image(v), RatV::one())))
        .collect();
    x.numerator().substitute(&asg, nz)
}

/// `k! = prod k_i!` as a scalar; converts our product normalization to the
/// one in which the pairing is a Hopf pairing.
pub(crate) fn degree_factorial(d: &DegreeVector) -> RatV {
    RatV::from_rational(Rational::from_integer(d.factorial()))
}

pub(crate) fn vmv_pow(k: i64) -> RatV {
    RatV::v_minus_v_inv().pow(k as i32).expect("v - v^{-1} is nonzero")
}

/// One expression per orientation tuple, in binary-counter order over the
/// concatenated edges. Empty when the degrees do not match.
pub fn pairing_series(x: &ShuffleElement, specs: &[FSeriesSpec]) -> Result<Vec<PairingExpression>> {
    let rank = x.rank();
    let rs = RootSystemData::sl(rank);
    let mut deg = DegreeVector::zero(rank);
    for s in specs {
        s.root.check_rank(rank)?;
        for c in s.root.colors() {
            deg.0[c - 1] += 1;
        }
    }
    if &deg != x.degree() {
        return Ok(Vec::new());
    }

    let mut vars = Vec::new();
    for s in specs {
        for c in s.root.colors() {
            vars.push(GroupVar {
                group: s.group,
                color: c,
            });
        }
    }
    let nz = vars.len();
    let index_of = |g: usize, c: usize| {
        vars.iter()
            .position(|v| v.group == g && v.color == c)
            .expect("group variable exists")
    };
    // x_{i,r} goes to the r-th group containing color i
    let holder = |v: ColorVar| {
        let g = specs
            .iter()
            .filter(|s| s.root.colors().contains(&v.color))
            .nth(v.index - 1)
            .expect("degree matched");
        index_of(g.group, v.color)
    };

    let mut nums: Vec<(usize, usize)> = Vec::new();
    let mut cross: Vec<DirectedFactor> = Vec::new();
    for (t, st) in specs.iter().enumerate() {
        for su in &specs[t + 1..] {
            for k in st.root.colors() {
                for l in su.root.colors() {
                    let c = rs.cartan(k, l);
                    if c == 0 {
                        continue;
                    }
                    let (a, b) = (index_of(st.group, k), index_of(su.group, l));
                    nums.push((a, b));
                    cross.push(DirectedFactor {
                        big: a,
                        big_scale: 0,
                        small: b,
                        small_scale: -(c as i64),
                    });
                }
            }
        }
    }
    for s in specs {
        for k in s.root.j..s.root.i {
            nums.push((index_of(s.group, k), index_of(s.group, k + 1)));
        }
    }
    let poles: Vec<(usize, usize)> = pole_factors(x.degree())
        .into_iter()
        .map(|(a, b)| (holder(a), holder(b)))
        .collect();
    let negative = cancel_poles(&poles, &mut nums, |a, b| format!("({} - {})", vars[a], vars[b]))?;

    let mut numerator = specialize_numerator(x, nz, holder)?;
    let one = RatV::one();
    nums.sort();
    for (a, b) in &nums {
        numerator = numerator.mul_linear(*a, &one, *b, &one);
    }
    let edge_total: usize = specs.iter().map(|s| s.root.len() - 1).sum();
    let mut base = &degree_factorial(x.degree()) * &vmv_pow(-(edge_total as i64));
    if negative {
        base = -base;
    }

    let mut out = Vec::with_capacity(1 << edge_total);
    for counter in 0..1usize << edge_total {
        let mut bit = 0;
        let mut factors = cross.clone();
        let mut vexp = 0;
        for s in specs {
            let ne = s.root.len() - 1;
            let pi = Orientation {
                root: s.root,
                edges: (0..ne).map(|e| counter >> (bit + e) & 1 == 0).collect(),
            };
            bit += ne;
            for k in s.root.j..s.root.i {
                let (sc, _, f) = oriented_zeta_inv(&pi, k, index_of(s.group, k), index_of(s.group, k + 1))?;
                vexp += sc;
                factors.push(f);
            }
        }
        out.push(PairingExpression {
            scalar: base.shift(vexp),
            vars: vars.clone(),
            numerator: numerator.clone(),
            factors,
        });
    }
    Ok(out)
}

pub(crate) fn specs_of(m: &FPBWDMonomial) -> Vec<FSeriesSpec> {
    m.factors()
        .iter()
        .enumerate()
        .map(|(t, d)| FSeriesSpec {
            root: d.root,
            group: t + 1,
        })
        .collect()
}

/// `phi(x, m)`: sum over orientation tuples of the coefficient at `prod z^{-r}`.
pub fn pair(x: &ShuffleElement, m: &FPBWDMonomial) -> Result<RatV> {
    let specs = specs_of(m);
    let exprs = pairing_series(x, &specs)?;
    if exprs.is_empty() {
        return Ok(RatV::zero());
    }
    let target: Vec<i64> = exprs[0]
        .vars
        .iter()
        .map(|v| -m.factors()[v.group - 1].at(v.color))
        .collect();
    let mut acc = RatV::zero();
    for e in &exprs {
        acc += &extract_coefficient(e, &target)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::LaurentV;
    use crate::shuffle::{divided_power, e_tilde, gen_e, Decomposition};

    fn f1(j: usize, i: usize, r: Vec<i64>) -> Decomposition {
        Decomposition::new(Root::new(j, i).unwrap(), r).unwrap()
    }

    #[test]
    fn base_pair_values() {
        assert_eq!(base_pair(1, 3, 1, -3), RatV::v_minus_v_inv().inv().unwrap());
        assert!(base_pair(1, 3, 2, -3).is_zero());
        assert!(base_pair(1, 3, 1, 2).is_zero());
    }

    #[test]
    fn orientation_factors() {
        let b = Root::new(1, 2).unwrap();
        let all = Orientation::all(b);
        assert_eq!(all.len(), 2);
        assert!(all[0].edges[0]);
        let (s, n, f) = oriented_zeta_inv(&all[0], 1, 0, 1).unwrap();
        assert_eq!((s, n, f.big, f.small, f.small_scale), (0, (0, 1), 0, 1, 1));
        let (s, n, f) = oriented_zeta_inv(&all[1], 1, 0, 1).unwrap();
        assert_eq!((s, n, f.big, f.small, f.small_scale), (1, (0, 1), 1, 0, 1));
        assert!(oriented_zeta_inv(&all[0], 2, 0, 1).is_err());
        assert_eq!(
            Orientation::all(Root::simple(2)),
            vec![Orientation {
                root: Root::simple(2),
                edges: vec![]
            }]
        );
    }

    #[test]
    fn generator_against_simple_current() {
        for r in -3..=3 {
            let x = gen_e(2, 1, r).unwrap();
            let m = FPBWDMonomial::new(vec![f1(1, 1, vec![-r])]).unwrap();
            assert!(pair(&x, &m).unwrap().is_one());
            let t = e_tilde(2, &Decomposition::new(Root::simple(1), vec![r]).unwrap()).unwrap();
            assert_eq!(pair(&t, &m).unwrap(), RatV::v_minus_v_inv());
        }
    }

    #[test]
    fn mismatches_vanish() {
        let x = gen_e(3, 1, 0).unwrap();
        let m = FPBWDMonomial::new(vec![f1(2, 2, vec![0])]).unwrap();
        assert!(pairing_series(&x, &specs_of(&m)).unwrap().is_empty());
        assert!(pair(&x, &m).unwrap().is_zero());
        let m = FPBWDMonomial::new(vec![f1(1, 1, vec![1])]).unwrap();
        assert!(pair(&x, &m).unwrap().is_zero());
    }

    #[test]
    fn divided_square_pairing() {
        // Hopf-pairing value: phi(e_0 e_0, f~_0 f~_0) = 1 + v^{-2}, so the divided square gives v^{-1}
        let x = divided_power(&gen_e(2, 1, 0).unwrap(), 2).unwrap();
        let f = f1(1, 1, vec![0]);
        let m = FPBWDMonomial::new(vec![f.clone(), f]).unwrap();
        assert_eq!(pair(&x, &m).unwrap(), RatV::v_pow(-1));
        let sq = crate::shuffle::star(&gen_e(2, 1, 0).unwrap(), &gen_e(2, 1, 0).unwrap()).unwrap();
        assert_eq!(
            pair(&sq, &m).unwrap(),
            RatV::from_laurent(LaurentV::from_pairs([(0, 1), (-2, 1)]))
        );
    }

    #[test]
    fn rank_three_root_has_two_orientations() {
        let x = e_tilde(3, &f1(1, 2, vec![0, 0])).unwrap();
        let specs = [FSeriesSpec {
            root: Root::new(1, 2).unwrap(),
            group: 1,
        }];
        let ex = pairing_series(&x, &specs).unwrap();
        assert_eq!(ex.len(), 2);
        assert_eq!(ex[1].scalar, ex[0].scalar.shift(1));
    }
}
