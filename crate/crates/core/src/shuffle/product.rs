use super::element::{pole_factors, vandermonde_factors, ShuffleElement};
use super::roots::{RootSystemData, Zeta};
use crate::error::{Error, Result};
use crate::exactalg::{RatV, Rational};
use crate::polyring::perm::for_each_shuffle;
use crate::polyring::{ColorVar, DegreeVector, MultiLaurent, Poly};

/// Shuffle product for `sl_n` with `n = F.rank()`.
pub fn star(f: &ShuffleElement, g: &ShuffleElement) -> Result<ShuffleElement> {
    star_with(&RootSystemData::sl(f.rank()), f, g)
}

/// Shuffle product for explicit root data.
///
/// Sums over shuffles (coset representatives of `S_m / S_k x S_l` per color).
/// Every term is brought to the common denominator `P * V`, with `P` the pole
/// product and `V` the same-color Vandermonde; the sum is then divided by `V`.
/// The resulting normalization agrees with `Sym` including its `1/m!`, which
/// makes the product associative with `1` in degree zero as unit.
pub fn star_with(rs: &RootSystemData, f: &ShuffleElement, g: &ShuffleElement) -> Result<ShuffleElement> {
    check_rank(rs, f, g)?;
    let k = f.degree();
    let l = g.degree();
    let m = k.add(l);
    let nv = m.total();
    let colors = m.num_colors();
    let zetas = zeta_table(rs)?;
    let one = RatV::one();

    let mut acc = Poly::zero(nv);
    for_each_shuffle(k.blocks(), l.blocks(), |left| {
        // position and color of every F- and G-variable inside degree m
        let mut fpos = Vec::with_capacity(k.total());
        let mut gpos = Vec::with_capacity(l.total());
        let mut fvars = Vec::new();
        let mut gvars = Vec::new();
        for c in 1..=colors {
            let mut in_left = vec![false; m.get(c)];
            for &a in &left[c - 1] {
                in_left[a] = true;
            }
            for (idx, &is_left) in in_left.iter().enumerate() {
                let v = ColorVar::new(c, idx + 1);
                let p = m.position(v).unwrap();
                if is_left {
                    fpos.push(p);
                    fvars.push((c, idx, p));
                } else {
                    gpos.push(p);
                    gvars.push((c, idx, p));
                }
            }
        }
        let mut term = &f.numerator().poly().permute(&fpos, nv) * &g.numerator().poly().permute(&gpos, nv);
        let mut negative = false;
        for &(ca, ia, pa) in &fvars {
            for &(cb, ib, pb) in &gvars {
                let Zeta::Ratio { v_exp } = zetas[ca - 1][cb - 1] else {
                    continue;
                };
                term = term.mul_linear(pa, &one, pb, &RatV::v_pow(v_exp as i64));
                // orient the denominator (x_a - x_b) as in P * V
                if (ca == cb && ia > ib) || cb + 1 == ca {
                    negative = !negative;
                }
            }
        }
        // same-color pairs on the same side complete V
        for side in [&fvars, &gvars] {
            for (s, &(ca, _, pa)) in side.iter().enumerate() {
                for &(cb, _, pb) in &side[s + 1..] {
                    if ca == cb {
                        term = term.mul_linear(pa, &one, pb, &one);
                    }
                }
            }
        }
        if negative {
            acc.add_assign_ref(&-&term);
        } else {
            acc.add_assign_ref(&term);
        }
    });

    let num = MultiLaurent::from_poly(f.rank(), m.clone(), acc)?;
    let num = num.exact_divide_linear(&vandermonde_factors(&m))?;
    let norm = Rational::new(k.factorial() * l.factorial(), m.factorial());
    Ok(ShuffleElement::from_numerator_unchecked(
        num.scalar_mul(&RatV::from_rational(norm)),
    ))
}

/// `Sym(F * G * prod zeta)` evaluated literally over the full same-color group.
///
/// Independent of [`star_with`]'s sign bookkeeping; exponential in the degree,
/// intended as a cross-check on small inputs.
pub fn star_symmetrized(rs: &RootSystemData, f: &ShuffleElement, g: &ShuffleElement) -> Result<ShuffleElement> {
    check_rank(rs, f, g)?;
    let k = f.degree();
    let l = g.degree();
    let m = k.add(l);
    let rank = f.rank();
    let prod = f.numerator().mul_disjoint(g.numerator())?;

    // the identity shuffle: F-variables first within every color
    let fvars: Vec<ColorVar> = k.vars();
    let gvars: Vec<ColorVar> = l
        .vars()
        .into_iter()
        .map(|v| ColorVar::new(v.color, v.index + k.get(v.color)))
        .collect();
    let mut num = prod.poly().clone();
    let mut den: Vec<(ColorVar, ColorVar)> = Vec::new();
    den.extend(shifted(&pole_factors(k), k, 0));
    den.extend(shifted(&pole_factors(l), k, 1));
    for a in &fvars {
        for b in &gvars {
            if let Zeta::Ratio { v_exp } = rs.zeta(a.color, b.color)? {
                num = num.mul_linear(
                    m.position(*a).unwrap(),
                    &RatV::one(),
                    m.position(*b).unwrap(),
                    &RatV::v_pow(v_exp as i64),
                );
                den.push((*a, *b));
            }
        }
    }
    // clear to the common denominator P * V by exact division
    let mut full: Vec<(ColorVar, ColorVar)> = pole_factors(&m);
    full.extend(vandermonde_factors(&m));
    let pv = MultiLaurent::constant(rank, m.clone(), RatV::one()).mul_linear_factors(&full)?;
    let multiplier = pv.exact_divide_linear(&den)?;
    let n = MultiLaurent::from_poly(rank, m.clone(), num)?.mul(&multiplier)?;
    let sym = n.antisymmetrize().exact_divide_linear(&vandermonde_factors(&m))?;
    Ok(ShuffleElement::from_numerator_unchecked(sym))
}

fn shifted(factors: &[(ColorVar, ColorVar)], k: &DegreeVector, right: usize) -> Vec<(ColorVar, ColorVar)> {
    let sh = |v: ColorVar| ColorVar::new(v.color, v.index + right * k.get(v.color));
    factors.iter().map(|(a, b)| (sh(*a), sh(*b))).collect()
}

fn check_rank(rs: &RootSystemData, f: &ShuffleElement, g: &ShuffleElement) -> Result<()> {
    if f.rank() != g.rank() {
        return Err(Error::RankMismatch {
            left: f.rank(),
            right: g.rank(),
        });
    }
    if rs.n() != f.rank() {
        return Err(Error::RankMismatch {
            left: rs.n(),
            right: f.rank(),
        });
    }
    Ok(())
}

fn zeta_table(rs: &RootSystemData) -> Result<Vec<Vec<Zeta>>> {
    let r = rs.num_colors();
    (1..=r).map(|i| (1..=r).map(|j| rs.zeta(i, j)).collect()).collect()
}

/// Left-to-right product of a nonempty list.
pub fn star_all(rs: &RootSystemData, items: &[ShuffleElement]) -> Result<ShuffleElement> {
    let (first, rest) = items
        .split_first()
        .ok_or_else(|| Error::Precondition("empty product".into()))?;
    let mut acc = first.clone();
    for x in rest {
        acc = star_with(rs, &acc, x)?;
    }
    Ok(acc)
}
