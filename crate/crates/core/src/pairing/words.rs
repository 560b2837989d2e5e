use super::extract::extract_coefficient;
use super::monomial::FPBWDMonomial;
use super::series::{
    cancel_poles, degree_factorial, specialize_numerator, vmv_pow, DirectedFactor, GroupVar, PairingExpression,
};
use crate::error::Result;
use crate::exactalg::RatV;
use crate::polyring::{ColorVar, DegreeVector};
use crate::shuffle::{pole_factors, Decomposition, RootSystemData, ShuffleElement};

/// A product of single currents' coefficients `f_{c_1,s_1} ... f_{c_K,s_K}`.
pub type Word = Vec<(usize, i64)>;

/// Expands `(v - v^{-1}) [..[f_{j,r_j}, f_{j+1,r_{j+1}}]_v, ..]_v` into `2^{i-j}` words.
pub fn bracket_expand_f(d: &Decomposition) -> Vec<(RatV, Word)> {
    let j = d.root.j;
    let mut out = vec![(RatV::v_minus_v_inv(), vec![(j, d.at(j))])];
    let mv = -RatV::v_pow(1);
    for k in j + 1..=d.root.i {
        let letter = (k, d.at(k));
        let mut next = Vec::with_capacity(out.len() * 2);
        for (s, w) in out {
            let mut right = w.clone();
            right.push(letter);
            let mut left = vec![letter];
            left.extend(w);
            next.push((s.clone(), right));
            next.push((&s * &mv, left));
        }
        out = next;
    }
    out
}

/// `phi(x, f_{c_1,s_1} ... f_{c_K,s_K})` for plain (unrescaled) currents.
pub fn pair_word(x: &ShuffleElement, word: &[(usize, i64)]) -> Result<RatV> {
    let rank = x.rank();
    let rs = RootSystemData::sl(rank);
    let mut deg = DegreeVector::zero(rank);
    for &(c, _) in word {
        rs.check_color(c)?;
        deg.0[c - 1] += 1;
    }
    if &deg != x.degree() {
        return Ok(RatV::zero());
    }
    let nz = word.len();
    let vars: Vec<GroupVar> = word
        .iter()
        .enumerate()
        .map(|(p, &(c, _))| GroupVar { group: p + 1, color: c })
        .collect();
    // x_{i,r} goes to the r-th letter of color i
    let position = |v: ColorVar| {
        word.iter()
            .enumerate()
            .filter(|(_, l)| l.0 == v.color)
            .nth(v.index - 1)
            .map(|(p, _)| p)
            .expect("degree matched")
    };
    let mut nums = Vec::new();
    let mut factors = Vec::new();
    for p in 0..nz {
        for q in p + 1..nz {
            let c = rs.cartan(word[p].0, word[q].0);
            if c != 0 {
                nums.push((p, q));
                factors.push(DirectedFactor {
                    big: p,
                    big_scale: 0,
                    small: q,
                    small_scale: -(c as i64),
                });
            }
        }
    }
    let poles: Vec<(usize, usize)> = pole_factors(x.degree())
        .into_iter()
        .map(|(a, b)| (position(a), position(b)))
        .collect();
    let negative = cancel_poles(&poles, &mut nums, |a, b| format!("({} - {})", vars[a], vars[b]))?;
    let mut numerator = specialize_numerator(x, nz, position)?;
    let one = RatV::one();
    for (a, b) in &nums {
        numerator = numerator.mul_linear(*a, &one, *b, &one);
    }
    // every plain f is f~ / (v - v^{-1})
    let mut scalar = &degree_factorial(x.degree()) * &vmv_pow(-(nz as i64));
    if negative {
        scalar = -scalar;
    }
    let expr = PairingExpression {
        scalar,
        vars,
        numerator,
        factors,
    };
    let target: Vec<i64> = word.iter().map(|&(_, s)| -s).collect();
    extract_coefficient(&expr, &target)
}

/// Independent evaluation of [`super::pair`] through the bracket expansion of each factor.
pub fn pair_via_words(x: &ShuffleElement, m: &FPBWDMonomial) -> Result<RatV> {
    let mut words: Vec<(RatV, Word)> = vec![(RatV::one(), Vec::new())];
    for d in m.factors() {
        let exp = bracket_expand_f(d);
        let mut next = Vec::with_capacity(words.len() * exp.len());
        for (s, w) in &words {
            for (t, u) in &exp {
                let mut cat = w.clone();
                cat.extend(u.iter().copied());
                next.push((s * t, cat));
            }
        }
        words = next;
    }
    let mut acc = RatV::zero();
    for (s, w) in &words {
        let p = pair_word(x, w)?;
        if !p.is_zero() {
            acc += &(s * &p);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::LaurentV;
    use crate::shuffle::{e_tilde, gen_e, Root};

    #[test]
    fn expansion_shapes() {
        let simple = bracket_expand_f(&Decomposition::new(Root::simple(2), vec![5]).unwrap());
        assert_eq!(simple, vec![(RatV::v_minus_v_inv(), vec![(2, 5)])]);

        let two = bracket_expand_f(&Decomposition::new(Root::new(1, 2).unwrap(), vec![3, -1]).unwrap());
        assert_eq!(two.len(), 2);
        assert_eq!(two[0], (RatV::v_minus_v_inv(), vec![(1, 3), (2, -1)]));
        assert_eq!(
            two[1],
            (&RatV::v_minus_v_inv() * &-RatV::v_pow(1), vec![(2, -1), (1, 3)])
        );

        let three = bracket_expand_f(&Decomposition::new(Root::new(1, 3).unwrap(), vec![0, 0, 0]).unwrap());
        let mut scalars: Vec<LaurentV> = three
            .iter()
            .map(|(s, _)| s.div_checked(&RatV::v_minus_v_inv()).unwrap().num().clone())
            .collect();
        scalars.sort_by_key(|l| l.to_string());
        let mut expect = vec![
            LaurentV::one(),
            -LaurentV::v_pow(1),
            -LaurentV::v_pow(1),
            LaurentV::v_pow(2),
        ];
        expect.sort_by_key(|l| l.to_string());
        assert_eq!(scalars, expect);
    }

    #[test]
    fn single_letter_is_base_pairing() {
        for r in -2..=2 {
            let x = gen_e(3, 2, r).unwrap();
            assert_eq!(pair_word(&x, &[(2, -r)]).unwrap(), super::super::base_pair(2, r, 2, -r));
            assert!(pair_word(&x, &[(2, 1 - r)]).unwrap().is_zero());
        }
    }

    #[test]
    fn simple_rescaled_consistency() {
        let d = Decomposition::new(Root::simple(1), vec![2]).unwrap();
        let x = e_tilde(2, &d).unwrap();
        let m = FPBWDMonomial::new(vec![Decomposition::new(Root::simple(1), vec![-2]).unwrap()]).unwrap();
        assert_eq!(pair_via_words(&x, &m).unwrap(), RatV::v_minus_v_inv());
    }
}
