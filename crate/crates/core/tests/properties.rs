mod common;

use common::{degree, element_of, scalar, triple};
use proptest::prelude::*;
use qloop::exactalg::RatV;
use qloop::pairing::{extract_coefficient, extract_truncated, pair, pairing_series, FPBWDMonomial, FSeriesSpec};
use qloop::polyring::DegreeVector;
use qloop::shuffle::{
    gen_e, star, star_all, star_symmetrized, wheel_check, Decomposition, Root, RootSystemData, ShuffleElement,
};
use qloop::special::{enumerate_plans, specialize, specialize_with_order};

fn generator_word(n: usize) -> impl Strategy<Value = ShuffleElement> {
    prop::collection::vec((1..n, -2i64..=2), 1..=3).prop_map(move |w| {
        let gens: Vec<_> = w.iter().map(|&(i, r)| gen_e(n, i, r).unwrap()).collect();
        star_all(&RootSystemData::sl(n), &gens).unwrap()
    })
}

/// A random `f~` monomial of rank 3 with one or two factors.
fn f_monomial() -> impl Strategy<Value = FPBWDMonomial> {
    let root = prop_oneof![Just((1, 1)), Just((2, 2)), Just((1, 2))];
    prop::collection::vec((root, -2i64..=2, -2i64..=2), 1..=2).prop_map(|fs| {
        FPBWDMonomial::new_unchecked(
            fs.into_iter()
                .map(|((j, i), a, b)| {
                    let root = Root::new(j, i).unwrap();
                    let r = if j == i { vec![a] } else { vec![a, b] };
                    Decomposition::new(root, r).unwrap()
                })
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn star_is_associative((a, b, c) in triple()) {
        let left = star(&star(&a, &b).unwrap(), &c).unwrap();
        let right = star(&a, &star(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn unit_is_neutral((a, _, _) in triple()) {
        let one = ShuffleElement::unit(a.rank());
        prop_assert_eq!(&star(&one, &a).unwrap(), &a);
        prop_assert_eq!(&star(&a, &one).unwrap(), &a);
    }

    #[test]
    fn product_is_symmetric_and_matches_literal_symmetrization((a, b, _) in triple()) {
        let p = star(&a, &b).unwrap();
        prop_assert!(p.numerator().is_symmetric());
        prop_assert_eq!(p, star_symmetrized(&RootSystemData::sl(a.rank()), &a, &b).unwrap());
    }

    #[test]
    fn generator_products_satisfy_wheel_conditions(x in (2usize..=3).prop_flat_map(generator_word)) {
        prop_assert!(wheel_check(&x));
    }

    #[test]
    fn specialization_ignores_the_splitting(
        x in degree(3, 1, 3).prop_flat_map(|d| element_of(3, d)),
        seed in any::<u64>(),
    ) {
        for plan in enumerate_plans(x.degree()) {
            let canonical = specialize(&x, &plan).unwrap();
            prop_assert!(canonical.is_block_symmetric());
            // rotate each color's variable order by a seed-dependent amount
            let order: Vec<Vec<usize>> = x
                .degree()
                .blocks()
                .iter()
                .enumerate()
                .map(|(c, &k)| {
                    let s = if k == 0 { 0 } else { (seed >> (8 * c)) as usize % k };
                    (0..k).map(|t| (t + s) % k + 1).collect()
                })
                .collect();
            prop_assert_eq!(specialize_with_order(&x, &plan, &order).unwrap().poly, canonical.poly);
        }
    }

    #[test]
    fn pairing_is_bilinear(
        (x, y) in (element_of(3, DegreeVector(vec![1, 1])), element_of(3, DegreeVector(vec![1, 1]))),
        c in scalar(),
        m in f_monomial(),
    ) {
        let lhs = pair(&x.add(&y).unwrap(), &m).unwrap();
        prop_assert_eq!(lhs, &pair(&x, &m).unwrap() + &pair(&y, &m).unwrap());
        prop_assert_eq!(pair(&x.scale(&c), &m).unwrap(), &c * &pair(&x, &m).unwrap());
    }

    #[test]
    fn pairing_vanishes_off_degree_and_mode(x in generator_word(3), m in f_monomial()) {
        let deg_ok = x.degree() == &m.degree(3);
        let mode_ok = x.mode() == Some(-m.total_mode());
        if !(deg_ok && mode_ok) {
            prop_assert!(pair(&x, &m).unwrap().is_zero());
        }
    }

    #[test]
    fn extraction_agrees_with_truncated_series(
        x in element_of(3, DegreeVector(vec![1, 1])),
        two in any::<bool>(),
        t in prop::collection::vec(-3i64..=3, 3),
    ) {
        let specs: Vec<FSeriesSpec> = if two {
            vec![
                FSeriesSpec { root: Root::simple(2), group: 1 },
                FSeriesSpec { root: Root::simple(1), group: 2 },
            ]
        } else {
            vec![FSeriesSpec { root: Root::new(1, 2).unwrap(), group: 1 }]
        };
        for e in pairing_series(&x, &specs).unwrap() {
            let target = &t[..e.vars.len()];
            let exact = extract_coefficient(&e, target).unwrap();
            // numerator exponents lie in [-1, 2] and targets in [-3, 3], so every
            // contributing series index is below 12
            prop_assert_eq!(&exact, &extract_truncated(&e, target, 12));
            prop_assert_eq!(&exact, &extract_truncated(&e, target, 16));
        }
    }
}

#[test]
fn zero_pairs_to_zero() {
    let x = ShuffleElement::zero(3, DegreeVector(vec![1, 1]));
    let m = FPBWDMonomial::new(vec![Decomposition::zero_tail(Root::new(1, 2).unwrap(), 0)]).unwrap();
    assert_eq!(pair(&x, &m).unwrap(), RatV::zero());
}
