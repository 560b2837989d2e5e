#![allow(dead_code)]

use proptest::prelude::*;
use qloop::exactalg::RatV;
use qloop::polyring::{ColorVar, DegreeVector, MultiLaurent};
use qloop::shuffle::ShuffleElement;

pub fn fixture_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/non_good.json")
}

pub fn non_good() -> ShuffleElement {
    serde_json::from_str(&std::fs::read_to_string(fixture_path()).unwrap()).unwrap()
}

/// Small integer combinations of `v`-powers.
pub fn scalar() -> impl Strategy<Value = RatV> {
    (-2i64..=2, -2i64..=2, -2i64..=2).prop_map(|(a, b, e)| &RatV::from_int(a) + &RatV::from_int(b).shift(e))
}

/// Symmetrized random Laurent monomials of the given degree.
pub fn element_of(rank: usize, degree: DegreeVector) -> impl Strategy<Value = ShuffleElement> {
    let vars = degree.vars();
    let nv = vars.len();
    prop::collection::vec((prop::collection::vec(-1i32..=2, nv), scalar()), 1..=2).prop_map(move |terms| {
        let mut acc = MultiLaurent::zero(rank, degree.clone());
        for (e, c) in terms {
            let exps: Vec<(ColorVar, i32)> = vars.iter().copied().zip(e).collect();
            let m = MultiLaurent::monomial(rank, degree.clone(), &exps, c).unwrap();
            acc = acc.add(&m).unwrap();
        }
        ShuffleElement::new(acc.symmetrize()).unwrap()
    })
}

/// Degree vectors of rank `n` with total between `lo` and `hi`.
pub fn degree(n: usize, lo: usize, hi: usize) -> impl Strategy<Value = DegreeVector> {
    prop::collection::vec(0usize..=hi, n - 1)
        .prop_filter("total in range", move |d| {
            let t: usize = d.iter().sum();
            t >= lo && t <= hi
        })
        .prop_map(DegreeVector)
}

/// Triples of elements of rank 2 or 3 with total degree at most 4.
pub fn triple() -> impl Strategy<Value = (ShuffleElement, ShuffleElement, ShuffleElement)> {
    (2usize..=3)
        .prop_flat_map(|n| (Just(n), degree(n, 0, 2), degree(n, 0, 1), degree(n, 0, 1)))
        .prop_filter("total degree <= 4", |(_, a, b, c)| {
            a.total() + b.total() + c.total() <= 4
        })
        .prop_flat_map(|(n, a, b, c)| (element_of(n, a), element_of(n, b), element_of(n, c)))
}
