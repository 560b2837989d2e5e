//! `{"rank": n, "degree": [...], "terms": [{"exps": {"x_<c>_<i>": e}, "coeff": ...}]}`

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ColorVar, DegreeVector, MultiLaurent, Poly};
use crate::exactalg::RatV;

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exps: BTreeMap<String, i32>,
    coeff: RatV,
}

#[derive(Serialize, Deserialize)]
struct MultiRepr {
    rank: usize,
    degree: Vec<usize>,
    terms: Vec<TermRepr>,
}

fn parse_var(name: &str) -> Option<ColorVar> {
    let mut it = name.strip_prefix("x_")?.split('_');
    let c = it.next()?.parse().ok()?;
    let i = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some(ColorVar::new(c, i))
}

fn terms_to_repr(p: &MultiLaurent) -> Vec<TermRepr> {
    let vars = p.degree().vars();
    p.sorted_terms()
        .into_iter()
        .map(|(e, c)| TermRepr {
            exps: vars
                .iter()
                .zip(&e)
                .filter(|(_, x)| **x != 0)
                .map(|(v, x)| (v.to_string(), *x))
                .collect(),
            coeff: c,
        })
        .collect()
}

fn terms_from_repr(rank: usize, degree: DegreeVector, terms: Vec<TermRepr>) -> Result<MultiLaurent, String> {
    let n = degree.total();
    let mut poly = Poly::zero(n);
    for t in terms {
        let mut e = vec![0; n];
        for (name, x) in t.exps {
            let v = parse_var(&name).ok_or_else(|| format!("bad variable name {name:?}"))?;
            let p = degree
                .position(v)
                .ok_or_else(|| format!("{v} not allowed in degree {degree}"))?;
            e[p] += x;
        }
        poly.add_term(e, t.coeff);
    }
    MultiLaurent::from_poly(rank, degree, poly).map_err(|e| e.to_string())
}

impl Serialize for MultiLaurent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MultiRepr {
            rank: self.rank(),
            degree: self.degree().0.clone(),
            terms: terms_to_repr(self),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiLaurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = MultiRepr::deserialize(d)?;
        terms_from_repr(r.rank, DegreeVector(r.degree), r.terms).map_err(D::Error::custom)
    }
}
