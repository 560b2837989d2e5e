//! JSON encodings: a Laurent polynomial is `{"<exp>": "<p>/<q>", ...}` and an
//! element of `Q(v)` is `{"num": ..., "den": ...}`.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LaurentV, RatV, Rational};

impl Serialize for LaurentV {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.len()))?;
        for (e, c) in self.terms() {
            map.serialize_entry(&e.to_string(), &LaurentV::rational_to_string(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentV {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, String> = BTreeMap::deserialize(d)?;
        let mut out = LaurentV::zero();
        for (k, c) in raw {
            let e = i64::from_str(k.trim()).map_err(D::Error::custom)?;
            let c = Rational::from_str(c.trim()).map_err(D::Error::custom)?;
            out.add_term(e, c);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct RatVRepr {
    num: LaurentV,
    den: LaurentV,
}

impl Serialize for RatV {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatVRepr {
            num: self.num().clone(),
            den: self.den().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatV {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = RatVRepr::deserialize(d)?;
        RatV::new(r.num, r.den).map_err(D::Error::custom)
    }
}
