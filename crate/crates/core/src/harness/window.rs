use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::polyring::DegreeVector;
use crate::shuffle::{Decomposition, Root};

/// How a root mode `r` is split across the root's interval on the f-side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompStrategy {
    /// `(r, 0, ..., 0)`.
    Zero,
    /// Balanced floor differences.
    Slope,
    /// Explicit table keyed by `(root, mode)`; simple roots need no entry.
    Custom(BTreeMap<(Root, i64), Vec<i64>>),
}

#[derive(Deserialize)]
struct CustomEntry {
    root: String,
    r: Vec<i64>,
}

#[derive(Deserialize)]
struct CustomFile {
    decompositions: Vec<CustomEntry>,
}

impl DecompStrategy {
    /// Reads `{"decompositions": [{"root": "1-2", "r": [-1, 0]}, ...]}`.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: CustomFile = serde_json::from_str(text)?;
        let mut table = BTreeMap::new();
        for e in file.decompositions {
            let root = parse_root_key(&e.root)?;
            let d = Decomposition::new(root, e.r)?;
            table.insert((root, d.mode()), d.r);
        }
        Ok(DecompStrategy::Custom(table))
    }

    pub fn decompose(&self, root: Root, r: i64) -> Result<Decomposition> {
        match self {
            DecompStrategy::Zero => Ok(Decomposition::zero_tail(root, r)),
            DecompStrategy::Slope => Ok(Decomposition::slope(root, r)),
            DecompStrategy::Custom(table) => {
                if root.is_simple() {
                    return Decomposition::new(root, vec![r]);
                }
                match table.get(&(root, r)) {
                    Some(v) => Decomposition::new(root, v.clone()),
                    None => Err(Error::MissingDecomposition(format!("{root}@{r}"))),
                }
            }
        }
    }
}

impl fmt::Display for DecompStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompStrategy::Zero => write!(f, "zero"),
            DecompStrategy::Slope => write!(f, "slope"),
            DecompStrategy::Custom(t) => write!(f, "custom({} entries)", t.len()),
        }
    }
}

impl Serialize for DecompStrategy {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_root_key(s: &str) -> Result<Root> {
    let (j, i) = s
        .split_once('-')
        .ok_or_else(|| Error::Parse(format!("root key {s:?} is not of the form j-i")))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad root index in {s:?}")))
    };
    Root::new(parse(j)?, parse(i)?)
}

/// A finite window of PBWD monomials: rank, total degree bound and factor modes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowConfig {
    pub n: usize,
    pub max_total_degree: usize,
    pub mode_min: i64,
    pub mode_max: i64,
    pub strategy: DecompStrategy,
}

impl WindowConfig {
    pub fn new(
        n: usize,
        max_total_degree: usize,
        mode_min: i64,
        mode_max: i64,
        strategy: DecompStrategy,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(format!("rank {n} < 2")));
        }
        if max_total_degree < 1 {
            return Err(Error::Precondition("max total degree must be at least 1".into()));
        }
        if mode_min > mode_max {
            return Err(Error::Precondition(format!("empty mode window {mode_min}..{mode_max}")));
        }
        Ok(Self {
            n,
            max_total_degree,
            mode_min,
            mode_max,
            strategy,
        })
    }

    /// All nonzero degrees with total at most the bound, by total then lexicographically.
    pub fn degrees(&self) -> Vec<DegreeVector> {
        let colors = self.n - 1;
        let mut out = Vec::new();
        for total in 1..=self.max_total_degree {
            let mut cur = vec![0usize; colors];
            compositions(total, 0, &mut cur, &mut out);
        }
        out
    }
}

fn compositions(left: usize, at: usize, cur: &mut Vec<usize>, out: &mut Vec<DegreeVector>) {
    if at + 1 == cur.len() {
        cur[at] = left;
        out.push(DegreeVector(cur.clone()));
        return;
    }
    for k in (0..=left).rev() {
        cur[at] = k;
        compositions(left - k, at + 1, cur, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_example() {
        let d = DecompStrategy::Slope.decompose(Root::new(1, 2).unwrap(), -1).unwrap();
        assert_eq!(d.r, vec![-1, 0]);
    }

    #[test]
    fn custom_table() {
        let s = DecompStrategy::from_json(r#"{"decompositions":[{"root":"1-2","r":[1,-2]}]}"#).unwrap();
        let b = Root::new(1, 2).unwrap();
        assert_eq!(s.decompose(b, -1).unwrap().r, vec![1, -2]);
        assert_eq!(s.decompose(Root::simple(2), 4).unwrap().r, vec![4]);
        assert!(matches!(s.decompose(b, 0), Err(Error::MissingDecomposition(_))));
    }

    #[test]
    fn degree_list() {
        let cfg = WindowConfig::new(3, 2, -1, 1, DecompStrategy::Zero).unwrap();
        let ds: Vec<String> = cfg
            .degrees()
            .iter()
            .map(|d| d.0.iter().map(|k| k.to_string()).collect())
            .collect();
        assert_eq!(ds, ["10", "01", "20", "11", "02"]);
        assert!(WindowConfig::new(2, 0, 0, 0, DecompStrategy::Zero).is_err());
        assert!(WindowConfig::new(2, 1, 1, 0, DecompStrategy::Zero).is_err());
    }
}
