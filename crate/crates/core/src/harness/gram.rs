use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_e_monomials, enumerate_f_monomials};
use super::window::WindowConfig;
use crate::error::{Error, Result};
use crate::exactalg::RatV;
use crate::pairing::{pair, FPBWDMonomial};
use crate::polyring::DegreeVector;
use crate::shuffle::{build_e_pbwd, ShuffleElement};
use crate::special::is_good;

const HEADER: &str = "blocks are keyed by (degree, total mode); pairings between different blocks vanish by homogeneity and are not listed";

#[derive(Clone, Debug, Serialize)]
pub struct ReportConfig {
    #[serde(flatten)]
    pub window: WindowConfig,
    pub note: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct GramBlock {
    pub degree: Vec<usize>,
    pub total_mode: i64,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    /// Whether each row element passed the integrality-and-divisibility test.
    pub rows_good: Vec<bool>,
    pub entries: Vec<Vec<RatV>>,
    pub verdicts: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct GramSummary {
    pub checked: usize,
    pub violations: usize,
    pub non_good_rows: usize,
    pub first_violation: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GramReport {
    pub config: ReportConfig,
    pub blocks: Vec<GramBlock>,
    pub summary: GramSummary,
}

impl GramReport {
    pub fn passed(&self) -> bool {
        self.summary.violations == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per entry: `row,col,degree,total_mode,entry,laurent`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("row,col,degree,total_mode,entry,laurent\n");
        for b in &self.blocks {
            let deg: Vec<String> = b.degree.iter().map(ToString::to_string).collect();
            for (i, r) in b.rows.iter().enumerate() {
                for (j, c) in b.cols.iter().enumerate() {
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{},{}",
                        csv_field(r),
                        csv_field(c),
                        deg.join(" "),
                        b.total_mode,
                        csv_field(&b.entries[i][j].to_string()),
                        b.verdicts[i][j]
                    );
                }
            }
        }
        s
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// A row of the Gram matrix: a label and the shuffle element it stands for.
#[derive(Clone, Debug)]
pub struct GramRow {
    pub label: String,
    pub element: ShuffleElement,
}

/// Computes every entry of a block in parallel; the output order is fixed.
pub(crate) fn block_entries(rows: &[ShuffleElement], cols: &[FPBWDMonomial]) -> Result<Vec<Vec<RatV>>> {
    let flat: Vec<RatV> = (0..rows.len() * cols.len())
        .into_par_iter()
        .map(|t| pair(&rows[t / cols.len()], &cols[t % cols.len()]))
        .collect::<Result<_>>()?;
    Ok(flat.chunks(cols.len().max(1)).map(<[RatV]>::to_vec).collect())
}

/// Runs `f` on a dedicated pool when a thread count is given.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| Error::Precondition(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

struct PendingBlock {
    degree: DegreeVector,
    total_mode: i64,
    rows: Vec<GramRow>,
    cols: Vec<FPBWDMonomial>,
}

/// Gram matrices of divided-power E-monomials against F-monomials over the
/// window, each entry checked for Laurent polynomiality.
///
/// `extra_rows` are appended to the block of matching degree and mode (a new
/// block is opened if the window has none).
pub fn verify_duality(cfg: &WindowConfig, extra_rows: &[GramRow]) -> Result<GramReport> {
    let mut pending: Vec<PendingBlock> = Vec::new();
    for d in cfg.degrees() {
        let units = d.total() as i64;
        for t in units * cfg.mode_min..=units * cfg.mode_max {
            let es = enumerate_e_monomials(cfg, &d, t);
            if es.is_empty() {
                continue;
            }
            let cols = enumerate_f_monomials(cfg, &d, -t)?;
            let rows = es
                .par_iter()
                .map(|m| {
                    Ok(GramRow {
                        label: m.to_string(),
                        element: build_e_pbwd(cfg.n, m)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            pending.push(PendingBlock {
                degree: d.clone(),
                total_mode: t,
                rows,
                cols,
            });
        }
    }
    for x in extra_rows {
        if x.element.rank() != cfg.n {
            return Err(Error::RankMismatch {
                left: x.element.rank(),
                right: cfg.n,
            });
        }
        let t = x
            .element
            .mode()
            .ok_or_else(|| Error::Precondition(format!("row {} is not mode-homogeneous", x.label)))?;
        let d = x.element.degree();
        match pending.iter_mut().find(|b| &b.degree == d && b.total_mode == t) {
            Some(b) => b.rows.push(x.clone()),
            None => pending.push(PendingBlock {
                degree: d.clone(),
                total_mode: t,
                rows: vec![x.clone()],
                cols: enumerate_f_monomials(cfg, d, -t)?,
            }),
        }
    }

    let mut blocks = Vec::with_capacity(pending.len());
    let mut summary = GramSummary::default();
    for b in pending {
        let elems: Vec<ShuffleElement> = b.rows.iter().map(|r| r.element.clone()).collect();
        let rows_good = elems
            .par_iter()
            .map(|x| is_good(x).map(|g| g.good))
            .collect::<Result<Vec<bool>>>()?;
        let entries = block_entries(&elems, &b.cols)?;
        let verdicts: Vec<Vec<bool>> = entries
            .iter()
            .map(|row| row.iter().map(RatV::is_laurent_polynomial).collect())
            .collect();
        summary.non_good_rows += rows_good.iter().filter(|g| !**g).count();
        for (i, row) in verdicts.iter().enumerate() {
            for (j, ok) in row.iter().enumerate() {
                summary.checked += 1;
                if !ok {
                    summary.violations += 1;
                    if summary.first_violation.is_none() {
                        summary.first_violation =
                            Some(format!("phi({}, {}) = {}", b.rows[i].label, b.cols[j], entries[i][j]));
                    }
                }
            }
        }
        blocks.push(GramBlock {
            degree: b.degree.0,
            total_mode: b.total_mode,
            rows: b.rows.into_iter().map(|r| r.label).collect(),
            cols: b.cols.iter().map(ToString::to_string).collect(),
            rows_good,
            entries,
            verdicts,
        });
    }
    Ok(GramReport {
        config: ReportConfig {
            window: cfg.clone(),
            note: HEADER,
        },
        blocks,
        summary,
    })
}
