//! Windowed verification suites: monomial enumeration, Gram matrices of the
//! pairing, the good-element criterion and the dual-basis structure.

mod dual;
mod enumerate;
mod good;
mod gram;
mod parse;
mod suites;
mod window;

pub use dual::{slope_cmp, verify_dual_bases, DualBasesReport, DualBlock, FactorOrder, Normalization};
pub use enumerate::{enumerate_e_monomials, enumerate_f_monomials};
pub use good::{divided_root_samples, find_witness, verify_good_criterion, GoodCriterionReport, GoodSampleResult};
pub use gram::{verify_duality, with_threads, GramBlock, GramReport, GramRow, GramSummary, ReportConfig};
pub use parse::{parse_e_monomial, parse_f_monomial};
pub use suites::{verify_key_specialization, verify_oracle, KeySpecSweep, OracleReport};
pub use window::{DecompStrategy, WindowConfig};
