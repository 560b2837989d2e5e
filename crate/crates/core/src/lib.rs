//! Exact shuffle-algebra model of `U_v^>(L sl_n)`, the Lusztig-form membership
//! test, and the new Drinfeld pairing against PBWD monomials of the RTT form.

pub mod error;
pub mod exactalg;
pub mod harness;
pub mod pairing;
pub mod polyring;
pub mod shuffle;
pub mod special;

pub use error::{Error, Result};
