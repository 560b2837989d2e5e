//! Sparse multivariate Laurent polynomials in colored variables `x_{i,r}` over `Q(v)`.

mod json;
mod multi;
pub mod perm;
mod poly;

pub use multi::{ColorVar, DegreeVector, MultiLaurent};
pub use poly::{Exps, Poly};
