//! Exact scalars: rationals, Laurent polynomials in `v`, and the field `Q(v)`.

mod json;
mod laurent;
mod qnum;
mod ratv;

pub use laurent::LaurentV;
pub use qnum::{divides_power, is_laurent_polynomial, qfact, qint};
pub use ratv::RatV;

/// Arbitrary-precision rational with positive denominator in lowest terms.
pub type Rational = num_rational::BigRational;
