//! The pairing of shuffle elements with ordered monomials in the rescaled
//! negative root currents, evaluated by closed-form orientation sums and
//! exact coefficient extraction.

mod extract;
mod keyspec;
mod monomial;
mod series;
mod words;

pub use extract::{extract_coefficient, extract_truncated, extract_truncated_stable};
pub use keyspec::{key_specialization_check, key_specialization_rhs, KeySpecReport};
pub use monomial::FPBWDMonomial;
pub use series::{
    base_pair, oriented_zeta_inv, pair, pairing_series, DirectedFactor, FSeriesSpec, GroupVar, Orientation,
    PairingExpression,
};
pub use words::{bracket_expand_f, pair_via_words, pair_word, Word};
