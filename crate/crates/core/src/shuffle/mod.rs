//! The shuffle algebra: symmetric rational functions in colored variables with
//! the zeta-twisted product, wheel conditions and images of PBWD generators.

mod element;
mod generators;
mod product;
mod relations;
mod roots;
mod wheel;

pub use element::{pole_factors, vandermonde_factors, ShuffleElement};
pub use generators::{
    build_e_pbwd, divided_power, e_root, e_tilde, gen_e, qbracket, qbracket_with, EFactor, EPBWDMonomial,
};
pub use product::{star, star_all, star_symmetrized, star_with};
pub use relations::{check_relations, RelationReport};
pub use roots::{Decomposition, Root, RootSystemData, Zeta};
pub use wheel::{find_wheel_violation, wheel_check, WheelViolation};
