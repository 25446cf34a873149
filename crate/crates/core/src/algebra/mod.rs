//! Exact arithmetic over the rationals.

mod matrix;
mod pade;
mod poly;
mod rat;
mod ratfn;
mod series;

pub use matrix::{nullspace, Echelon, RatMatrix};
pub use pade::pade;
pub use poly::Poly;
pub use rat::{bit_height, parse_rat, primitive_integer_vector, rat, rat_frac, to_f64, Rat};
pub use ratfn::RationalFn;
pub use series::TruncatedSeries;
