//! Exact-arithmetic toolkit for k-Mahler functional equations
//!
//! ```text
//! a_0(z) F(z) + a_1(z) F(z^k) + ... + a_d(z) F(z^(k^d)) = 0,    a_0 a_d != 0
//! ```
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: exact rationals, dense polynomials, truncated power series,
//!   rational functions, nullspaces and Padé reconstruction.
//! - [`mahler`]: equations, truncated solution spaces, verification, ansatz
//!   guessing and order reduction.
//! - [`dichotomy`]: rationality certificates, D-finite guessing and the
//!   rational/transcendental cross-check.
//! - [`regular`]: k-kernels, automaticity and k-regular linear representations.
//! - [`structure`]: the `F = H / prod Gamma(z^(k^j))` decomposition.
//! - [`analytic`]: floating-point evaluation inside the unit disk, singular
//!   orbits and radial profiles.

pub mod algebra;
pub mod analytic;
pub mod dichotomy;
mod error;
pub mod mahler;
pub mod regular;
pub mod structure;

pub use error::{Error, Result};

pub(crate) fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub(crate) fn serialize_display_list<T: std::fmt::Display, S: serde::Serializer>(
    v: &[T],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}
