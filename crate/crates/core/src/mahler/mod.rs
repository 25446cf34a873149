//! Mahler functional equations
//!
//! ```text
//! a_0(z) F(z) + a_1(z) F(z^k) + ... + a_d(z) F(z^(k^d)) = 0
//! ```
//!
//! with polynomial coefficients over the rationals and `a_0 a_d != 0`.

mod guess;
mod radius;
mod reduce;
mod solve;

use std::fmt;

use num_traits::Signed;

use crate::algebra::{primitive_integer_vector, Poly, Rat};
use crate::{Error, Result};

pub use guess::{guess_equation, guess_order_requirement};
pub use radius::{convergence_radius_bound, RadiusBound, RootWitness};
pub use reduce::{apply_relation, minimize, reduce_relation};
pub use solve::{expand, residual, solution_space, verify, Verification};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MahlerEquation {
    k: usize,
    coeffs: Vec<Poly>,
}

/// Factorisation `a_0(z) = rho * z^delta0 * gamma(z)` with `gamma(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaData {
    pub rho: Rat,
    pub delta0: usize,
    pub gamma: Poly,
}

impl GammaData {
    pub fn reassemble(&self) -> Poly {
        self.gamma.scale(&self.rho).shift_up(self.delta0)
    }
}

impl MahlerEquation {
    /// `coeffs` holds `a_0 .. a_d`; the radix must be at least 2 and both end
    /// coefficients nonzero.
    pub fn new(k: usize, coeffs: Vec<Poly>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidEquation(format!("radix {k} < 2")));
        }
        match (coeffs.first(), coeffs.last()) {
            (Some(a0), Some(ad)) if !a0.is_zero() && !ad.is_zero() => {
                Ok(MahlerEquation { k, coeffs })
            }
            _ => Err(Error::InvalidEquation(
                "a_0 and a_d must both be nonzero".into(),
            )),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// The order `d`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Poly {
        &self.coeffs[j]
    }

    /// `k^j`, saturating.
    pub fn power(&self, j: usize) -> usize {
        (self.k as u64)
            .checked_pow(j as u32)
            .and_then(|v| usize::try_from(v).ok())
            .unwrap_or(usize::MAX)
    }

    pub fn gamma_data(&self) -> GammaData {
        let a0 = &self.coeffs[0];
        let delta0 = a0.valuation().expect("a_0 is nonzero");
        let rho = a0.coeff(delta0);
        let gamma = a0.shift_down(delta0).scale(&(Rat::from_integer(1.into()) / &rho));
        GammaData { rho, delta0, gamma }
    }

    /// Number of leading coefficients left free by the recursion:
    /// `floor(delta0 / (k - 1)) + 1`.
    pub fn prefix_bound(&self) -> usize {
        self.gamma_data().delta0 / (self.k - 1) + 1
    }

    /// Integer-primitive coefficients, lowest nonzero coefficient of `a_0`
    /// positive.
    pub fn normalized(&self) -> MahlerEquation {
        let widths: Vec<usize> = self.coeffs.iter().map(|p| p.coeffs().len()).collect();
        let flat: Vec<Rat> = self
            .coeffs
            .iter()
            .flat_map(|p| p.coeffs().iter().cloned())
            .collect();
        let mut flat = primitive_integer_vector(&flat);
        let lowest = self.coeffs[0].valuation().expect("a_0 is nonzero");
        if flat[lowest].is_negative() {
            for x in flat.iter_mut() {
                *x = -x.clone();
            }
        }
        let mut it = flat.into_iter();
        let coeffs = widths
            .into_iter()
            .map(|w| Poly::new(it.by_ref().take(w).collect()))
            .collect();
        MahlerEquation { k: self.k, coeffs }
    }

    /// Multiplies every coefficient by a nonzero polynomial.
    pub fn scaled_by(&self, c: &Poly) -> Result<MahlerEquation> {
        if c.is_zero() {
            return Err(Error::InvalidArgument("zero multiplier".into()));
        }
        MahlerEquation::new(self.k, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// True if the two equations differ by a nonzero rational factor.
    pub fn is_proportional_to(&self, other: &MahlerEquation) -> bool {
        self.k == other.k
            && self.coeffs.len() == other.coeffs.len()
            && self.normalized() == other.normalized()
    }

    pub fn max_degree(&self) -> usize {
        Poly::max_degree(&self.coeffs).unwrap_or(0)
    }
}

impl fmt::Display for MahlerEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({a})*F(z)")?,
                _ => write!(f, "({a})*F(z^{})", self.power(j))?,
            }
        }
        write!(f, " = 0")
    }
}
