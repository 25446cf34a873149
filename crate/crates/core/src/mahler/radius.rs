use num_complex::Complex64;
use serde::Serialize;

use super::MahlerEquation;
use crate::algebra::Poly;
use crate::analytic::polynomial_roots;

/// The root of `a_0(z) / z^delta0` that attains the bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootWitness {
    /// `a_0(z) / z^delta0`, whose roots are searched.
    #[serde(serialize_with = "crate::serialize_display")]
    pub factor: Poly,
    pub re: f64,
    pub im: f64,
}

impl RootWitness {
    pub fn root(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadiusBound {
    pub radius: f64,
    /// `None` when the bound is the unit radius from the root `z = 1` of
    /// `a_0(z)(z - 1)`.
    pub witness: Option<RootWitness>,
}

/// Lower bound `min(1, min |alpha|)` over nonzero roots `alpha` of `a_0`
/// for the radius of convergence of any power-series solution.
pub fn convergence_radius_bound(eq: &MahlerEquation) -> RadiusBound {
    let g = eq.gamma_data();
    let factor = eq.coeff(0).shift_down(g.delta0);
    let best = polynomial_roots(&factor)
        .into_iter()
        .map(|r| (r.norm(), r))
        .min_by(|a, b| a.0.total_cmp(&b.0));
    match best {
        Some((norm, r)) if norm < 1.0 => RadiusBound {
            radius: norm,
            witness: Some(RootWitness {
                factor,
                re: r.re,
                im: r.im,
            }),
        },
        _ => RadiusBound {
            radius: 1.0,
            witness: None,
        },
    }
}
