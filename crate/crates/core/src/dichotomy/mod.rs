//! Rationality certificates and the rational/D-finite cross-check.
//!
//! A Mahler function is either rational or transcendental, and a D-finite
//! Mahler function is rational. A finite computation can prove rationality
//! (by an exact polynomial identity) but can only collect evidence against
//! it, so the verdicts here never claim transcendence.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{pade, Echelon, Poly, RationalFn, Rat, TruncatedSeries};
use crate::mahler::{verify, MahlerEquation};
use crate::serialize_display;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalCertificate {
    #[serde(serialize_with = "serialize_display")]
    pub candidate: RationalFn,
    /// Largest degree among the terms of the cleared-denominator identity.
    pub identity_degree: usize,
}

impl RationalCertificate {
    /// Re-checks the exact identity; true iff it holds.
    pub fn check(&self, eq: &MahlerEquation) -> bool {
        certificate_identity(eq, &self.candidate).0.is_zero()
    }
}

/// `sum_j a_j(z) p(z^(k^j)) prod_{i != j} q(z^(k^i))` for `p / q`, together
/// with the largest degree of its summands. The polynomial vanishes
/// identically iff `p / q` solves the equation.
pub fn certificate_identity(eq: &MahlerEquation, r: &RationalFn) -> (Poly, usize) {
    let d = eq.order();
    let ps: Vec<Poly> = (0..=d).map(|j| r.num().substitute_power(eq.power(j))).collect();
    let qs: Vec<Poly> = (0..=d).map(|j| r.den().substitute_power(eq.power(j))).collect();
    let mut total = Poly::zero();
    let mut max_deg = 0;
    for (j, a) in eq.coeffs().iter().enumerate() {
        let mut term = a * &ps[j];
        for (i, q) in qs.iter().enumerate() {
            if i != j {
                term = &term * q;
            }
        }
        max_deg = max_deg.max(term.degree().unwrap_or(0));
        total = &total + &term;
    }
    (total, max_deg)
}

fn require_solution(eq: &MahlerEquation, f: &TruncatedSeries) -> Result<()> {
    if verify(eq, f).passed() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(
            "series does not satisfy the equation".into(),
        ))
    }
}

/// Padé reconstruction at `(deg_bound, deg_bound)` followed by the exact
/// certificate identity.
pub fn rational_reconstruct(
    eq: &MahlerEquation,
    f: &TruncatedSeries,
    deg_bound: usize,
) -> Result<Option<RationalCertificate>> {
    let needed = 2 * deg_bound + 2;
    if f.order() < needed {
        return Err(Error::InsufficientOrder {
            needed,
            got: f.order(),
        });
    }
    require_solution(eq, f)?;
    let Some(candidate) = pade(f, deg_bound, deg_bound)? else {
        return Ok(None);
    };
    let (identity, identity_degree) = certificate_identity(eq, &candidate);
    if !identity.is_zero() {
        return Ok(None);
    }
    Ok(Some(RationalCertificate {
        candidate,
        identity_degree,
    }))
}

/// `sum_i p_i(z) f^(i)(z) = 0` holding to `verified_order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OdeCandidate {
    #[serde(serialize_with = "crate::serialize_display_list")]
    pub coeffs: Vec<Poly>,
    pub verified_order: usize,
}

impl OdeCandidate {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `sum_i p_i f^(i)` at the common order `f.order() - m`.
    pub fn residual(&self, f: &TruncatedSeries) -> TruncatedSeries {
        let m = self.order();
        let n = f.order().saturating_sub(m);
        let mut acc = TruncatedSeries::zero(n);
        let mut der = f.clone();
        for p in &self.coeffs {
            acc = acc.add(&der.truncate(n).mul_poly(p));
            if der.order() > 0 {
                der = der.derivative();
            }
        }
        acc
    }
}

/// Minimum order accepted by [`dfinite_guess`].
pub fn dfinite_order_requirement(m_max: usize, deg_max: usize) -> usize {
    (m_max + 1) * (deg_max + 1) + 2 * deg_max + 8
}

fn ode_ansatz(derivs: &[TruncatedSeries], m: usize, deg: usize) -> Echelon {
    let width = deg + 1;
    let cols = (m + 1) * width;
    let n = derivs[0].order() - m;
    let mut ech = Echelon::new(cols);
    for t in 0..n {
        let mut row = vec![Rat::zero(); cols];
        for (i, g) in derivs[..=m].iter().enumerate() {
            for s in 0..=deg.min(t) {
                row[i * width + s] = g.coeff(t - s).clone();
            }
        }
        ech.insert(row);
        if ech.is_full() {
            break;
        }
    }
    ech
}

/// Hermite-Padé style search for a linear ODE with polynomial coefficients,
/// smallest order first, then smallest degree.
pub fn dfinite_guess(
    f: &TruncatedSeries,
    m_max: usize,
    deg_max: usize,
) -> Result<Option<OdeCandidate>> {
    let needed = dfinite_order_requirement(m_max, deg_max);
    if f.order() < needed {
        return Err(Error::InsufficientOrder {
            needed,
            got: f.order(),
        });
    }
    if m_max == 0 {
        return Ok(None);
    }
    let mut derivs = vec![f.clone()];
    for _ in 0..m_max {
        let next = derivs.last().unwrap().derivative();
        derivs.push(next);
    }
    if ode_ansatz(&derivs, m_max, deg_max).is_full() {
        return Ok(None);
    }
    for m in 1..=m_max {
        for deg in 0..=deg_max {
            let basis = ode_ansatz(&derivs, m, deg).nullspace();
            let width = deg + 1;
            let top_nonzero = |v: &Vec<Rat>| v[m * width..].iter().any(|x| !x.is_zero());
            for v in basis.iter().filter(|v| top_nonzero(v)) {
                let coeffs: Vec<Poly> = (0..=m)
                    .map(|i| Poly::new(v[i * width..(i + 1) * width].to_vec()))
                    .collect();
                let cand = OdeCandidate {
                    coeffs,
                    verified_order: f.order() - m,
                };
                if cand.residual(f).is_zero() {
                    return Ok(Some(cand));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    pub rational_deg: usize,
    pub ode_order: usize,
    pub ode_deg: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Classification {
    Rational { certificate: RationalCertificate },
    NoRationalAtBounds { bounds: SearchBounds },
    /// A D-finite candidate without a rational reconstruction. Signals that
    /// the series order or the bounds are too small; it is a diagnostic.
    DichotomyViolation {
        candidate: OdeCandidate,
        bounds: SearchBounds,
    },
}

pub fn classify(
    eq: &MahlerEquation,
    f: &TruncatedSeries,
    bounds: SearchBounds,
) -> Result<Classification> {
    if let Some(certificate) = rational_reconstruct(eq, f, bounds.rational_deg)? {
        return Ok(Classification::Rational { certificate });
    }
    if let Some(candidate) = dfinite_guess(f, bounds.ode_order, bounds.ode_deg)? {
        if candidate.residual(f).is_zero() {
            return Ok(Classification::DichotomyViolation { candidate, bounds });
        }
    }
    Ok(Classification::NoRationalAtBounds { bounds })
}
