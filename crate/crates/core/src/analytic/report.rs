use std::f64::consts::TAU;

use serde::Serialize;

use super::eval::FloatSeries;
use super::orbit::{orbit_tree, OrbitTree};
use super::profile::{profile_with, ProfileRow};
use super::roots::polynomial_roots;
use crate::dichotomy::Classification;
use crate::mahler::MahlerEquation;
use crate::algebra::TruncatedSeries;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Pole {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
}

/// Descriptive output only; no verdict about natural boundaries is made.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundaryReport {
    /// The zero series.
    Empty,
    /// Roots of the certified denominator.
    Poles { poles: Vec<Pole> },
    /// Radial profiles at the angles `2 pi p / k^m` and the orbit trees
    /// rooted there.
    Profiles {
        grid_m: u32,
        angles: Vec<f64>,
        profiles: Vec<Vec<ProfileRow>>,
        orbits: Vec<OrbitTree>,
    },
}

/// `2 pi p / k^m` for `p = 0..k^m`.
pub fn root_of_unity_grid(k: usize, m: u32) -> Vec<f64> {
    let n = k.pow(m);
    (0..n).map(|p| TAU * p as f64 / n as f64).collect()
}

/// Orbit trees use the angle `2 pi` in place of 0, `orbit_steps` levels and
/// at most 64 nodes per level.
pub fn boundary_report(
    eq: &MahlerEquation,
    f: &TruncatedSeries,
    classification: &Classification,
    grid_m: u32,
    radii: &[f64],
    orbit_steps: usize,
) -> Result<BoundaryReport> {
    if f.is_zero() {
        return Ok(BoundaryReport::Empty);
    }
    if let Classification::Rational { certificate } = classification {
        let poles = polynomial_roots(certificate.candidate.den())
            .into_iter()
            .map(|z| Pole {
                re: z.re,
                im: z.im,
                modulus: z.norm(),
            })
            .collect();
        return Ok(BoundaryReport::Poles { poles });
    }
    let fs = FloatSeries::new(f)?;
    let angles = root_of_unity_grid(eq.k(), grid_m);
    let profiles = angles
        .iter()
        .map(|&t| profile_with(&fs, t, radii))
        .collect::<Result<Vec<_>>>()?;
    let orbits = if eq.order() == 0 {
        Vec::new()
    } else {
        angles
            .iter()
            .map(|&t| {
                let root = if t == 0.0 { TAU } else { t };
                orbit_tree(root, eq.k(), eq.order(), orbit_steps, 64)
            })
            .collect::<Result<Vec<_>>>()?
    };
    Ok(BoundaryReport::Profiles {
        grid_m,
        angles,
        profiles,
        orbits,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Poly};
    use crate::analytic::default_radii;
    use crate::dichotomy::{classify, SearchBounds};
    use crate::mahler::expand;

    const BOUNDS: SearchBounds = SearchBounds {
        rational_deg: 4,
        ode_order: 1,
        ode_deg: 2,
    };

    #[test]
    fn geometric_reports_pole_at_one() {
        let eq = MahlerEquation::new(
            2,
            vec![Poly::from_ints(&[-1, 1]), Poly::from_ints(&[1, 0, -1])],
        )
        .unwrap();
        let f = expand(&eq, &[rat(1)], 64).unwrap();
        let c = classify(&eq, &f, BOUNDS).unwrap();
        let BoundaryReport::Poles { poles } =
            boundary_report(&eq, &f, &c, 4, &default_radii(), 8).unwrap()
        else {
            panic!("expected poles");
        };
        assert_eq!(poles.len(), 1);
        assert!((poles[0].re - 1.0).abs() < 1e-12 && poles[0].im.abs() < 1e-12);
    }

    #[test]
    fn thue_morse_grid() {
        let eq = MahlerEquation::new(2, vec![Poly::one(), Poly::from_ints(&[-1, 1])]).unwrap();
        let f = expand(&eq, &[rat(1)], 1024).unwrap();
        let c = classify(&eq, &f, BOUNDS).unwrap();
        let r = boundary_report(&eq, &f, &c, 4, &[0.5, 0.9], 6).unwrap();
        let BoundaryReport::Profiles {
            angles,
            profiles,
            orbits,
            ..
        } = r
        else {
            panic!("expected profiles");
        };
        assert_eq!(angles.len(), 16);
        assert_eq!(profiles.len(), 16);
        assert_eq!(orbits.len(), 16);
        assert_eq!(orbits[0].theta0, TAU);
    }

    #[test]
    fn zero_series_is_empty() {
        let eq = MahlerEquation::new(2, vec![Poly::one(), Poly::from_ints(&[-1, 1])]).unwrap();
        let f = TruncatedSeries::zero(32);
        let c = classify(&eq, &f, BOUNDS).unwrap();
        assert_eq!(
            boundary_report(&eq, &f, &c, 4, &default_radii(), 8).unwrap(),
            BoundaryReport::Empty
        );
    }
}
