use std::fmt::Write;

use serde::Serialize;

use super::eval::{DiskPoint, FloatSeries};
use crate::algebra::TruncatedSeries;
use crate::{Error, Result};

/// Largest radius evaluated without a flag, `1 - 2^-10`.
pub const MAX_RADIUS: f64 = 1.0 - 1.0 / 1024.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ProfileRow {
    pub theta: f64,
    pub r: f64,
    pub abs_value: f64,
    pub tail_bound: f64,
    /// Set when the error estimate exceeds 10% of the value or `r` is above
    /// [`MAX_RADIUS`].
    pub flagged: bool,
}

pub fn default_radii() -> Vec<f64> {
    vec![0.5, 0.75, 0.9, 0.95, 0.99, 0.995, 0.999]
}

/// `|f(r e^(i theta))|` along a ray, radii sorted ascending.
pub fn radial_profile(f: &TruncatedSeries, theta: f64, radii: &[f64]) -> Result<Vec<ProfileRow>> {
    profile_with(&FloatSeries::new(f)?, theta, radii)
}

pub(crate) fn profile_with(fs: &FloatSeries, theta: f64, radii: &[f64]) -> Result<Vec<ProfileRow>> {
    let mut radii = radii.to_vec();
    if radii.iter().any(|r| r.is_nan()) {
        return Err(Error::InvalidArgument("NaN radius".into()));
    }
    radii.sort_by(f64::total_cmp);
    radii.dedup();
    radii
        .into_iter()
        .map(|r| {
            let v = fs.eval(DiskPoint::new(r, theta)?);
            let abs_value = v.abs();
            Ok(ProfileRow {
                theta,
                r,
                abs_value,
                tail_bound: v.tail_bound,
                flagged: r > MAX_RADIUS || v.error_bound() > 0.1 * abs_value,
            })
        })
        .collect()
}

/// CSV with columns `theta,r,abs_value,tail_bound,flagged`.
pub fn profile_csv(rows: &[ProfileRow]) -> String {
    let mut out = String::from("theta,r,abs_value,tail_bound,flagged\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{:e},{:e},{}",
            row.theta, row.r, row.abs_value, row.tail_bound, row.flagged
        );
    }
    out
}
