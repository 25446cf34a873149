use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{to_f64, TruncatedSeries};
use crate::{Error, Result};

/// `r e^(i theta)` with `0 <= r < 1`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DiskPoint {
    r: f64,
    theta: f64,
}

impl DiskPoint {
    pub fn new(r: f64, theta: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::InvalidArgument(format!(
                "modulus {r} outside [0, 1)"
            )));
        }
        if !theta.is_finite() {
            return Err(Error::InvalidArgument("non-finite angle".into()));
        }
        Ok(DiskPoint {
            r,
            theta: theta.rem_euclid(TAU),
        })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(self.r, self.theta)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DiskValue {
    pub re: f64,
    pub im: f64,
    /// `C r^N / (1 - r)` with `C` the largest coefficient modulus among the
    /// last quarter of the known coefficients.
    pub tail_bound: f64,
    /// Floating-point error estimate for the Horner evaluation.
    pub rounding_bound: f64,
}

impl DiskValue {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn abs(&self) -> f64 {
        self.value().norm()
    }

    pub fn error_bound(&self) -> f64 {
        self.tail_bound + self.rounding_bound
    }
}

/// Coefficients converted once to `f64` for repeated evaluation.
#[derive(Clone, Debug)]
pub struct FloatSeries {
    coeffs: Vec<f64>,
    tail_coeff: f64,
}

impl FloatSeries {
    pub fn new(f: &TruncatedSeries) -> Result<Self> {
        let n = f.order();
        if n < 8 {
            return Err(Error::InsufficientOrder { needed: 8, got: n });
        }
        let coeffs: Vec<f64> = f.coeffs().iter().map(to_f64).collect();
        let tail_coeff = coeffs[n - n / 4..]
            .iter()
            .fold(0.0f64, |m, c| m.max(c.abs()));
        Ok(FloatSeries { coeffs, tail_coeff })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn eval(&self, p: DiskPoint) -> DiskValue {
        let z = p.to_complex();
        let r = p.r();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut abs_sum = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
            abs_sum = abs_sum * r + c.abs();
        }
        let n = self.coeffs.len() as f64;
        let u = f64::EPSILON / 2.0;
        let gamma = (4.0 * n + 2.0) * u / (1.0 - (4.0 * n + 2.0) * u);
        DiskValue {
            re: acc.re,
            im: acc.im,
            tail_bound: self.tail_coeff * r.powf(n) / (1.0 - r),
            rounding_bound: gamma * abs_sum,
        }
    }
}

/// Horner evaluation of the truncated series at a disk point.
pub fn eval_disk(f: &TruncatedSeries, p: DiskPoint) -> Result<DiskValue> {
    Ok(FloatSeries::new(f)?.eval(p))
}
