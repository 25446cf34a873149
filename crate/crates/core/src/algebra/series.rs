use num_traits::{One, Zero};

use super::poly::Poly;
use super::rat::{rat, Rat};

/// Power series known modulo `z^order`.
///
/// The coefficient vector always has exactly `order` entries; operations
/// never produce coefficients at or beyond the truncation order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    /// Series whose order is the length of `coeffs`.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        TruncatedSeries::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rat::zero(); order],
        }
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..order).map(|i| p.coeff(i)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rat {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        assert!(order <= self.order(), "cannot extend a truncated series");
        TruncatedSeries::new(self.coeffs[..order].to_vec())
    }

    /// The truncated series read as a polynomial.
    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    /// `f(z^s)` to the same order.
    pub fn substitute_power(&self, s: usize) -> TruncatedSeries {
        assert!(s >= 1, "substitution power must be positive");
        let n = self.order();
        let mut coeffs = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            match i.checked_mul(s) {
                Some(j) if j < n => coeffs[j] = c.clone(),
                _ => break,
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn mul_poly(&self, p: &Poly) -> TruncatedSeries {
        let n = self.order();
        let mut coeffs = vec![Rat::zero(); n];
        for (s, c) in p.terms() {
            if s >= n {
                break;
            }
            for (i, x) in self.coeffs[..n - s].iter().enumerate() {
                if !x.is_zero() {
                    coeffs[i + s] += c * x;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(other.order());
        let mut coeffs = vec![Rat::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(other.order());
        TruncatedSeries::new((0..n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect())
    }

    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(other.order());
        TruncatedSeries::new((0..n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect())
    }

    pub fn scale(&self, c: &Rat) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> TruncatedSeries {
        TruncatedSeries::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Multiplicative inverse, `None` when the constant term vanishes.
    pub fn inverse(&self) -> Option<TruncatedSeries> {
        let n = self.order();
        let c0 = self.coeffs.first()?;
        if c0.is_zero() {
            return None;
        }
        let inv0 = Rat::one() / c0;
        let mut out: Vec<Rat> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for i in 1..n {
            let mut acc = Rat::zero();
            for j in 1..=i {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[i - j];
                }
            }
            out.push(-acc * &inv0);
        }
        Some(TruncatedSeries { coeffs: out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn substitute_power_examples() {
        let geo = TruncatedSeries::from_ints(&[1; 6]);
        assert_eq!(
            geo.substitute_power(2),
            TruncatedSeries::from_ints(&[1, 0, 1, 0, 1, 0])
        );
        assert_eq!(geo.substitute_power(1), geo);
        let tm = TruncatedSeries::from_ints(&[1, -1, -1, 1]);
        assert_eq!(
            tm.substitute_power(2),
            TruncatedSeries::from_ints(&[1, 0, -1, 0])
        );
    }

    #[test]
    fn inverse_of_one_minus_z() {
        let s = TruncatedSeries::from_ints(&[1, -1, 0, 0, 0]);
        assert_eq!(s.inverse().unwrap(), TruncatedSeries::from_ints(&[1; 5]));
        assert!(TruncatedSeries::from_ints(&[0, 1]).inverse().is_none());
    }

    #[test]
    fn derivative_drops_order() {
        let s = TruncatedSeries::from_ints(&[5, 1, 1, 1]);
        assert_eq!(s.derivative(), TruncatedSeries::from_ints(&[1, 2, 3]));
    }

    #[test]
    fn products_respect_order() {
        let a = TruncatedSeries::from_ints(&[1, 1, 1, 1]);
        let b = TruncatedSeries::from_ints(&[1, -1, 0]);
        assert_eq!(a.mul(&b), TruncatedSeries::from_ints(&[1, 0, 0]));
        let p = Poly::from_ints(&[1, -1]);
        assert_eq!(a.mul_poly(&p), TruncatedSeries::from_ints(&[1, 0, 0, 0]));
    }
}
