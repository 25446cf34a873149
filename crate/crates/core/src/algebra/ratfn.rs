use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::rat::Rat;
use super::series::TruncatedSeries;
use crate::{Error, Result};

/// Reduced quotient `num / den` of polynomials.
///
/// `gcd(num, den) = 1` and the lowest-order nonzero coefficient of `den` is 1,
/// so a rational function that is a power series has `den(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RationalFn::zero());
        }
        let g = Poly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = Rat::one() / den.lowest_coeff().expect("nonzero denominator");
        Ok(RationalFn {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn zero() -> Self {
        RationalFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        RationalFn::new(
            &self.num * &other.den + &other.num * &self.den,
            &self.den * &other.den,
        )
        .expect("product of nonzero denominators")
    }

    pub fn sub(&self, other: &RationalFn) -> RationalFn {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &other.num, &self.den * &other.den)
            .expect("product of nonzero denominators")
    }

    pub fn div(&self, other: &RationalFn) -> Result<RationalFn> {
        if other.is_zero() {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        RationalFn::new(&self.num * &other.den, &self.den * &other.num)
    }

    /// `r(z^s)`.
    pub fn substitute_power(&self, s: usize) -> RationalFn {
        RationalFn::new(self.num.substitute_power(s), self.den.substitute_power(s))
            .expect("substitution keeps the denominator nonzero")
    }

    /// Unique power series `g` with `den * g = num (mod z^order)`.
    pub fn series(&self, order: usize) -> Result<TruncatedSeries> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::NotAPowerSeries);
        }
        let inv0 = Rat::one() / &d0;
        let mut out: Vec<Rat> = Vec::with_capacity(order);
        for n in 0..order {
            let mut acc = self.num.coeff(n);
            for (j, c) in self.den.terms().filter(|&(j, _)| j >= 1 && j <= n) {
                acc -= c * &out[n - j];
            }
            out.push(acc * &inv0);
        }
        Ok(TruncatedSeries::new(out))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.num.eval_complex(z) / self.den.eval_complex(z)
    }

    /// Clears denominators of a list of rational functions, returning the
    /// common denominator and the numerators over it.
    pub fn common_denominator(list: &[RationalFn]) -> (Poly, Vec<Poly>) {
        let mut lcm = Poly::one();
        for r in list {
            let g = Poly::gcd(&lcm, &r.den);
            let (q, _) = r.den.div_rem(&g);
            lcm = &lcm * &q;
        }
        let nums = list
            .iter()
            .map(|r| {
                let (q, rem) = lcm.div_rem(&r.den);
                debug_assert!(rem.is_zero());
                &r.num * &q
            })
            .collect();
        (lcm, nums)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Default for RationalFn {
    fn default() -> Self {
        RationalFn::zero()
    }
}

impl From<Poly> for RationalFn {
    fn from(p: Poly) -> Self {
        RationalFn::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn rf(n: &[i64], d: &[i64]) -> RationalFn {
        RationalFn::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn geometric_expansion() {
        let s = rf(&[1], &[1, -1]).series(5).unwrap();
        assert_eq!(s, TruncatedSeries::from_ints(&[1; 5]));
    }

    #[test]
    fn polynomial_expansion() {
        let s = rf(&[1, -1], &[1]).series(3).unwrap();
        assert_eq!(s, TruncatedSeries::from_ints(&[1, -1, 0]));
    }

    #[test]
    fn square_denominator_by_long_division() {
        // Long-division oracle: 1/(1-z)^2 has coefficients n+1.
        let r = rf(&[1], &[1, -2, 1]);
        let s = r.series(4).unwrap();
        let mut rem = [rat(1), rat(0), rat(0), rat(0), rat(0), rat(0)];
        let den = [rat(1), rat(-2), rat(1)];
        let mut quot = Vec::new();
        for i in 0..4 {
            let q = rem[i].clone();
            for (j, d) in den.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot.push(q);
        }
        assert_eq!(s.coeffs(), &quot[..]);
        assert_eq!(s, TruncatedSeries::from_ints(&[1, 2, 3, 4]));
    }

    #[test]
    fn pole_at_zero() {
        assert_eq!(rf(&[1], &[0, 1]).series(3), Err(Error::NotAPowerSeries));
        // common factor z cancels
        assert!(rf(&[0, 1], &[0, 1, -1]).series(3).is_ok());
    }

    #[test]
    fn normalisation() {
        let r = rf(&[2, 2], &[2, 0, -2]);
        assert_eq!(r.num(), &Poly::from_ints(&[1]));
        assert_eq!(r.den(), &Poly::from_ints(&[1, -1]));
        assert!(RationalFn::new(Poly::one(), Poly::zero()).is_err());
        let z = rf(&[0], &[0, 3]);
        assert_eq!(z, RationalFn::zero());
    }

    #[test]
    fn common_denominator_clears() {
        let a = rf(&[1], &[1, -1]);
        let b = rf(&[1], &[1, 0, -1]);
        let (d, nums) = RationalFn::common_denominator(&[a, b]);
        assert_eq!(d.degree(), Some(2));
        assert_eq!(nums[1].degree(), Some(0));
    }
}
