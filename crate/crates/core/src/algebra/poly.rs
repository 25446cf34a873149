use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::rat::{primitive_integer_vector, rat, to_f64, Rat};

/// Dense univariate polynomial in `z` with exact rational coefficients.
///
/// `coeffs[i]` is the coefficient of `z^i`. The highest stored coefficient is
/// always nonzero; the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// `c * z^e`
    pub fn monomial(c: Rat, e: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); e + 1];
        coeffs[e] = c;
        Poly { coeffs }
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Order of vanishing at `z = 0`, `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Lowest-order nonzero coefficient.
    pub fn lowest_coeff(&self) -> Option<&Rat> {
        self.coeffs.iter().find(|c| !c.is_zero())
    }

    /// Sparse view: `(power, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + to_f64(c);
        }
        acc
    }

    /// `p(z^s)`.
    pub fn substitute_power(&self, s: usize) -> Poly {
        assert!(s >= 1, "substitution power must be positive");
        if s == 1 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rat::zero(); (self.coeffs.len() - 1) * s + 1];
        for (i, c) in self.terms() {
            coeffs[i * s] = c.clone();
        }
        Poly { coeffs }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `z^e`.
    pub fn shift_up(&self, e: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Division by `z^e`, discarding terms of lower order.
    pub fn shift_down(&self, e: usize) -> Poly {
        Poly::new(self.coeffs.iter().skip(e).cloned().collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            Some(l) => self.scale(&(Rat::one() / l)),
            None => Poly::zero(),
        }
    }

    /// Integer-primitive associate with positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = self.coeffs.clone();
        v.reverse();
        let mut v = primitive_integer_vector(&v);
        v.reverse();
        Poly::new(v)
    }

    pub fn max_degree(polys: &[Poly]) -> Option<usize> {
        polys.iter().filter_map(Poly::degree).max()
    }
}

impl From<Rat> for Poly {
    fn from(c: Rat) -> Self {
        Poly::constant(c)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        -&self
    }
}

/// Human-readable form such as `1 - z + 3/2*z^2`, ascending powers.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.terms() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (i, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => {}
                (_, false) => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_frac;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-5i64..=5, 0..6).prop_map(|v| Poly::from_ints(&v))
    }

    #[test]
    fn substitute_power_examples() {
        let p = Poly::from_ints(&[1, -1]);
        assert_eq!(p.substitute_power(2), Poly::from_ints(&[1, 0, -1]));
        assert_eq!(p.substitute_power(1), p);
        let q = Poly::from_ints(&[1, 2, 1]);
        assert_eq!(
            q.substitute_power(3),
            Poly::from_ints(&[1, 0, 0, 2, 0, 0, 1])
        );
        assert_eq!(Poly::zero().substitute_power(4), Poly::zero());
    }

    #[test]
    fn degree_and_valuation() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::zero().valuation(), None);
        let p = Poly::from_ints(&[0, 0, 3, 1, 0, 0]);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.valuation(), Some(2));
        assert_eq!(p.coeffs().len(), 4);
    }

    #[test]
    fn division_and_gcd() {
        // (1 - z)(1 + z) = 1 - z^2
        let a = Poly::from_ints(&[1, 0, -1]);
        let b = Poly::from_ints(&[1, -1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Poly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(Poly::gcd(&a, &b), Poly::from_ints(&[-1, 1]));
        assert_eq!(Poly::gcd(&Poly::zero(), &Poly::zero()), Poly::zero());
    }

    #[test]
    fn display() {
        let p = Poly::new(vec![rat(1), rat(-1), rat_frac(3, 2)]);
        assert_eq!(p.to_string(), "1 - z + 3/2*z^2");
        assert_eq!(Poly::from_ints(&[0, -1]).to_string(), "-z");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    proptest! {
        #[test]
        fn substitution_composes(p in arb_poly(), s in 1usize..4, t in 1usize..4) {
            prop_assert_eq!(p.substitute_power(s).substitute_power(t), p.substitute_power(s * t));
        }

        #[test]
        fn div_rem_reassembles(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn exact_rational_arithmetic(an in -1000i64..1000, ad in 1i64..1000, bn in -1000i64..1000, bd in 1i64..1000) {
            let a = rat_frac(an, ad);
            let b = rat_frac(bn, bd);
            prop_assert_eq!((&a + &b) - &b, a);
        }
    }
}
