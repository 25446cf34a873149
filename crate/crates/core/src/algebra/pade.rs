use num_traits::Zero;

use super::matrix::Echelon;
use super::poly::Poly;
use super::ratfn::RationalFn;
use super::rat::Rat;
use super::series::TruncatedSeries;
use crate::{Error, Result};

/// Padé reconstruction: `p / q` with `deg p <= p_deg`, `deg q <= q_deg` and
/// `q f = p (mod z^order)`.
///
/// The homogeneous system in the coefficients of `(p, q)` is solved exactly;
/// among the nullspace basis vectors the one with the smallest `deg q` (then
/// `deg p`) is taken, reduced, and accepted only if its expansion reproduces
/// `f` to full order.
pub fn pade(f: &TruncatedSeries, p_deg: usize, q_deg: usize) -> Result<Option<RationalFn>> {
    let n = f.order();
    let needed = p_deg + q_deg + 2;
    if n < needed {
        return Err(Error::InsufficientOrder { needed, got: n });
    }
    // unknowns: p_0..p_{p_deg}, q_0..q_{q_deg}
    let np = p_deg + 1;
    let cols = np + q_deg + 1;
    let mut ech = Echelon::new(cols);
    for m in 0..n {
        let mut row = vec![Rat::zero(); cols];
        if m <= p_deg {
            row[m] = Rat::from_integer((-1).into());
        }
        for s in 0..=q_deg.min(m) {
            row[np + s] = f.coeff(m - s).clone();
        }
        ech.insert(row);
        if ech.is_full() {
            return Ok(None);
        }
    }
    let degree_of = |v: &[Rat]| v.iter().rposition(|x| !x.is_zero());
    let mut basis = ech.nullspace();
    basis.sort_by_key(|v| (degree_of(&v[np..]), degree_of(&v[..np])));
    for v in basis {
        let q = Poly::new(v[np..].to_vec());
        if q.is_zero() {
            continue;
        }
        let p = Poly::new(v[..np].to_vec());
        let cand = RationalFn::new(p, q)?;
        match cand.series(n) {
            Ok(s) if &s == f => return Ok(Some(cand)),
            _ => continue,
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regular::thue_morse;

    #[test]
    fn geometric() {
        let f = TruncatedSeries::from_ints(&[1; 10]);
        let r = pade(&f, 1, 1).unwrap().unwrap();
        assert_eq!(r.num(), &Poly::one());
        assert_eq!(r.den(), &Poly::from_ints(&[1, -1]));
    }

    #[test]
    fn thue_morse_has_no_small_approximant() {
        let f = TruncatedSeries::from_ints(&(0..64).map(thue_morse).collect::<Vec<_>>());
        assert_eq!(pade(&f, 5, 5).unwrap(), None);
    }

    #[test]
    fn one_plus_z_over_one_minus_z() {
        let target =
            RationalFn::new(Poly::from_ints(&[1, 1]), Poly::from_ints(&[1, -1])).unwrap();
        let f = target.series(10).unwrap();
        // oracle expansion: 1, 2, 2, 2, ...
        let mut expect = vec![2i64; 10];
        expect[0] = 1;
        assert_eq!(f, TruncatedSeries::from_ints(&expect));
        assert_eq!(pade(&f, 2, 2).unwrap(), Some(target));
    }

    #[test]
    fn insufficient_order() {
        let f = TruncatedSeries::from_ints(&[1; 5]);
        assert!(matches!(pade(&f, 2, 2), Err(Error::InsufficientOrder { .. })));
    }

    #[test]
    fn zero_series_reconstructs_zero() {
        let f = TruncatedSeries::zero(8);
        assert_eq!(pade(&f, 2, 2).unwrap(), Some(RationalFn::zero()));
    }
}
