//! Order reduction in the space `sum_i Q(z) F(z^(k^i))`.
//!
//! With a relation of order `d`, `F(z^(k^n))` for `n >= d` is rewritten by
//! substituting `z -> z^(k^(n-d))` in the relation and solving for its top
//! term, so every combination collapses onto `F(z), .., F(z^(k^(d-1)))`.

use super::{guess_equation, guess_order_requirement, solution_space, MahlerEquation};
use crate::algebra::{RationalFn, TruncatedSeries};
use crate::{Error, Result};

/// Rewrites `sum_i rel[i] F(z^(k^i))` as `sum_{i<d} c_i F(z^(k^i))` using
/// `minimal` (of order `d`). Relations of length at most `d` are returned
/// unchanged, padded with zeros to length `d`.
pub fn reduce_relation(minimal: &MahlerEquation, rel: &[RationalFn]) -> Vec<RationalFn> {
    let d = minimal.order();
    let mut c: Vec<RationalFn> = rel.to_vec();
    if c.len() < d {
        c.resize(d, RationalFn::zero());
    }
    let a: Vec<RationalFn> = minimal
        .coeffs()
        .iter()
        .map(|p| RationalFn::from_poly(p.clone()))
        .collect();
    while c.len() > d {
        let n = c.len() - 1;
        let q = c.pop().expect("nonempty");
        if q.is_zero() {
            continue;
        }
        let shift = minimal.power(n - d);
        let top = a[d].substitute_power(shift);
        for i in 0..d {
            let ratio = a[i]
                .substitute_power(shift)
                .div(&top)
                .expect("a_d is nonzero");
            c[n - d + i] = c[n - d + i].sub(&q.mul(&ratio));
        }
    }
    c
}

/// `L(z) * sum_i coeffs[i](z) f(z^(k^i)) (mod z^order)` where `L` is the
/// common denominator of `coeffs`; zero iff the relation holds on `f` to
/// this order.
pub fn apply_relation(k: usize, coeffs: &[RationalFn], f: &TruncatedSeries) -> TruncatedSeries {
    let (_, nums) = RationalFn::common_denominator(coeffs);
    let mut acc = TruncatedSeries::zero(f.order());
    let mut power = 1usize;
    for p in &nums {
        if !p.is_zero() {
            acc = acc.add(&f.substitute_power(power).mul_poly(p));
        }
        power = power.saturating_mul(k);
    }
    acc
}

/// Smallest order relation found for the distinguished solution of `eq`.
///
/// The distinguished solution is the first basis element of
/// [`solution_space`] at `order`. Orders `1..d` are tried with coefficient
/// degree caps `D, 2D, 4D, 8D` (`D` the maximum degree of `eq`, at least 1);
/// caps that need more than `order` coefficients are skipped. Returns `eq`
/// unchanged when nothing smaller verifies. This certifies minimality only at
/// the searched bounds.
pub fn minimize(eq: &MahlerEquation, order: usize) -> Result<MahlerEquation> {
    if eq.order() <= 1 {
        return Ok(eq.clone());
    }
    let basis = solution_space(eq, order);
    let Some(f) = basis.first() else {
        return Err(Error::InvalidArgument(
            "equation has no nonzero truncated solution".into(),
        ));
    };
    let base = eq.max_degree().max(1);
    let schedule = [base, 2 * base, 4 * base, 8 * base];
    let needed = guess_order_requirement(1, base);
    if order < needed {
        return Err(Error::InsufficientOrder { needed, got: order });
    }
    for d in 1..eq.order() {
        for &cap in &schedule {
            if guess_order_requirement(d, cap) > order {
                break;
            }
            if let Some(found) = guess_equation(f, eq.k(), d, cap)? {
                return Ok(found);
            }
        }
    }
    Ok(eq.clone())
}
