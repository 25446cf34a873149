//! Truncated solutions by recursion on the coefficient identities.
//!
//! Write `delta0 = ord_z a_0` and `rho` for the coefficient of `z^delta0` in
//! `a_0`. The coefficient of `z^(n + delta0)` in the equation reads
//! `rho f(n) + (terms in f(m), m < n)` as soon as `n >= B` with
//! `B = floor(delta0 / (k - 1)) + 1`, so `f(0..B)` are the only free values.
//! The identities at `z^m`, `m < B + delta0`, constrain those free values.
//!
//! A length-`N` prefix is a truncated solution when every identity at
//! `z^m`, `m < N + delta0`, holds; these are exactly the identities that only
//! involve `f(0..N)` (for `N >= B`). Such a prefix has a vanishing residual
//! modulo `z^N`.

use num_traits::{One, Zero};

use super::MahlerEquation;
use crate::algebra::{Echelon, Rat, RatMatrix, TruncatedSeries};
use crate::{Error, Result};

/// `sum_j a_j(z) f(z^(k^j))` truncated to `f.order()`.
pub fn residual(eq: &MahlerEquation, f: &TruncatedSeries) -> TruncatedSeries {
    let mut acc = TruncatedSeries::zero(f.order());
    for (j, a) in eq.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let term = f.substitute_power(eq.power(j)).mul_poly(a);
        acc = acc.add(&term);
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verification {
    Pass,
    /// Least index with a nonzero residual coefficient.
    FailsAt(usize),
}

impl Verification {
    pub fn passed(self) -> bool {
        self == Verification::Pass
    }
}

pub fn verify(eq: &MahlerEquation, f: &TruncatedSeries) -> Verification {
    match residual(eq, f).valuation() {
        None => Verification::Pass,
        Some(i) => Verification::FailsAt(i),
    }
}

/// Each `f(n)` as a linear form in the free values `f(0..B)`, together with
/// the constraint rows on those free values.
struct LinearForms {
    forms: Vec<Vec<Rat>>,
    constraints: Vec<(usize, Vec<Rat>)>,
}

/// Nonzero contributions `(n, c)` of `c * f(n)` to the coefficient of `z^m`.
fn identity_terms(eq: &MahlerEquation, m: usize) -> Vec<(usize, usize, usize, Rat)> {
    let mut out = Vec::new();
    for (j, a) in eq.coeffs().iter().enumerate() {
        let kj = eq.power(j);
        for (s, c) in a.terms() {
            if s > m {
                break;
            }
            if (m - s).is_multiple_of(kj) {
                out.push(((m - s) / kj, j, s, c.clone()));
            }
        }
    }
    out
}

fn linear_forms(eq: &MahlerEquation, order: usize) -> LinearForms {
    let g = eq.gamma_data();
    let free = eq.prefix_bound();
    let order = order.max(free);
    let rho_inv = Rat::one() / &g.rho;

    let combine = |forms: &[Vec<Rat>], terms: &[(usize, usize, usize, Rat)], skip_pivot: bool| {
        let mut acc = vec![Rat::zero(); free];
        for (n, j, s, c) in terms {
            if skip_pivot && *j == 0 && *s == g.delta0 {
                continue;
            }
            for (x, y) in acc.iter_mut().zip(&forms[*n]) {
                if !y.is_zero() {
                    *x += c * y;
                }
            }
        }
        acc
    };

    let mut forms: Vec<Vec<Rat>> = Vec::with_capacity(order);
    for n in 0..free {
        let mut e = vec![Rat::zero(); free];
        e[n] = Rat::one();
        forms.push(e);
    }
    for n in free..order {
        let terms = identity_terms(eq, n + g.delta0);
        debug_assert!(terms
            .iter()
            .all(|(i, j, s, _)| *i < n || (*j == 0 && *s == g.delta0)));
        let acc = combine(&forms, &terms, true);
        forms.push(acc.into_iter().map(|x| -x * &rho_inv).collect());
    }
    let constraints = (0..free + g.delta0)
        .map(|m| (m, combine(&forms, &identity_terms(eq, m), false)))
        .filter(|(_, row)| row.iter().any(|x| !x.is_zero()))
        .collect();
    LinearForms { forms, constraints }
}

fn evaluate(forms: &[Vec<Rat>], x: &[Rat], order: usize) -> Vec<Rat> {
    forms[..order]
        .iter()
        .map(|form| {
            let mut acc = Rat::zero();
            for (a, b) in form.iter().zip(x) {
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        })
        .collect()
}

/// Basis of the truncated solutions of order `order`, in reduced echelon
/// form on the coefficients (each basis element has a leading coefficient
/// 1 at an index where the others vanish).
pub fn solution_space(eq: &MahlerEquation, order: usize) -> Vec<TruncatedSeries> {
    if order == 0 {
        return Vec::new();
    }
    let lf = linear_forms(eq, order);
    let free = eq.prefix_bound();
    let rows: Vec<Vec<Rat>> = lf.constraints.iter().map(|(_, r)| r.clone()).collect();
    let kernel = crate::algebra::nullspace(&RatMatrix::from_rows(rows, free));
    let mut ech = Echelon::new(order);
    for x in &kernel {
        ech.insert(evaluate(&lf.forms, x, order));
    }
    ech.basis_rows()
        .map(|r| TruncatedSeries::new(r.to_vec()))
        .collect()
}

/// The unique truncated solution of order `order` starting with `prefix`.
///
/// The prefix must cover the `B` free coefficients; any further prefix
/// entries are checked against the recursion.
pub fn expand(eq: &MahlerEquation, prefix: &[Rat], order: usize) -> Result<TruncatedSeries> {
    let free = eq.prefix_bound();
    if prefix.len() < free {
        return Err(Error::PrefixTooShort {
            needed: free,
            got: prefix.len(),
        });
    }
    let delta0 = eq.gamma_data().delta0;
    let work = order.max(prefix.len());
    let lf = linear_forms(eq, work);
    let x = &prefix[..free];
    for (m, row) in &lf.constraints {
        let v: Rat = row.iter().zip(x).map(|(a, b)| a * b).sum();
        if !v.is_zero() {
            return Err(Error::InconsistentPrefix { index: *m });
        }
    }
    let values = evaluate(&lf.forms, x, work);
    for (n, (p, v)) in prefix.iter().zip(&values).enumerate().skip(free) {
        if p != v {
            return Err(Error::InconsistentPrefix { index: n + delta0 });
        }
    }
    let mut values = values;
    values.truncate(order);
    Ok(TruncatedSeries::new(values))
}
