use num_traits::Zero;

use super::{verify, MahlerEquation};
use crate::algebra::{rat, Echelon, Poly, Rat, TruncatedSeries};
use crate::{Error, Result};

/// Minimum series order accepted by [`guess_equation`]:
/// `(d_max + 1)(deg_max + 1) + 2 deg_max + 8`.
pub fn guess_order_requirement(d_max: usize, deg_max: usize) -> usize {
    (d_max + 1) * (deg_max + 1) + 2 * deg_max + 8
}

/// Row-reduced ansatz system for `sum_{j <= d} a_j(z) f(z^(k^j)) = 0` with
/// `deg a_j <= deg`. Unknown `(j, s)` sits in column `j (deg + 1) + s`.
fn ansatz(subs: &[TruncatedSeries], d: usize, deg: usize) -> Echelon {
    let width = deg + 1;
    let cols = (d + 1) * width;
    let n = subs[0].order();
    let mut ech = Echelon::new(cols);
    for m in 0..n {
        let mut row = vec![Rat::zero(); cols];
        for (j, g) in subs[..=d].iter().enumerate() {
            for s in 0..=deg.min(m) {
                row[j * width + s] = g.coeff(m - s).clone();
            }
        }
        ech.insert(row);
        if ech.is_full() {
            break;
        }
    }
    ech
}

fn to_equation(k: usize, v: &[Rat], d: usize, deg: usize) -> Option<MahlerEquation> {
    let width = deg + 1;
    let coeffs: Vec<Poly> = (0..=d)
        .map(|j| Poly::new(v[j * width..(j + 1) * width].to_vec()))
        .collect();
    MahlerEquation::new(k, coeffs).ok().map(|e| e.normalized())
}

/// Searches `d = 1..=d_max`, then `deg = 0..=deg_max`, for polynomials with
/// `sum_j a_j(z) f(z^(k^j)) = 0 (mod z^order)` and `a_0 a_d != 0`.
///
/// Every returned equation has been checked with [`verify`] at full order.
pub fn guess_equation(
    f: &TruncatedSeries,
    k: usize,
    d_max: usize,
    deg_max: usize,
) -> Result<Option<MahlerEquation>> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("radix {k} < 2")));
    }
    let needed = guess_order_requirement(d_max, deg_max);
    if f.order() < needed {
        return Err(Error::InsufficientOrder {
            needed,
            got: f.order(),
        });
    }
    if d_max == 0 {
        return Ok(None);
    }
    let mut subs = vec![f.clone()];
    for _ in 1..=d_max {
        let next = subs.last().unwrap().substitute_power(k);
        subs.push(next);
    }
    // every smaller ansatz is a coordinate subspace of the largest one
    if ansatz(&subs, d_max, deg_max).is_full() {
        return Ok(None);
    }
    for d in 1..=d_max {
        for deg in 0..=deg_max {
            let basis = ansatz(&subs, d, deg).nullspace();
            if basis.is_empty() {
                continue;
            }
            let mut candidates = basis.clone();
            if basis.len() > 1 {
                let mut mix = vec![Rat::zero(); basis[0].len()];
                for (w, v) in basis.iter().enumerate() {
                    let w = rat(w as i64 + 1);
                    for (x, y) in mix.iter_mut().zip(v) {
                        *x += &w * y;
                    }
                }
                candidates.push(mix);
            }
            for v in &candidates {
                if let Some(eq) = to_equation(k, v, d, deg) {
                    if verify(&eq, f).passed() {
                        return Ok(Some(eq));
                    }
                }
            }
        }
    }
    Ok(None)
}
