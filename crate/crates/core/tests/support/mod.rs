//! Independent oracles and generators shared by integration tests.
#![allow(dead_code)]

use mahler_core::algebra::{Poly, Rat, RationalFn};
use mahler_core::mahler::MahlerEquation;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rref(mut rows: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = Rat::one() / &rows[rank][c];
        for x in rows[rank].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// Kernel of the coefficient identities at `z^m`, `m < N + delta0`, over the
/// unknowns `f(0), ..., f(N-1)`.
pub fn brute_force_space(eq: &MahlerEquation, n: usize) -> Vec<Vec<Rat>> {
    let delta0 = eq.coeff(0).valuation().unwrap();
    let mut system = Vec::new();
    for m in 0..n + delta0 {
        let mut row = vec![Rat::zero(); n];
        for (j, a) in eq.coeffs().iter().enumerate() {
            let kj = eq.k().pow(j as u32);
            for (s, c) in a.coeffs().iter().enumerate() {
                if !c.is_zero() && s <= m && (m - s) % kj == 0 {
                    let idx = (m - s) / kj;
                    assert!(idx < n, "identity at z^{m} reaches f({idx})");
                    row[idx] += c;
                }
            }
        }
        system.push(row);
    }
    // nullspace from the RREF of the system
    let r = rref(system);
    let pivots: Vec<usize> = r
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()).unwrap())
        .collect();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); n];
        v[free] = Rat::one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, nonzero: bool) -> Poly {
    loop {
        let deg = rng.gen_range(0..=max_deg);
        let p = Poly::new((0..=deg).map(|_| Rat::from_integer(rng.gen_range(-3..=3).into())).collect());
        if !nonzero || !p.is_zero() {
            return p;
        }
    }
}

pub fn random_equation(rng: &mut ChaCha8Rng) -> MahlerEquation {
    let k = rng.gen_range(2..=3);
    let d = rng.gen_range(0..=2);
    let delta0 = rng.gen_range(0..=4);
    let g = loop {
        let g = random_poly(rng, 3, true);
        if !g.coeff(0).is_zero() {
            break g;
        }
    };
    let mut coeffs = vec![g.shift_up(delta0)];
    for j in 1..=d {
        coeffs.push(random_poly(rng, 3, j == d));
    }
    MahlerEquation::new(k, coeffs).unwrap()
}

/// Random `p / q` with `deg p, deg q <= 3`, `p != 0` and `q(0) != 0`,
/// reduced.
pub fn random_rational(rng: &mut ChaCha8Rng) -> RationalFn {
    loop {
        let p = random_poly(rng, 3, true);
        let q = random_poly(rng, 3, true);
        if q.coeff(0).is_zero() {
            continue;
        }
        let r = RationalFn::new(p, q).unwrap();
        if r.den().degree().unwrap_or(0) >= 1 {
            return r;
        }
    }
}

pub fn corpus_rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5241_5449)
}

/// Thue-Morse by the recursive definition `t(2n) = t(n)`,
/// `t(2n+1) = -t(n)`.
pub fn thue_morse_recursive(len: usize) -> Vec<i64> {
    let mut t = vec![1i64; len.max(1)];
    for n in 1..len {
        t[n] = if n % 2 == 0 { t[n / 2] } else { -t[n / 2] };
    }
    t.truncate(len);
    t
}
