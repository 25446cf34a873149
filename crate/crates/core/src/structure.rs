//! Decomposition `F(z) = H(z) / prod_{j>=0} Gamma(z^(k^j))` where
//! `a_0(z) = rho z^delta0 Gamma(z)` and `Gamma(0) = 1`.
//!
//! `H` is expected to be k-regular; from a prefix this can only be supported
//! by rank evidence, which is what [`decompose`] records.

use crate::algebra::{Poly, TruncatedSeries};
use crate::mahler::{GammaData, MahlerEquation};
use crate::regular::{regular_rank, SequencePrefix};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub gamma_data: GammaData,
    pub product: TruncatedSeries,
    pub h: TruncatedSeries,
    pub rank_depth: usize,
    pub rank_cmp_len: usize,
    /// Rank of H's kernel at `rank_depth`, `None` when the order is too small
    /// to compute it.
    pub h_rank_evidence: Option<usize>,
}

pub fn gamma_of(eq: &MahlerEquation) -> GammaData {
    eq.gamma_data()
}

/// `prod_{j : k^j <= N} Gamma(z^(k^j)) mod z^N`; later factors are 1 modulo
/// `z^N` since `Gamma(z^(k^j)) - 1` has valuation at least `k^j`.
pub fn product_truncation(gamma: &Poly, k: usize, order: usize) -> TruncatedSeries {
    debug_assert!(gamma.coeff(0) == crate::algebra::rat(1), "Gamma(0) must be 1");
    let mut acc = TruncatedSeries::from_poly(&Poly::one(), order);
    if *gamma == Poly::one() {
        return acc;
    }
    let mut power = 1usize;
    while power <= order {
        acc = acc.mul_poly(&gamma.substitute_power(power));
        match power.checked_mul(k) {
            Some(p) => power = p,
            None => break,
        }
    }
    acc
}

/// Depth used for the rank evidence: `min(4, floor(log_k(order / 8)))`.
fn evidence_depth(k: usize, order: usize) -> usize {
    let mut depth = 0;
    let mut reach = 8usize;
    while depth < 4 {
        match reach.checked_mul(k) {
            Some(r) if r <= order => {
                reach = r;
                depth += 1;
            }
            _ => break,
        }
    }
    depth
}

pub fn decompose(eq: &MahlerEquation, f: &TruncatedSeries) -> Result<Decomposition> {
    let gamma_data = gamma_of(eq);
    let n = f.order();
    let product = product_truncation(&gamma_data.gamma, eq.k(), n);
    let h = f.mul(&product);
    let rank_depth = evidence_depth(eq.k(), n);
    let rank_cmp_len = n / eq.k().pow(rank_depth as u32);
    let h_rank_evidence = if rank_cmp_len == 0 {
        None
    } else {
        Some(regular_rank(
            &SequencePrefix::from_series(&h, eq.k())?,
            rank_depth,
            rank_cmp_len,
        )?)
    };
    Ok(Decomposition {
        gamma_data,
        product,
        h,
        rank_depth,
        rank_cmp_len,
        h_rank_evidence,
    })
}
