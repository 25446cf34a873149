use num_traits::{One, Zero};

use super::kernel::extract;
use super::{digits_lsd, SequencePrefix};
use crate::algebra::{nullspace, Echelon, Rat, RatMatrix};
use crate::{Error, Result};

/// `f(n) = u A_{n_0} A_{n_1} ... A_{n_{l-1}} v` with `n_0` the least
/// significant base-k digit of `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRepresentation {
    pub digit_matrices: Vec<RatMatrix>,
    pub u: Vec<Rat>,
    pub v: Vec<Rat>,
}

impl LinearRepresentation {
    pub fn rank(&self) -> usize {
        self.u.len()
    }

    pub fn k(&self) -> usize {
        self.digit_matrices.len()
    }

    pub fn evaluate(&self, n: u64) -> Rat {
        let mut row = self.u.clone();
        for digit in digits_lsd(n, self.k()) {
            row = self.digit_matrices[digit].vec_mul(&row);
        }
        row.iter().zip(&self.v).map(|(a, b)| a * b).sum()
    }
}

/// Coordinates of `target` in the independent family `basis`.
fn coordinates(basis: &[Vec<Rat>], target: &[Rat]) -> Option<Vec<Rat>> {
    let m = basis.len();
    let rows: Vec<Vec<Rat>> = (0..target.len())
        .map(|i| {
            let mut row: Vec<Rat> = basis.iter().map(|b| b[i].clone()).collect();
            row.push(-target[i].clone());
            row
        })
        .collect();
    let ns = nullspace(&RatMatrix::from_rows(rows, m + 1));
    let v = ns.into_iter().find(|v| !v[m].is_zero())?;
    let scale = Rat::one() / &v[m];
    Some(v[..m].iter().map(|x| x * &scale).collect())
}

/// Linear representation read off the kernel up to `depth`, compared on the
/// first `cmp_len` values.
///
/// The basis is the first independent kernel sequences in level-then-residue
/// order. The span must already be reached below level `depth`, so that each
/// basis element's children are kernel sequences in range; otherwise, or if
/// a child leaves the span, the result is [`Error::NotClosed`].
pub fn linear_representation(
    s: &SequencePrefix,
    depth: usize,
    cmp_len: usize,
) -> Result<LinearRepresentation> {
    let k = s.k();
    if cmp_len == 0 || cmp_len.saturating_mul(s.k_pow(depth)) > s.len() {
        return Err(Error::PrefixTooShort {
            needed: cmp_len.max(1).saturating_mul(s.k_pow(depth)),
            got: s.len(),
        });
    }
    let cut = |level: usize, residue: usize| {
        let mut v = extract(s, level, residue);
        v.truncate(cmp_len);
        v
    };
    let mut ech = Echelon::new(cmp_len);
    let mut basis: Vec<(usize, usize, Vec<Rat>)> = Vec::new();
    for level in 0..=depth {
        for residue in 0..s.k_pow(level) {
            let v = cut(level, residue);
            if ech.insert(v.clone()) {
                if level == depth {
                    return Err(Error::NotClosed(format!(
                        "kernel span still growing at level {depth}"
                    )));
                }
                basis.push((level, residue, v));
            }
        }
    }
    let vectors: Vec<Vec<Rat>> = basis.iter().map(|(_, _, v)| v.clone()).collect();
    let m = vectors.len();
    let mut digit_matrices = vec![RatMatrix::zeros(m, m); k];
    for (i, (level, residue, _)) in basis.iter().enumerate() {
        for (j, mat) in digit_matrices.iter_mut().enumerate() {
            let child = cut(level + 1, residue + j * s.k_pow(*level));
            let x = coordinates(&vectors, &child).ok_or_else(|| {
                Error::NotClosed(format!(
                    "child {j} of kernel sequence l{level}r{residue} outside the span"
                ))
            })?;
            for (t, xt) in x.into_iter().enumerate() {
                mat.set(i, t, xt);
            }
        }
    }
    let u = if m == 0 {
        Vec::new()
    } else {
        coordinates(&vectors, &cut(0, 0)).expect("f is in its own kernel span")
    };
    let v: Vec<Rat> = vectors.iter().map(|b| b[0].clone()).collect();
    let rep = LinearRepresentation {
        digit_matrices,
        u,
        v,
    };
    for n in 0..cmp_len {
        let got = if m == 0 { Rat::zero() } else { rep.evaluate(n as u64) };
        if got != s.values()[n] {
            return Err(Error::NotClosed(format!(
                "representation fails to reproduce f({n})"
            )));
        }
    }
    Ok(rep)
}
