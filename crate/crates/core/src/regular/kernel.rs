use serde::Serialize;

use super::SequencePrefix;
use crate::algebra::{Echelon, Rat};
use crate::{Error, Result};

/// The subsequence `n -> f(k^level n + residue)`, as far as the prefix
/// reaches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelElement {
    pub level: usize,
    pub residue: usize,
    pub values: Vec<Rat>,
}

pub(crate) fn extract(s: &SequencePrefix, level: usize, residue: usize) -> Vec<Rat> {
    let step = s.k_pow(level);
    s.values()
        .iter()
        .skip(residue)
        .step_by(step)
        .cloned()
        .collect()
}

fn too_short(s: &SequencePrefix, min: usize, levels: usize) -> Error {
    Error::PrefixTooShort {
        needed: min.saturating_mul(s.k_pow(levels)),
        got: s.len(),
    }
}

/// Distinct kernel sequences of level at most `depth`, compared on their
/// first `L / k^depth` values (at least 4). Each keeps the first `(l, r)`
/// witness in level-then-residue order.
pub fn kernel_elements(s: &SequencePrefix, depth: usize) -> Result<Vec<KernelElement>> {
    let cmp = s.len() / s.k_pow(depth);
    if cmp < 4 {
        return Err(too_short(s, 4, depth));
    }
    let mut out: Vec<KernelElement> = Vec::new();
    for level in 0..=depth {
        for residue in 0..s.k_pow(level) {
            let values = extract(s, level, residue);
            if !out.iter().any(|e| e.values[..cmp] == values[..cmp]) {
                out.push(KernelElement {
                    level,
                    residue,
                    values,
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "size")]
pub enum Automaticity {
    Closed(usize),
    NotClosedAtDepth,
}

/// Closure check: every child `n -> e(k n + j)` of every distinct kernel
/// element must coincide with a distinct element on the first
/// `L / k^(depth+1)` values (at least 2).
pub fn is_automatic_prefix(s: &SequencePrefix, depth: usize) -> Result<Automaticity> {
    let elements = kernel_elements(s, depth)?;
    let cmp = s.len() / s.k_pow(depth + 1);
    if cmp < 2 {
        return Err(too_short(s, 2, depth + 1));
    }
    let k = s.k();
    for e in &elements {
        for j in 0..k {
            let child = extract(s, e.level + 1, e.residue + j * s.k_pow(e.level));
            if !elements.iter().any(|o| o.values[..cmp] == child[..cmp]) {
                return Ok(Automaticity::NotClosedAtDepth);
            }
        }
    }
    Ok(Automaticity::Closed(elements.len()))
}

/// Rank over the rationals of all kernel sequences up to `depth`, each cut to
/// its first `cmp_len` values.
pub fn regular_rank(s: &SequencePrefix, depth: usize, cmp_len: usize) -> Result<usize> {
    if cmp_len.saturating_mul(s.k_pow(depth)) > s.len() {
        return Err(too_short(s, cmp_len, depth));
    }
    let mut ech = Echelon::new(cmp_len);
    for level in 0..=depth {
        for residue in 0..s.k_pow(level) {
            let mut v = extract(s, level, residue);
            v.truncate(cmp_len);
            ech.insert(v);
            if ech.is_full() {
                return Ok(ech.rank());
            }
        }
    }
    Ok(ech.rank())
}
