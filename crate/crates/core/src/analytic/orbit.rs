//! Predicted accumulation of non-polar singularities on the unit circle.
//!
//! A non-polar singularity at `e^(i theta)` forces one at
//! `e^(i theta k^(j - d))` for some `j in 0..d`; iterating drives the angle
//! to 0. Which `j` occurs is not determined, so besides a fixed-choice path
//! the full tree of choices can be generated.

use std::f64::consts::TAU;

use serde::Serialize;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbitPolicy {
    /// Always take the same `j`.
    Fixed(usize),
    /// Every `j` at every step, keeping at most `width` nodes per level.
    AllPaths { width: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularOrbit {
    pub k: usize,
    pub d: usize,
    pub angles: Vec<f64>,
    /// `j_choices[n]` produced `angles[n + 1]`.
    pub j_choices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitNode {
    pub angle: f64,
    /// Index into the previous level.
    pub parent: Option<usize>,
    pub j: Option<usize>,
    /// Total exponent `e` with `angle = theta0 / k^e`.
    pub exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrbitTree {
    pub k: usize,
    pub d: usize,
    pub theta0: f64,
    pub levels: Vec<Vec<OrbitNode>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Orbit {
    Path(SingularOrbit),
    Tree(OrbitTree),
}

fn check(theta0: f64, k: usize, d: usize) -> Result<()> {
    if !(theta0 > 0.0 && theta0 <= TAU) {
        return Err(Error::InvalidArgument(format!(
            "initial angle {theta0} outside (0, 2pi]"
        )));
    }
    if k < 2 || d < 1 {
        return Err(Error::InvalidArgument("need k >= 2 and d >= 1".into()));
    }
    Ok(())
}

fn angle(theta0: f64, k: usize, exponent: u32) -> f64 {
    theta0 / (k as f64).powi(exponent as i32)
}

/// Orbit of `steps` angles starting at `theta0` (included).
pub fn singular_orbit(
    theta0: f64,
    k: usize,
    d: usize,
    steps: usize,
    policy: OrbitPolicy,
) -> Result<Orbit> {
    check(theta0, k, d)?;
    match policy {
        OrbitPolicy::Fixed(j) => {
            if j >= d {
                return Err(Error::InvalidArgument(format!("j = {j} not below d = {d}")));
            }
            let drop = (d - j) as u32;
            let angles = (0..steps as u32).map(|n| angle(theta0, k, n * drop)).collect();
            Ok(Orbit::Path(SingularOrbit {
                k,
                d,
                angles,
                j_choices: vec![j; steps.saturating_sub(1)],
            }))
        }
        OrbitPolicy::AllPaths { width } => Ok(Orbit::Tree(orbit_tree(theta0, k, d, steps, width)?)),
    }
}

pub fn orbit_tree(theta0: f64, k: usize, d: usize, steps: usize, width: usize) -> Result<OrbitTree> {
    check(theta0, k, d)?;
    let mut levels: Vec<Vec<OrbitNode>> = Vec::new();
    if steps == 0 {
        return Ok(OrbitTree { k, d, theta0, levels });
    }
    levels.push(vec![OrbitNode {
        angle: theta0,
        parent: None,
        j: None,
        exponent: 0,
    }]);
    for _ in 1..steps {
        let prev = levels.last().unwrap();
        let mut next = Vec::new();
        'fill: for (pi, node) in prev.iter().enumerate() {
            for j in 0..d {
                if next.len() >= width {
                    break 'fill;
                }
                let exponent = node.exponent + (d - j) as u32;
                next.push(OrbitNode {
                    angle: angle(theta0, k, exponent),
                    parent: Some(pi),
                    j: Some(j),
                    exponent,
                });
            }
        }
        levels.push(next);
    }
    Ok(OrbitTree { k, d, theta0, levels })
}
