//! Deterministic automaton with output, read most-significant digit first.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write;

use num_bigint::BigUint;

use super::{digits_lsd, LinearRepresentation};
use crate::algebra::Rat;
use crate::{Error, Result};

/// Upper bound on explored states before giving up.
const STATE_CAP: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomatonState {
    /// Length and value of the shortest (then smallest) digit string reaching
    /// this state.
    pub level: usize,
    pub residue: BigUint,
    pub output: Rat,
}

impl AutomatonState {
    pub fn label(&self) -> String {
        format!("l{}r{}", self.level, self.residue)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automaton {
    pub k: usize,
    /// State 0 is initial.
    pub states: Vec<AutomatonState>,
    /// `transitions[state][digit]`
    pub transitions: Vec<Vec<usize>>,
}

impl Automaton {
    /// Output after reading the base-k digits of `n`, most significant first.
    pub fn run(&self, n: u64) -> &Rat {
        let mut state = 0;
        for d in digits_lsd(n, self.k).into_iter().rev() {
            state = self.transitions[state][d];
        }
        &self.states[state].output
    }

    /// Graphviz digraph; node ids are the state labels and carry an
    /// `output` attribute, edges are labelled by digit.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph automaton {\n");
        out.push_str("  rankdir=LR;\n");
        out.push_str("  digit_order=\"msd\";\n");
        out.push_str("  start [shape=point];\n");
        for s in &self.states {
            let _ = writeln!(
                out,
                "  {0} [label=\"{0} / {1}\", output=\"{1}\"];",
                s.label(),
                s.output
            );
        }
        let _ = writeln!(out, "  start -> {};", self.states[0].label());
        for (i, row) in self.transitions.iter().enumerate() {
            for (digit, &t) in row.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  {} -> {} [label=\"{digit}\"];",
                    self.states[i].label(),
                    self.states[t].label()
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Breadth-first exploration of the vectors `A_w v` reachable from `v`.
///
/// Reading digit `j` maps the state vector `x` to `A_j x`, and the output of
/// `x` is `u x`, so the automaton computes `f(n)` from the most significant
/// digit down. Finitely many vectors means the sequence is automatic.
pub fn automaton_export(rep: &LinearRepresentation) -> Result<Automaton> {
    let k = rep.k();
    let output = |x: &[Rat]| -> Rat { rep.u.iter().zip(x).map(|(a, b)| a * b).sum() };
    let mut index: HashMap<Vec<Rat>, usize> = HashMap::new();
    let mut states = vec![AutomatonState {
        level: 0,
        residue: BigUint::default(),
        output: output(&rep.v),
    }];
    let mut vectors = vec![rep.v.clone()];
    index.insert(rep.v.clone(), 0);
    let mut transitions: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let mut row = Vec::with_capacity(k);
        for (j, a) in rep.digit_matrices.iter().enumerate() {
            let next = a.mul_vec(&vectors[i]);
            let t = match index.get(&next) {
                Some(&t) => t,
                None => {
                    if states.len() >= STATE_CAP {
                        return Err(Error::NotAutomatic(STATE_CAP));
                    }
                    let t = states.len();
                    states.push(AutomatonState {
                        level: states[i].level + 1,
                        residue: &states[i].residue * k + j,
                        output: output(&next),
                    });
                    index.insert(next.clone(), t);
                    vectors.push(next);
                    queue.push_back(t);
                    t
                }
            };
            row.push(t);
        }
        transitions.push(row);
    }
    Ok(Automaton {
        k,
        states,
        transitions,
    })
}
