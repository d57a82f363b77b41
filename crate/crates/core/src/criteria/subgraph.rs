//! Exhaustive verifier for the general subgraph join condition.
//!
//! For `S_H ⊆ S` define `c'` on `S_H` by
//! `c'_∅ = ½ Σ c_pqr + Σ c_pq`, `c'_pq = -c_pq + ½ Σ_{r ∈ S_H} c_pqr`, `c'_pqr = -2 c_pqr`
//! (all sums inside `S_H`). If `max φ_{c'} = 0` over partitions of `S_H` and the
//! negative boundary of `S_H` dominates every inner cut of `S_H` separating `i`
//! from `j`, then `x_ij = 1` in some optimal solution. No efficient search for
//! such `S_H` is known; this module only verifies a given one by enumeration.

use crate::core::{
    enumerate_partitions_bounded, evaluate_objective, pairs, triples, CostFunction,
    DEFAULT_ORACLE_BOUND,
};
use crate::error::{Error, Result};
use crate::maps::ElementSubset;

/// Outcome of [`check_general_subgraph_join_oracle`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubgraphVerdict {
    /// `max φ_{c'} = 0` over the partitions of `S_H`.
    pub max_phi_zero: bool,
    /// Every inner cut separating `i` from `j` is dominated by the negative boundary.
    pub cuts_dominated: bool,
}

impl SubgraphVerdict {
    pub fn holds(&self) -> bool {
        self.max_phi_zero && self.cuts_dominated
    }
}

/// The cost function `c'` on `S_H`, with element `k` standing for `members[k]`.
pub fn subgraph_cost(c: &CostFunction, members: &[usize]) -> CostFunction {
    let inner = c.restrict(members, 0.0);
    let m = members.len();
    let mut out = CostFunction::zeros(m);
    let mut constant = 0.0;
    for (p, q, r) in triples(m) {
        let v = inner.triple(p, q, r);
        out.set_triple(p, q, r, -2.0 * v);
        constant += 0.5 * v;
    }
    for (p, q) in pairs(m) {
        let v = inner.pair(p, q);
        let half: f64 = (0..m)
            .filter(|&r| r != p && r != q)
            .map(|r| 0.5 * inner.triple(p, q, r))
            .sum();
        out.set_pair(p, q, -v + half);
        constant += v;
    }
    out.set_constant(constant);
    out
}

/// Brute-force check of both premises for `S_H = s_h` and the pair `ij`.
pub fn check_general_subgraph_join_oracle(
    c: &CostFunction,
    s_h: &ElementSubset,
    i: usize,
    j: usize,
) -> Result<SubgraphVerdict> {
    let members = s_h.members();
    if !(s_h.contains(i) && s_h.contains(j)) || i == j {
        return Err(Error::InvalidArgument("i and j must be distinct members of S_H".into()));
    }
    let m = members.len();
    if m > DEFAULT_ORACLE_BOUND {
        return Err(Error::OracleBound {
            n: m,
            bound: DEFAULT_ORACLE_BOUND,
        });
    }
    let cp = subgraph_cost(c, &members);
    let scale = 1.0
        + cp.pair_costs().iter().map(|v| v.abs()).sum::<f64>()
        + cp.triple_costs().iter().map(|v| v.abs()).sum::<f64>()
        + cp.constant().abs();
    let mut max_phi = f64::NEG_INFINITY;
    for part in enumerate_partitions_bounded(m, DEFAULT_ORACLE_BOUND)? {
        max_phi = max_phi.max(evaluate_objective(&cp, &part.to_labeling())?);
    }
    // φ_{c'} of the single block is 0 in exact arithmetic.
    let max_phi_zero = max_phi <= 1e-12 * scale;

    let n = c.n();
    let mut bound = 0.0;
    for (p, q) in pairs(n) {
        if s_h.crosses(p, q) {
            bound += c.pair(p, q).min(0.0);
        }
    }
    for (p, q, r) in s_h.boundary_triples() {
        bound += c.triple(p, q, r).min(0.0);
    }
    let inner = c.restrict(&members, 0.0);
    let li = members.iter().position(|&p| p == i).unwrap();
    let lj = members.iter().position(|&p| p == j).unwrap();
    let mut cuts_dominated = true;
    for mask in 0u32..(1 << m) {
        let in_r: Vec<bool> = (0..m).map(|k| mask >> k & 1 == 1).collect();
        if !in_r[li] || in_r[lj] {
            continue;
        }
        let mut cut = 0.0;
        for (p, q) in pairs(m) {
            if in_r[p] != in_r[q] {
                cut += inner.pair(p, q);
            }
        }
        for (p, q, r) in triples(m) {
            let k = in_r[p] as u8 + in_r[q] as u8 + in_r[r] as u8;
            if k == 1 || k == 2 {
                cut += inner.triple(p, q, r);
            }
        }
        if bound < cut {
            cuts_dominated = false;
            break;
        }
    }
    Ok(SubgraphVerdict {
        max_phi_zero,
        cuts_dominated,
    })
}
