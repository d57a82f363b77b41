//! Witness searches by minimum cuts.
//!
//! A constrained boundary sum `min_{R ∋ i, R ∩ s0 = ∅} Σ_{T_δ(R)} t(c) + Σ_{δ(R)} t(c)`
//! is solved by folding triples onto pairs, writing the cut as a submodular
//! QPBO, normalizing it to a posiform and reading the minimum off an s-t cut.

pub mod flow;
pub mod fold;
pub mod global;
pub mod qpbo;

pub use flow::{min_st_cut, FlowNetwork, StCut, FLOW_EPS};
pub use fold::{boundary_cost, boundary_cost_of, fold_triples_into_pairs, PairWeights, Transform};
pub use global::{global_min_cut, GlobalCut};
pub use qpbo::{
    constrained_cut_to_qpbo, posiform_to_network, qpbo_to_posiform, Posiform, QpboInstance,
};

use crate::error::Result;

/// A minimizing subset for a constrained cut and the minimum value.
#[derive(Clone, Debug, PartialEq)]
pub struct CutWitness {
    pub value: f64,
    /// Sorted members of `R`; contains `i`, avoids `s0`.
    pub subset: Vec<usize>,
}

impl CutWitness {
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &p in &self.subset {
            m[p] = true;
        }
        m
    }
}

/// `min Σ_{pq ∈ δ(R)} w_pq` over `R ∋ i` with `R ∩ s0 = ∅`, with a minimizer.
pub fn constrained_min_cut(w: &PairWeights, i: usize, s0: &[usize]) -> Result<CutWitness> {
    let q = constrained_cut_to_qpbo(w, i, s0)?;
    let f = qpbo_to_posiform(&q);
    let net = posiform_to_network(&f)?;
    let cut = min_st_cut(&net);
    let mut subset: Vec<usize> = cut
        .source_side
        .iter()
        .filter(|&&v| v < f.vars.len())
        .map(|&v| f.vars[v])
        .collect();
    subset.push(i);
    subset.sort_unstable();
    Ok(CutWitness {
        value: cut.value + f.constant,
        subset,
    })
}
