//! Partial optimality conditions.
//!
//! Every checker returns the facts it certifies as [`Fixation`]s over the
//! elements of the instance it was given. Inequalities are evaluated with
//! plain float comparisons, equality admitted. Where a witness subset `R` is
//! found by a min cut, the right-hand side is re-evaluated on that `R` by
//! direct summation before the comparison.

mod checker;
mod separation;
mod subgraph;
mod subset_join;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::core::{index::sort3, Labeling};
use crate::error::Error;

pub use checker::{
    check_pair_subgraph_join, check_triple_subgraph_join, find_edge_cut, find_edge_join,
    find_triangle_edge_join, find_triplet_cut, find_triplet_join, Checker,
};
pub use separation::{check_subset_separation, region_growing};
pub use subgraph::{check_general_subgraph_join_oracle, subgraph_cost, SubgraphVerdict};
pub use subset_join::{check_subset_join, find_subset_join, subset_join_candidates};

/// Identifies a condition in reports and configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionId {
    SubsetSeparation,
    EdgeCut,
    TripletCut,
    EdgeJoin,
    TripletJoin,
    TriangleEdgeJoin,
    PairSubgraphJoin,
    TripleSubgraphJoin,
    SubsetJoin,
}

impl ConditionId {
    pub const ALL: [ConditionId; 9] = [
        ConditionId::SubsetSeparation,
        ConditionId::EdgeCut,
        ConditionId::TripletCut,
        ConditionId::EdgeJoin,
        ConditionId::TripletJoin,
        ConditionId::TriangleEdgeJoin,
        ConditionId::PairSubgraphJoin,
        ConditionId::TripleSubgraphJoin,
        ConditionId::SubsetJoin,
    ];

    /// Join conditions in the default schedule order.
    pub const JOIN_ORDER: [ConditionId; 6] = [
        ConditionId::SubsetJoin,
        ConditionId::EdgeJoin,
        ConditionId::TriangleEdgeJoin,
        ConditionId::PairSubgraphJoin,
        ConditionId::TripleSubgraphJoin,
        ConditionId::TripletJoin,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ConditionId::SubsetSeparation => "subset-separation",
            ConditionId::EdgeCut => "edge-cut",
            ConditionId::TripletCut => "triplet-cut",
            ConditionId::EdgeJoin => "edge-join",
            ConditionId::TripletJoin => "triplet-join",
            ConditionId::TriangleEdgeJoin => "triangle-edge-join",
            ConditionId::PairSubgraphJoin => "pair-subgraph-join",
            ConditionId::TripleSubgraphJoin => "triple-subgraph-join",
            ConditionId::SubsetJoin => "subset-join",
        }
    }

    pub fn is_join(self) -> bool {
        !matches!(
            self,
            ConditionId::SubsetSeparation | ConditionId::EdgeCut | ConditionId::TripletCut
        )
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConditionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ConditionId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown condition `{s}`")))
    }
}

/// What a fixation asserts about some optimal labeling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FixationKind {
    /// `x_pq = 0`, with `p < q`.
    PairZero(usize, usize),
    /// `x_pq = 1`, with `p < q`.
    PairOne(usize, usize),
    /// `x_pq x_pr x_qr = 0`, with `p < q < r`.
    TripleZero(usize, usize, usize),
    /// `x_pq x_pr x_qr = 1`, with `p < q < r`.
    TripleOne(usize, usize, usize),
    /// `x_pq = 0` for every `pq ∈ δ(R)`; `R` sorted.
    BlockCut(Vec<usize>),
}

impl FixationKind {
    pub fn pair_zero(p: usize, q: usize) -> Self {
        FixationKind::PairZero(p.min(q), p.max(q))
    }

    pub fn pair_one(p: usize, q: usize) -> Self {
        FixationKind::PairOne(p.min(q), p.max(q))
    }

    pub fn triple_zero(p: usize, q: usize, r: usize) -> Self {
        let [a, b, c] = sort3(p, q, r);
        FixationKind::TripleZero(a, b, c)
    }

    pub fn triple_one(p: usize, q: usize, r: usize) -> Self {
        let [a, b, c] = sort3(p, q, r);
        FixationKind::TripleOne(a, b, c)
    }

    pub fn is_cut(&self) -> bool {
        matches!(
            self,
            FixationKind::PairZero(..) | FixationKind::TripleZero(..) | FixationKind::BlockCut(_)
        )
    }

    /// Whether the feasible labeling `x` satisfies the fact.
    pub fn holds(&self, x: &Labeling) -> bool {
        match *self {
            FixationKind::PairZero(p, q) => !x.get(p, q),
            FixationKind::PairOne(p, q) => x.get(p, q),
            FixationKind::TripleZero(p, q, r) => !(x.get(p, q) && x.get(p, r) && x.get(q, r)),
            FixationKind::TripleOne(p, q, r) => x.get(p, q) && x.get(p, r) && x.get(q, r),
            FixationKind::BlockCut(ref r) => {
                let mut inside = vec![false; x.n()];
                for &p in r {
                    inside[p] = true;
                }
                crate::core::pairs(x.n()).all(|(p, q)| inside[p] == inside[q] || !x.get(p, q))
            }
        }
    }
}

/// A certified fact with the condition that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fixation {
    pub kind: FixationKind,
    /// Witness subsets used by the certificate, if any.
    pub witness: Option<Vec<Vec<usize>>>,
    pub condition: ConditionId,
}

impl Fixation {
    pub fn new(kind: FixationKind, condition: ConditionId) -> Self {
        Fixation {
            kind,
            witness: None,
            condition,
        }
    }

    pub fn with_witness(mut self, sets: Vec<Vec<usize>>) -> Self {
        self.witness = Some(sets);
        self
    }
}
