//! Pair and triple conditions for cuts and joins.

use super::{ConditionId, Fixation, FixationKind};
use crate::core::{neg, pair_index, pairs, pos, triples, CostFunction};
use crate::mincut::{
    boundary_cost_of, constrained_min_cut, fold_triples_into_pairs, PairWeights, Transform,
};

/// Condition checks on one instance, sharing the folded weights and global sums.
#[derive(Clone, Debug)]
pub struct Checker<'a> {
    c: &'a CostFunction,
    neg_w: PairWeights,
    abs_w: PairWeights,
    /// `Σ_r c_pqr⁻` per pair.
    triple_neg: Vec<f64>,
    /// `Σ c⁺` over all triples plus over all pairs.
    positive_total: f64,
}

impl<'a> Checker<'a> {
    pub fn new(c: &'a CostFunction) -> Self {
        let n = c.n();
        let mut triple_neg = vec![0.0; c.pair_costs().len()];
        for ((p, q, r), &v) in triples(n).zip(c.triple_costs()) {
            let m = neg(v);
            if m != 0.0 {
                triple_neg[pair_index(p, q)] += m;
                triple_neg[pair_index(p, r)] += m;
                triple_neg[pair_index(q, r)] += m;
            }
        }
        let positive_total = c.triple_costs().iter().map(|&v| pos(v)).sum::<f64>()
            + c.pair_costs().iter().map(|&v| pos(v)).sum::<f64>();
        Checker {
            c,
            neg_w: fold_triples_into_pairs(c, Transform::NegativePart),
            abs_w: fold_triples_into_pairs(c, Transform::Absolute),
            triple_neg,
            positive_total,
        }
    }

    pub fn cost(&self) -> &CostFunction {
        self.c
    }

    fn weights(&self, t: Transform) -> &PairWeights {
        match t {
            Transform::NegativePart => &self.neg_w,
            Transform::Absolute => &self.abs_w,
            Transform::Identity => unreachable!("no identity witness searches"),
        }
    }

    /// Some `R ∋ a` avoiding `s0` with `lhs >= Σ_{T_δ(R)} t(c) + Σ_{δ(R)} t(c)`.
    ///
    /// Tries `{a}` first, then a minimizer from the flow pipeline. The bound is
    /// recomputed on the candidate by direct summation before accepting it.
    fn witness(&self, t: Transform, lhs: f64, a: usize, s0: &[usize]) -> Option<Vec<usize>> {
        let w = self.weights(t);
        // Pairs between `a` and `s0` are cut by every admissible R.
        let floor: f64 = s0.iter().map(|&b| w.get(a, b)).sum();
        if lhs < floor - 1e-9 * (1.0 + floor) {
            return None;
        }
        if lhs >= boundary_cost_of(self.c, t, &[a]) {
            return Some(vec![a]);
        }
        let cut = constrained_min_cut(w, a, s0).ok()?;
        (lhs >= boundary_cost_of(self.c, t, &cut.subset)).then_some(cut.subset)
    }

    /// Cut: `x_ij = 0` if `c_ij⁺ >= min_R Σ_{T_δ(R)} c⁻ + Σ_{δ(R)} c⁻` over `R ∋ i`, `j ∉ R`.
    pub fn edge_cut(&self, i: usize, j: usize) -> Option<Fixation> {
        let lhs = pos(self.c.pair(i, j));
        let r = self.witness(Transform::NegativePart, lhs, i, &[j])?;
        Some(
            Fixation::new(FixationKind::pair_zero(i, j), ConditionId::EdgeCut)
                .with_witness(vec![r]),
        )
    }

    /// Cut: `x_ij x_ik x_jk = 0` if `c_ijk⁺ + c_ij⁺ + c_ik⁺` reaches the negative-part
    /// cut separating `i` from `j, k`. Each element is tried as the isolated one.
    pub fn triplet_cut(&self, i: usize, j: usize, k: usize) -> Option<Fixation> {
        let c = self.c;
        let t = pos(c.triple(i, j, k));
        for (a, b, d) in [(i, j, k), (j, k, i), (k, i, j)] {
            let lhs = t + pos(c.pair(a, b)) + pos(c.pair(a, d));
            if let Some(r) = self.witness(Transform::NegativePart, lhs, a, &[b, d]) {
                return Some(
                    Fixation::new(FixationKind::triple_zero(i, j, k), ConditionId::TripletCut)
                        .with_witness(vec![r]),
                );
            }
        }
        None
    }

    /// Join: `x_ij = 1` if `2c_ij⁻ + Σ_r c_ijr⁻` reaches the absolute-value cut
    /// separating `i` from `j`.
    pub fn edge_join(&self, i: usize, j: usize) -> Option<Fixation> {
        let lhs = 2.0 * neg(self.c.pair(i, j)) + self.triple_neg[pair_index(i, j)];
        let r = self.witness(Transform::Absolute, lhs, i, &[j])?;
        Some(
            Fixation::new(FixationKind::pair_one(i, j), ConditionId::EdgeJoin)
                .with_witness(vec![r]),
        )
    }

    /// Join: `x_ij x_ik x_jk = 1` if
    /// `2c_ijk⁻ + 2c_ij⁻ + 2c_ik⁻ + c_jk⁻ - Σ c⁺ + min(0, c_ij, c_ik, c_jk)`
    /// reaches the negative-part cut separating `i` from `j, k`. The positive sum runs
    /// over all pairs and triples of the instance. Each element is tried as `i`.
    pub fn triplet_join(&self, i: usize, j: usize, k: usize) -> Option<Fixation> {
        let c = self.c;
        let t = 2.0 * neg(c.triple(i, j, k));
        let inner = 0f64.min(c.pair(i, j)).min(c.pair(i, k)).min(c.pair(j, k));
        for (a, b, d) in [(i, j, k), (j, k, i), (k, i, j)] {
            let lhs = t + 2.0 * neg(c.pair(a, b)) + 2.0 * neg(c.pair(a, d)) + neg(c.pair(b, d))
                - self.positive_total
                + inner;
            if lhs < 0.0 {
                continue;
            }
            if let Some(r) = self.witness(Transform::NegativePart, lhs, a, &[b, d]) {
                return Some(
                    Fixation::new(FixationKind::triple_one(i, j, k), ConditionId::TripletJoin)
                        .with_witness(vec![r]),
                );
            }
        }
        None
    }

    /// Join of `ik` with `j` as the middle element; see [`Checker::triangle_edge_join`].
    fn triangle_edge_join_roles(&self, i: usize, j: usize, k: usize) -> Option<Fixation> {
        let c = self.c;
        // (3): direct sums over δ(ijk) and the triples meeting ijk in one element.
        let mut bound = 0.0;
        for x in 0..c.n() {
            if x == i || x == j || x == k {
                continue;
            }
            for a in [i, j, k] {
                bound += c.pair(a, x).min(0.0);
            }
        }
        for (x, y) in pairs(c.n()) {
            if [x, y].iter().any(|&z| z == i || z == j || z == k) {
                continue;
            }
            for a in [i, j, k] {
                bound += c.triple(a, x, y).min(0.0);
            }
        }
        let tijk = c.triple(i, j, k);
        if tijk + c.pair(i, j) + c.pair(i, k) + c.pair(j, k) > bound {
            return None;
        }
        // c_ijk⁻ plus the sum over triples containing ij or ik (ijk once) is the
        // plain sum of both per-pair triple sums.
        let lhs1 = 2.0 * neg(c.pair(i, j))
            + 2.0 * neg(c.pair(i, k))
            + self.triple_neg[pair_index(i, j)]
            + self.triple_neg[pair_index(i, k)];
        let r1 = self.witness(Transform::Absolute, lhs1, i, &[j, k])?;
        let lhs2 = 2.0 * neg(c.pair(j, k))
            + 2.0 * neg(c.pair(i, k))
            + self.triple_neg[pair_index(j, k)]
            + self.triple_neg[pair_index(i, k)];
        let r2 = self.witness(Transform::Absolute, lhs2, k, &[i, j])?;
        Some(
            Fixation::new(FixationKind::pair_one(i, k), ConditionId::TriangleEdgeJoin)
                .with_witness(vec![r1, r2]),
        )
    }

    /// Join of the pair `ik` for some role assignment of the triple, where `j` is the
    /// remaining element. Requires two absolute-value cut bounds and a direct bound on
    /// `c_ijk + c_ij + c_ik + c_jk`. Roles are tried as rotations of `(i, j, k)`.
    pub fn triangle_edge_join(&self, i: usize, j: usize, k: usize) -> Option<Fixation> {
        [(i, j, k), (j, k, i), (k, i, j)]
            .into_iter()
            .find_map(|(a, b, d)| self.triangle_edge_join_roles(a, b, d))
    }

    fn negative_boundary(&self, in_h: &[bool]) -> f64 {
        negative_boundary(self.c, in_h)
    }

    /// Join: `x_ij = 1` if `c_ij <= Σ_{δ(ij) ∩ P⁻} c + Σ_{T_δ(ij) ∩ T⁻} c`.
    pub fn pair_subgraph_join(&self, i: usize, j: usize) -> Option<Fixation> {
        let mut in_h = vec![false; self.c.n()];
        in_h[i] = true;
        in_h[j] = true;
        (self.c.pair(i, j) <= self.negative_boundary(&in_h)).then(|| {
            Fixation::new(FixationKind::pair_one(i, j), ConditionId::PairSubgraphJoin)
        })
    }

    /// Join of `ik` for the triangle `ijk` with middle element `j`: the seven
    /// inequalities on inner costs and the boundary bound `b`.
    fn triple_subgraph_roles(&self, i: usize, j: usize, k: usize, b: f64) -> bool {
        let c = self.c;
        let (cij, cik, cjk, t) = (c.pair(i, j), c.pair(i, k), c.pair(j, k), c.triple(i, j, k));
        cij + cik <= 0.0
            && cij + cjk <= 0.0
            && cik + cjk <= 0.0
            && cij + cik + cjk <= 0.0
            && cij + cik + cjk + 0.5 * t <= 0.0
            && cij + cik + t <= b
            && cjk + cik + t <= b
    }

    /// Join of a pair of the triangle `ijk` by the three-element subgraph rule.
    /// The middle element is tried as `j`, `k`, `i` in turn.
    pub fn triple_subgraph_join(&self, i: usize, j: usize, k: usize) -> Option<Fixation> {
        let c = self.c;
        let (cij, cik, cjk) = (c.pair(i, j), c.pair(i, k), c.pair(j, k));
        // The pair-sum conditions do not depend on roles.
        if cij + cik > 0.0 || cij + cjk > 0.0 || cik + cjk > 0.0 {
            return None;
        }
        let mut in_h = vec![false; c.n()];
        in_h[i] = true;
        in_h[j] = true;
        in_h[k] = true;
        let b = self.negative_boundary(&in_h);
        [(i, j, k), (j, k, i), (k, i, j)]
            .into_iter()
            .find(|&(a, m, d)| self.triple_subgraph_roles(a, m, d, b))
            .map(|(a, _, d)| {
                Fixation::new(FixationKind::pair_one(a, d), ConditionId::TripleSubgraphJoin)
            })
    }
}

/// `Σ_{δ(H)} c_pq` over negative pairs plus `Σ_{T_δ(H)} c_pqr` over negative triples,
/// for `H` given as a mask.
pub(crate) fn negative_boundary(c: &CostFunction, in_h: &[bool]) -> f64 {
    let n = c.n();
    let mut acc = 0.0;
    let members: Vec<usize> = (0..n).filter(|&p| in_h[p]).collect();
    for &a in &members {
        for x in 0..n {
            if !in_h[x] {
                acc += c.pair(a, x).min(0.0);
            }
        }
    }
    // Triples with one or two members in H, each counted once.
    for &a in &members {
        for x in 0..n {
            if x == a || (in_h[x] && x < a) {
                continue;
            }
            for y in x + 1..n {
                if y == a || (in_h[y] && y < a) || (in_h[x] && in_h[y]) {
                    continue;
                }
                acc += c.triple(a, x, y).min(0.0);
            }
        }
    }
    acc
}

/// See [`Checker::edge_cut`].
pub fn find_edge_cut(c: &CostFunction, i: usize, j: usize) -> Option<Fixation> {
    Checker::new(c).edge_cut(i, j)
}

/// See [`Checker::triplet_cut`].
pub fn find_triplet_cut(c: &CostFunction, i: usize, j: usize, k: usize) -> Option<Fixation> {
    Checker::new(c).triplet_cut(i, j, k)
}

/// See [`Checker::edge_join`].
pub fn find_edge_join(c: &CostFunction, i: usize, j: usize) -> Option<Fixation> {
    Checker::new(c).edge_join(i, j)
}

/// See [`Checker::triplet_join`].
pub fn find_triplet_join(c: &CostFunction, i: usize, j: usize, k: usize) -> Option<Fixation> {
    Checker::new(c).triplet_join(i, j, k)
}

/// See [`Checker::triangle_edge_join`].
pub fn find_triangle_edge_join(
    c: &CostFunction,
    i: usize,
    j: usize,
    k: usize,
) -> Option<Fixation> {
    Checker::new(c).triangle_edge_join(i, j, k)
}

/// See [`Checker::pair_subgraph_join`].
pub fn check_pair_subgraph_join(c: &CostFunction, i: usize, j: usize) -> Option<Fixation> {
    Checker::new(c).pair_subgraph_join(i, j)
}

/// See [`Checker::triple_subgraph_join`].
pub fn check_triple_subgraph_join(
    c: &CostFunction,
    i: usize,
    j: usize,
    k: usize,
) -> Option<Fixation> {
    Checker::new(c).triple_subgraph_join(i, j, k)
}
