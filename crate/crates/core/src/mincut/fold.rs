//! Moving triple costs onto pairs.
//!
//! For any `R`, every triple crossing `δ(R)` has exactly two of its three
//! pairs in `δ(R)`. Spreading half of each triple cost onto each of its pairs
//! therefore turns the triple part of a boundary sum into a pair sum.

use crate::core::{neg, pair_count, pair_index, pairs, triples, CostFunction};

/// Per-entry transform applied to costs before folding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Transform {
    /// `r ↦ max(0, -r)`
    NegativePart,
    /// `r ↦ |r|`
    Absolute,
    /// `r ↦ r`
    Identity,
}

impl Transform {
    #[inline]
    pub fn apply(self, r: f64) -> f64 {
        match self {
            Transform::NegativePart => neg(r),
            Transform::Absolute => r.abs(),
            Transform::Identity => r,
        }
    }
}

/// Symmetric weights on unordered pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct PairWeights {
    n: usize,
    w: Vec<f64>,
}

impl PairWeights {
    pub fn zeros(n: usize) -> Self {
        PairWeights {
            n,
            w: vec![0.0; pair_count(n)],
        }
    }

    /// Panics if `w` has the wrong length.
    pub fn from_vec(n: usize, w: Vec<f64>) -> Self {
        assert_eq!(w.len(), pair_count(n), "weight vector length");
        PairWeights { n, w }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, p: usize, q: usize) -> f64 {
        self.w[pair_index(p, q)]
    }

    #[inline]
    pub fn set(&mut self, p: usize, q: usize, v: f64) {
        self.w[pair_index(p, q)] = v;
    }

    pub fn values(&self) -> &[f64] {
        &self.w
    }

    /// `Σ_{pq ∈ δ(R)} w_pq` with `R` given as a mask.
    pub fn cut_value(&self, in_r: &[bool]) -> f64 {
        pairs(self.n)
            .zip(&self.w)
            .filter(|((p, q), _)| in_r[*p] != in_r[*q])
            .map(|(_, &v)| v)
            .sum()
    }
}

/// `w_pq = t(c_pq) + ½ Σ_{r ∉ {p,q}} t(c_pqr)`.
pub fn fold_triples_into_pairs(c: &CostFunction, t: Transform) -> PairWeights {
    let n = c.n();
    let mut w: Vec<f64> = c.pair_costs().iter().map(|&v| t.apply(v)).collect();
    for ((p, q, r), &v) in triples(n).zip(c.triple_costs()) {
        let h = 0.5 * t.apply(v);
        if h != 0.0 {
            w[pair_index(p, q)] += h;
            w[pair_index(p, r)] += h;
            w[pair_index(q, r)] += h;
        }
    }
    PairWeights { n, w }
}

/// `Σ_{pqr ∈ T_δ(R)} t(c_pqr) + Σ_{pq ∈ δ(R)} t(c_pq)` by direct summation.
pub fn boundary_cost(c: &CostFunction, t: Transform, in_r: &[bool]) -> f64 {
    let mut acc = 0.0;
    for ((p, q, r), &v) in triples(c.n()).zip(c.triple_costs()) {
        let k = in_r[p] as u8 + in_r[q] as u8 + in_r[r] as u8;
        if k == 1 || k == 2 {
            acc += t.apply(v);
        }
    }
    for ((p, q), &v) in pairs(c.n()).zip(c.pair_costs()) {
        if in_r[p] != in_r[q] {
            acc += t.apply(v);
        }
    }
    acc
}

/// Same quantity as [`boundary_cost`] for `R = members`, in `O(k n²)` time where
/// `k` is the size of the smaller of `R` and its complement.
pub fn boundary_cost_of(c: &CostFunction, t: Transform, members: &[usize]) -> f64 {
    let n = c.n();
    let mut in_r = vec![false; n];
    for &p in members {
        in_r[p] = true;
    }
    let inside = members.len().min(n);
    let side: Vec<usize> = (0..n)
        .filter(|&p| in_r[p] == (2 * inside <= n))
        .collect();
    let mut in_side = vec![false; n];
    for &p in &side {
        in_side[p] = true;
    }
    let mut acc = 0.0;
    for &a in &side {
        for x in 0..n {
            if !in_side[x] {
                acc += t.apply(c.pair(a, x));
            }
        }
        // Each crossing triple is counted at its smallest member on `side`.
        for x in 0..n {
            if x == a || (in_side[x] && x < a) {
                continue;
            }
            for y in x + 1..n {
                if y == a || (in_side[y] && y < a) || (in_side[x] && in_side[y]) {
                    continue;
                }
                acc += t.apply(c.triple(a, x, y));
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_without_triples_keeps_pairs() {
        let mut c = CostFunction::zeros(4);
        c.set_pair(0, 2, -1.5);
        c.set_pair(1, 3, 2.0);
        let w = fold_triples_into_pairs(&c, Transform::Identity);
        assert_eq!(w.values(), c.pair_costs());
    }

    #[test]
    fn single_triple_identity() {
        let mut c = CostFunction::zeros(3);
        c.set_triple(0, 1, 2, 6.0);
        let w = fold_triples_into_pairs(&c, Transform::Identity);
        let r = [true, false, false];
        assert_eq!(boundary_cost(&c, Transform::Identity, &r), 6.0);
        assert_eq!(w.get(0, 1) + w.get(0, 2), 6.0);
        assert_eq!(w.cut_value(&r), 6.0);
    }

    #[test]
    fn transforms() {
        assert_eq!(Transform::NegativePart.apply(-3.0), 3.0);
        assert_eq!(Transform::NegativePart.apply(3.0), 0.0);
        assert_eq!(Transform::Absolute.apply(-3.0), 3.0);
        assert_eq!(Transform::Identity.apply(-3.0), -3.0);
    }
}
