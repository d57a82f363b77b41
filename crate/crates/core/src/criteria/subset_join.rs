//! Joining a whole subset.
//!
//! A subset `R` with nonpositive inner costs can be joined if its most
//! expensive inner cut is bounded by its negative boundary:
//! `max_{∅≠R'⊊R} [Σ_{δ(R',R∖R')} c + Σ_{T_δ(R',R∖R') ∩ C(R,3)} c] <= Σ_{δ(R) ∩ P⁻} c + Σ_{T_δ(R) ∩ T⁻} c`.
//! With all inner costs nonpositive the maximum is a global min cut with
//! weights `-(c_pq + ½ Σ_{r ∈ R} c_pqr)`.

use super::checker::negative_boundary;
use super::{ConditionId, Fixation, FixationKind};
use crate::core::{pair_index, CostFunction};
use crate::mincut::{global_min_cut, PairWeights};

/// `Σ_{δ(A,R∖A)} c + Σ_{T_δ(A,R∖A) ∩ C(R,3)} c` with `A = {r[k] : side[k]}`.
fn inner_cut(c: &CostFunction, r: &[usize], side: &[bool]) -> f64 {
    let m = r.len();
    let mut acc = 0.0;
    for a in 0..m {
        for b in a + 1..m {
            if side[a] != side[b] {
                acc += c.pair(r[a], r[b]);
            }
            for d in b + 1..m {
                let k = side[a] as u8 + side[b] as u8 + side[d] as u8;
                if k == 1 || k == 2 {
                    acc += c.triple(r[a], r[b], r[d]);
                }
            }
        }
    }
    acc
}

fn inner_nonpositive(c: &CostFunction, r: &[usize]) -> bool {
    let m = r.len();
    (0..m).all(|a| {
        (a + 1..m).all(|b| {
            c.pair(r[a], r[b]) <= 0.0 && (b + 1..m).all(|d| c.triple(r[a], r[b], r[d]) <= 0.0)
        })
    })
}

/// True iff `R` has at least two elements, nonpositive inner costs and
/// satisfies the inner cut bound.
///
/// The maximizing inner cut is found by a global min cut and its value is
/// recomputed on the returned side before comparing.
pub fn check_subset_join(c: &CostFunction, r: &[usize]) -> bool {
    let m = r.len();
    if m < 2 || !inner_nonpositive(c, r) {
        return false;
    }
    let mut w = PairWeights::zeros(m);
    for a in 0..m {
        for b in a + 1..m {
            let half: f64 = (0..m)
                .filter(|&d| d != a && d != b)
                .map(|d| 0.5 * c.triple(r[a], r[b], r[d]))
                .sum();
            w.set(a, b, -(c.pair(r[a], r[b]) + half));
        }
    }
    let Ok(cut) = global_min_cut(&w) else {
        return false;
    };
    let mut side = vec![false; m];
    for &k in &cut.side {
        side[k] = true;
    }
    let lhs = inner_cut(c, r, &side);
    let mut in_r = vec![false; c.n()];
    for &p in r {
        in_r[p] = true;
    }
    lhs <= negative_boundary(c, &in_r)
}

/// Candidate subsets grown greedily from every pair with `c_ij <= 0`.
///
/// Seeds are taken by ascending cost, ties by pair rank. A seed grows by the
/// element whose new pair and triple costs have the smallest sum, ties to the
/// smaller element, as long as every new cost is nonpositive. Duplicates are
/// dropped; every candidate has at least two elements.
pub fn subset_join_candidates(c: &CostFunction) -> Vec<Vec<usize>> {
    let n = c.n();
    let mut seeds: Vec<(usize, usize)> = (0..n)
        .flat_map(|q| (0..q).map(move |p| (p, q)))
        .filter(|&(p, q)| c.pair(p, q) <= 0.0)
        .collect();
    seeds.sort_by(|&(a, b), &(p, q)| {
        c.pair(a, b)
            .total_cmp(&c.pair(p, q))
            .then(pair_index(a, b).cmp(&pair_index(p, q)))
    });
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for (i, j) in seeds {
        let mut r = grow(c, i, j);
        r.sort_unstable();
        if seen.insert(r.clone()) {
            out.push(r);
        }
    }
    out
}

fn grow(c: &CostFunction, i: usize, j: usize) -> Vec<usize> {
    let n = c.n();
    let mut r = vec![i, j];
    let mut in_r = vec![false; n];
    in_r[i] = true;
    in_r[j] = true;
    let mut gain = vec![0.0; n];
    let mut ok = vec![false; n];
    for e in (0..n).filter(|&e| !in_r[e]) {
        let (a, b, t) = (c.pair(e, i), c.pair(e, j), c.triple(e, i, j));
        gain[e] = a + b + t;
        ok[e] = a <= 0.0 && b <= 0.0 && t <= 0.0;
    }
    loop {
        let mut best: Option<usize> = None;
        for e in 0..n {
            if !in_r[e] && ok[e] && best.is_none_or(|b| gain[e] < gain[b]) {
                best = Some(e);
            }
        }
        let Some(e) = best else { break };
        for f in 0..n {
            if in_r[f] || f == e || !ok[f] {
                continue;
            }
            let pe = c.pair(f, e);
            let mut add = pe;
            let mut fine = pe <= 0.0;
            for &x in &r {
                let t = c.triple(f, e, x);
                add += t;
                fine &= t <= 0.0;
            }
            gain[f] += add;
            ok[f] = fine;
        }
        in_r[e] = true;
        r.push(e);
    }
    r
}

/// Joins of every pair inside the first candidate that passes
/// [`check_subset_join`], with that subset as witness.
pub fn find_subset_join(c: &CostFunction) -> Vec<Fixation> {
    let Some(r) = subset_join_candidates(c)
        .into_iter()
        .find(|r| check_subset_join(c, r))
    else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for (a, &p) in r.iter().enumerate() {
        for &q in &r[a + 1..] {
            out.push(
                Fixation::new(FixationKind::pair_one(p, q), ConditionId::SubsetJoin)
                    .with_witness(vec![r.clone()]),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::{pairs, triples};

    /// Inner cut maximum by enumerating all proper nonempty subsets.
    fn max_inner_cut(c: &CostFunction, r: &[usize]) -> f64 {
        let m = r.len();
        (1u32..(1 << m) - 1)
            .map(|mask| {
                let side: Vec<bool> = (0..m).map(|k| mask >> k & 1 == 1).collect();
                inner_cut(c, r, &side)
            })
            .fold(f64::NEG_INFINITY, f64::max)
    }

    #[test]
    fn two_elements_pulled_together() {
        let mut c = CostFunction::zeros(2);
        c.set_pair(0, 1, -5.0);
        assert!(check_subset_join(&c, &[0, 1]));
        let f = find_subset_join(&c);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].kind, FixationKind::pair_one(0, 1));
    }

    #[test]
    fn strong_boundary_blocks_join() {
        let mut c = CostFunction::zeros(3);
        c.set_pair(0, 1, -1.0);
        c.set_pair(1, 2, -3.0);
        // R = {0, 1}: inner cut -1, boundary -3.
        assert!(!check_subset_join(&c, &[0, 1]));
        assert!(check_subset_join(&c, &[1, 2]));
        assert!(check_subset_join(&c, &[0, 1, 2]));
    }

    #[test]
    fn positive_inner_cost_rejected() {
        let mut c = CostFunction::zeros(3);
        c.set_pair(0, 1, -1.0);
        c.set_triple(0, 1, 2, 0.5);
        assert!(!check_subset_join(&c, &[0, 1, 2]));
        assert!(!check_subset_join(&c, &[0]));
    }

    #[test]
    fn growth_follows_cheapest_element() {
        let mut c = CostFunction::zeros(5);
        c.set_pair(0, 1, -4.0);
        c.set_pair(1, 2, -1.0);
        c.set_pair(0, 3, -2.0);
        c.set_pair(3, 4, 1.0);
        c.set_pair(1, 4, -0.5);
        assert_eq!(grow(&c, 0, 1), vec![0, 1, 3, 2]);
        let cands = subset_join_candidates(&c);
        assert_eq!(cands[0], vec![0, 1, 2, 3]);
        assert!(cands.iter().all(|r| r.len() >= 2));
    }

    #[test]
    fn min_cut_matches_enumeration() {
        let mut seed = 11u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            -((seed >> 11) as f64 / (1u64 << 53) as f64)
        };
        for n in 2..=7 {
            let mut c = CostFunction::zeros(n);
            for (p, q) in pairs(n) {
                c.set_pair(p, q, next());
            }
            for (p, q, r) in triples(n) {
                c.set_triple(p, q, r, 0.3 * next());
            }
            let r: Vec<usize> = (0..n).collect();
            let mut w = PairWeights::zeros(n);
            for (p, q) in pairs(n) {
                let half: f64 = (0..n)
                    .filter(|&d| d != p && d != q)
                    .map(|d| 0.5 * c.triple(p, q, d))
                    .sum();
                w.set(p, q, -(c.pair(p, q) + half));
            }
            let cut = global_min_cut(&w).unwrap();
            let mut side = vec![false; n];
            for &k in &cut.side {
                side[k] = true;
            }
            assert!((inner_cut(&c, &r, &side) - max_inner_cut(&c, &r)).abs() < 1e-9);
            assert!((-cut.value - max_inner_cut(&c, &r)).abs() < 1e-9);
        }
    }
}
