//! Global minimum cut by the Stoer-Wagner algorithm.

use super::fold::PairWeights;
use crate::error::{Error, Result};

/// A global minimum cut.
#[derive(Clone, Debug, PartialEq)]
pub struct GlobalCut {
    pub value: f64,
    /// Sorted; always the side containing element 0.
    pub side: Vec<usize>,
}

/// Minimum of `Σ_{pq ∈ δ(R')} w_pq` over nonempty proper subsets `R'`.
pub fn global_min_cut(w: &PairWeights) -> Result<GlobalCut> {
    let n = w.n();
    if n < 2 {
        return Err(Error::InvalidArgument(
            "global min cut needs at least two elements".into(),
        ));
    }
    if w.values().iter().any(|&v| !(v >= 0.0)) {
        return Err(Error::InvalidArgument("weights must be nonnegative".into()));
    }
    let mut mat = vec![vec![0.0f64; n]; n];
    for p in 0..n {
        for q in 0..n {
            if p != q {
                mat[p][q] = w.get(p, q);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = (0..n).map(|p| vec![p]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best = f64::INFINITY;
    let mut best_group = Vec::new();
    while active.len() > 1 {
        // Maximum adjacency ordering of the active vertices.
        let mut added = vec![false; n];
        let mut conn = vec![0.0f64; n];
        let mut prev = active[0];
        let mut last = active[0];
        for step in 0..active.len() {
            let mut pick = usize::MAX;
            for &v in &active {
                if !added[v] && (pick == usize::MAX || conn[v] > conn[pick]) {
                    pick = v;
                }
            }
            added[pick] = true;
            if step + 1 == active.len() {
                prev = last;
                last = pick;
            } else {
                last = pick;
                for &v in &active {
                    if !added[v] {
                        conn[v] += mat[pick][v];
                    }
                }
            }
        }
        let phase = conn[last];
        if phase < best {
            best = phase;
            best_group = groups[last].clone();
        }
        // Merge `last` into `prev`.
        let moved = std::mem::take(&mut groups[last]);
        groups[prev].extend(moved);
        for &v in &active {
            if v != prev && v != last {
                let add = mat[last][v];
                mat[prev][v] += add;
                mat[v][prev] += add;
            }
        }
        active.retain(|&v| v != last);
    }
    let mut in_side = vec![false; n];
    for &p in &best_group {
        in_side[p] = true;
    }
    if !in_side[0] {
        in_side.iter_mut().for_each(|b| *b = !*b);
    }
    Ok(GlobalCut {
        value: best,
        side: (0..n).filter(|&p| in_side[p]).collect(),
    })
}
