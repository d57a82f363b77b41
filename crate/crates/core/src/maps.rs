//! Elementary cut and join maps on labelings, and an exhaustive improvingness test.

use crate::core::{
    minimize_over, pairs, triples, CostFunction, Labeling, Partition, DEFAULT_ORACLE_BOUND,
};
use crate::error::{Error, Result};

/// A subset `R` of the ground set `{0, .., n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementSubset {
    n: usize,
    mask: Vec<bool>,
}

impl ElementSubset {
    pub fn new(n: usize, members: &[usize]) -> Result<Self> {
        let mut mask = vec![false; n];
        for &p in members {
            if p >= n {
                return Err(Error::InvalidArgument(format!("element {p} out of range")));
            }
            mask[p] = true;
        }
        Ok(ElementSubset { n, mask })
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        ElementSubset {
            n: mask.len(),
            mask,
        }
    }

    pub fn empty(n: usize) -> Self {
        ElementSubset {
            n,
            mask: vec![false; n],
        }
    }

    pub fn full(n: usize) -> Self {
        ElementSubset {
            n,
            mask: vec![true; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, p: usize) -> bool {
        self.mask[p]
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.n).filter(|&p| self.mask[p]).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.mask.iter().any(|&b| b)
    }

    /// `pq` lies in the boundary `δ(R)`.
    #[inline]
    pub fn crosses(&self, p: usize, q: usize) -> bool {
        self.mask[p] != self.mask[q]
    }

    /// Pairs of `δ(R)` in canonical order.
    pub fn boundary_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        pairs(self.n).filter(move |&(p, q)| self.crosses(p, q))
    }

    /// Triples with at least one pair in `δ(R)`, in canonical order.
    pub fn boundary_triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        triples(self.n).filter(move |&(p, q, r)| {
            let k = self.mask[p] as u8 + self.mask[q] as u8 + self.mask[r] as u8;
            k == 1 || k == 2
        })
    }
}

fn check_dims(x: &Labeling, r: &ElementSubset) -> Result<()> {
    if x.n() != r.n {
        return Err(Error::DimensionMismatch {
            expected: x.n(),
            found: r.n,
        });
    }
    Ok(())
}

/// The cut map: zero every pair in `δ(R)`.
pub fn apply_cut_map(x: &Labeling, r: &ElementSubset) -> Result<Labeling> {
    check_dims(x, r)?;
    let mut out = x.clone();
    for (p, q) in r.boundary_pairs() {
        out.set(p, q, false);
    }
    Ok(out)
}

/// The join map: merge `R` together with every block of `x` that meets `R`.
pub fn apply_join_map(x: &Labeling, r: &ElementSubset) -> Result<Labeling> {
    check_dims(x, r)?;
    if r.is_empty() {
        return Ok(x.clone());
    }
    let part = x.to_partition()?;
    let mut merged = Vec::new();
    let mut rest = Vec::new();
    for b in part.blocks() {
        if b.iter().any(|&p| r.contains(p)) {
            merged.extend_from_slice(b);
        } else {
            rest.push(b.clone());
        }
    }
    rest.push(merged);
    Ok(Partition::new(x.n(), rest)?.to_labeling())
}

/// True iff `φ(map(x)) <= φ(x)` for every feasible `x` (exhaustive).
pub fn is_improving<F>(c: &CostFunction, map: F) -> Result<bool>
where
    F: Fn(&Labeling) -> Labeling,
{
    is_improving_bounded(c, map, DEFAULT_ORACLE_BOUND)
}

pub fn is_improving_bounded<F>(c: &CostFunction, map: F, bound: usize) -> Result<bool>
where
    F: Fn(&Labeling) -> Labeling,
{
    let mut ok = true;
    let mut failure = None;
    minimize_over(c, bound, |a| {
        if !ok {
            return false;
        }
        let x = Partition::from_labels(a).to_labeling();
        let y = map(&x);
        match (
            crate::core::evaluate_objective(c, &y),
            crate::core::evaluate_objective(c, &x),
        ) {
            (Ok(vy), Ok(vx)) => ok = vy <= vx,
            (Err(e), _) | (_, Err(e)) => {
                ok = false;
                failure = Some(e);
            }
        }
        false
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(ok),
    }
}
