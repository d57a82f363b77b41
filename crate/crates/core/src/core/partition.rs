//! Labelings, partitions and the objective.

use super::cost::CostFunction;
use super::index::{pair_count, pair_index, pairs, triples};
use crate::error::{Error, Result};

/// A 0/1 vector over unordered pairs. May be infeasible; see [`Labeling::check_feasible`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Labeling {
    n: usize,
    x: Vec<bool>,
}

impl Labeling {
    pub fn zeros(n: usize) -> Self {
        Labeling {
            n,
            x: vec![false; pair_count(n)],
        }
    }

    pub fn ones(n: usize) -> Self {
        Labeling {
            n,
            x: vec![true; pair_count(n)],
        }
    }

    /// Wraps a dense vector in canonical pair order.
    pub fn from_values(n: usize, x: Vec<bool>) -> Result<Self> {
        if x.len() != pair_count(n) {
            return Err(Error::DimensionMismatch {
                expected: pair_count(n),
                found: x.len(),
            });
        }
        Ok(Labeling { n, x })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, p: usize, q: usize) -> bool {
        self.x[pair_index(p, q)]
    }

    #[inline]
    pub fn set(&mut self, p: usize, q: usize, v: bool) {
        self.x[pair_index(p, q)] = v;
    }

    pub fn values(&self) -> &[bool] {
        &self.x
    }

    /// Returns the first triple (canonical order) violating transitivity.
    pub fn check_feasible(&self) -> Result<()> {
        for (p, q, r) in triples(self.n) {
            let s = self.get(p, q) as u8 + self.get(p, r) as u8 + self.get(q, r) as u8;
            if s == 2 {
                return Err(Error::Infeasible(p, q, r));
            }
        }
        Ok(())
    }

    pub fn is_feasible(&self) -> bool {
        self.check_feasible().is_ok()
    }

    pub fn to_partition(&self) -> Result<Partition> {
        partition_from_labeling(self)
    }
}

/// A set partition of `{0, .., n-1}`.
///
/// Stored normalized: every block sorted ascending, blocks ordered by their
/// smallest element. Equality is therefore equality of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    /// Validates and normalizes `blocks`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in &blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &p in b {
                if p >= n {
                    return Err(Error::InvalidPartition(format!("element {p} out of range")));
                }
                if std::mem::replace(&mut seen[p], true) {
                    return Err(Error::InvalidPartition(format!("element {p} repeated")));
                }
            }
        }
        if let Some(p) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidPartition(format!("element {p} not covered")));
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Partition { n, blocks })
    }

    /// Partition from per-element block labels (any label values).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut index: Vec<Option<usize>> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (p, &l) in labels.iter().enumerate() {
            if l >= index.len() {
                index.resize(l + 1, None);
            }
            let b = *index[l].get_or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(p);
        }
        Partition {
            n: labels.len(),
            blocks,
        }
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            n,
            blocks: (0..n).map(|p| vec![p]).collect(),
        }
    }

    pub fn whole(n: usize) -> Self {
        Partition {
            n,
            blocks: if n == 0 { vec![] } else { vec![(0..n).collect()] },
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block number of every element.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (k, b) in self.blocks.iter().enumerate() {
            for &p in b {
                out[p] = k;
            }
        }
        out
    }

    pub fn to_labeling(&self) -> Labeling {
        labeling_from_partition(self)
    }
}

/// `x_pq = 1` iff `p` and `q` share a block.
pub fn labeling_from_partition(p: &Partition) -> Labeling {
    let labels = p.labels();
    let x = pairs(p.n).map(|(a, b)| labels[a] == labels[b]).collect();
    Labeling { n: p.n, x }
}

/// Inverse of [`labeling_from_partition`]; fails on infeasible input.
pub fn partition_from_labeling(x: &Labeling) -> Result<Partition> {
    x.check_feasible()?;
    let mut labels = vec![usize::MAX; x.n];
    for p in 0..x.n {
        if labels[p] != usize::MAX {
            continue;
        }
        labels[p] = p;
        for q in p + 1..x.n {
            if x.get(p, q) {
                labels[q] = p;
            }
        }
    }
    Ok(Partition::from_labels(&labels))
}

/// The objective `sum c_pqr x_pq x_pr x_qr + sum c_pq x_pq + c_0`.
///
/// Terms are accumulated left to right: triples, then pairs, both in
/// canonical order, then the constant.
pub fn evaluate_objective(c: &CostFunction, x: &Labeling) -> Result<f64> {
    if c.n() != x.n {
        return Err(Error::DimensionMismatch {
            expected: c.n(),
            found: x.n,
        });
    }
    x.check_feasible()?;
    let mut acc = 0.0;
    for ((p, q, r), &v) in triples(c.n()).zip(c.triple_costs()) {
        if x.get(p, q) && x.get(p, r) && x.get(q, r) {
            acc += v;
        }
    }
    for (&xv, &v) in x.x.iter().zip(c.pair_costs()) {
        if xv {
            acc += v;
        }
    }
    Ok(acc + c.constant())
}

/// Same value as [`evaluate_objective`] for the partition given by block `labels`.
pub(crate) fn evaluate_labels(c: &CostFunction, labels: &[usize]) -> f64 {
    let mut acc = 0.0;
    for ((p, q, r), &v) in triples(c.n()).zip(c.triple_costs()) {
        if labels[p] == labels[q] && labels[q] == labels[r] {
            acc += v;
        }
    }
    for ((p, q), &v) in pairs(c.n()).zip(c.pair_costs()) {
        if labels[p] == labels[q] {
            acc += v;
        }
    }
    acc + c.constant()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counterexample() -> CostFunction {
        let mut c = CostFunction::zeros(3);
        c.set_triple(0, 1, 2, 5.0);
        for (p, q) in pairs(3) {
            c.set_pair(p, q, -2.0);
        }
        c
    }

    #[test]
    fn counterexample_values() {
        let c = counterexample();
        assert_eq!(evaluate_objective(&c, &Labeling::ones(3)).unwrap(), -1.0);
        let mut x = Labeling::zeros(3);
        x.set(0, 2, true);
        assert_eq!(evaluate_objective(&c, &x).unwrap(), -2.0);
    }

    #[test]
    fn zero_costs_give_zero() {
        let c = CostFunction::zeros(4);
        let p = Partition::new(4, vec![vec![0, 3], vec![1, 2]]).unwrap();
        assert_eq!(evaluate_objective(&c, &p.to_labeling()).unwrap(), 0.0);
    }

    #[test]
    fn evaluate_rejects_bad_input() {
        let c = CostFunction::zeros(3);
        assert!(matches!(
            evaluate_objective(&c, &Labeling::zeros(4)),
            Err(Error::DimensionMismatch { .. })
        ));
        let mut x = Labeling::zeros(3);
        x.set(0, 1, true);
        x.set(0, 2, true);
        assert_eq!(evaluate_objective(&c, &x), Err(Error::Infeasible(0, 1, 2)));
    }

    #[test]
    fn partition_conversions() {
        assert_eq!(Partition::singletons(4).to_labeling(), Labeling::zeros(4));
        assert_eq!(Partition::whole(4).to_labeling(), Labeling::ones(4));
        let x = Partition::new(4, vec![vec![3, 2], vec![1, 0]])
            .unwrap()
            .to_labeling();
        for (p, q) in pairs(4) {
            assert_eq!(x.get(p, q), (p, q) == (0, 1) || (p, q) == (2, 3));
        }
        assert_eq!(
            partition_from_labeling(&Labeling::zeros(3)).unwrap(),
            Partition::singletons(3)
        );
        assert_eq!(
            partition_from_labeling(&Labeling::ones(3)).unwrap(),
            Partition::whole(3)
        );
        let mut bad = Labeling::zeros(3);
        bad.set(0, 1, true);
        bad.set(0, 2, true);
        assert!(partition_from_labeling(&bad).is_err());
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0, 1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1, 2], vec![]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1, 3], vec![2]]).is_err());
        let p = Partition::new(3, vec![vec![2], vec![1, 0]]).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2]]);
        assert_eq!(Partition::from_labels(&[7, 3, 7]), Partition::new(3, vec![vec![0, 2], vec![1]]).unwrap());
    }
}
