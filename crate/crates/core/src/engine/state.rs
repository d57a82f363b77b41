//! Accumulated facts over the original elements.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::core::{index::sort3, pairs, triples, Labeling};
use crate::criteria::{ConditionId, Fixation, FixationKind};
use crate::error::{Error, Result};

/// Persistency facts collected so far, expressed over the original elements.
///
/// Pair joins live in a disjoint-set structure. A cut pair `pq` forbids the
/// classes of `p` and `q` from sharing a cluster; a zero triple forbids its
/// three classes from all sharing one. Insertions that contradict earlier
/// facts are rejected and leave the state unchanged.
#[derive(Clone, Debug, PartialEq)]
pub struct FixationState {
    n: usize,
    parent: Vec<usize>,
    cut_pairs: BTreeSet<(usize, usize)>,
    zero_triples: BTreeSet<[usize; 3]>,
    provenance: Vec<(FixationKind, ConditionId)>,
}

impl FixationState {
    pub fn new(n: usize) -> Self {
        FixationState {
            n,
            parent: (0..n).collect(),
            cut_pairs: BTreeSet::new(),
            zero_triples: BTreeSet::new(),
            provenance: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Representative of the merge class of `p`.
    pub fn find(&self, mut p: usize) -> usize {
        while self.parent[p] != p {
            p = self.parent[p];
        }
        p
    }

    pub fn same_class(&self, p: usize, q: usize) -> bool {
        self.find(p) == self.find(q)
    }

    /// Merge classes, each sorted, ordered by smallest member.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for p in 0..self.n {
            by_root.entry(self.find(p)).or_default().push(p);
        }
        let mut out: Vec<Vec<usize>> = by_root.into_values().collect();
        out.sort();
        out
    }

    pub fn cut_pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.cut_pairs
    }

    pub fn zero_triples(&self) -> &BTreeSet<[usize; 3]> {
        &self.zero_triples
    }

    /// Every inserted fact with the condition that produced it, in insertion order.
    pub fn provenance(&self) -> &[(FixationKind, ConditionId)] {
        &self.provenance
    }

    /// Number of recorded facts per condition.
    pub fn counts(&self) -> BTreeMap<ConditionId, usize> {
        let mut out = BTreeMap::new();
        for (_, id) in &self.provenance {
            *out.entry(*id).or_insert(0) += 1;
        }
        out
    }

    /// Whether `x_pq = 0` follows from the recorded cuts and merges.
    pub fn is_cut(&self, p: usize, q: usize) -> bool {
        let (a, b) = (self.find(p), self.find(q));
        a != b
            && self.cut_pairs.iter().any(|&(u, v)| {
                let (fu, fv) = (self.find(u), self.find(v));
                (fu == a && fv == b) || (fu == b && fv == a)
            })
    }

    fn check_index(&self, ps: &[usize]) -> Result<()> {
        match ps.iter().find(|&&p| p >= self.n) {
            Some(&p) => Err(Error::InvalidArgument(format!(
                "element {p} outside ground set of size {}",
                self.n
            ))),
            None => Ok(()),
        }
    }

    /// Merges the classes of `p` and `q`.
    pub fn insert_pair_one(&mut self, p: usize, q: usize, id: ConditionId) -> Result<()> {
        self.check_index(&[p, q])?;
        self.union(p, q)?;
        self.provenance.push((FixationKind::pair_one(p, q), id));
        Ok(())
    }

    pub fn insert_pair_zero(&mut self, p: usize, q: usize, id: ConditionId) -> Result<()> {
        self.check_index(&[p, q])?;
        self.cut(p, q)?;
        self.provenance.push((FixationKind::pair_zero(p, q), id));
        Ok(())
    }

    pub fn insert_triple_zero(&mut self, p: usize, q: usize, r: usize, id: ConditionId) -> Result<()> {
        self.check_index(&[p, q, r])?;
        let t = sort3(p, q, r);
        if self.same_class(t[0], t[1]) && self.same_class(t[0], t[2]) {
            return Err(Error::Conflict(format!(
                "triple {t:?} is inside one merge class"
            )));
        }
        self.zero_triples.insert(t);
        self.provenance.push((FixationKind::triple_zero(p, q, r), id));
        Ok(())
    }

    /// Merges the classes of `p`, `q` and `r`.
    pub fn insert_triple_one(&mut self, p: usize, q: usize, r: usize, id: ConditionId) -> Result<()> {
        self.check_index(&[p, q, r])?;
        let saved = self.clone();
        if let Err(e) = self.union(p, q).and_then(|_| self.union(p, r)) {
            *self = saved;
            return Err(e);
        }
        self.provenance.push((FixationKind::triple_one(p, q, r), id));
        Ok(())
    }

    /// Cuts every pair crossing the boundary of `r`.
    pub fn insert_block_cut(&mut self, r: &[usize], id: ConditionId) -> Result<()> {
        self.check_index(r)?;
        let mut inside = vec![false; self.n];
        for &p in r {
            inside[p] = true;
        }
        let boundary: Vec<(usize, usize)> =
            pairs(self.n).filter(|&(p, q)| inside[p] != inside[q]).collect();
        if let Some(&(p, q)) = boundary.iter().find(|&&(p, q)| self.same_class(p, q)) {
            return Err(Error::Conflict(format!("pair ({p}, {q}) is merged")));
        }
        self.cut_pairs.extend(boundary);
        let mut sorted = r.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        self.provenance.push((FixationKind::BlockCut(sorted), id));
        Ok(())
    }

    /// Inserts one fact.
    pub fn insert(&mut self, f: &Fixation) -> Result<()> {
        match f.kind {
            FixationKind::PairZero(p, q) => self.insert_pair_zero(p, q, f.condition),
            FixationKind::PairOne(p, q) => self.insert_pair_one(p, q, f.condition),
            FixationKind::TripleZero(p, q, r) => self.insert_triple_zero(p, q, r, f.condition),
            FixationKind::TripleOne(p, q, r) => self.insert_triple_one(p, q, r, f.condition),
            FixationKind::BlockCut(ref r) => self.insert_block_cut(r, f.condition),
        }
    }

    /// Inserts a batch of cut facts together; on error nothing is inserted.
    pub fn apply_cut_fixations(&mut self, fixes: &[Fixation]) -> Result<()> {
        if let Some(f) = fixes.iter().find(|f| !f.kind.is_cut()) {
            return Err(Error::InvalidArgument(format!("{:?} is not a cut fact", f.kind)));
        }
        let saved = self.clone();
        for f in fixes {
            if let Err(e) = self.insert(f) {
                *self = saved;
                return Err(e);
            }
        }
        Ok(())
    }

    fn cut(&mut self, p: usize, q: usize) -> Result<()> {
        if self.same_class(p, q) {
            return Err(Error::Conflict(format!("pair ({p}, {q}) is merged")));
        }
        self.cut_pairs.insert((p.min(q), p.max(q)));
        Ok(())
    }

    fn union(&mut self, p: usize, q: usize) -> Result<()> {
        let (a, b) = (self.find(p), self.find(q));
        if a == b {
            return Ok(());
        }
        let joined = |x: usize| x == a || x == b;
        if let Some(&(u, v)) = self
            .cut_pairs
            .iter()
            .find(|&&(u, v)| joined(self.find(u)) && joined(self.find(v)) && self.find(u) != self.find(v))
        {
            return Err(Error::Conflict(format!(
                "merging ({p}, {q}) joins the cut pair ({u}, {v})"
            )));
        }
        if let Some(t) = self.zero_triples.iter().find(|&&[u, v, w]| {
            let r = [self.find(u), self.find(v), self.find(w)];
            r.iter().all(|&x| joined(x))
        }) {
            return Err(Error::Conflict(format!(
                "merging ({p}, {q}) puts the zero triple {t:?} in one class"
            )));
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.parent[hi] = lo;
        Ok(())
    }

    /// Whether the feasible labeling `x` of the original elements respects every fact.
    pub fn admits(&self, x: &Labeling) -> bool {
        let merged = pairs(self.n).all(|(p, q)| !self.same_class(p, q) || x.get(p, q));
        merged
            && self.cut_pairs.iter().all(|&(p, q)| !x.get(p, q))
            && self
                .zero_triples
                .iter()
                .all(|&[p, q, r]| !(x.get(p, q) && x.get(p, r) && x.get(q, r)))
    }

    /// Numbers of original pairs and triples whose values are determined.
    ///
    /// A pair is determined if merged or cut at class level. A triple is
    /// determined if one of its pairs is cut, all three lie in one class, or
    /// its classes carry a zero triple.
    pub fn fixed_counts(&self) -> (usize, usize) {
        let root: Vec<usize> = (0..self.n).map(|p| self.find(p)).collect();
        let cut_classes: HashSet<(usize, usize)> = self
            .cut_pairs
            .iter()
            .map(|&(u, v)| (root[u].min(root[v]), root[u].max(root[v])))
            .collect();
        let zero_classes: HashSet<[usize; 3]> = self
            .zero_triples
            .iter()
            .map(|&[u, v, w]| sort3(root[u], root[v], root[w]))
            .collect();
        let pair_fixed = |p: usize, q: usize| {
            let (a, b) = (root[p], root[q]);
            a == b || cut_classes.contains(&(a.min(b), a.max(b)))
        };
        let pair_zero = |p: usize, q: usize| {
            let (a, b) = (root[p], root[q]);
            a != b && cut_classes.contains(&(a.min(b), a.max(b)))
        };
        let pairs_fixed = pairs(self.n).filter(|&(p, q)| pair_fixed(p, q)).count();
        let triples_fixed = triples(self.n)
            .filter(|&(p, q, r)| {
                let (a, b, d) = (root[p], root[q], root[r]);
                (a == b && b == d)
                    || pair_zero(p, q)
                    || pair_zero(p, r)
                    || pair_zero(q, r)
                    || zero_classes.contains(&sort3(a, b, d))
            })
            .count();
        (pairs_fixed, triples_fixed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::Partition;

    const ID: ConditionId = ConditionId::EdgeCut;

    #[test]
    fn pair_zero_is_idempotent() {
        let mut s = FixationState::new(3);
        s.insert_pair_zero(0, 1, ID).unwrap();
        let cuts = s.cut_pairs().clone();
        s.insert_pair_zero(1, 0, ID).unwrap();
        assert_eq!(s.cut_pairs(), &cuts);
        assert!(s.is_cut(0, 1));
    }

    #[test]
    fn block_cut_boundary() {
        let mut s = FixationState::new(4);
        let f = Fixation::new(FixationKind::BlockCut(vec![0, 1]), ConditionId::SubsetSeparation);
        s.apply_cut_fixations(&[f]).unwrap();
        let want: BTreeSet<_> = [(0, 2), (0, 3), (1, 2), (1, 3)].into_iter().collect();
        assert_eq!(s.cut_pairs(), &want);
    }

    #[test]
    fn conflicts_rejected() {
        let mut s = FixationState::new(4);
        s.insert_pair_one(0, 1, ConditionId::EdgeJoin).unwrap();
        assert!(s.insert_pair_zero(1, 0, ID).is_err());
        s.insert_pair_zero(1, 2, ID).unwrap();
        assert!(s.is_cut(0, 2));
        assert!(s.insert_pair_one(0, 2, ConditionId::EdgeJoin).is_err());
        s.insert_triple_zero(0, 1, 3, ConditionId::TripletCut).unwrap();
        let before = s.clone();
        assert!(s.insert_pair_one(1, 3, ConditionId::EdgeJoin).is_err());
        assert!(s.insert_triple_one(2, 3, 0, ConditionId::TripletJoin).is_err());
        assert_eq!(s, before);
        let bad = Fixation::new(FixationKind::pair_one(2, 3), ID);
        assert!(s.apply_cut_fixations(&[bad]).is_err());
    }

    #[test]
    fn batch_rolls_back() {
        let mut s = FixationState::new(3);
        s.insert_pair_one(0, 1, ConditionId::EdgeJoin).unwrap();
        let before = s.clone();
        let fixes = [
            Fixation::new(FixationKind::pair_zero(0, 2), ID),
            Fixation::new(FixationKind::pair_zero(0, 1), ID),
        ];
        assert!(s.apply_cut_fixations(&fixes).is_err());
        assert_eq!(s, before);
    }

    #[test]
    fn counts_and_admits() {
        let mut s = FixationState::new(4);
        s.insert_pair_one(0, 1, ConditionId::EdgeJoin).unwrap();
        s.insert_pair_zero(1, 2, ID).unwrap();
        // Pairs 01 merged, 02 and 12 cut; triples 012, 023, 123 contain a cut pair.
        assert_eq!(s.fixed_counts(), (3, 3));
        s.insert_triple_zero(0, 1, 3, ConditionId::TripletCut).unwrap();
        assert_eq!(s.fixed_counts(), (3, 4));
        let ok = Partition::new(4, vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        let bad = Partition::new(4, vec![vec![0, 1, 3], vec![2]]).unwrap();
        assert!(s.admits(&ok.to_labeling()));
        assert!(!s.admits(&bad.to_labeling()));
        assert_eq!(s.classes(), vec![vec![0, 1], vec![2], vec![3]]);
        assert_eq!(s.counts()[&ID], 1);
    }
}
