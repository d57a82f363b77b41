//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use cubic_partial::core::{enumerate_partitions, evaluate_objective, pairs, triples, Labeling};
use cubic_partial::criteria::{
    find_subset_join, region_growing, Checker, ConditionId, Fixation, FixationKind,
};
use cubic_partial::CostFunction;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Sign regimes for random instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    NegativeLeaning,
    PositiveLeaning,
    Mixed,
}

pub const REGIMES: [Regime; 3] = [Regime::NegativeLeaning, Regime::PositiveLeaning, Regime::Mixed];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random costs. Half of the draws are small integers so that conditions
/// also meet their equality cases.
pub fn random_instance<R: Rng>(n: usize, regime: Regime, rng: &mut R) -> CostFunction {
    let shift: f64 = match regime {
        Regime::NegativeLeaning => -0.6,
        Regime::PositiveLeaning => 0.6,
        Regime::Mixed => 0.0,
    };
    let integral = rng.random_bool(0.5);
    let draw = |scale: f64, rng: &mut R| {
        if rng.random_bool(0.15) {
            return 0.0;
        }
        if integral {
            (rng.random_range(-3i32..=3) as f64 + (shift * 3.0).round()) * scale
        } else {
            (rng.random_range(-1.0..1.0) + shift) * scale
        }
    };
    let mut c = CostFunction::zeros(n);
    for (p, q) in pairs(n) {
        let v = draw(1.0, rng);
        c.set_pair(p, q, v);
    }
    for (p, q, r) in triples(n) {
        let v = draw(0.7, rng);
        c.set_triple(p, q, r, v);
    }
    c
}

/// Every partition of the ground set with its objective, evaluated once.
pub struct Oracle {
    pub labelings: Vec<Labeling>,
    pub values: Vec<f64>,
    pub best: f64,
}

impl Oracle {
    pub fn new(c: &CostFunction) -> Self {
        let labelings: Vec<Labeling> = enumerate_partitions(c.n())
            .unwrap()
            .map(|p| p.to_labeling())
            .collect();
        let values: Vec<f64> = labelings
            .iter()
            .map(|x| evaluate_objective(c, x).unwrap())
            .collect();
        let best = values.iter().copied().fold(f64::INFINITY, f64::min);
        Oracle {
            labelings,
            values,
            best,
        }
    }

    /// Minimum over the labelings satisfying `keep`.
    pub fn restricted_min<F: Fn(&Labeling) -> bool>(&self, keep: F) -> f64 {
        self.labelings
            .iter()
            .zip(&self.values)
            .filter(|(x, _)| keep(x))
            .map(|(_, &v)| v)
            .fold(f64::INFINITY, f64::min)
    }

    /// Whether the restricted optimum equals the global one exactly.
    pub fn persistent<F: Fn(&Labeling) -> bool>(&self, keep: F) -> bool {
        self.restricted_min(keep) == self.best
    }
}

/// Every fact any single checker certifies on `c`, over all pairs and triples.
/// Subset join facts of one subset are returned as one group.
pub fn all_fixations(c: &CostFunction) -> Vec<Vec<Fixation>> {
    let n = c.n();
    let ch = Checker::new(c);
    let mut out: Vec<Vec<Fixation>> = Vec::new();
    for (p, q) in pairs(n) {
        out.extend(ch.edge_cut(p, q).map(|f| vec![f]));
        out.extend(ch.edge_join(p, q).map(|f| vec![f]));
        out.extend(ch.pair_subgraph_join(p, q).map(|f| vec![f]));
    }
    for (p, q, r) in triples(n) {
        out.extend(ch.triplet_cut(p, q, r).map(|f| vec![f]));
        out.extend(ch.triplet_join(p, q, r).map(|f| vec![f]));
        out.extend(ch.triangle_edge_join(p, q, r).map(|f| vec![f]));
        out.extend(ch.triple_subgraph_join(p, q, r).map(|f| vec![f]));
    }
    let sj = find_subset_join(c);
    if !sj.is_empty() {
        out.push(sj);
    }
    for b in region_growing(c).blocks() {
        if b.len() < n {
            out.push(vec![Fixation::new(
                FixationKind::BlockCut(b.clone()),
                ConditionId::SubsetSeparation,
            )]);
        }
    }
    out
}

/// Cut facts of the pair and triple cut conditions and region growing.
pub fn cut_fixations(c: &CostFunction) -> Vec<Fixation> {
    all_fixations(c)
        .into_iter()
        .flatten()
        .filter(|f| f.kind.is_cut())
        .collect()
}
