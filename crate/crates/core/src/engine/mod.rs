//! Combining conditions: safe accumulation of facts, contraction of joins,
//! decomposition along cuts and the recursive schedule.
//!
//! Joins are applied one certificate at a time: two join facts that are each
//! persistent need not be persistent together. Cut facts found on one
//! instance are persistent jointly and are inserted as one batch.

mod reduce;
mod state;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::core::{pairs, triples, CostFunction};
use crate::criteria::{find_subset_join, region_growing, Checker, ConditionId, Fixation, FixationKind};
use crate::error::{Error, Result};

pub use reduce::{contract_block, contract_pair, decompose, ReducedInstance};
pub use state::FixationState;

/// Schedule options.
#[derive(Clone, Debug, PartialEq)]
pub struct PreprocessConfig {
    /// Conditions that may run.
    pub enabled: Vec<ConditionId>,
    /// Order in which join conditions are tried; non-join ids are ignored.
    pub join_order: Vec<ConditionId>,
    /// Triplet join and triangle edge join are skipped on instances with more
    /// elements than this. `None` never skips.
    pub expensive_threshold: Option<usize>,
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        PreprocessConfig {
            enabled: ConditionId::ALL.to_vec(),
            join_order: ConditionId::JOIN_ORDER.to_vec(),
            expensive_threshold: None,
        }
    }
}

impl PreprocessConfig {
    /// Only the listed conditions enabled, default join order.
    pub fn only(ids: &[ConditionId]) -> Self {
        PreprocessConfig {
            enabled: ids.to_vec(),
            ..Self::default()
        }
    }

    pub fn is_enabled(&self, id: ConditionId) -> bool {
        self.enabled.contains(&id)
    }
}

/// Summary of one run, percentages against the original instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub n: usize,
    pub pairs_fixed_pct: f64,
    pub triples_fixed_pct: f64,
    /// Recorded facts per condition.
    pub per_condition: BTreeMap<ConditionId, usize>,
    pub elapsed_ms: f64,
    /// Conditions skipped on some instance because of its size.
    pub disabled: Vec<ConditionId>,
}

/// Everything a run produces.
#[derive(Clone, Debug)]
pub struct Preprocessed {
    pub state: FixationState,
    /// Remaining instances on which no condition fires.
    pub instances: Vec<ReducedInstance>,
    /// Constants split off by decompositions. The optimum of the original
    /// instance is this plus the sum of the optima of `instances`.
    pub constant_shift: f64,
    pub report: RunReport,
}

fn pct(part: usize, whole: usize) -> f64 {
    if whole == 0 {
        100.0
    } else {
        100.0 * part as f64 / whole as f64
    }
}

/// A join certificate: sets of current elements, each to be merged.
fn first_join(id: ConditionId, checker: &Checker) -> Option<Vec<Vec<usize>>> {
    let n = checker.cost().n();
    let pair_fix = |f: Fixation| match f.kind {
        FixationKind::PairOne(p, q) => vec![vec![p, q]],
        FixationKind::TripleOne(p, q, r) => vec![vec![p, q, r]],
        _ => unreachable!("join conditions only emit joins"),
    };
    match id {
        ConditionId::SubsetJoin => {
            let fixes = find_subset_join(checker.cost());
            fixes.first().and_then(|f| f.witness.clone())
        }
        ConditionId::EdgeJoin => pairs(n).find_map(|(p, q)| checker.edge_join(p, q)).map(pair_fix),
        ConditionId::PairSubgraphJoin => pairs(n)
            .find_map(|(p, q)| checker.pair_subgraph_join(p, q))
            .map(pair_fix),
        ConditionId::TripletJoin => triples(n)
            .find_map(|(p, q, r)| checker.triplet_join(p, q, r))
            .map(pair_fix),
        ConditionId::TriangleEdgeJoin => triples(n)
            .find_map(|(p, q, r)| checker.triangle_edge_join(p, q, r))
            .map(pair_fix),
        ConditionId::TripleSubgraphJoin => triples(n)
            .find_map(|(p, q, r)| checker.triple_subgraph_join(p, q, r))
            .map(pair_fix),
        _ => None,
    }
}

/// All cut facts of the enabled pair and triple cut conditions, over current elements.
fn cut_facts(config: &PreprocessConfig, checker: &Checker) -> Vec<Fixation> {
    let n = checker.cost().n();
    let mut out = Vec::new();
    if config.is_enabled(ConditionId::EdgeCut) {
        out.extend(pairs(n).filter_map(|(p, q)| checker.edge_cut(p, q)));
    }
    if config.is_enabled(ConditionId::TripletCut) {
        out.extend(triples(n).filter_map(|(p, q, r)| checker.triplet_cut(p, q, r)));
    }
    out
}

/// Translates a cut fact on `inst` to the original elements.
fn to_original(inst: &ReducedInstance, f: &Fixation) -> Fixation {
    let rep = |p: usize| inst.representative(p);
    let kind = match f.kind {
        FixationKind::PairZero(p, q) => FixationKind::pair_zero(rep(p), rep(q)),
        FixationKind::TripleZero(p, q, r) => FixationKind::triple_zero(rep(p), rep(q), rep(r)),
        FixationKind::PairOne(p, q) => FixationKind::pair_one(rep(p), rep(q)),
        FixationKind::TripleOne(p, q, r) => FixationKind::triple_one(rep(p), rep(q), rep(r)),
        FixationKind::BlockCut(ref r) => FixationKind::BlockCut(inst.original_members(r)),
    };
    Fixation {
        kind,
        witness: None,
        condition: f.condition,
    }
}

/// Runs the schedule on `c`.
///
/// Each open instance goes through: region growing with decomposition if the
/// result is nontrivial; otherwise the join conditions in configured order,
/// contracting the first certificate found and starting over; otherwise all
/// cut conditions at once, after which the instance is closed.
pub fn preprocess(c: &CostFunction, config: &PreprocessConfig) -> Result<Preprocessed> {
    let start = Instant::now();
    let n = c.n();
    let mut state = FixationState::new(n);
    let mut stack = vec![ReducedInstance::from_original(c.clone())];
    let mut done = Vec::new();
    let mut constant_shift = 0.0;
    let mut disabled = Vec::new();
    let joins: Vec<ConditionId> = config
        .join_order
        .iter()
        .copied()
        .filter(|&id| id.is_join() && config.is_enabled(id))
        .collect();

    'instances: while let Some(mut inst) = stack.pop() {
        loop {
            if inst.n() < 2 {
                done.push(inst);
                continue 'instances;
            }
            if config.is_enabled(ConditionId::SubsetSeparation) {
                let parts = region_growing(inst.cost());
                if parts.len() > 1 {
                    for b in parts.blocks() {
                        state.insert_block_cut(
                            &inst.original_members(b),
                            ConditionId::SubsetSeparation,
                        )?;
                    }
                    constant_shift += inst.constant_shift();
                    let children = decompose(&inst, &parts)?;
                    stack.extend(children.into_iter().rev());
                    continue 'instances;
                }
            }
            let checker = Checker::new(inst.cost());
            let mut merged = None;
            for &id in &joins {
                let expensive =
                    matches!(id, ConditionId::TripletJoin | ConditionId::TriangleEdgeJoin);
                if expensive && config.expensive_threshold.is_some_and(|t| inst.n() > t) {
                    if !disabled.contains(&id) {
                        disabled.push(id);
                    }
                    continue;
                }
                if let Some(sets) = first_join(id, &checker) {
                    merged = Some((id, sets));
                    break;
                }
            }
            if let Some((id, sets)) = merged {
                // A single certificate merges one set; sets are disjoint.
                let mut next = inst.clone();
                let mut order: Vec<Vec<usize>> = sets;
                for s in order.iter_mut() {
                    s.sort_unstable();
                }
                // Contract higher sets first so lower indices stay valid.
                order.sort_by(|a, b| b[0].cmp(&a[0]));
                for s in order {
                    next = contract_block(&next, &s, &mut state, id)?;
                }
                inst = next;
                continue;
            }
            let facts: Vec<Fixation> = cut_facts(config, &checker)
                .iter()
                .map(|f| to_original(&inst, f))
                .collect();
            state.apply_cut_fixations(&facts)?;
            done.push(inst);
            continue 'instances;
        }
    }

    let (pf, tf) = state.fixed_counts();
    let (np, nt) = (n * n.saturating_sub(1) / 2, crate::core::triple_count(n));
    disabled.sort();
    let report = RunReport {
        n,
        pairs_fixed_pct: pct(pf, np),
        triples_fixed_pct: pct(tf, nt),
        per_condition: state.counts(),
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        disabled,
    };
    Ok(Preprocessed {
        state,
        instances: done,
        constant_shift,
        report,
    })
}

/// Checks that `ids` names only known conditions; used when parsing lists.
pub fn parse_conditions(list: &str) -> Result<Vec<ConditionId>> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<ConditionId>())
        .collect::<Result<Vec<_>>>()
        .and_then(|v| {
            if v.is_empty() {
                Err(Error::InvalidArgument("empty condition list".into()))
            } else {
                Ok(v)
            }
        })
}
