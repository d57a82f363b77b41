//! Contraction and decomposition of instances.

use serde::{Deserialize, Serialize};

use crate::core::{pairs, triples, CostFunction, Partition};
use crate::criteria::ConditionId;
use crate::error::{Error, Result};

use super::FixationState;

/// An instance over merge classes of the original elements.
///
/// Element `k` of [`cost`](Self::cost) stands for the original elements
/// `classes()[k]`. The constant of the cost function holds the shift
/// accumulated by contractions.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedInstance {
    cost: CostFunction,
    classes: Vec<Vec<usize>>,
}

/// On-disk form: the instance JSON plus the class of every element.
#[derive(Serialize, Deserialize)]
struct ReducedFile {
    classes: Vec<Vec<usize>>,
    instance: serde_json::Value,
}

impl ReducedInstance {
    /// The original instance, every element its own class.
    pub fn from_original(cost: CostFunction) -> Self {
        let classes = (0..cost.n()).map(|p| vec![p]).collect();
        ReducedInstance { cost, classes }
    }

    /// Panics if the number of classes differs from `cost.n()`.
    pub fn new(cost: CostFunction, classes: Vec<Vec<usize>>) -> Self {
        assert_eq!(cost.n(), classes.len(), "one class per element");
        ReducedInstance { cost, classes }
    }

    pub fn cost(&self) -> &CostFunction {
        &self.cost
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn n(&self) -> usize {
        self.cost.n()
    }

    /// Constant accumulated by contractions.
    pub fn constant_shift(&self) -> f64 {
        self.cost.constant()
    }

    /// Smallest original element of the class of `p`.
    pub fn representative(&self, p: usize) -> usize {
        self.classes[p][0]
    }

    /// All original elements of the classes listed in `ps`, sorted.
    pub fn original_members(&self, ps: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = ps.iter().flat_map(|&p| self.classes[p].iter().copied()).collect();
        out.sort_unstable();
        out
    }

    /// Merges `j` into `i`; `j` is removed and later elements shift down by one.
    ///
    /// `c'_pqi = c_pqi + c_pqj`, `c'_pi = c_pi + c_pj + c_pij`, `c'_∅ = c_∅ + c_ij`.
    pub fn contracted(&self, i: usize, j: usize) -> Result<ReducedInstance> {
        let n = self.n();
        if i == j || i >= n || j >= n {
            return Err(Error::InvalidArgument(format!(
                "cannot contract ({i}, {j}) in an instance of size {n}"
            )));
        }
        let c = &self.cost;
        let old = |k: usize| if k < j { k } else { k + 1 };
        let ni = if i < j { i } else { i - 1 };
        let mut out = CostFunction::zeros(n - 1);
        for (p, q) in pairs(n - 1) {
            let (op, oq) = (old(p), old(q));
            let v = if p == ni || q == ni {
                let other = if p == ni { oq } else { op };
                c.pair(other, i) + c.pair(other, j) + c.triple(other, i, j)
            } else {
                c.pair(op, oq)
            };
            out.set_pair(p, q, v);
        }
        for (p, q, r) in triples(n - 1) {
            let (op, oq, or) = (old(p), old(q), old(r));
            let v = if p == ni || q == ni || r == ni {
                let others: Vec<usize> = [op, oq, or].into_iter().filter(|&x| x != i).collect();
                c.triple(others[0], others[1], i) + c.triple(others[0], others[1], j)
            } else {
                c.triple(op, oq, or)
            };
            out.set_triple(p, q, r, v);
        }
        out.set_constant(c.constant() + c.pair(i, j));
        let mut classes = self.classes.clone();
        let moved = classes.remove(j);
        classes[ni].extend(moved);
        classes[ni].sort_unstable();
        Ok(ReducedInstance {
            cost: out,
            classes,
        })
    }

    /// Merges every element of `block` into one, kept at the smallest index.
    pub fn contracted_block(&self, block: &[usize]) -> Result<ReducedInstance> {
        let mut b = block.to_vec();
        b.sort_unstable();
        b.dedup();
        if b.is_empty() {
            return Err(Error::InvalidArgument("empty block".into()));
        }
        let mut out = self.clone();
        for &r in b[1..].iter().rev() {
            out = out.contracted(b[0], r)?;
        }
        Ok(out)
    }
}

impl ReducedInstance {
    pub fn to_json(&self) -> String {
        let file = ReducedFile {
            classes: self.classes.clone(),
            instance: serde_json::from_str(&self.cost.to_json()).expect("instance JSON"),
        };
        serde_json::to_string_pretty(&file).expect("reduced instance serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<ReducedInstance> {
        let file: ReducedFile =
            serde_json::from_str(s).map_err(|e| Error::InvalidInstance(e.to_string()))?;
        let cost = CostFunction::from_json(&file.instance.to_string())?;
        if file.classes.len() != cost.n() {
            return Err(Error::InvalidInstance("one class per element required".into()));
        }
        Ok(ReducedInstance {
            cost,
            classes: file.classes,
        })
    }
}

/// Merges `i` and `j` in `state` and in the instance.
///
/// Fails if the state already separates the two classes.
pub fn contract_pair(
    inst: &ReducedInstance,
    i: usize,
    j: usize,
    state: &mut FixationState,
    id: ConditionId,
) -> Result<ReducedInstance> {
    let out = inst.contracted(i, j)?;
    state.insert_pair_one(inst.representative(i), inst.representative(j), id)?;
    Ok(out)
}

/// Merges every element of `block` in `state` and in the instance.
pub fn contract_block(
    inst: &ReducedInstance,
    block: &[usize],
    state: &mut FixationState,
    id: ConditionId,
) -> Result<ReducedInstance> {
    let out = inst.contracted_block(block)?;
    let saved = state.clone();
    for &p in &block[1..] {
        if let Err(e) = state.insert_pair_one(inst.representative(block[0]), inst.representative(p), id) {
            *state = saved;
            return Err(e);
        }
    }
    Ok(out)
}

/// One sub-instance per block of `parts`, costs restricted to the block.
///
/// Sub-instances carry constant 0; the optimum of `inst` is the sum of their
/// optima plus `inst.constant_shift()` whenever no pair or triple crossing
/// between blocks has negative cost. The trivial partition returns `inst`
/// unchanged, constant included.
pub fn decompose(inst: &ReducedInstance, parts: &Partition) -> Result<Vec<ReducedInstance>> {
    if parts.n() != inst.n() {
        return Err(Error::InvalidPartition(format!(
            "partition of {} elements for an instance of {}",
            parts.n(),
            inst.n()
        )));
    }
    if parts.len() == 1 {
        return Ok(vec![inst.clone()]);
    }
    Ok(parts
        .blocks()
        .iter()
        .map(|b| ReducedInstance {
            cost: inst.cost.restrict(b, 0.0),
            classes: b.iter().map(|&p| inst.classes[p].clone()).collect(),
        })
        .collect())
}
