//! From a constrained cut problem to a QPBO, to a posiform, to a flow network.

use super::flow::FlowNetwork;
use super::fold::PairWeights;
use crate::core::{pair_count, pair_index, pairs};
use crate::error::{Error, Result};

/// `f(y) = Σ_p linear[p] y_p + Σ_{p<q} quadratic[pq] y_p y_q + constant`
/// over binary `y`, one variable per entry of `vars`.
#[derive(Clone, Debug, PartialEq)]
pub struct QpboInstance {
    /// Element id of each variable.
    pub vars: Vec<usize>,
    pub linear: Vec<f64>,
    /// Indexed by the canonical rank of local variable pairs.
    pub quadratic: Vec<f64>,
    pub constant: f64,
}

impl QpboInstance {
    pub fn evaluate(&self, y: &[bool]) -> f64 {
        let mut acc = self.constant;
        for (p, &v) in self.linear.iter().enumerate() {
            if y[p] {
                acc += v;
            }
        }
        for ((p, q), &v) in pairs(self.vars.len()).zip(&self.quadratic) {
            if y[p] && y[q] {
                acc += v;
            }
        }
        acc
    }
}

/// QPBO whose minimum is `min Σ_{pq ∈ δ(R)} w_pq` over `R ∋ i` with `R ∩ s0 = ∅`.
///
/// Variable `y_p = 1` means `p ∈ R`; `R = {i} ∪ {p : y_p = 1}`.
pub fn constrained_cut_to_qpbo(w: &PairWeights, i: usize, s0: &[usize]) -> Result<QpboInstance> {
    let n = w.n();
    if i >= n || s0.iter().any(|&p| p >= n) {
        return Err(Error::InvalidArgument("element out of range".into()));
    }
    if s0.is_empty() {
        return Err(Error::InvalidArgument("s0 must be nonempty".into()));
    }
    if s0.contains(&i) {
        return Err(Error::InvalidArgument("i must not lie in s0".into()));
    }
    let mut fixed = vec![false; n];
    fixed[i] = true;
    for &p in s0 {
        fixed[p] = true;
    }
    let vars: Vec<usize> = (0..n).filter(|&p| !fixed[p]).collect();
    let linear = vars
        .iter()
        .map(|&p| {
            let row: f64 = (0..n).filter(|&q| q != p).map(|q| w.get(p, q)).sum();
            row - 2.0 * w.get(p, i)
        })
        .collect();
    let quadratic = pairs(vars.len())
        .map(|(a, b)| -2.0 * w.get(vars[a], vars[b]))
        .collect();
    let constant = (0..n).filter(|&q| q != i).map(|q| w.get(q, i)).sum();
    Ok(QpboInstance {
        vars,
        linear,
        quadratic,
        constant,
    })
}

/// `g(y) = Σ_p [a_p y_p or -a_p (1 - y_p)] + Σ_{p<q} b_pq (y_p(1-y_q) + y_q(1-y_p)) + constant`,
/// where the linear term takes the first form when `a_p >= 0` and the second otherwise.
#[derive(Clone, Debug, PartialEq)]
pub struct Posiform {
    pub vars: Vec<usize>,
    /// Signed `a_p`.
    pub linear: Vec<f64>,
    /// `b_pq`, indexed like [`QpboInstance::quadratic`].
    pub pair: Vec<f64>,
    pub constant: f64,
}

impl Posiform {
    pub fn evaluate(&self, y: &[bool]) -> f64 {
        let mut acc = self.constant;
        for (p, &a) in self.linear.iter().enumerate() {
            if a >= 0.0 {
                if y[p] {
                    acc += a;
                }
            } else if !y[p] {
                acc -= a;
            }
        }
        for ((p, q), &b) in pairs(self.vars.len()).zip(&self.pair) {
            if y[p] != y[q] {
                acc += b;
            }
        }
        acc
    }
}

/// Rewrites `c_pq y_p y_q` as `½c_pq y_p + ½c_pq y_q - ½c_pq (y_p(1-y_q) + y_q(1-y_p))`
/// and moves negative linear terms to the `(1 - y_p)` form.
pub fn qpbo_to_posiform(q: &QpboInstance) -> Posiform {
    let m = q.vars.len();
    let mut linear = q.linear.clone();
    for ((a, b), &v) in pairs(m).zip(&q.quadratic) {
        linear[a] += 0.5 * v;
        linear[b] += 0.5 * v;
    }
    let pair = q.quadratic.iter().map(|&v| -0.5 * v).collect();
    let constant = q.constant + linear.iter().filter(|&&a| a < 0.0).sum::<f64>();
    Posiform {
        vars: q.vars.clone(),
        linear,
        pair,
        constant,
    }
}

/// Network whose min s-t cut equals `min g - constant`; node `k` is variable `k`,
/// then source and sink. Source side means `y = 1`.
pub fn posiform_to_network(f: &Posiform) -> Result<FlowNetwork> {
    let m = f.vars.len();
    debug_assert_eq!(f.pair.len(), pair_count(m));
    let (s, t) = (m, m + 1);
    let mut net = FlowNetwork::new(m + 2, s, t);
    for (p, &a) in f.linear.iter().enumerate() {
        if a > 0.0 {
            net.add_arc(p, t, a)?;
        } else if a < 0.0 {
            net.add_arc(s, p, -a)?;
        }
    }
    for (p, q) in pairs(m) {
        let b = f.pair[pair_index(p, q)];
        if b < 0.0 {
            return Err(Error::NegativeCapacity {
                from: p,
                to: q,
                capacity: b,
            });
        }
        if b > 0.0 {
            net.add_arc(p, q, b)?;
            net.add_arc(q, p, b)?;
        }
    }
    Ok(net)
}
