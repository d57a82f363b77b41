//! Dense cost functions and the instance JSON format.

use serde::{Deserialize, Serialize};

use super::index::{pair_count, pair_index, pairs, triple_count, triple_index, triples};
use crate::error::{Error, Result};

/// A finite ground set `{0, .., n-1}` with `n >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("ground set must be nonempty".into()));
        }
        Ok(GroundSet { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, p: usize) -> bool {
        p < self.n
    }
}

/// Costs for every pair, every triple and the empty set over `n` elements.
#[derive(Clone, Debug, PartialEq)]
pub struct CostFunction {
    n: usize,
    pair_costs: Vec<f64>,
    triple_costs: Vec<f64>,
    constant: f64,
}

impl CostFunction {
    /// All-zero cost function. Panics if `n == 0`.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "ground set must be nonempty");
        CostFunction {
            n,
            pair_costs: vec![0.0; pair_count(n)],
            triple_costs: vec![0.0; triple_count(n)],
            constant: 0.0,
        }
    }

    /// Builds a cost function from dense arrays in canonical order.
    pub fn from_parts(
        n: usize,
        pair_costs: Vec<f64>,
        triple_costs: Vec<f64>,
        constant: f64,
    ) -> Result<Self> {
        GroundSet::new(n)?;
        if pair_costs.len() != pair_count(n) {
            return Err(Error::InvalidInstance(format!(
                "expected {} pair costs, found {}",
                pair_count(n),
                pair_costs.len()
            )));
        }
        if triple_costs.len() != triple_count(n) {
            return Err(Error::InvalidInstance(format!(
                "expected {} triple costs, found {}",
                triple_count(n),
                triple_costs.len()
            )));
        }
        if !constant.is_finite()
            || pair_costs.iter().chain(triple_costs.iter()).any(|v| !v.is_finite())
        {
            return Err(Error::InvalidInstance("costs must be finite".into()));
        }
        Ok(CostFunction {
            n,
            pair_costs,
            triple_costs,
            constant,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn pair(&self, p: usize, q: usize) -> f64 {
        self.pair_costs[pair_index(p, q)]
    }

    #[inline]
    pub fn triple(&self, p: usize, q: usize, r: usize) -> f64 {
        self.triple_costs[triple_index(p, q, r)]
    }

    #[inline]
    pub fn constant(&self) -> f64 {
        self.constant
    }

    /// Dense pair costs in canonical order.
    pub fn pair_costs(&self) -> &[f64] {
        &self.pair_costs
    }

    /// Dense triple costs in canonical order.
    pub fn triple_costs(&self) -> &[f64] {
        &self.triple_costs
    }

    /// Panics on a non-finite value.
    pub fn set_pair(&mut self, p: usize, q: usize, v: f64) {
        assert!(v.is_finite(), "cost must be finite");
        self.pair_costs[pair_index(p, q)] = v;
    }

    /// Panics on a non-finite value.
    pub fn set_triple(&mut self, p: usize, q: usize, r: usize, v: f64) {
        assert!(v.is_finite(), "cost must be finite");
        self.triple_costs[triple_index(p, q, r)] = v;
    }

    /// Panics on a non-finite value.
    pub fn set_constant(&mut self, v: f64) {
        assert!(v.is_finite(), "cost must be finite");
        self.constant = v;
    }

    /// Sub-instance on `elems` (new element `k` is `elems[k]`), with the given constant.
    pub fn restrict(&self, elems: &[usize], constant: f64) -> CostFunction {
        let m = elems.len();
        let mut out = CostFunction::zeros(m);
        for (a, b) in pairs(m) {
            out.pair_costs[pair_index(a, b)] = self.pair(elems[a], elems[b]);
        }
        for (a, b, c) in triples(m) {
            out.triple_costs[triple_index(a, b, c)] = self.triple(elems[a], elems[b], elems[c]);
        }
        out.constant = constant;
        out
    }

    /// Relabels element `p` as `perm[p]`.
    pub fn permute(&self, perm: &[usize]) -> Result<CostFunction> {
        check_permutation(perm, self.n)?;
        let mut out = CostFunction::zeros(self.n);
        for (p, q) in pairs(self.n) {
            out.set_pair(perm[p], perm[q], self.pair(p, q));
        }
        for (p, q, r) in triples(self.n) {
            out.set_triple(perm[p], perm[q], perm[r], self.triple(p, q, r));
        }
        out.constant = self.constant;
        Ok(out)
    }

    /// Parses the instance JSON format.
    pub fn from_json(s: &str) -> Result<CostFunction> {
        let file: InstanceFile =
            serde_json::from_str(s).map_err(|e| Error::InvalidInstance(e.to_string()))?;
        file.into_cost()
    }

    /// Serializes to the instance JSON format, listing nonzero entries only.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&InstanceFile::from_cost(self))
            .expect("instance serialization cannot fail")
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: perm.len(),
        });
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
        seen[p] = true;
    }
    Ok(())
}

/// On-disk instance: `{"n", "constant", "pairs": [[p,q,c]], "triples": [[p,q,r,c]]}`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    n: usize,
    #[serde(default)]
    constant: f64,
    #[serde(default)]
    pairs: Vec<(usize, usize, f64)>,
    #[serde(default)]
    triples: Vec<(usize, usize, usize, f64)>,
}

impl InstanceFile {
    fn from_cost(c: &CostFunction) -> Self {
        InstanceFile {
            n: c.n,
            constant: c.constant,
            pairs: pairs(c.n)
                .zip(c.pair_costs.iter())
                .filter(|(_, &v)| v != 0.0)
                .map(|((p, q), &v)| (p, q, v))
                .collect(),
            triples: triples(c.n)
                .zip(c.triple_costs.iter())
                .filter(|(_, &v)| v != 0.0)
                .map(|((p, q, r), &v)| (p, q, r, v))
                .collect(),
        }
    }

    fn into_cost(self) -> Result<CostFunction> {
        let n = self.n;
        GroundSet::new(n).map_err(|_| Error::InvalidInstance("n must be at least 1".into()))?;
        let mut c = CostFunction::zeros(n);
        let finite = |v: f64| {
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::InvalidInstance("costs must be finite".into()))
            }
        };
        c.constant = finite(self.constant)?;
        let mut seen = vec![false; pair_count(n)];
        for (p, q, v) in self.pairs {
            if !(p < q && q < n) {
                return Err(Error::InvalidInstance(format!(
                    "pair ({p}, {q}) must satisfy p < q < n"
                )));
            }
            let k = pair_index(p, q);
            if std::mem::replace(&mut seen[k], true) {
                return Err(Error::InvalidInstance(format!("duplicate pair ({p}, {q})")));
            }
            c.pair_costs[k] = finite(v)?;
        }
        let mut seen = vec![false; triple_count(n)];
        for (p, q, r, v) in self.triples {
            if !(p < q && q < r && r < n) {
                return Err(Error::InvalidInstance(format!(
                    "triple ({p}, {q}, {r}) must satisfy p < q < r < n"
                )));
            }
            let k = triple_index(p, q, r);
            if std::mem::replace(&mut seen[k], true) {
                return Err(Error::InvalidInstance(format!(
                    "duplicate triple ({p}, {q}, {r})"
                )));
            }
            c.triple_costs[k] = finite(v)?;
        }
        Ok(c)
    }
}

/// Positive part `max(0, r)`.
#[inline]
pub fn pos(r: f64) -> f64 {
    r.max(0.0)
}

/// Negative part `max(0, -r)`.
#[inline]
pub fn neg(r: f64) -> f64 {
    (-r).max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_is_exact() {
        let mut c = CostFunction::zeros(4);
        c.set_pair(0, 3, -0.1);
        c.set_pair(1, 2, 1.0 / 3.0);
        c.set_triple(3, 1, 2, 2.5e-17);
        c.set_constant(-7.25);
        let back = CostFunction::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn json_defaults_and_validation() {
        let c = CostFunction::from_json(r#"{"n": 3}"#).unwrap();
        assert_eq!(c, CostFunction::zeros(3));
        assert!(CostFunction::from_json(r#"{"n": 3, "pairs": [[1, 0, 1.0]]}"#).is_err());
        assert!(CostFunction::from_json(r#"{"n": 3, "pairs": [[0, 3, 1.0]]}"#).is_err());
        assert!(CostFunction::from_json(r#"{"n": 3, "triples": [[0, 2, 1, 1.0]]}"#).is_err());
        assert!(
            CostFunction::from_json(r#"{"n": 3, "pairs": [[0, 1, 1.0], [0, 1, 2.0]]}"#).is_err()
        );
        assert!(CostFunction::from_json(r#"{"n": 0}"#).is_err());
        assert!(CostFunction::from_json(r#"{"n": 2, "extra": 1}"#).is_err());
    }

    #[test]
    fn restrict_and_permute() {
        let mut c = CostFunction::zeros(4);
        c.set_pair(1, 3, 2.0);
        c.set_triple(0, 1, 3, -1.0);
        let r = c.restrict(&[3, 1, 0], 0.5);
        assert_eq!(r.pair(0, 1), 2.0);
        assert_eq!(r.triple(0, 1, 2), -1.0);
        assert_eq!(r.constant(), 0.5);
        let p = c.permute(&[3, 2, 1, 0]).unwrap();
        assert_eq!(p.pair(2, 0), 2.0);
        assert_eq!(p.triple(3, 2, 0), -1.0);
        assert!(c.permute(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn parts() {
        assert_eq!(pos(-2.0), 0.0);
        assert_eq!(pos(2.0), 2.0);
        assert_eq!(neg(-2.0), 2.0);
        assert_eq!(neg(2.0), 0.0);
    }
}
