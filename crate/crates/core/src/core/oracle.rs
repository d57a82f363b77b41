//! Exhaustive enumeration of partitions, used as ground truth at small `n`.

use super::cost::CostFunction;
use super::partition::{evaluate_labels, Labeling, Partition};
use crate::error::{Error, Result};

/// Largest ground set the exhaustive routines accept by default.
pub const DEFAULT_ORACLE_BOUND: usize = 12;

/// Bell numbers `B(0..=25)`.
pub fn bell(n: usize) -> u64 {
    // Bell triangle.
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        row = next;
    }
    row[0]
}

/// Iterator over restricted growth strings of length `n`.
///
/// Each string `a` has `a[0] = 0` and `a[k] <= 1 + max(a[..k])`; these are in
/// bijection with the partitions of an `n`-set.
#[derive(Clone, Debug)]
pub struct GrowthStrings {
    a: Vec<usize>,
    // prefix maxima: m[k] = max(a[..=k])
    m: Vec<usize>,
    first: bool,
    done: bool,
}

impl GrowthStrings {
    pub fn new(n: usize) -> Self {
        GrowthStrings {
            a: vec![0; n],
            m: vec![0; n],
            first: true,
            done: false,
        }
    }
}

impl Iterator for GrowthStrings {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(self.a.clone());
        }
        let n = self.a.len();
        // Rightmost position that can be incremented.
        let mut k = n;
        while k > 1 {
            k -= 1;
            if self.a[k] <= self.m[k - 1] {
                self.a[k] += 1;
                self.m[k] = self.m[k - 1].max(self.a[k]);
                for t in k + 1..n {
                    self.a[t] = 0;
                    self.m[t] = self.m[k];
                }
                return Some(self.a.clone());
            }
        }
        self.done = true;
        None
    }
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        Err(Error::OracleBound { n, bound })
    } else {
        Ok(())
    }
}

/// Every partition of an `n`-set exactly once, under the default bound.
pub fn enumerate_partitions(n: usize) -> Result<impl Iterator<Item = Partition>> {
    enumerate_partitions_bounded(n, DEFAULT_ORACLE_BOUND)
}

pub fn enumerate_partitions_bounded(
    n: usize,
    bound: usize,
) -> Result<impl Iterator<Item = Partition>> {
    check_bound(n, bound)?;
    Ok(GrowthStrings::new(n).map(|a| Partition::from_labels(&a)))
}

/// A minimizing labeling and the minimum, under the default bound.
///
/// Ties go to the first partition in enumeration order.
pub fn solve_exact(c: &CostFunction) -> Result<(Labeling, f64)> {
    solve_exact_bounded(c, DEFAULT_ORACLE_BOUND)
}

pub fn solve_exact_bounded(c: &CostFunction, bound: usize) -> Result<(Labeling, f64)> {
    let (labels, v) = minimize_over(c, bound, |_| true)?.expect("at least one partition");
    Ok((Partition::from_labels(&labels).to_labeling(), v))
}

/// Minimum over the partitions whose growth string satisfies `keep`.
///
/// Returns `None` if no partition is admitted.
pub fn minimize_over<F>(c: &CostFunction, bound: usize, mut keep: F) -> Result<Option<(Vec<usize>, f64)>>
where
    F: FnMut(&[usize]) -> bool,
{
    check_bound(c.n(), bound)?;
    let mut best: Option<(Vec<usize>, f64)> = None;
    for a in GrowthStrings::new(c.n()) {
        if !keep(&a) {
            continue;
        }
        let v = evaluate_labels(c, &a);
        if best.as_ref().is_none_or(|(_, b)| v < *b) {
            best = Some((a, v));
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::core::index::pairs;

    #[test]
    fn bell_numbers() {
        let expected = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147];
        for (n, &b) in expected.iter().enumerate() {
            assert_eq!(bell(n), b);
        }
    }

    #[test]
    fn partition_counts() {
        for n in 1..=8 {
            assert_eq!(enumerate_partitions(n).unwrap().count() as u64, bell(n));
        }
        assert_eq!(enumerate_partitions(3).unwrap().count(), 5);
        assert_eq!(enumerate_partitions(5).unwrap().count(), 52);
        assert_eq!(enumerate_partitions(7).unwrap().count(), 877);
    }

    #[test]
    fn bound_is_enforced() {
        assert_eq!(
            enumerate_partitions(13).err(),
            Some(Error::OracleBound { n: 13, bound: 12 })
        );
        assert!(solve_exact(&CostFunction::zeros(13)).is_err());
        assert!(enumerate_partitions_bounded(5, 4).is_err());
    }

    #[test]
    fn counterexample_optimum() {
        let mut c = CostFunction::zeros(3);
        c.set_triple(0, 1, 2, 5.0);
        for (p, q) in pairs(3) {
            c.set_pair(p, q, -2.0);
        }
        let (x, v) = solve_exact(&c).unwrap();
        assert_eq!(v, -2.0);
        assert_eq!(x.values().iter().filter(|&&b| b).count(), 1);
    }

    #[test]
    fn zero_instance_optimum_is_zero() {
        let (x, v) = solve_exact(&CostFunction::zeros(5)).unwrap();
        assert_eq!(v, 0.0);
        // First partition in enumeration order is the single block.
        assert_eq!(x, Labeling::ones(5));
    }
}
