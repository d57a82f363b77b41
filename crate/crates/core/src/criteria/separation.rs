//! Subset separation and region growing.

use crate::core::{pairs, triples, CostFunction, Partition};
use crate::maps::ElementSubset;

/// True iff `c_pq >= 0` on `δ(R)` and `c_pqr >= 0` on `T_δ(R)`.
///
/// Such an `R` can be cut off from its complement in some optimal solution.
pub fn check_subset_separation(c: &CostFunction, r: &ElementSubset) -> bool {
    let n = c.n();
    let in_r = r.mask();
    let pair_ok = pairs(n)
        .zip(c.pair_costs())
        .all(|((p, q), &v)| in_r[p] == in_r[q] || v >= 0.0);
    pair_ok
        && triples(n).zip(c.triple_costs()).all(|((p, q, r), &v)| {
            let k = in_r[p] as u8 + in_r[q] as u8 + in_r[r] as u8;
            k == 0 || k == 3 || v >= 0.0
        })
}

/// Grows blocks from each unassigned element by absorbing every element tied to
/// the block by a negative pair or triple crossing its boundary.
///
/// Seeds are taken in ascending order. A block closed this way has no negative
/// entry on its boundary, so later blocks never reach into earlier ones.
pub fn region_growing(c: &CostFunction) -> Partition {
    let n = c.n();
    let mut label = vec![usize::MAX; n];
    let mut blocks = 0;
    for seed in 0..n {
        if label[seed] != usize::MAX {
            continue;
        }
        let b = blocks;
        blocks += 1;
        label[seed] = b;
        let mut stack = vec![seed];
        while let Some(a) = stack.pop() {
            for x in 0..n {
                if x == a || label[x] == b {
                    continue;
                }
                if c.pair(a, x) < 0.0 {
                    debug_assert_eq!(label[x], usize::MAX);
                    label[x] = b;
                    stack.push(x);
                }
            }
            for x in 0..n {
                if x == a {
                    continue;
                }
                for y in x + 1..n {
                    if y == a || (label[x] == b && label[y] == b) {
                        continue;
                    }
                    if c.triple(a, x, y) < 0.0 {
                        for z in [x, y] {
                            if label[z] != b {
                                debug_assert_eq!(label[z], usize::MAX);
                                label[z] = b;
                                stack.push(z);
                            }
                        }
                    }
                }
            }
        }
    }
    Partition::from_labels(&label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nonnegative_costs_give_singletons() {
        let mut c = CostFunction::zeros(5);
        c.set_pair(0, 1, 1.0);
        c.set_triple(1, 2, 3, 0.5);
        assert_eq!(region_growing(&c), Partition::singletons(5));
    }

    #[test]
    fn one_negative_pair() {
        let mut c = CostFunction::zeros(4);
        c.set_pair(0, 1, -1.0);
        let p = region_growing(&c);
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2], vec![3]]);
    }

    #[test]
    fn triples_pull_in_both_elements() {
        let mut c = CostFunction::zeros(5);
        c.set_triple(1, 3, 4, -1.0);
        c.set_pair(0, 4, -0.5);
        let p = region_growing(&c);
        assert_eq!(p.blocks(), &[vec![0, 1, 3, 4], vec![2]]);
    }

    #[test]
    fn separation_checks() {
        let mut c = CostFunction::zeros(3);
        c.set_triple(0, 1, 2, 5.0);
        for (p, q) in pairs(3) {
            c.set_pair(p, q, -2.0);
        }
        assert!(check_subset_separation(&c, &ElementSubset::full(3)));
        let r = ElementSubset::new(3, &[0]).unwrap();
        assert!(!check_subset_separation(&c, &r));
        let pos = CostFunction::zeros(3);
        assert!(check_subset_separation(&pos, &r));
    }
}
