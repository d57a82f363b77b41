//! Colexicographic ranks for unordered pairs and triples.
//!
//! The rank of a sorted tuple `p < q` is `q(q-1)/2 + p`, of `p < q < r` it is
//! `r(r-1)(r-2)/6 + q(q-1)/2 + p`. Iterating ranks in increasing order visits
//! tuples in the canonical order used everywhere else in the crate.

/// Number of unordered pairs over `n` elements.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// Number of unordered triples over `n` elements.
#[inline]
pub const fn triple_count(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        n * (n - 1) * (n - 2) / 6
    }
}

/// Rank of the pair `{p, q}`; argument order does not matter.
#[inline]
pub fn pair_index(p: usize, q: usize) -> usize {
    debug_assert_ne!(p, q);
    let (a, b) = if p < q { (p, q) } else { (q, p) };
    b * (b - 1) / 2 + a
}

/// Rank of the triple `{p, q, r}`; argument order does not matter.
#[inline]
pub fn triple_index(p: usize, q: usize, r: usize) -> usize {
    let [a, b, c] = sort3(p, q, r);
    debug_assert!(a < b && b < c);
    c * (c - 1) * (c - 2) / 6 + b * (b - 1) / 2 + a
}

#[inline]
pub fn sort3(p: usize, q: usize, r: usize) -> [usize; 3] {
    let mut t = [p, q, r];
    if t[0] > t[1] {
        t.swap(0, 1);
    }
    if t[1] > t[2] {
        t.swap(1, 2);
    }
    if t[0] > t[1] {
        t.swap(0, 1);
    }
    t
}

/// All pairs `(p, q)` with `p < q < n`, in canonical order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|q| (0..q).map(move |p| (p, q)))
}

/// All triples `(p, q, r)` with `p < q < r < n`, in canonical order.
pub fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (2..n).flat_map(|r| (1..r).flat_map(move |q| (0..q).map(move |p| (p, q, r))))
}
