//! Independent oracles: everything here works straight from the
//! multiplication table, without the library's bitset machinery.
#![allow(dead_code)]

use std::collections::BTreeSet;

use centlat::catalog::{catalog, CatalogEntry};
use centlat::FiniteGroup;

pub type Set = BTreeSet<usize>;

pub fn naive_centralizer(g: &FiniteGroup, xs: &Set) -> Set {
    g.elements()
        .filter(|&c| xs.iter().all(|&x| g.mul(c, x) == g.mul(x, c)))
        .collect()
}

/// Smallest subset containing `seed` and the identity that is closed under
/// multiplication (finite, so closed under inverses too).
pub fn naive_closure(g: &FiniteGroup, seed: &Set) -> Set {
    let mut s: Set = seed.clone();
    s.insert(g.identity());
    loop {
        let next: Set = s
            .iter()
            .flat_map(|&a| s.iter().map(move |&b| (a, b)))
            .map(|(a, b)| g.mul(a, b))
            .chain(s.iter().copied())
            .collect();
        if next.len() == s.len() {
            return s;
        }
        s = next;
    }
}

/// Tests every subset containing the identity for closure; only for
/// |G| ≤ 16.
pub fn brute_force_subgroups(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    assert!(n <= 16, "brute force is exponential");
    let e = g.identity();
    let others: Vec<usize> = g.elements().filter(|&x| x != e).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << others.len()) {
        let mut members = vec![e];
        members.extend(
            others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x),
        );
        let mut inside = vec![false; n];
        for &m in &members {
            inside[m] = true;
        }
        if members
            .iter()
            .all(|&a| members.iter().all(|&b| inside[g.mul(a, b)]))
        {
            members.sort_unstable();
            out.insert(members);
        }
    }
    out
}

pub fn to_set(it: impl IntoIterator<Item = usize>) -> Set {
    it.into_iter().collect()
}

pub fn catalog_upto(max: u64) -> Vec<CatalogEntry> {
    catalog(max).expect("catalog evaluates")
}

/// Builds the group `{(a, b) : p(a) = q(b)}` inside `A × B` from two maps
/// onto a common group, given as element tables.
pub fn fiber_product(a: &FiniteGroup, b: &FiniteGroup, p: &[usize], q: &[usize]) -> FiniteGroup {
    let pairs: Vec<(usize, usize)> = a
        .elements()
        .flat_map(|x| b.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| p[x] == q[y])
        .collect();
    let index = |pair: (usize, usize)| pairs.iter().position(|&p| p == pair).unwrap();
    let table = pairs
        .iter()
        .map(|&(x1, y1)| {
            pairs
                .iter()
                .map(|&(x2, y2)| index((a.mul(x1, x2), b.mul(y1, y2))))
                .collect()
        })
        .collect();
    FiniteGroup::from_multiplication_table(table, None).unwrap()
}

/// Table of the group on `0..n` with the given operation.
pub fn table_from_op(n: usize, op: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    let table = (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect();
    FiniteGroup::from_multiplication_table(table, None).unwrap()
}

/// The alternating group on four points, as even permutations composed
/// right to left.
pub fn alternating4() -> FiniteGroup {
    let mut perms: Vec<[usize; 4]> = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (0..i).all(|j| p[i] != p[j]));
                    let inversions = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                        .filter(|&(i, j)| p[i] > p[j])
                        .count();
                    if distinct && inversions % 2 == 0 {
                        perms.push(p);
                    }
                }
            }
        }
    }
    table_from_op(perms.len(), |x, y| {
        let (p, q) = (perms[x], perms[y]);
        let r = [p[q[0]], p[q[1]], p[q[2]], p[q[3]]];
        perms.iter().position(|&s| s == r).unwrap()
    })
}

/// `(Z2 × Z2) ⋊ Z4`, the generator of `Z4` swapping the two factors.
pub fn klein_by_four() -> FiniteGroup {
    // element v + 4j with v in 0..4 as two bits
    let swap = |v: usize| ((v & 1) << 1) | (v >> 1);
    table_from_op(16, |a, b| {
        let (v1, j1) = (a % 4, a / 4);
        let (v2, j2) = (b % 4, b / 4);
        let moved = if j1 % 2 == 1 { swap(v2) } else { v2 };
        (v1 ^ moved) + 4 * ((j1 + j2) % 4)
    })
}
