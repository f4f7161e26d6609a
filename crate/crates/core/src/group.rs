//! Finite groups stored as validated multiplication tables, and the
//! elementary subgroup computations built on them: closure, centralizers,
//! the center, commutators and full subgroup enumeration.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// Index of a group element, in `0..order`.
pub type Element = usize;

/// Largest group order the enumeration-heavy operations accept by default.
pub const DEFAULT_ORDER_CAP: usize = 256;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order must be positive")]
    EmptyGroup,
    #[error("table is not closed: {0}")]
    NotClosed(String),
    #[error("no identity element in table")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: Element },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: Element, b: Element, c: Element },
    #[error("generator {label:?} refers to element {element}, outside 0..{order}")]
    GeneratorOutOfRange {
        label: String,
        element: Element,
        order: usize,
    },
    #[error("generators {0:?} do not generate the whole group")]
    GeneratorsIncomplete(Vec<String>),
    #[error("expected {expected} element labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("element set is not a subgroup: {0}")]
    NotSubgroup(String),
}

struct GroupData {
    order: usize,
    table: Vec<Element>,
    identity: Element,
    inverse: Vec<Element>,
    generators: Vec<(String, Element)>,
    labels: Option<Vec<String>>,
    element_centralizers: OnceLock<Vec<FixedBitSet>>,
}

/// A finite group given by its multiplication table.
///
/// Cloning is cheap: the table is shared behind an [`Arc`].
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupData>);

impl FiniteGroup {
    /// Validates a multiplication table and builds a group from it.
    ///
    /// The identity is detected rather than assumed to sit at index 0.
    /// Without generator hints a generating set is chosen greedily in
    /// ascending index order and labelled `g1, g2, ...`.
    pub fn from_multiplication_table(
        table: Vec<Vec<Element>>,
        generator_hints: Option<Vec<(String, Element)>>,
    ) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::EmptyGroup);
        }
        let mut flat = Vec::with_capacity(order * order);
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotClosed(format!(
                    "row {a} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(GroupError::NotClosed(format!(
                        "{a}*{b} = {v} is outside 0..{order}"
                    )));
                }
                flat.push(v);
            }
        }
        Self::from_flat(order, flat, generator_hints, None)
    }

    pub(crate) fn from_flat(
        order: usize,
        table: Vec<Element>,
        generator_hints: Option<Vec<(String, Element)>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        debug_assert_eq!(table.len(), order * order);
        let at = |a: usize, b: usize| table[a * order + b];

        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(GroupError::NoIdentity)?;

        let mut inverse = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or(GroupError::NoInverse { element: a })?;
            inverse.push(inv);
        }

        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }

        if let Some(labels) = &labels {
            if labels.len() != order {
                return Err(GroupError::LabelCount {
                    expected: order,
                    got: labels.len(),
                });
            }
        }

        let mut group = GroupData {
            order,
            table,
            identity,
            inverse,
            generators: Vec::new(),
            labels,
            element_centralizers: OnceLock::new(),
        };

        let generators = match generator_hints {
            Some(hints) => {
                for (label, e) in &hints {
                    if *e >= order {
                        return Err(GroupError::GeneratorOutOfRange {
                            label: label.clone(),
                            element: *e,
                            order,
                        });
                    }
                }
                let span = closure_bits(&group, hints.iter().map(|(_, e)| *e));
                if span.count_ones(..) != order {
                    return Err(GroupError::GeneratorsIncomplete(
                        hints.into_iter().map(|(l, _)| l).collect(),
                    ));
                }
                hints
            }
            None => greedy_generators(&group)
                .into_iter()
                .enumerate()
                .map(|(i, e)| (format!("g{}", i + 1), e))
                .collect(),
        };
        group.generators = generators;
        Ok(FiniteGroup(Arc::new(group)))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> Element {
        self.0.identity
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.0.table[a * self.0.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.0.inverse[a]
    }

    /// `a` raised to a possibly negative power.
    pub fn pow(&self, a: Element, exp: i64) -> Element {
        let base = if exp < 0 { self.inv(a) } else { a };
        let period = self.element_order(a) as u64;
        let mut n = exp.unsigned_abs() % period;
        let mut acc = self.identity();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            n >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: Element) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The commutator `a⁻¹b⁻¹ab`.
    pub fn commutator(&self, a: Element, b: Element) -> Element {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub fn commutes(&self, a: Element, b: Element) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order()
    }

    pub fn generators(&self) -> &[(String, Element)] {
        &self.0.generators
    }

    pub fn generator(&self, label: &str) -> Option<Element> {
        self.0
            .generators
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, e)| *e)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.0.labels.as_deref()
    }

    /// Display name of an element: its label if the group carries labels,
    /// otherwise the index.
    pub fn label(&self, a: Element) -> String {
        match &self.0.labels {
            Some(labels) => labels[a].clone(),
            None => a.to_string(),
        }
    }

    /// Rows of the multiplication table.
    pub fn table(&self) -> Vec<Vec<Element>> {
        self.0
            .table
            .chunks(self.order())
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order()).all(|b| self.commutes(a, b)))
    }

    pub fn check_cap(&self, cap: usize) -> Result<(), GroupError> {
        if self.order() > cap {
            Err(GroupError::OrderCapExceeded {
                order: self.order(),
                cap,
            })
        } else {
            Ok(())
        }
    }

    /// Same group with display labels attached.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self, GroupError> {
        Self::from_flat(
            self.order(),
            self.0.table.clone(),
            Some(self.0.generators.clone()),
            Some(labels),
        )
    }

    /// Same group with a different set of named generators.
    pub fn with_generators(&self, generators: Vec<(String, Element)>) -> Result<Self, GroupError> {
        Self::from_flat(
            self.order(),
            self.0.table.clone(),
            Some(generators),
            self.0.labels.clone(),
        )
    }

    /// Smallest generating set found by scanning elements in ascending order
    /// and keeping each one that enlarges the span.
    pub fn greedy_generating_set(&self) -> Vec<Element> {
        greedy_generators(&self.0)
    }

    fn element_centralizers(&self) -> &[FixedBitSet] {
        self.0.element_centralizers.get_or_init(|| {
            let n = self.order();
            let mut cents = vec![FixedBitSet::with_capacity(n); n];
            for a in 0..n {
                for b in a..n {
                    if self.commutes(a, b) {
                        cents[a].insert(b);
                        cents[b].insert(a);
                    }
                }
            }
            cents
        })
    }

    /// Order of the centralizer of a single element.
    pub fn element_centralizer_order(&self, a: Element) -> usize {
        self.element_centralizers()[a].count_ones(..)
    }

    /// The subgroup generated by `seed`; the empty seed gives the trivial
    /// subgroup.
    pub fn closure<I: IntoIterator<Item = Element>>(&self, seed: I) -> SubgroupSet {
        SubgroupSet::from_bits_unchecked(self.clone(), closure_bits(&self.0, seed))
    }

    /// All elements commuting with every element of `target`.
    pub fn centralizer<I: IntoIterator<Item = Element>>(&self, target: I) -> SubgroupSet {
        let bits = self.centralizer_bits(target);
        SubgroupSet::from_bits_unchecked(self.clone(), bits)
    }

    pub(crate) fn centralizer_bits<I: IntoIterator<Item = Element>>(
        &self,
        target: I,
    ) -> FixedBitSet {
        let cents = self.element_centralizers();
        let mut bits = FixedBitSet::with_capacity(self.order());
        bits.insert_range(..);
        for x in target {
            bits.intersect_with(&cents[x]);
        }
        bits
    }

    pub fn center(&self) -> SubgroupSet {
        self.centralizer(self.elements())
    }

    /// Every commutator `a⁻¹b⁻¹ab`, ascending, including the identity.
    pub fn commutator_set(&self) -> Vec<Element> {
        let mut bits = FixedBitSet::with_capacity(self.order());
        for a in self.elements() {
            for b in self.elements() {
                bits.insert(self.commutator(a, b));
            }
        }
        bits.ones().collect()
    }

    pub fn derived_subgroup(&self) -> SubgroupSet {
        self.closure(self.commutator_set())
    }

    pub fn is_central(&self, s: &SubgroupSet) -> bool {
        debug_assert!(s.group() == self);
        s.is_subset(&self.center())
    }

    pub fn whole(&self) -> SubgroupSet {
        let mut bits = FixedBitSet::with_capacity(self.order());
        bits.insert_range(..);
        SubgroupSet::from_bits_unchecked(self.clone(), bits)
    }

    pub fn trivial_subgroup(&self) -> SubgroupSet {
        self.closure(std::iter::empty())
    }

    /// Every subgroup, sorted by order and then by ascending member list,
    /// using [`DEFAULT_ORDER_CAP`].
    pub fn all_subgroups(&self) -> Result<Vec<SubgroupSet>, GroupError> {
        self.all_subgroups_with_cap(DEFAULT_ORDER_CAP)
    }

    /// Every subgroup, found by seeding with the cyclic subgroups and
    /// saturating under joins with them.
    pub fn all_subgroups_with_cap(&self, cap: usize) -> Result<Vec<SubgroupSet>, GroupError> {
        self.check_cap(cap)?;
        let mut cyclic: Vec<(Element, FixedBitSet)> = Vec::new();
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        for e in self.elements() {
            let bits = closure_bits(&self.0, [e]);
            if seen.insert(bits.clone()) {
                cyclic.push((e, bits));
            }
        }

        let mut found: Vec<(Vec<Element>, FixedBitSet)> = cyclic
            .iter()
            .map(|(e, bits)| (vec![*e], bits.clone()))
            .collect();
        let mut queue: VecDeque<usize> = (0..found.len()).collect();
        while let Some(i) = queue.pop_front() {
            for (c, cbits) in &cyclic {
                if cbits.is_subset(&found[i].1) {
                    continue;
                }
                let mut gens = found[i].0.clone();
                gens.push(*c);
                let bits = closure_bits(&self.0, gens.iter().copied());
                if seen.insert(bits.clone()) {
                    found.push((gens, bits));
                    queue.push_back(found.len() - 1);
                }
            }
        }

        let mut subgroups: Vec<SubgroupSet> = found
            .into_iter()
            .map(|(_, bits)| SubgroupSet::from_bits_unchecked(self.clone(), bits))
            .collect();
        subgroups.sort();
        Ok(subgroups)
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order && self.0.table == other.0.table)
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order())
            .field("identity", &self.identity())
            .field("generators", &self.0.generators)
            .finish()
    }
}

fn closure_bits<I: IntoIterator<Item = Element>>(group: &GroupData, seed: I) -> FixedBitSet {
    let n = group.order;
    let mut gens: Vec<Element> = Vec::new();
    for e in seed {
        if e != group.identity && !gens.contains(&e) {
            gens.push(e);
            let inv = group.inverse[e];
            if !gens.contains(&inv) {
                gens.push(inv);
            }
        }
    }
    let mut bits = FixedBitSet::with_capacity(n);
    bits.insert(group.identity);
    let mut queue = VecDeque::from([group.identity]);
    while let Some(e) = queue.pop_front() {
        for &g in &gens {
            let p = group.table[e * n + g];
            if !bits.put(p) {
                queue.push_back(p);
            }
        }
    }
    bits
}

fn greedy_generators(group: &GroupData) -> Vec<Element> {
    let mut gens = Vec::new();
    let mut span = closure_bits(group, []);
    for e in 0..group.order {
        if span.count_ones(..) == group.order {
            break;
        }
        if !span.contains(e) {
            gens.push(e);
            span = closure_bits(group, gens.iter().copied());
        }
    }
    gens
}

/// A subgroup of a specific [`FiniteGroup`], stored as a membership bitset.
///
/// Ordering is by subgroup order, then by the ascending member list.
#[derive(Clone)]
pub struct SubgroupSet {
    group: FiniteGroup,
    members: FixedBitSet,
}

impl SubgroupSet {
    /// Validating constructor for an arbitrary element set.
    pub fn from_members<I: IntoIterator<Item = Element>>(
        group: &FiniteGroup,
        members: I,
    ) -> Result<Self, GroupError> {
        let mut bits = FixedBitSet::with_capacity(group.order());
        for e in members {
            if e >= group.order() {
                return Err(GroupError::NotSubgroup(format!(
                    "element {e} outside 0..{}",
                    group.order()
                )));
            }
            bits.insert(e);
        }
        let s = SubgroupSet {
            group: group.clone(),
            members: bits,
        };
        s.validate()?;
        Ok(s)
    }

    pub(crate) fn from_bits_unchecked(group: FiniteGroup, members: FixedBitSet) -> Self {
        let s = SubgroupSet { group, members };
        debug_assert!(s.validate().is_ok(), "{:?}", s.validate());
        s
    }

    /// Checks identity membership, closure under products and inverses, and
    /// Lagrange divisibility.
    pub fn validate(&self) -> Result<(), GroupError> {
        let g = &self.group;
        if !self.contains(g.identity()) {
            return Err(GroupError::NotSubgroup("identity missing".into()));
        }
        for a in self.iter() {
            if !self.contains(g.inv(a)) {
                return Err(GroupError::NotSubgroup(format!("inverse of {a} missing")));
            }
            for b in self.iter() {
                if !self.contains(g.mul(a, b)) {
                    return Err(GroupError::NotSubgroup(format!(
                        "{a}*{b} = {} missing",
                        g.mul(a, b)
                    )));
                }
            }
        }
        if !g.order().is_multiple_of(self.order()) {
            return Err(GroupError::NotSubgroup(format!(
                "order {} does not divide {}",
                self.order(),
                g.order()
            )));
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.members.count_ones(..)
    }

    #[inline]
    pub fn contains(&self, e: Element) -> bool {
        self.members.contains(e)
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.ones()
    }

    pub fn members(&self) -> Vec<Element> {
        self.iter().collect()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_subset(&self, other: &SubgroupSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        let mut bits = self.members.clone();
        bits.intersect_with(&other.members);
        SubgroupSet::from_bits_unchecked(self.group.clone(), bits)
    }

    /// The subgroup generated by both.
    pub fn join(&self, other: &SubgroupSet) -> SubgroupSet {
        self.group.closure(self.iter().chain(other.iter()))
    }

    /// Whether `g⁻¹ n g` stays inside for every `g`; returns the first
    /// conjugator that breaks it.
    pub fn normality_violation(&self) -> Option<Element> {
        let g = &self.group;
        g.elements().find(|&c| {
            self.iter()
                .any(|n| !self.contains(g.mul(g.mul(g.inv(c), n), c)))
        })
    }

    pub fn is_normal(&self) -> bool {
        self.normality_violation().is_none()
    }
}

impl PartialEq for SubgroupSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for SubgroupSet {}

impl Hash for SubgroupSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Ord for SubgroupSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for SubgroupSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> FiniteGroup {
        let table = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup::from_multiplication_table(table, None).unwrap()
    }

    /// S3 as permutations of {0,1,2}, composed by hand.
    fn s3() -> FiniteGroup {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| idx([p[q[0]], p[q[1]], p[q[2]]]))
                    .collect()
            })
            .collect();
        FiniteGroup::from_multiplication_table(table, None).unwrap()
    }

    /// Q8 from the quaternion unit products; index = 2*unit + sign bit, units 1,i,j,k.
    fn q8() -> FiniteGroup {
        // unit product table: (sign, unit)
        let prod = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        let table = (0..8)
            .map(|a: usize| {
                (0..8)
                    .map(|b: usize| {
                        let (s, u) = prod[a / 2][b / 2];
                        let neg = (a % 2 == 1) ^ (b % 2 == 1) ^ (s == -1);
                        2 * u + neg as usize
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_multiplication_table(table, None).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_multiplication_table(vec![vec![0]], None).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
        assert!(g.generators().is_empty());
        assert_eq!(g.all_subgroups().unwrap().len(), 1);
    }

    #[test]
    fn identity_is_detected_not_assumed() {
        // Z3 with the identity at index 2.
        let table = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
        let g = FiniteGroup::from_multiplication_table(table, None).unwrap();
        assert_eq!(g.identity(), 2);
        assert_eq!(g.inv(0), 1);
    }

    #[test]
    fn cyclic_addition_table() {
        let g = z(4);
        assert_eq!(g.identity(), 0);
        assert!(g.is_abelian());
        assert_eq!(g.generators(), &[("g1".to_string(), 1)]);
    }

    #[test]
    fn s3_is_accepted_and_nonabelian() {
        let g = s3();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.center().order(), 1);
        assert_eq!(g.all_subgroups().unwrap().len(), 6);
    }

    #[test]
    fn table_errors() {
        assert_eq!(
            FiniteGroup::from_multiplication_table(vec![], None).unwrap_err(),
            GroupError::EmptyGroup
        );
        assert!(matches!(
            FiniteGroup::from_multiplication_table(vec![vec![0, 2], vec![1, 0]], None),
            Err(GroupError::NotClosed(_))
        ));
        assert_eq!(
            FiniteGroup::from_multiplication_table(vec![vec![1, 1], vec![1, 1]], None).unwrap_err(),
            GroupError::NoIdentity
        );
        // Identity 0 but element 1 squares to 1 and row 1 has no 0.
        assert_eq!(
            FiniteGroup::from_multiplication_table(vec![vec![0, 1], vec![1, 1]], None).unwrap_err(),
            GroupError::NoInverse { element: 1 }
        );
        // Loop of order 5 with identity and inverses that is not associative.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_multiplication_table(loop5, None),
            Err(GroupError::NotAssociative { .. })
        ));
    }

    #[test]
    fn generator_hints_are_validated() {
        let table: Vec<Vec<usize>> = (0..4)
            .map(|a| (0..4).map(|b| (a + b) % 4).collect())
            .collect();
        assert!(matches!(
            FiniteGroup::from_multiplication_table(table.clone(), Some(vec![("x".into(), 2)])),
            Err(GroupError::GeneratorsIncomplete(_))
        ));
        assert!(matches!(
            FiniteGroup::from_multiplication_table(table.clone(), Some(vec![("x".into(), 9)])),
            Err(GroupError::GeneratorOutOfRange { .. })
        ));
        let g = FiniteGroup::from_multiplication_table(table, Some(vec![("x".into(), 3)])).unwrap();
        assert_eq!(g.generator("x"), Some(3));
    }

    #[test]
    fn closure_examples() {
        let g = z(4);
        assert_eq!(g.closure([]).members(), vec![0]);
        assert_eq!(g.closure([1]).order(), 4);
        assert_eq!(g.closure([2]).members(), vec![0, 2]);
        let q = q8();
        // i = 2, j = 4
        assert_eq!(q.closure([2, 4]).order(), 8);
    }

    #[test]
    fn centralizer_examples() {
        let q = q8();
        assert_eq!(q.centralizer([q.identity()]).order(), 8);
        assert_eq!(q.centralizer([2]).members(), vec![0, 1, 2, 3]);
        assert_eq!(q.center().members(), vec![0, 1]);
        assert!(z(6).centralizer([1, 3]).is_whole());
    }

    #[test]
    fn commutators_of_q8() {
        let q = q8();
        assert_eq!(q.commutator_set(), vec![0, 1]);
        assert_eq!(q.derived_subgroup().order(), 2);
        assert_eq!(z(5).commutator_set(), vec![0]);
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(z(7).all_subgroups().unwrap().len(), 2);
        let subs = q8().all_subgroups().unwrap();
        assert_eq!(subs.len(), 6);
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
        assert!(matches!(
            z(8).all_subgroups_with_cap(4),
            Err(GroupError::OrderCapExceeded { order: 8, cap: 4 })
        ));
    }

    #[test]
    fn is_central_examples() {
        let q = q8();
        assert!(q.is_central(&q.trivial_subgroup()));
        assert!(q.is_central(&q.closure([1])));
        assert!(!q.is_central(&q.closure([2])));
    }

    #[test]
    fn from_members_rejects_non_subgroups() {
        let g = z(4);
        assert!(SubgroupSet::from_members(&g, [0, 1]).is_err());
        assert!(SubgroupSet::from_members(&g, [1, 3]).is_err());
        assert!(SubgroupSet::from_members(&g, [0, 2]).is_ok());
    }

    #[test]
    fn pow_handles_negative_exponents() {
        let g = z(8);
        assert_eq!(g.pow(1, -1), 7);
        assert_eq!(g.pow(3, 2), 6);
        assert_eq!(g.pow(3, 0), 0);
        assert_eq!(g.pow(3, -11), g.pow(3, 5));
    }

    #[test]
    fn normality() {
        let g = s3();
        // transpositions generate non-normal subgroups of order 2
        let t = g.closure([1]);
        assert!(!t.is_normal());
        assert!(g.derived_subgroup().is_normal());
    }
}
