//! The centralizer lattice of a finite group, maps between such lattices,
//! and the checks run on them: homomorphism laws, isomorphism search, and
//! functoriality of the induced maps.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError, SubgroupSet};
use crate::homs::{compose, CrhHom, GroupHom, HomError};

/// Index of a node in a [`CentralizerLattice`].
pub type Node = usize;

/// Default bound on node counts for isomorphism search.
pub const DEFAULT_NODE_CAP: usize = 4096;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error("lattice has {nodes} nodes, above the cap {cap}")]
    NodeCapExceeded { nodes: usize, cap: usize },
    #[error("lattice is not built from the homomorphism's {0} group")]
    WrongGroup(&'static str),
    #[error("image of node {node} is not a node of the target lattice")]
    ImageNotANode { node: Node },
    #[error("lattice invariant violated: {0}")]
    Inconsistent(String),
}

/// All centralizers `C_G(X)` of a group, ordered by inclusion.
///
/// Nodes are sorted by subgroup order, then by ascending member list, so
/// node indices are canonical for a given multiplication table.
#[derive(Clone, Debug)]
pub struct CentralizerLattice {
    group: FiniteGroup,
    nodes: Vec<SubgroupSet>,
    index: HashMap<FixedBitSet, Node>,
    leq: Vec<FixedBitSet>,
    meet: Vec<Vec<Node>>,
    join: Vec<Vec<Node>>,
    involution: Vec<Node>,
    top: Node,
    bottom: Node,
}

impl CentralizerLattice {
    /// Builds the lattice from single-element centralizers, saturated under
    /// intersection, plus the whole group; every table is then validated.
    pub fn build(group: &FiniteGroup, cap: usize) -> Result<Self, LatticeError> {
        group.check_cap(cap)?;
        let mut seen: HashMap<FixedBitSet, ()> = HashMap::new();
        let mut sets: Vec<FixedBitSet> = Vec::new();
        let mut push = |bits: FixedBitSet, sets: &mut Vec<FixedBitSet>| {
            if seen.insert(bits.clone(), ()).is_none() {
                sets.push(bits);
            }
        };
        push(group.whole().bits().clone(), &mut sets);
        for g in group.elements() {
            push(group.centralizer_bits([g]), &mut sets);
        }
        let mut i = 0;
        while i < sets.len() {
            for j in 0..i {
                let mut meet = sets[i].clone();
                meet.intersect_with(&sets[j]);
                push(meet, &mut sets);
            }
            i += 1;
        }

        let mut nodes: Vec<SubgroupSet> = sets
            .into_iter()
            .map(|bits| SubgroupSet::from_bits_unchecked(group.clone(), bits))
            .collect();
        nodes.sort();
        let n = nodes.len();
        let index: HashMap<FixedBitSet, Node> = nodes
            .iter()
            .enumerate()
            .map(|(i, s)| (s.bits().clone(), i))
            .collect();
        let lookup = |bits: &FixedBitSet| -> Result<Node, LatticeError> {
            index.get(bits).copied().ok_or_else(|| {
                LatticeError::Inconsistent(format!(
                    "{:?} is not a node",
                    bits.ones().collect::<Vec<_>>()
                ))
            })
        };

        let leq: Vec<FixedBitSet> = nodes
            .iter()
            .map(|s| {
                let mut row = FixedBitSet::with_capacity(n);
                row.extend((0..n).filter(|&t| s.is_subset(&nodes[t])));
                row
            })
            .collect();

        let involution = nodes
            .iter()
            .map(|s| lookup(&group.centralizer_bits(s.iter())))
            .collect::<Result<Vec<_>, _>>()?;

        let mut meet = vec![vec![0; n]; n];
        for s in 0..n {
            for t in s..n {
                let mut bits = nodes[s].bits().clone();
                bits.intersect_with(nodes[t].bits());
                let m = lookup(&bits)?;
                meet[s][t] = m;
                meet[t][s] = m;
            }
        }

        // join = C(C(s) ∧ C(t))
        let mut join = vec![vec![0; n]; n];
        for s in 0..n {
            for t in s..n {
                let j = involution[meet[involution[s]][involution[t]]];
                join[s][t] = j;
                join[t][s] = j;
            }
        }

        let top = lookup(group.whole().bits())?;
        let bottom = lookup(group.center().bits())?;
        let lattice = CentralizerLattice {
            group: group.clone(),
            nodes,
            index,
            leq,
            meet,
            join,
            involution,
            top,
            bottom,
        };
        lattice.validate()?;
        Ok(lattice)
    }

    /// Re-checks every structural invariant against the poset.
    pub fn validate(&self) -> Result<(), LatticeError> {
        let n = self.len();
        let fail = |msg: String| Err(LatticeError::Inconsistent(msg));
        for s in 0..n {
            if self
                .group
                .centralizer_bits(self.group.centralizer_bits(self.nodes[s].iter()).ones())
                != *self.nodes[s].bits()
            {
                return fail(format!("node {s} is not a centralizer"));
            }
            if !self.leq(s, self.top) || !self.leq(self.bottom, s) {
                return fail(format!("node {s} is not between bottom and top"));
            }
            let inv = self.involution[s];
            if self.involution[inv] != s {
                return fail(format!("involution is not an involution at node {s}"));
            }
            for t in 0..n {
                if self.leq(s, t) && self.leq(t, s) && s != t {
                    return fail(format!("nodes {s} and {t} coincide"));
                }
                if self.leq(s, t) && !self.leq(self.involution[t], inv) {
                    return fail(format!("involution not antitone at {s} <= {t}"));
                }
                let m = self.meet[s][t];
                let j = self.join[s][t];
                let lower: Vec<Node> = (0..n)
                    .filter(|&u| self.leq(u, s) && self.leq(u, t))
                    .collect();
                if !lower.contains(&m) || lower.iter().any(|&u| !self.leq(u, m)) {
                    return fail(format!(
                        "meet of {s} and {t} is not the greatest lower bound"
                    ));
                }
                let upper: Vec<Node> = (0..n)
                    .filter(|&u| self.leq(s, u) && self.leq(t, u))
                    .collect();
                if !upper.contains(&j) || upper.iter().any(|&u| !self.leq(j, u)) {
                    return fail(format!("join of {s} and {t} is not the least upper bound"));
                }
            }
        }
        if self.involution[self.top] != self.bottom || self.involution[self.bottom] != self.top {
            return fail("involution does not swap top and bottom".into());
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[SubgroupSet] {
        &self.nodes
    }

    pub fn node(&self, s: Node) -> &SubgroupSet {
        &self.nodes[s]
    }

    /// Node whose member set equals `s`, if any.
    pub fn find(&self, s: &SubgroupSet) -> Option<Node> {
        self.index.get(s.bits()).copied()
    }

    pub(crate) fn find_bits(&self, bits: &FixedBitSet) -> Option<Node> {
        self.index.get(bits).copied()
    }

    #[inline]
    pub fn leq(&self, s: Node, t: Node) -> bool {
        self.leq[s].contains(t)
    }

    pub fn meet(&self, s: Node, t: Node) -> Node {
        self.meet[s][t]
    }

    pub fn join(&self, s: Node, t: Node) -> Node {
        self.join[s][t]
    }

    /// `C_G(s)`.
    pub fn involution(&self, s: Node) -> Node {
        self.involution[s]
    }

    pub fn top(&self) -> Node {
        self.top
    }

    pub fn bottom(&self) -> Node {
        self.bottom
    }

    /// Pairs `(upper, lower)` where `lower` is covered by `upper`.
    pub fn covers(&self) -> Vec<(Node, Node)> {
        let n = self.len();
        let mut out = Vec::new();
        for upper in 0..n {
            for lower in 0..n {
                if lower == upper || !self.leq(lower, upper) {
                    continue;
                }
                let between = (0..n)
                    .any(|m| m != lower && m != upper && self.leq(lower, m) && self.leq(m, upper));
                if !between {
                    out.push((upper, lower));
                }
            }
        }
        out
    }

    /// Length of the longest chain from the top down to each node.
    pub fn ranks(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<Node> = (0..n).collect();
        // larger subgroups first
        order.sort_by_key(|&s| std::cmp::Reverse(self.nodes[s].order()));
        let mut rank = vec![0; n];
        for (i, &s) in order.iter().enumerate() {
            for &u in &order[..i] {
                if u != s && self.leq(s, u) {
                    rank[s] = rank[s].max(rank[u] + 1);
                }
            }
        }
        rank
    }

    fn up_set_size(&self, s: Node) -> usize {
        self.leq[s].count_ones(..)
    }

    fn down_set_size(&self, s: Node) -> usize {
        (0..self.len()).filter(|&t| self.leq(t, s)).count()
    }
}

/// A node map between two centralizer lattices.
#[derive(Clone, Debug)]
pub struct LatticeMap<'a> {
    source: &'a CentralizerLattice,
    target: &'a CentralizerLattice,
    node_map: Vec<Node>,
}

impl<'a> LatticeMap<'a> {
    pub fn new(
        source: &'a CentralizerLattice,
        target: &'a CentralizerLattice,
        node_map: Vec<Node>,
    ) -> Result<Self, LatticeError> {
        if node_map.len() != source.len() || node_map.iter().any(|&t| t >= target.len()) {
            return Err(LatticeError::Inconsistent(
                "node map is not a total map into the target".into(),
            ));
        }
        Ok(LatticeMap {
            source,
            target,
            node_map,
        })
    }

    pub fn identity(lattice: &'a CentralizerLattice) -> Self {
        LatticeMap {
            source: lattice,
            target: lattice,
            node_map: (0..lattice.len()).collect(),
        }
    }

    pub fn source(&self) -> &'a CentralizerLattice {
        self.source
    }

    pub fn target(&self) -> &'a CentralizerLattice {
        self.target
    }

    pub fn node_map(&self) -> &[Node] {
        &self.node_map
    }

    pub fn apply(&self, s: Node) -> Node {
        self.node_map[s]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.target.len());
        self.node_map.iter().all(|&t| !seen.put(t))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.target.len());
        seen.extend(self.node_map.iter().copied());
        seen.count_ones(..) == self.target.len()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// `self` after `first`.
    pub fn after(&self, first: &LatticeMap<'a>) -> Result<LatticeMap<'a>, LatticeError> {
        if !std::ptr::eq(first.target, self.source) {
            return Err(LatticeError::Hom(HomError::DomainMismatch));
        }
        Ok(LatticeMap {
            source: first.source,
            target: self.target,
            node_map: first.node_map.iter().map(|&s| self.node_map[s]).collect(),
        })
    }
}

impl PartialEq for LatticeMap<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.source, other.source)
            && std::ptr::eq(self.target, other.target)
            && self.node_map == other.node_map
    }
}

/// `C_G(X) ↦ φ(C_G(X))`, which for a centralizer-respecting `φ` is
/// `C_H(φ(X))`.
pub fn induced_map<'a>(
    phi: &CrhHom,
    source: &'a CentralizerLattice,
    target: &'a CentralizerLattice,
) -> Result<LatticeMap<'a>, LatticeError> {
    let hom = phi.hom();
    if hom.source() != source.group() {
        return Err(LatticeError::WrongGroup("source"));
    }
    if hom.target() != target.group() {
        return Err(LatticeError::WrongGroup("target"));
    }
    let node_map = source
        .nodes()
        .iter()
        .enumerate()
        .map(|(s, node)| {
            target
                .find_bits(&hom.image_bits(node.iter()))
                .ok_or(LatticeError::ImageNotANode { node: s })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LatticeMap {
        source,
        target,
        node_map,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeLaw {
    Meet,
    Join,
    Involution,
}

/// Nodes at which a map breaks one of the laws; `t` is absent for the
/// involution law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawWitness {
    pub law: LatticeLaw,
    pub s: Node,
    pub t: Option<Node>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeHomReport {
    pub violation: Option<LawWitness>,
    pub preserves_top: bool,
    pub preserves_bottom: bool,
}

impl LatticeHomReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks meet, join and involution preservation on every node pair; top
/// and bottom preservation is reported separately and not required.
pub fn is_lattice_hom(m: &LatticeMap<'_>) -> LatticeHomReport {
    let (src, tgt) = (m.source, m.target);
    let f = |s: Node| m.node_map[s];
    let mut violation = None;
    'outer: for s in 0..src.len() {
        if f(src.involution(s)) != tgt.involution(f(s)) {
            violation = Some(LawWitness {
                law: LatticeLaw::Involution,
                s,
                t: None,
            });
            break;
        }
        for t in 0..src.len() {
            if f(src.meet(s, t)) != tgt.meet(f(s), f(t)) {
                violation = Some(LawWitness {
                    law: LatticeLaw::Meet,
                    s,
                    t: Some(t),
                });
                break 'outer;
            }
            if f(src.join(s, t)) != tgt.join(f(s), f(t)) {
                violation = Some(LawWitness {
                    law: LatticeLaw::Join,
                    s,
                    t: Some(t),
                });
                break 'outer;
            }
        }
    }
    LatticeHomReport {
        violation,
        preserves_top: f(src.top()) == tgt.top(),
        preserves_bottom: f(src.bottom()) == tgt.bottom(),
    }
}

/// Order-theoretic invariants of a node; never the subgroup order, which
/// is not preserved by abstract lattice isomorphisms.
fn node_fingerprints(l: &CentralizerLattice) -> Vec<(usize, usize, usize, bool)> {
    let ranks = l.ranks();
    (0..l.len())
        .map(|s| {
            (
                ranks[s],
                l.up_set_size(s),
                l.down_set_size(s),
                l.involution(s) == s,
            )
        })
        .collect()
}

/// Searches for a bijection preserving the order in both directions and
/// commuting with the involutions.
pub fn lattices_isomorphic<'a>(
    a: &'a CentralizerLattice,
    b: &'a CentralizerLattice,
    node_cap: usize,
) -> Result<Option<LatticeMap<'a>>, LatticeError> {
    for l in [a, b] {
        if l.len() > node_cap {
            return Err(LatticeError::NodeCapExceeded {
                nodes: l.len(),
                cap: node_cap,
            });
        }
    }
    if a.len() != b.len() {
        return Ok(None);
    }
    let fa = node_fingerprints(a);
    let fb = node_fingerprints(b);
    let mut sa = fa.clone();
    let mut sb = fb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(None);
    }
    let candidates: Vec<Vec<Node>> = (0..a.len())
        .map(|s| (0..b.len()).filter(|&t| fb[t] == fa[s]).collect())
        .collect();

    struct Search<'l> {
        a: &'l CentralizerLattice,
        b: &'l CentralizerLattice,
        candidates: Vec<Vec<Node>>,
        map: Vec<Option<Node>>,
        used: FixedBitSet,
    }

    impl Search<'_> {
        fn consistent(&self, s: Node, t: Node) -> bool {
            for (u, image) in self.map.iter().enumerate() {
                let Some(v) = *image else { continue };
                if self.a.leq(s, u) != self.b.leq(t, v) || self.a.leq(u, s) != self.b.leq(v, t) {
                    return false;
                }
            }
            let inv = self.a.involution(s);
            if inv == s {
                return self.b.involution(t) == t;
            }
            match self.map[inv] {
                Some(v) => self.b.involution(t) == v,
                None => !self.used.contains(self.b.involution(t)),
            }
        }

        fn run(&mut self, s: Node) -> bool {
            if s == self.a.len() {
                return true;
            }
            if self.map[s].is_some() {
                return self.run(s + 1);
            }
            for i in 0..self.candidates[s].len() {
                let t = self.candidates[s][i];
                if self.used.contains(t) || !self.consistent(s, t) {
                    continue;
                }
                self.map[s] = Some(t);
                self.used.insert(t);
                // the involution partner is forced
                let partner = self.a.involution(s);
                let forced = partner != s && self.map[partner].is_none();
                let partner_image = self.b.involution(t);
                let mut ok = true;
                if forced {
                    if !self.used.contains(partner_image)
                        && self.consistent(partner, partner_image)
                        && self.candidates[partner].contains(&partner_image)
                    {
                        self.map[partner] = Some(partner_image);
                        self.used.insert(partner_image);
                    } else {
                        ok = false;
                    }
                }
                if ok && self.run(s + 1) {
                    return true;
                }
                if forced && ok {
                    self.map[partner] = None;
                    self.used.set(partner_image, false);
                }
                self.map[s] = None;
                self.used.set(t, false);
            }
            false
        }
    }

    let mut search = Search {
        a,
        b,
        candidates,
        map: vec![None; a.len()],
        used: FixedBitSet::with_capacity(b.len()),
    };
    if !search.run(0) {
        return Ok(None);
    }
    let node_map: Vec<Node> = search
        .map
        .into_iter()
        .map(|t| t.expect("complete"))
        .collect();
    let m = LatticeMap {
        source: a,
        target: b,
        node_map,
    };
    debug_assert!(m.is_bijective() && is_lattice_hom(&m).holds());
    Ok(Some(m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorialityReport {
    /// The composite was itself certified centralizer-respecting.
    pub composite_is_crh: bool,
    /// Induced map of the composite equals the composite of induced maps.
    pub composition_law: bool,
    /// Identities on all three groups induce identity lattice maps.
    pub identity_law: bool,
    /// All three induced maps pass [`is_lattice_hom`].
    pub lattice_homs: bool,
}

impl FunctorialityReport {
    pub fn holds(&self) -> bool {
        self.composite_is_crh && self.composition_law && self.identity_law && self.lattice_homs
    }
}

/// Checks the functor square for `phi: G → H` followed by `psi: H → K`.
pub fn verify_functoriality(
    phi: &GroupHom,
    psi: &GroupHom,
    cap: usize,
) -> Result<FunctorialityReport, LatticeError> {
    if phi.target() != psi.source() {
        return Err(HomError::DomainMismatch.into());
    }
    let phi = CrhHom::certify(phi.clone(), cap)?;
    let psi = CrhHom::certify(psi.clone(), cap)?;
    let composite = compose(psi.hom(), phi.hom())?;
    let composite = CrhHom::certify(composite, cap).ok();

    let lg = CentralizerLattice::build(phi.hom().source(), cap)?;
    let lh = CentralizerLattice::build(phi.hom().target(), cap)?;
    let lk = CentralizerLattice::build(psi.hom().target(), cap)?;

    let m_phi = induced_map(&phi, &lg, &lh)?;
    let m_psi = induced_map(&psi, &lh, &lk)?;

    let mut identity_law = true;
    for (l, g) in [(&lg, lg.group()), (&lh, lh.group()), (&lk, lk.group())] {
        identity_law &= induced_map(&CrhHom::identity(g), l, l)? == LatticeMap::identity(l);
    }

    let mut lattice_homs = is_lattice_hom(&m_phi).holds() && is_lattice_hom(&m_psi).holds();
    let composition_law = match &composite {
        Some(c) => {
            let m_comp = induced_map(c, &lg, &lk)?;
            lattice_homs &= is_lattice_hom(&m_comp).holds();
            m_comp == m_psi.after(&m_phi)?
        }
        None => false,
    };

    Ok(FunctorialityReport {
        composite_is_crh: composite.is_some(),
        composition_law,
        identity_law,
        lattice_homs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cover_group, cyclic, make_family, semidirect_cyclic, CoverKind, Family};
    use crate::homs::quotient;

    fn lattice(g: &FiniteGroup) -> CentralizerLattice {
        CentralizerLattice::build(g, 256).unwrap()
    }

    #[test]
    fn abelian_lattice_is_a_point() {
        let l = lattice(&cyclic(12).unwrap());
        assert_eq!(l.len(), 1);
        assert_eq!(l.top(), l.bottom());
    }

    #[test]
    fn z4_by_z4_lattices() {
        let g = semidirect_cyclic(4, 4, 3).unwrap();
        let l = lattice(&g);
        let orders: Vec<usize> = l.nodes().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![4, 8, 8, 8, 16]);

        let q8 = make_family(Family::Quaternion, 8).unwrap();
        let lq = lattice(&q8);
        let orders: Vec<usize> = lq.nodes().iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![2, 4, 4, 4, 8]);
    }

    #[test]
    fn q8_meet_join_involution() {
        let q8 = make_family(Family::Quaternion, 8).unwrap();
        let l = lattice(&q8);
        let (i, j) = (1, 2);
        assert_eq!(l.meet(i, j), l.bottom());
        assert_eq!(l.join(i, j), l.top());
        assert_eq!(l.involution(i), i);
        for s in 0..l.len() {
            assert_eq!(l.meet(s, l.top()), s);
            assert_eq!(l.meet(s, s), s);
            assert_eq!(l.join(s, l.bottom()), s);
            assert_eq!(l.join(s, s), s);
            assert_eq!(l.involution(l.involution(s)), s);
        }
        assert_eq!(l.involution(l.top()), l.bottom());
    }

    #[test]
    fn identity_induces_identity() {
        let g = make_family(Family::Dihedral, 12).unwrap();
        let l = lattice(&g);
        let m = induced_map(&CrhHom::identity(&g), &l, &l).unwrap();
        assert_eq!(m, LatticeMap::identity(&l));
        let report = is_lattice_hom(&m);
        assert!(report.holds() && report.preserves_top && report.preserves_bottom);
    }

    #[test]
    fn induced_map_requires_matching_lattices() {
        let g = make_family(Family::Dihedral, 8).unwrap();
        let h = make_family(Family::Quaternion, 8).unwrap();
        let (lg, lh) = (lattice(&g), lattice(&h));
        assert_eq!(
            induced_map(&CrhHom::identity(&g), &lh, &lg).unwrap_err(),
            LatticeError::WrongGroup("source")
        );
    }

    #[test]
    fn z4_by_z4_induced_map() {
        let cover = cover_group(CoverKind::DQ, 3).unwrap();
        let q = quotient(&cover.group, &cover.z_second).unwrap();
        let phi = CrhHom::certify(q.projection, 256).unwrap();
        let (lg, lq) = (lattice(&cover.group), lattice(&q.group));
        let m = induced_map(&phi, &lg, &lq).unwrap();
        assert!(m.is_bijective());
        let report = is_lattice_hom(&m);
        assert!(report.holds());
        assert!(report.preserves_top && report.preserves_bottom);
    }

    #[test]
    fn constant_map_to_top_is_not_a_hom() {
        let q8 = make_family(Family::Quaternion, 8).unwrap();
        let l = lattice(&q8);
        let m = LatticeMap::new(&l, &l, vec![l.top(); l.len()]).unwrap();
        let report = is_lattice_hom(&m);
        assert!(!report.holds());
        let w = report.violation.unwrap();
        assert!(matches!(w.law, LatticeLaw::Involution | LatticeLaw::Join));
        assert!(report.preserves_top);
        assert!(!report.preserves_bottom);
    }

    #[test]
    fn isomorphism_search() {
        let d8 = lattice(&make_family(Family::Dihedral, 8).unwrap());
        let q8 = lattice(&make_family(Family::Quaternion, 8).unwrap());
        assert!(lattices_isomorphic(&d8, &d8, 64).unwrap().unwrap() == LatticeMap::identity(&d8));
        let m = lattices_isomorphic(&d8, &q8, 64).unwrap().unwrap();
        assert!(m.is_bijective());
        let ab = lattice(&cyclic(6).unwrap());
        assert!(lattices_isomorphic(&q8, &ab, 64).unwrap().is_none());
        assert!(matches!(
            lattices_isomorphic(&q8, &q8, 3),
            Err(LatticeError::NodeCapExceeded { .. })
        ));
    }

    #[test]
    fn functoriality_identity_case() {
        let g = make_family(Family::Quaternion, 8).unwrap();
        let id = GroupHom::identity(&g);
        assert!(verify_functoriality(&id, &id, 256).unwrap().holds());
    }

    #[test]
    fn functoriality_rejects_non_crh_and_mismatch() {
        let d8 = make_family(Family::Dihedral, 8).unwrap();
        let r2 = d8.pow(d8.generator("x").unwrap(), 2);
        let phi = quotient(&d8, &d8.closure([r2])).unwrap().projection;
        let id_q = GroupHom::identity(phi.target());
        assert!(matches!(
            verify_functoriality(&phi, &id_q, 256),
            Err(LatticeError::Hom(HomError::NotCrh(_)))
        ));
        assert!(matches!(
            verify_functoriality(&id_q, &phi, 256),
            Err(LatticeError::Hom(HomError::DomainMismatch))
        ));
    }

    #[test]
    fn covers_of_q8() {
        let l = lattice(&make_family(Family::Quaternion, 8).unwrap());
        let covers = l.covers();
        assert_eq!(covers.len(), 6);
        assert_eq!(l.ranks(), vec![2, 1, 1, 1, 0]);
    }
}
