//! Group homomorphisms: validation, quotients, composition, the
//! centralizer-respecting decision procedure, the central-kernel commutator
//! criterion, and isomorphism search for small groups.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::group::{Element, FiniteGroup, GroupError, SubgroupSet, DEFAULT_ORDER_CAP};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("map has {got} entries, source has order {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("map entry {index} -> {value} is outside the target")]
    OutOfRange { index: Element, value: Element },
    #[error("not a homomorphism: f({a}*{b}) != f({a})*f({b})")]
    NotHomomorphism { a: Element, b: Element },
    #[error("subgroup is not normal: conjugating by element {conjugator} leaves it")]
    NotNormal { conjugator: Element },
    #[error("domain mismatch: target of the first map is not the source of the second")]
    DomainMismatch,
    #[error("homomorphism is not surjective")]
    NotSurjective,
    #[error("kernel is not central")]
    KernelNotCentral,
    #[error("homomorphism is not centralizer-respecting (witness subgroup {:?})", .0.subgroup)]
    NotCrh(Box<CrhWitness>),
    #[error("central-kernel criterion fails: [{}, {}] = {} lies in the kernel", .0.x, .0.y, .0.commutator)]
    CriterionFails(CommutatorWitness),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A homomorphism between two finite groups, stored as an element map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    map: Vec<Element>,
}

impl GroupHom {
    /// Validates that `map` respects multiplication.
    pub fn from_map(
        source: &FiniteGroup,
        target: &FiniteGroup,
        map: Vec<Element>,
    ) -> Result<Self, HomError> {
        if map.len() != source.order() {
            return Err(HomError::WrongLength {
                expected: source.order(),
                got: map.len(),
            });
        }
        if let Some((index, &value)) = map.iter().enumerate().find(|(_, &v)| v >= target.order()) {
            return Err(HomError::OutOfRange { index, value });
        }
        for a in source.elements() {
            for b in source.elements() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(HomError::NotHomomorphism { a, b });
                }
            }
        }
        debug_assert_eq!(map[source.identity()], target.identity());
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupHom {
            source: group.clone(),
            target: group.clone(),
            map: group.elements().collect(),
        }
    }

    /// The map sending everything to the identity.
    pub fn trivial(source: &FiniteGroup, target: &FiniteGroup) -> Self {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            map: vec![target.identity(); source.order()],
        }
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn map(&self) -> &[Element] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: Element) -> Element {
        self.map[a]
    }

    pub(crate) fn image_bits<I: IntoIterator<Item = Element>>(&self, elems: I) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.target.order());
        for e in elems {
            bits.insert(self.map[e]);
        }
        bits
    }

    /// Image of a subgroup of the source.
    pub fn image_of(&self, s: &SubgroupSet) -> SubgroupSet {
        SubgroupSet::from_bits_unchecked(self.target.clone(), self.image_bits(s.iter()))
    }

    pub fn kernel(&self) -> SubgroupSet {
        let id = self.target.identity();
        let mut bits = FixedBitSet::with_capacity(self.source.order());
        bits.extend(self.source.elements().filter(|&a| self.map[a] == id));
        SubgroupSet::from_bits_unchecked(self.source.clone(), bits)
    }

    pub fn image(&self) -> SubgroupSet {
        self.image_of(&self.source.whole())
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_whole()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }
}

/// `psi ∘ phi`.
pub fn compose(psi: &GroupHom, phi: &GroupHom) -> Result<GroupHom, HomError> {
    if phi.target != psi.source {
        return Err(HomError::DomainMismatch);
    }
    let map = phi.map.iter().map(|&e| psi.map[e]).collect();
    GroupHom::from_map(&phi.source, &psi.target, map)
}

/// A quotient group together with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: GroupHom,
}

/// Quotient by a normal subgroup.
///
/// Cosets are named by their smallest element index and ordered by it, so
/// the identity coset is `n` itself. Generator names and element labels
/// are carried over from the representatives.
pub fn quotient(group: &FiniteGroup, n: &SubgroupSet) -> Result<Quotient, HomError> {
    if let Some(conjugator) = n.normality_violation() {
        return Err(HomError::NotNormal { conjugator });
    }
    let order = group.order();
    let mut coset_of = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for g in group.elements() {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(g);
        for m in n.iter() {
            coset_of[group.mul(g, m)] = c;
        }
    }
    let q = reps.len();
    let mut table = vec![0; q * q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            table[i * q + j] = coset_of[group.mul(a, b)];
        }
    }
    let gens = group
        .generators()
        .iter()
        .map(|(l, e)| (l.clone(), coset_of[*e]))
        .collect();
    let labels = group
        .labels()
        .map(|_| reps.iter().map(|&r| group.label(r)).collect());
    let qgroup = FiniteGroup::from_flat(q, table, Some(gens), labels)?;
    let projection = GroupHom::from_map(group, &qgroup, coset_of)?;
    debug_assert!(projection.kernel() == *n);
    Ok(Quotient {
        group: qgroup,
        projection,
    })
}

/// A subgroup `A` on which `h(C_G(A)) ≠ C_H(h(A))`, with both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrhWitness {
    pub subgroup: SubgroupSet,
    pub image_of_centralizer: Vec<Element>,
    pub centralizer_of_image: Vec<Element>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrhVerdict {
    Respecting,
    Violated(Box<CrhWitness>),
}

impl CrhVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, CrhVerdict::Respecting)
    }
}

fn require_surjective(h: &GroupHom) -> Result<(), HomError> {
    if h.is_surjective() {
        Ok(())
    } else {
        Err(HomError::NotSurjective)
    }
}

/// Checks `h(C_G(A)) = C_H(h(A))` for every subgroup `A` of the source,
/// reporting the first failing subgroup in sorted subgroup order.
pub fn is_centralizer_respecting(h: &GroupHom, cap: usize) -> Result<CrhVerdict, HomError> {
    require_surjective(h)?;
    for a in h.source.all_subgroups_with_cap(cap)? {
        let lhs = h.image_bits(h.source.centralizer_bits(a.iter()).ones());
        let rhs = h.target.centralizer_bits(h.image_bits(a.iter()).ones());
        if lhs != rhs {
            return Ok(CrhVerdict::Violated(Box::new(CrhWitness {
                subgroup: a,
                image_of_centralizer: lhs.ones().collect(),
                centralizer_of_image: rhs.ones().collect(),
            })));
        }
    }
    Ok(CrhVerdict::Respecting)
}

/// A pair whose commutator `[x,y] = x⁻¹y⁻¹xy` is nontrivial yet in the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorWitness {
    pub x: Element,
    pub y: Element,
    pub commutator: Element,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriterionVerdict {
    NoKernelCommutators,
    KernelCommutator(CommutatorWitness),
}

impl CriterionVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, CriterionVerdict::NoKernelCommutators)
    }
}

/// For a surjection with central kernel: holds iff the kernel contains no
/// nontrivial commutator. Pairs are scanned in ascending `(x, y)` order.
pub fn crh_central_kernel_criterion(h: &GroupHom) -> Result<CriterionVerdict, HomError> {
    require_surjective(h)?;
    let g = &h.source;
    let kernel = h.kernel();
    if !g.is_central(&kernel) {
        return Err(HomError::KernelNotCentral);
    }
    for x in g.elements() {
        for y in g.elements() {
            let c = g.commutator(x, y);
            if c != g.identity() && kernel.contains(c) {
                return Ok(CriterionVerdict::KernelCommutator(CommutatorWitness {
                    x,
                    y,
                    commutator: c,
                }));
            }
        }
    }
    Ok(CriterionVerdict::NoKernelCommutators)
}

/// How a [`CrhHom`] was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrhEvidence {
    Identity,
    /// Checked subgroup by subgroup against the definition.
    Definition,
    /// Central kernel free of nontrivial commutators.
    CentralKernelCriterion,
}

/// A homomorphism known to be surjective and centralizer-respecting.
#[derive(Clone, Debug)]
pub struct CrhHom {
    hom: GroupHom,
    evidence: CrhEvidence,
}

impl CrhHom {
    pub fn identity(group: &FiniteGroup) -> Self {
        CrhHom {
            hom: GroupHom::identity(group),
            evidence: CrhEvidence::Identity,
        }
    }

    /// Runs the subgroup-by-subgroup check.
    pub fn certify(hom: GroupHom, cap: usize) -> Result<Self, HomError> {
        match is_centralizer_respecting(&hom, cap)? {
            CrhVerdict::Respecting => Ok(CrhHom {
                hom,
                evidence: CrhEvidence::Definition,
            }),
            CrhVerdict::Violated(w) => Err(HomError::NotCrh(w)),
        }
    }

    /// Uses the commutator criterion; requires a central kernel.
    pub fn certify_by_criterion(hom: GroupHom) -> Result<Self, HomError> {
        match crh_central_kernel_criterion(&hom)? {
            CriterionVerdict::NoKernelCommutators => Ok(CrhHom {
                hom,
                evidence: CrhEvidence::CentralKernelCriterion,
            }),
            CriterionVerdict::KernelCommutator(w) => Err(HomError::CriterionFails(w)),
        }
    }

    pub fn hom(&self) -> &GroupHom {
        &self.hom
    }

    pub fn evidence(&self) -> CrhEvidence {
        self.evidence
    }

    pub fn into_hom(self) -> GroupHom {
        self.hom
    }
}

/// Per-element invariant used to restrict candidate images.
fn element_key(g: &FiniteGroup, e: Element) -> (usize, usize) {
    (g.element_order(e), g.element_centralizer_order(e))
}

fn fingerprint(g: &FiniteGroup) -> (usize, Vec<(usize, usize)>, usize) {
    let mut keys: Vec<_> = g.elements().map(|e| element_key(g, e)).collect();
    keys.sort_unstable();
    (g.order(), keys, g.center().order())
}

/// Extends generator images to the subgroup they generate; `None` if the
/// assignment is inconsistent or not injective.
fn extend_on_span(
    a: &FiniteGroup,
    b: &FiniteGroup,
    gens: &[Element],
    images: &[Element],
) -> Option<Vec<Element>> {
    let mut map = vec![usize::MAX; a.order()];
    let mut used = FixedBitSet::with_capacity(b.order());
    map[a.identity()] = b.identity();
    used.insert(b.identity());
    let mut queue = VecDeque::from([a.identity()]);
    while let Some(e) = queue.pop_front() {
        for (&g, &img) in gens.iter().zip(images) {
            let p = a.mul(e, g);
            let q = b.mul(map[e], img);
            if map[p] == usize::MAX {
                if used.put(q) {
                    return None;
                }
                map[p] = q;
                queue.push_back(p);
            } else if map[p] != q {
                return None;
            }
        }
    }
    Some(map)
}

/// Searches for an isomorphism `a → b` by backtracking over generator
/// images, pruned by element order and centralizer size.
pub fn group_isomorphic(
    a: &FiniteGroup,
    b: &FiniteGroup,
    cap: usize,
) -> Result<Option<GroupHom>, HomError> {
    a.check_cap(cap)?;
    b.check_cap(cap)?;
    if fingerprint(a) != fingerprint(b) {
        return Ok(None);
    }
    let gens = a.greedy_generating_set();
    let candidates: Vec<Vec<Element>> = gens
        .iter()
        .map(|&g| {
            let key = element_key(a, g);
            b.elements().filter(|&h| element_key(b, h) == key).collect()
        })
        .collect();

    fn search(
        a: &FiniteGroup,
        b: &FiniteGroup,
        gens: &[Element],
        candidates: &[Vec<Element>],
        images: &mut Vec<Element>,
    ) -> Option<Vec<Element>> {
        let depth = images.len();
        let map = extend_on_span(a, b, &gens[..depth], images)?;
        if depth == gens.len() {
            return Some(map);
        }
        for &c in &candidates[depth] {
            images.push(c);
            if let Some(found) = search(a, b, gens, candidates, images) {
                return Some(found);
            }
            images.pop();
        }
        None
    }

    let found = search(a, b, &gens, &candidates, &mut Vec::new());
    match found {
        Some(map) => {
            let hom = GroupHom::from_map(a, b, map)?;
            debug_assert!(hom.is_bijective());
            Ok(Some(hom))
        }
        None => Ok(None),
    }
}

/// [`group_isomorphic`] with the default cap, returning a plain bool.
pub fn are_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool, HomError> {
    Ok(group_isomorphic(a, b, DEFAULT_ORDER_CAP)?.is_some())
}
