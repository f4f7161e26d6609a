//! Verification suites behind `centlat verify`.
//!
//! Each suite returns a [`Report`] whose JSON form is deterministic: cases
//! appear in a fixed order and carry no timings.

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{catalog, CatalogEntry};
use crate::expr::{eval_str, EvalContext, EvalError};
use crate::families::{cover_group, make_family, CoverKind, Family, FamilyError};
use crate::group::{Element, FiniteGroup, GroupError, SubgroupSet};
use crate::homs::{
    compose, crh_central_kernel_criterion, group_isomorphic, is_centralizer_respecting, quotient,
    CrhHom, GroupHom, HomError,
};
use crate::lattice::{
    induced_map, is_lattice_hom, lattices_isomorphic, verify_functoriality, CentralizerLattice,
    LatticeError, LatticeMap, DEFAULT_NODE_CAP,
};

/// Largest group order swept by `theoremc-sweep` and `functor-laws`.
pub const SWEEP_MAX_ORDER: u64 = 32;

#[derive(Error, Debug)]
pub enum SuiteError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub pass: bool,
    /// Two independent checks disagreed; maps to exit code 2.
    #[serde(skip)]
    pub inconsistent: bool,
}

impl Report {
    fn new(suite: &str) -> Self {
        Report {
            suite: suite.into(),
            cases: Vec::new(),
            pass: true,
            inconsistent: false,
        }
    }

    fn case(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.pass &= pass;
        self.cases.push(Case {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    fn flag_inconsistent(&mut self) {
        self.inconsistent = true;
        self.pass = false;
    }
}

fn set_labels(g: &FiniteGroup, members: impl IntoIterator<Item = Element>) -> String {
    let labels: Vec<String> = members.into_iter().map(|e| g.label(e)).collect();
    format!("{{{}}}", labels.join(", "))
}

fn orders(l: &CentralizerLattice) -> Vec<usize> {
    l.nodes().iter().map(SubgroupSet::order).collect()
}

/// Runs a suite by its command-line name.
pub fn run_suite(name: &str, n: Option<u32>, cap: usize) -> Result<Report, SuiteError> {
    match name {
        "figure3" => figure3(cap),
        "corollary" => corollary(
            n.ok_or_else(|| SuiteError::Usage("suite corollary needs --n".into()))?,
            cap,
        ),
        "theoremc-sweep" => theorem_c_sweep(cap),
        "functor-laws" => functor_laws(cap),
        other => Err(SuiteError::Usage(format!(
            "unknown suite {other:?}; expected figure3, corollary, theoremc-sweep or functor-laws"
        ))),
    }
}

/// The order-16 split metacyclic group, its central subgroup generated by
/// `x²y²`, and the quaternion quotient.
pub fn figure3(cap: usize) -> Result<Report, SuiteError> {
    let mut r = Report::new("figure3");
    let ctx = EvalContext {
        cap,
        base_dir: None,
    };
    let g = eval_str("semidirect(4, 4, 3)", &ctx)?.group;
    let lg = CentralizerLattice::build(&g, cap)?;
    let mut og = orders(&lg);
    og.reverse();
    r.case(
        "lattice of G",
        og == [16, 8, 8, 8, 4],
        format!("{} nodes, orders {og:?}", lg.len()),
    );

    let ev = eval_str("quotient(semidirect(4, 4, 3), [x^2*y^2])", &ctx)?;
    let projection = ev
        .projection
        .expect("quotient expressions carry a projection");
    let k = projection.kernel();
    r.case(
        "kernel",
        k.order() == 2 && g.is_central(&k),
        format!(
            "K = {}, order {}, central: {}",
            set_labels(&g, k.iter()),
            k.order(),
            g.is_central(&k)
        ),
    );

    let q8 = make_family(Family::Quaternion, 8)?;
    let iso = group_isomorphic(&ev.group, &q8, cap)?;
    r.case(
        "quotient is quaternion(8)",
        ev.group.order() == 8 && iso.is_some(),
        format!(
            "|G/K| = {}, isomorphism found: {}",
            ev.group.order(),
            iso.is_some()
        ),
    );

    let lq = CentralizerLattice::build(&ev.group, cap)?;
    r.case(
        "lattice of G/K",
        lq.len() == 5,
        format!("{} nodes, orders {:?}", lq.len(), orders(&lq)),
    );

    let definitional = is_centralizer_respecting(&projection, cap)?.holds();
    let criterion = crh_central_kernel_criterion(&projection)?.holds();
    r.case(
        "projection crh by definition",
        definitional,
        format!("{definitional}"),
    );
    r.case(
        "projection crh by criterion",
        criterion,
        format!("{criterion}"),
    );
    if definitional != criterion {
        r.flag_inconsistent();
    }

    match CrhHom::certify(projection, cap) {
        Ok(crh) => {
            let m = induced_map(&crh, &lg, &lq)?;
            let report = is_lattice_hom(&m);
            r.case(
                "induced map",
                m.is_bijective() && report.holds(),
                format!(
                    "node map {:?}, bijective: {}, lattice hom: {}",
                    m.node_map(),
                    m.is_bijective(),
                    report.holds()
                ),
            );
        }
        Err(e) => r.case("induced map", false, e.to_string()),
    }
    Ok(r)
}

fn family_name(f: Family, order: u64) -> String {
    format!("{}({order})", f.keyword())
}

/// Routes a cover group's two central quotients onto the named families and
/// composes the induced lattice isomorphisms.
fn cover_route(
    r: &mut Report,
    kind: CoverKind,
    n: u32,
    families: [(Family, &CentralizerLattice); 2],
    cap: usize,
) -> Result<(), SuiteError> {
    let cover = cover_group(kind, n)?;
    let prefix = match kind {
        CoverKind::DQ => format!("cover_dq({n})"),
        CoverKind::QSD => format!("cover_qsd({n})"),
    };
    let lj = CentralizerLattice::build(&cover.group, cap)?;
    let order = 1u64 << n;
    let mut maps = Vec::new();
    for (z, (fam, lf)) in [&cover.z_first, &cover.z_second].into_iter().zip(families) {
        let target_name = family_name(fam, order);
        let q = quotient(&cover.group, z)?;
        let crh = CrhHom::certify_by_criterion(q.projection.clone());
        r.case(
            format!("{prefix}: projection onto {target_name} crh by criterion"),
            crh.is_ok(),
            format!(
                "kernel {}, {}",
                set_labels(&cover.group, z.iter()),
                match &crh {
                    Ok(_) => "no kernel commutators".to_string(),
                    Err(e) => e.to_string(),
                }
            ),
        );
        let iso = group_isomorphic(&q.group, lf.group(), cap)?;
        r.case(
            format!("{prefix}: quotient is {target_name}"),
            iso.is_some(),
            format!("isomorphism found: {}", iso.is_some()),
        );
        let (Ok(_), Some(iso)) = (crh, iso) else {
            return Ok(());
        };
        let onto = CrhHom::certify_by_criterion(compose(&iso, &q.projection)?)?;
        let m = induced_map(&onto, &lj, lf)?;
        r.case(
            format!("{prefix}: induced map onto lattice of {target_name}"),
            m.is_bijective() && is_lattice_hom(&m).holds(),
            format!(
                "bijective: {}, lattice hom: {}",
                m.is_bijective(),
                is_lattice_hom(&m).holds()
            ),
        );
        maps.push(m);
    }
    let [first, second] = &maps[..] else {
        return Ok(());
    };
    if !(first.is_bijective() && second.is_bijective()) {
        return Ok(());
    }
    let mut inverse = vec![0; first.target().len()];
    for (s, &t) in first.node_map().iter().enumerate() {
        inverse[t] = s;
    }
    let node_map = inverse.iter().map(|&s| second.apply(s)).collect();
    let iso = LatticeMap::new(first.target(), second.target(), node_map)?;
    let report = is_lattice_hom(&iso);
    r.case(
        format!(
            "{prefix}: lattice of {} isomorphic to lattice of {}",
            family_name(families[0].0, order),
            family_name(families[1].0, order)
        ),
        iso.is_bijective() && report.holds(),
        format!("node map {:?}", iso.node_map()),
    );
    Ok(())
}

/// Dihedral, quaternion and semidihedral groups of order `2^n` have
/// isomorphic centralizer lattices; checked by direct search and through
/// the two cover groups.
pub fn corollary(n: u32, cap: usize) -> Result<Report, SuiteError> {
    if !(3..=7).contains(&n) {
        return Err(SuiteError::Usage(format!(
            "corollary needs 3 <= n <= 7, got {n}"
        )));
    }
    let mut r = Report::new("corollary");
    let order = 1u64 << n;
    let mut kinds = vec![Family::Dihedral, Family::Quaternion];
    if n >= 4 {
        kinds.push(Family::Semidihedral);
    }
    let lattices = kinds
        .iter()
        .map(|&f| Ok(CentralizerLattice::build(&make_family(f, order)?, cap)?))
        .collect::<Result<Vec<_>, SuiteError>>()?;

    let expected = (1usize << (n - 2)) + 3;
    for (f, l) in kinds.iter().zip(&lattices) {
        r.case(
            format!("lattice of {}", family_name(*f, order)),
            l.len() == expected,
            format!("{} nodes", l.len()),
        );
    }
    for i in 0..kinds.len() {
        for j in i + 1..kinds.len() {
            let found = lattices_isomorphic(&lattices[i], &lattices[j], DEFAULT_NODE_CAP)?;
            r.case(
                format!(
                    "direct: lattice of {} isomorphic to lattice of {}",
                    family_name(kinds[i], order),
                    family_name(kinds[j], order)
                ),
                found.is_some(),
                match &found {
                    Some(m) => format!("node map {:?}", m.node_map()),
                    None => "no isomorphism".into(),
                },
            );
        }
    }

    cover_route(
        &mut r,
        CoverKind::DQ,
        n,
        [(kinds[0], &lattices[0]), (kinds[1], &lattices[1])],
        cap,
    )?;
    if n >= 4 {
        cover_route(
            &mut r,
            CoverKind::QSD,
            n,
            [(kinds[1], &lattices[1]), (kinds[2], &lattices[2])],
            cap,
        )?;
    }
    Ok(r)
}

/// One central subgroup of a catalog group, checked both ways.
#[derive(Debug, Clone)]
pub struct CentralQuotientRecord {
    pub group: String,
    pub kernel: SubgroupSet,
    pub definitional: bool,
    pub criterion: bool,
    pub projection: GroupHom,
}

/// Every central subgroup of every entry, with the definitional check and
/// the commutator criterion run on the projection.
pub fn central_quotient_sweep(
    entries: &[CatalogEntry],
    cap: usize,
) -> Result<Vec<CentralQuotientRecord>, SuiteError> {
    let mut out = Vec::new();
    for entry in entries {
        let g = &entry.group;
        for k in g.all_subgroups_with_cap(cap)? {
            if !g.is_central(&k) {
                continue;
            }
            let projection = quotient(g, &k)?.projection;
            out.push(CentralQuotientRecord {
                group: entry.name(),
                definitional: is_centralizer_respecting(&projection, cap)?.holds(),
                criterion: crh_central_kernel_criterion(&projection)?.holds(),
                kernel: k,
                projection,
            });
        }
    }
    Ok(out)
}

/// Definitional crh check against the commutator criterion for every
/// central quotient in the catalog.
pub fn theorem_c_sweep(cap: usize) -> Result<Report, SuiteError> {
    let mut r = Report::new("theoremc-sweep");
    let entries = catalog(SWEEP_MAX_ORDER)?;
    let records = central_quotient_sweep(&entries, cap)?;
    let (mut total, mut crh, mut disagreements) = (0, 0, 0);
    for entry in &entries {
        let name = entry.name();
        let mine: Vec<_> = records.iter().filter(|rec| rec.group == name).collect();
        let bad: Vec<_> = mine
            .iter()
            .filter(|rec| rec.definitional != rec.criterion)
            .collect();
        let respecting = mine.iter().filter(|rec| rec.definitional).count();
        total += mine.len();
        crh += respecting;
        disagreements += bad.len();
        let mut detail = format!("{} central subgroups, {respecting} crh", mine.len());
        for rec in &bad {
            detail.push_str(&format!(
                "; disagreement at kernel {} (definition {}, criterion {})",
                set_labels(&entry.group, rec.kernel.iter()),
                rec.definitional,
                rec.criterion
            ));
        }
        r.case(name, bad.is_empty(), detail);
    }
    r.case(
        "summary",
        disagreements == 0,
        format!(
            "{} groups, {total} central quotients, {crh} crh, {disagreements} disagreements",
            entries.len()
        ),
    );
    if disagreements > 0 {
        r.flag_inconsistent();
    }
    Ok(r)
}

/// Composable pairs taken per catalog group in `functor-laws`.
const PAIRS_PER_GROUP: usize = 2;

/// Identity law, lattice-hom property of every crh central projection, and
/// the composition law on chained central quotients.
pub fn functor_laws(cap: usize) -> Result<Report, SuiteError> {
    let mut r = Report::new("functor-laws");
    let entries = catalog(SWEEP_MAX_ORDER)?;
    let records = central_quotient_sweep(&entries, cap)?;
    let mut total_pairs = 0;
    for entry in &entries {
        let name = entry.name();
        let g = &entry.group;
        let lg = CentralizerLattice::build(g, cap)?;
        let identity_ok = induced_map(&CrhHom::identity(g), &lg, &lg)? == LatticeMap::identity(&lg);

        let mut homs_ok = 0;
        let mut homs_total = 0;
        let mut pairs = Vec::new();
        for rec in records
            .iter()
            .filter(|rec| rec.group == name && rec.definitional)
        {
            homs_total += 1;
            let crh = CrhHom::certify_by_criterion(rec.projection.clone())?;
            let lq = CentralizerLattice::build(rec.projection.target(), cap)?;
            let m = induced_map(&crh, &lg, &lq)?;
            if is_lattice_hom(&m).holds() && m.is_bijective() {
                homs_ok += 1;
            }
            if pairs.len() >= PAIRS_PER_GROUP
                || rec.kernel.is_trivial()
                || rec.projection.target().order() == 1
            {
                continue;
            }
            let h = rec.projection.target();
            for k2 in h.all_subgroups_with_cap(cap)? {
                if k2.is_trivial() || !h.is_central(&k2) {
                    continue;
                }
                let psi = quotient(h, &k2)?.projection;
                if crh_central_kernel_criterion(&psi)?.holds() {
                    pairs.push((rec.projection.clone(), psi));
                    break;
                }
            }
        }

        let mut pairs_ok = 0;
        for (phi, psi) in &pairs {
            if verify_functoriality(phi, psi, cap)?.holds() {
                pairs_ok += 1;
            }
        }
        total_pairs += pairs.len();
        r.case(
            name,
            identity_ok && homs_ok == homs_total && pairs_ok == pairs.len(),
            format!(
                "identity law: {identity_ok}; {homs_ok}/{homs_total} crh projections induce lattice isomorphisms; {pairs_ok}/{} composable pairs functorial",
                pairs.len()
            ),
        );
    }
    r.case(
        "composable pairs",
        total_pairs >= 25,
        format!("{total_pairs} pairs checked"),
    );
    Ok(r)
}
