//! Finite groups as multiplication tables, their centralizer lattices, and
//! centralizer-respecting homomorphisms between them.
//!
//! The crate is organised bottom-up:
//!
//! * [`group`]: validated multiplication tables, subgroups, centralizers,
//!   commutators and subgroup enumeration.
//! * [`families`]: cyclic, dihedral, generalized quaternion, semidihedral,
//!   product and metacyclic groups, and the covering groups of the
//!   maximal-class 2-groups.
//! * [`homs`]: homomorphisms, quotients, the centralizer-respecting check
//!   and the central-kernel commutator criterion, isomorphism search.
//! * [`lattice`]: centralizer lattices, induced maps, lattice isomorphism
//!   and functoriality checks.
//! * [`expr`]: the small group-expression language used by the CLI.
//! * [`cli`]: the `centlat` command line, callable in-process.
//! * [`formats`]: JSON and DOT encodings.
//! * [`catalog`] and [`suites`]: the groups swept by the verification
//!   suites, and the suites themselves.

pub mod catalog;
pub mod cli;
pub mod expr;
pub mod families;
pub mod formats;
pub mod group;
pub mod homs;
pub mod lattice;
pub mod suites;

pub use families::{
    cover_group, direct_product, make_family, semidirect_cyclic, CoverGroup, CoverKind, Family,
};
pub use group::{Element, FiniteGroup, GroupError, SubgroupSet, DEFAULT_ORDER_CAP};
pub use homs::{
    compose, crh_central_kernel_criterion, group_isomorphic, is_centralizer_respecting, quotient,
    CrhHom, CrhVerdict, CriterionVerdict, GroupHom, HomError, Quotient,
};
pub use lattice::{
    induced_map, is_lattice_hom, lattices_isomorphic, verify_functoriality, CentralizerLattice,
    LatticeError, LatticeMap,
};
