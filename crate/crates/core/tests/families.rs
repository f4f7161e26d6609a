mod common;

use centlat::families::element_order_census;
use centlat::homs::are_isomorphic;
use centlat::{
    cover_group, make_family, quotient, semidirect_cyclic, CoverKind, Family, FiniteGroup,
};
use common::fiber_product;

fn quotient_by(g: &FiniteGroup, z: &centlat::SubgroupSet) -> FiniteGroup {
    quotient(g, z).unwrap().group
}

#[test]
fn dq_cover_quotients() {
    for n in 3..=6u32 {
        let c = cover_group(CoverKind::DQ, n).unwrap();
        let order = 1u64 << n;
        let d = make_family(Family::Dihedral, order).unwrap();
        let q = make_family(Family::Quaternion, order).unwrap();
        assert!(
            are_isomorphic(&quotient_by(&c.group, &c.z_first), &d).unwrap(),
            "n={n}"
        );
        assert!(
            are_isomorphic(&quotient_by(&c.group, &c.z_second), &q).unwrap(),
            "n={n}"
        );
    }
}

#[test]
fn qsd_cover_quotients() {
    for n in 4..=6u32 {
        let c = cover_group(CoverKind::QSD, n).unwrap();
        let order = 1u64 << n;
        let q = make_family(Family::Quaternion, order).unwrap();
        let sd = make_family(Family::Semidihedral, order).unwrap();
        assert!(
            are_isomorphic(&quotient_by(&c.group, &c.z_first), &q).unwrap(),
            "n={n}"
        );
        assert!(
            are_isomorphic(&quotient_by(&c.group, &c.z_second), &sd).unwrap(),
            "n={n}"
        );
    }
}

#[test]
fn dq_cover_central_elements() {
    for n in 3..=6u32 {
        let g = cover_group(CoverKind::DQ, n).unwrap().group;
        let x = g.generator("x").unwrap();
        let y = g.generator("y").unwrap();
        let y2 = g.pow(y, 2);
        assert_eq!(g.element_order(y2), 2);
        let center = g.center();
        assert!(center.contains(y2));
        assert!(center.contains(g.pow(x, 1 << (n - 2))));
    }
}

#[test]
fn qsd_cover_presentation() {
    for n in 4..=6u32 {
        let g = cover_group(CoverKind::QSD, n).unwrap().group;
        let x = g.generator("x").unwrap();
        let y = g.generator("y").unwrap();
        let y2 = g.pow(y, 2);
        assert_eq!(g.element_order(x), 1 << (n - 1));
        assert_eq!(g.element_order(y), 4);
        assert!(g.center().contains(y2));
        let conj = g.mul(g.mul(g.inv(y), x), y);
        assert_eq!(conj, g.mul(g.pow(x, (1 << (n - 2)) - 1), y2), "n={n}");
    }
}

#[test]
fn qsd_cover_is_the_fiber_product() {
    // Q and SD of order 2^n both map onto the dihedral group of order
    // 2^(n-1) by killing their centers; glue along every identification.
    for n in 4..=5u32 {
        let order = 1u64 << n;
        let q = make_family(Family::Quaternion, order).unwrap();
        let sd = make_family(Family::Semidihedral, order).unwrap();
        let pq = quotient(&q, &q.center()).unwrap();
        let psd = quotient(&sd, &sd.center()).unwrap();
        let iso = centlat::group_isomorphic(&psd.group, &pq.group, 256)
            .unwrap()
            .unwrap();
        let p: Vec<usize> = pq.projection.map().to_vec();
        let r: Vec<usize> = psd.projection.map().iter().map(|&e| iso.apply(e)).collect();
        let j = fiber_product(&q, &sd, &p, &r);
        assert_eq!(j.order() as u64, 2 * order);
        let cover = cover_group(CoverKind::QSD, n).unwrap();
        assert!(are_isomorphic(&j, &cover.group).unwrap(), "n={n}");
    }
}

#[test]
fn split_presentation_has_two_semidihedral_quotients() {
    // Z_{2^(n-1)} ⋊ Z_4 with x ↦ x^(2^(n-2)-1): neither commutator-free
    // central subgroup of order 2 yields the quaternion group.
    for n in 4..=6u32 {
        let m = 1u64 << (n - 1);
        let g = semidirect_cyclic(m, 4, (m / 2 - 1) as i64).unwrap();
        let x = g.generator("x").unwrap();
        let y = g.generator("y").unwrap();
        let y2 = g.pow(y, 2);
        let sd = make_family(Family::Semidihedral, 2 * m).unwrap();
        let q = make_family(Family::Quaternion, 2 * m).unwrap();
        for z in [y2, g.mul(g.pow(x, (m / 2) as i64), y2)] {
            let k = g.closure([z]);
            assert!(g.is_central(&k));
            let quot = quotient_by(&g, &k);
            assert!(are_isomorphic(&quot, &sd).unwrap(), "n={n}");
            assert!(!are_isomorphic(&quot, &q).unwrap(), "n={n}");
        }
    }
}

#[test]
fn family_censuses_distinguish_the_three() {
    for n in 4..=7u32 {
        let order = 1u64 << n;
        let involutions = |f| {
            element_order_census(&make_family(f, order).unwrap())
                .into_iter()
                .filter(|&o| o == 2)
                .count()
        };
        assert_eq!(involutions(Family::Dihedral), (1 << (n - 1)) + 1);
        assert_eq!(involutions(Family::Quaternion), 1);
        assert_eq!(involutions(Family::Semidihedral), (1 << (n - 2)) + 1);
    }
}
