//! The two order-2^(n+1) groups with a pair of commutator-free central
//! subgroups whose quotients are D/Q and Q/SD respectively.
//!
//! The split metacyclic group `Z_{2^(n-1)} ⋊ Z_4` with action
//! `2^(n-2) - 1` is shown alongside: both of its candidate quotients come
//! out semidihedral, which is why the Q/SD cover carries a twist.
//!
//! cargo run --example cover_groups -- 5

use centlat::families::element_order_census;
use centlat::{
    cover_group, group_isomorphic, make_family, quotient, semidirect_cyclic, CoverKind, Family,
    FiniteGroup,
};

fn identify(g: &FiniteGroup) -> String {
    let order = g.order() as u64;
    for kind in [Family::Dihedral, Family::Quaternion, Family::Semidihedral] {
        if let Ok(candidate) = make_family(kind, order) {
            if group_isomorphic(g, &candidate, 1 << 12).unwrap().is_some() {
                return format!("{}({order})", kind.keyword());
            }
        }
    }
    format!(
        "order {order}, element orders {:?}",
        element_order_census(g)
    )
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(4);
    for kind in [CoverKind::DQ, CoverKind::QSD] {
        let cover = cover_group(kind, n)?;
        println!("{kind:?} cover of order {}:", cover.group.order());
        for z in [&cover.z_first, &cover.z_second] {
            let members: Vec<String> = z.iter().map(|e| cover.group.label(e)).collect();
            let q = quotient(&cover.group, z)?;
            println!("  / {{{}}} = {}", members.join(", "), identify(&q.group));
        }
    }

    let m = 1u64 << (n - 1);
    let split = semidirect_cyclic(m, 4, (m / 2 - 1) as i64)?;
    println!("split semidirect({m}, 4, {}):", m / 2 - 1);
    for word in [vec![(m / 2) as i64, 2], vec![0, 2]] {
        let x = split.pow(split.generator("x").unwrap(), word[0]);
        let y = split.pow(split.generator("y").unwrap(), word[1]);
        let z = split.closure([split.mul(x, y)]);
        let q = quotient(&split, &z)?;
        println!(
            "  / <{}> = {}",
            split.label(split.mul(x, y)),
            identify(&q.group)
        );
    }
    Ok(())
}
