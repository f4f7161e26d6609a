//! Dihedral, quaternion and semidihedral groups of the same 2-power order
//! have isomorphic centralizer lattices.
//!
//! cargo run --example two_power_families -- 5

use centlat::lattice::DEFAULT_NODE_CAP;
use centlat::{lattices_isomorphic, make_family, CentralizerLattice, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(4);
    let order = 1u64 << n;

    let mut lattices = Vec::new();
    for kind in [Family::Dihedral, Family::Quaternion, Family::Semidihedral] {
        let Ok(g) = make_family(kind, order) else {
            continue;
        };
        let l = CentralizerLattice::build(&g, 1 << 10)?;
        println!("{}({order}): {} nodes", kind.keyword(), l.len());
        lattices.push((kind, l));
    }
    for (i, (ka, a)) in lattices.iter().enumerate() {
        for (kb, b) in &lattices[i + 1..] {
            let found = lattices_isomorphic(a, b, DEFAULT_NODE_CAP)?;
            println!(
                "{} ~ {}: {}",
                ka.keyword(),
                kb.keyword(),
                match found {
                    Some(m) => format!("{:?}", m.node_map()),
                    None => "not isomorphic".into(),
                }
            );
        }
    }

    // The same conclusion through the cover groups, as a full report.
    let report = centlat::suites::corollary(n, 1 << 10)?;
    for case in &report.cases {
        println!("[{}] {}", if case.pass { "ok" } else { "FAIL" }, case.name);
    }
    Ok(())
}
