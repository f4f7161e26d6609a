//! The order-16 group `Z4 ⋊ Z4` (action by inversion) and its quotient by
//! the central subgroup `⟨x²y²⟩`, which is the quaternion group. The
//! projection respects centralizers, so the two five-node lattices match.
//!
//! cargo run --example z4_by_z4

use centlat::expr::{eval_str, EvalContext};
use centlat::{induced_map, is_lattice_hom, CentralizerLattice, CrhHom};

fn describe(l: &CentralizerLattice) {
    let g = l.group();
    for (id, node) in l.nodes().iter().enumerate() {
        let members: Vec<String> = node.iter().map(|e| g.label(e)).collect();
        println!("  N{id} |{}|  {{{}}}", node.order(), members.join(", "));
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = EvalContext::default();
    let ev = eval_str("quotient(semidirect(4, 4, 3), [x^2*y^2])", &ctx)?;
    let projection = ev.projection.expect("quotient carries its projection");
    let g = projection.source().clone();

    let lg = CentralizerLattice::build(&g, ctx.cap)?;
    let lq = CentralizerLattice::build(&ev.group, ctx.cap)?;
    println!("C(G), |G| = {}:", g.order());
    describe(&lg);
    println!("C(G/K), |G/K| = {}:", ev.group.order());
    describe(&lq);

    let crh = CrhHom::certify_by_criterion(projection)?;
    let m = induced_map(&crh, &lg, &lq)?;
    println!(
        "induced map {:?}: bijective {}, lattice hom {}",
        m.node_map(),
        m.is_bijective(),
        is_lattice_hom(&m).holds()
    );
    Ok(())
}
