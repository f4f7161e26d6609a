//! Two chained central quotients of `Z4 × D8`, the lattice maps they
//! induce, and the functor square for their composite.
//!
//! cargo run --example functor_laws

use centlat::expr::{eval_str, EvalContext};
use centlat::{quotient, verify_functoriality};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = EvalContext::default();
    let first = eval_str("quotient(product(cyclic(4), dihedral(8)), [l.x^2])", &ctx)?;
    let phi = first.projection.expect("quotient");
    let h = phi.target().clone();

    // A central subgroup of order 2 avoiding the nontrivial commutators.
    let z = h.center();
    let commutators = h.commutator_set();
    let k2 = h
        .all_subgroups()?
        .into_iter()
        .find(|s| {
            s.order() == 2
                && s.is_subset(&z)
                && s.iter()
                    .all(|e| e == h.identity() || !commutators.contains(&e))
        })
        .expect("a central subgroup of order 2");
    let psi = quotient(&h, &k2)?.projection;

    println!("G: order {}", phi.source().order());
    println!("H = G/K1: order {}", h.order());
    println!("L = H/K2: order {}", psi.target().order());
    let report = verify_functoriality(&phi, &psi, ctx.cap)?;
    println!("{report:#?}");
    Ok(())
}
