//! Prints the Hasse diagram of a centralizer lattice in DOT.
//!
//! cargo run --example lattice_dot -- "semidihedral(32)" | dot -Tsvg > sd32.svg

use centlat::expr::{eval_str, EvalContext};
use centlat::formats::lattice_to_dot;
use centlat::CentralizerLattice;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "quaternion(8)".into());
    let ctx = EvalContext::default();
    let g = eval_str(&text, &ctx)?.group;
    let l = CentralizerLattice::build(&g, ctx.cap)?;
    print!("{}", lattice_to_dot(&l));
    Ok(())
}
