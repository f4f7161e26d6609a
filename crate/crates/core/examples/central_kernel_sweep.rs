//! For every central subgroup K of every small catalog group, compares the
//! subgroup-by-subgroup centralizer check on G → G/K with the commutator
//! criterion (K contains no nontrivial commutator).
//!
//! cargo run --release --example central_kernel_sweep

use centlat::catalog::catalog;
use centlat::suites::central_quotient_sweep;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let entries = catalog(32)?;
    let records = central_quotient_sweep(&entries, 256)?;
    for entry in &entries {
        let name = entry.name();
        let mine: Vec<_> = records.iter().filter(|r| r.group == name).collect();
        let crh = mine.iter().filter(|r| r.definitional).count();
        let agree = mine.iter().all(|r| r.definitional == r.criterion);
        println!(
            "{name:<60} central {:>3}  crh {:>3}  agree {agree}",
            mine.len(),
            crh
        );
    }
    let disagreements = records
        .iter()
        .filter(|r| r.definitional != r.criterion)
        .count();
    println!("{} quotients, {disagreements} disagreements", records.len());
    Ok(())
}
