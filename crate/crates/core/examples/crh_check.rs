//! D8 → D8/⟨r²⟩ is not centralizer-respecting: the kernel is central but
//! r² is itself a commutator. The inclusion φ(C(A)) ⊆ C(φ(A)) still holds
//! for every subgroup A, just not always with equality.
//!
//! cargo run --example crh_check

use centlat::homs::CrhVerdict;
use centlat::{
    crh_central_kernel_criterion, is_centralizer_respecting, make_family, quotient,
    CriterionVerdict, Family,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d8 = make_family(Family::Dihedral, 8)?;
    let r2 = d8.pow(d8.generator("x").unwrap(), 2);
    let q = quotient(&d8, &d8.closure([r2]))?;
    let h = &q.projection;

    if let CrhVerdict::Violated(w) = is_centralizer_respecting(h, 256)? {
        let show = |g: &centlat::FiniteGroup, es: &[usize]| {
            es.iter()
                .map(|&e| g.label(e))
                .collect::<Vec<_>>()
                .join(", ")
        };
        println!("A = {{{}}}", show(&d8, &w.subgroup.members()));
        println!(
            "  φ(C(A))  = {{{}}}",
            show(&q.group, &w.image_of_centralizer)
        );
        println!(
            "  C(φ(A))  = {{{}}}",
            show(&q.group, &w.centralizer_of_image)
        );
    }
    if let CriterionVerdict::KernelCommutator(w) = crh_central_kernel_criterion(h)? {
        println!(
            "[{}, {}] = {} lies in the kernel",
            d8.label(w.x),
            d8.label(w.y),
            d8.label(w.commutator)
        );
    }

    let mut inclusions = 0;
    let subgroups = d8.all_subgroups()?;
    for a in &subgroups {
        let image = h.image_of(&d8.centralizer(a.iter()));
        let target = q.group.centralizer(h.image_of(a).iter());
        inclusions += image.is_subset(&target) as usize;
    }
    println!(
        "one-sided inclusion holds for {inclusions}/{} subgroups",
        subgroups.len()
    );
    Ok(())
}
