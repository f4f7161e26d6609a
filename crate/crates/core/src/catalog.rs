//! Deterministic lists of small groups used by the sweeps and tests.
//!
//! A catalog up to order `N` holds every named family member of order at
//! most `N` (including the two cover families), every direct product of two
//! or more nontrivial cyclic groups with total order at most `N`, and every
//! `semidirect(m, k, a)` with `m·k ≤ N` and a nontrivial action `a`.

use crate::expr::{eval_group_expr, EvalContext, EvalError, FamilyKeyword, GroupExpr};
use crate::group::FiniteGroup;

fn family(k: FamilyKeyword, n: u64) -> GroupExpr {
    GroupExpr::Family(k, n)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pow_mod(a: u64, e: u64, m: u64) -> u64 {
    (0..e).fold(1 % m, |acc, _| acc * a % m)
}

/// Nondecreasing factor lists of length ≥ 2 with each factor ≥ 2 and
/// product ≤ `max`.
fn cyclic_factorizations(max: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, product: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        if prefix.len() >= 2 {
            out.push(prefix.clone());
        }
        let start = prefix.last().copied().unwrap_or(2);
        for f in start..=max {
            if product * f > max {
                break;
            }
            prefix.push(f);
            extend(prefix, product * f, max, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max, &mut out);
    out.sort_by_key(|fs| (fs.iter().product::<u64>(), fs.len(), fs.clone()));
    out
}

/// Catalog expressions of order at most `max_order`, in a fixed order:
/// families, then cyclic products, then semidirect products.
pub fn catalog_exprs(max_order: u64) -> Vec<GroupExpr> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(family(FamilyKeyword::Cyclic, n));
    }
    for n in (4..=max_order).step_by(2) {
        out.push(family(FamilyKeyword::Dihedral, n));
    }
    let powers = || (3..).map(|e| 1u64 << e).take_while(|&p| p <= max_order);
    for p in powers() {
        out.push(family(FamilyKeyword::Quaternion, p));
    }
    for p in powers().filter(|&p| p >= 16) {
        out.push(family(FamilyKeyword::Semidihedral, p));
    }
    for n in (3..).take_while(|&n| 1u64 << (n + 1) <= max_order) {
        out.push(family(FamilyKeyword::CoverDq, n));
    }
    for n in (4..).take_while(|&n| 1u64 << (n + 1) <= max_order) {
        out.push(family(FamilyKeyword::CoverQsd, n));
    }
    for factors in cyclic_factorizations(max_order) {
        let mut it = factors.into_iter();
        let first = family(FamilyKeyword::Cyclic, it.next().unwrap());
        out.push(it.fold(first, |acc, f| {
            GroupExpr::Product(Box::new(acc), Box::new(family(FamilyKeyword::Cyclic, f)))
        }));
    }
    for m in 3..=max_order / 2 {
        for k in 2..=max_order / m {
            for a in 2..m {
                if gcd(a, m) == 1 && pow_mod(a, k, m) == 1 {
                    out.push(GroupExpr::Semidirect { m, k, a });
                }
            }
        }
    }
    out
}

/// A catalog member: its expression and the evaluated group.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub expr: GroupExpr,
    pub group: FiniteGroup,
}

impl CatalogEntry {
    pub fn name(&self) -> String {
        self.expr.to_string()
    }
}

/// Evaluates [`catalog_exprs`].
pub fn catalog(max_order: u64) -> Result<Vec<CatalogEntry>, EvalError> {
    let ctx = EvalContext {
        cap: max_order as usize,
        base_dir: None,
    };
    catalog_exprs(max_order)
        .into_iter()
        .map(|expr| {
            let group = eval_group_expr(&expr, &ctx)?.group;
            Ok(CatalogEntry { expr, group })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorizations_of_eight() {
        assert_eq!(
            cyclic_factorizations(8),
            vec![vec![2, 2], vec![2, 3], vec![2, 4], vec![2, 2, 2]]
        );
    }

    #[test]
    fn catalog_orders_respect_bound() {
        let entries = catalog(32).unwrap();
        assert!(entries.iter().all(|e| e.group.order() <= 32));
        let names: Vec<String> = entries.iter().map(CatalogEntry::name).collect();
        for needle in [
            "quaternion(32)",
            "semidihedral(32)",
            "cover_dq(4)",
            "cover_qsd(4)",
            "product(product(product(product(cyclic(2), cyclic(2)), cyclic(2)), cyclic(2)), cyclic(2))",
            "semidirect(4, 4, 3)",
            "semidirect(8, 4, 3)",
        ] {
            assert!(names.iter().any(|n| n == needle), "{needle}");
        }
        assert!(!names.iter().any(|n| n == "cover_dq(5)"));
    }

    #[test]
    fn semidirect_actions_are_valid() {
        for e in catalog_exprs(32) {
            if let GroupExpr::Semidirect { m, k, a } = e {
                assert!(m * k <= 32);
                assert_eq!(pow_mod(a, k, m), 1);
                assert_ne!(a, 1);
            }
        }
    }
}
