//! Constructors for the named group families: cyclic, dihedral, generalized
//! quaternion and semidihedral groups, products of groups, metacyclic
//! semidirect products `Z_m ⋊ Z_k`, and the two covering groups whose
//! central quotients give the maximal-class 2-groups.

use std::fmt;

use thiserror::Error;

use crate::group::{FiniteGroup, GroupError, SubgroupSet};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic,
    Dihedral,
    Quaternion,
    Semidihedral,
}

impl Family {
    pub fn keyword(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Dihedral => "dihedral",
            Family::Quaternion => "quaternion",
            Family::Semidihedral => "semidihedral",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// Which pair of maximal-class quotients a covering group carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoverKind {
    /// Quotients are dihedral and generalized quaternion.
    DQ,
    /// Quotients are generalized quaternion and semidihedral.
    QSD,
}

/// A group of order `2^(n+1)` with two central subgroups of order 2, neither
/// containing a nontrivial commutator.
///
/// For [`CoverKind::DQ`], `z_first` is `⟨y²⟩` (dihedral quotient) and
/// `z_second` is `⟨x^(2^(n-2))·y²⟩` (quaternion quotient). For
/// [`CoverKind::QSD`], `z_first` is `⟨x^(2^(n-2))·y²⟩` (quaternion quotient)
/// and `z_second` is `⟨y²⟩` (semidihedral quotient).
#[derive(Debug, Clone)]
pub struct CoverGroup {
    pub group: FiniteGroup,
    pub z_first: SubgroupSet,
    pub z_second: SubgroupSet,
    pub kind: CoverKind,
    pub n: u32,
}

fn power_of_two_exponent(order: u64) -> Option<u32> {
    order.is_power_of_two().then(|| order.trailing_zeros())
}

fn label_power(name: &str, e: u64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    }
}

fn pair_label(i: u64, j: u64) -> String {
    let parts: Vec<String> = [label_power("x", i), label_power("y", j)]
        .into_iter()
        .flatten()
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Group on pairs `x^i y^e`, `i ∈ Z_m`, `e ∈ {0,1}`, where `y x y⁻¹ = x^s`
/// and `y² = x^t`.
fn twisted_pair(m: u64, s: u64, t: u64) -> Result<FiniteGroup, GroupError> {
    let order = (2 * m) as usize;
    let idx = |i: u64, e: u64| (i + m * e) as usize;
    let mut table = vec![0; order * order];
    for e1 in 0..2 {
        for i1 in 0..m {
            for e2 in 0..2 {
                for i2 in 0..m {
                    let twisted = if e1 == 1 { i2 * s } else { i2 };
                    let carry = if e1 == 1 && e2 == 1 { t } else { 0 };
                    let i = (i1 + twisted + carry) % m;
                    table[idx(i1, e1) * order + idx(i2, e2)] = idx(i, e1 ^ e2);
                }
            }
        }
    }
    let labels = (0..2)
        .flat_map(|e| (0..m).map(move |i| pair_label(i, e)))
        .collect();
    let gens = vec![
        ("x".to_string(), idx(1 % m, 0)),
        ("y".to_string(), idx(0, 1)),
    ];
    FiniteGroup::from_flat(order, table, Some(gens), Some(labels))
}

pub fn cyclic(order: u64) -> Result<FiniteGroup, FamilyError> {
    if order == 0 {
        return Err(FamilyError::UnsupportedParameter(
            "cyclic order must be at least 1".into(),
        ));
    }
    let n = order as usize;
    let table = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a + b) % n))
        .collect();
    let labels = (0..order)
        .map(|i| label_power("x", i).unwrap_or_else(|| "1".into()))
        .collect();
    Ok(FiniteGroup::from_flat(
        n,
        table,
        Some(vec![("x".into(), 1 % n)]),
        Some(labels),
    )?)
}

/// Builds a member of one of the named families at the given order.
pub fn make_family(kind: Family, order: u64) -> Result<FiniteGroup, FamilyError> {
    let unsupported = |msg: String| Err(FamilyError::UnsupportedParameter(msg));
    match kind {
        Family::Cyclic => cyclic(order),
        Family::Dihedral => {
            if order < 4 || !order.is_multiple_of(2) {
                return unsupported(format!("dihedral order must be even and >= 4, got {order}"));
            }
            let m = order / 2;
            Ok(twisted_pair(m, m - 1, 0)?)
        }
        Family::Quaternion => match power_of_two_exponent(order) {
            Some(n) if n >= 3 => {
                let m = order / 2;
                Ok(twisted_pair(m, m - 1, m / 2)?)
            }
            _ => unsupported(format!(
                "quaternion order must be 2^n with n >= 3, got {order}"
            )),
        },
        Family::Semidihedral => match power_of_two_exponent(order) {
            Some(n) if n >= 4 => {
                let m = order / 2;
                Ok(twisted_pair(m, m / 2 - 1, 0)?)
            }
            _ => unsupported(format!(
                "semidihedral order must be 2^n with n >= 4, got {order}"
            )),
        },
    }
}

/// Componentwise product; generators are relabelled `l.<name>` and
/// `r.<name>`.
pub fn direct_product(
    a: &FiniteGroup,
    b: &FiniteGroup,
    cap: usize,
) -> Result<FiniteGroup, FamilyError> {
    let (na, nb) = (a.order(), b.order());
    let order = na
        .checked_mul(nb)
        .filter(|&o| o <= cap)
        .ok_or(GroupError::OrderCapExceeded {
            order: na.saturating_mul(nb),
            cap,
        })?;
    let mut table = vec![0; order * order];
    for x in 0..order {
        let (x1, x2) = (x / nb, x % nb);
        for y in 0..order {
            let (y1, y2) = (y / nb, y % nb);
            table[x * order + y] = a.mul(x1, y1) * nb + b.mul(x2, y2);
        }
    }
    let gens = a
        .generators()
        .iter()
        .map(|(l, e)| (format!("l.{l}"), e * nb + b.identity()))
        .chain(
            b.generators()
                .iter()
                .map(|(l, e)| (format!("r.{l}"), a.identity() * nb + e)),
        )
        .collect();
    let labels = (0..order)
        .map(|x| format!("({},{})", a.label(x / nb), b.label(x % nb)))
        .collect();
    Ok(FiniteGroup::from_flat(
        order,
        table,
        Some(gens),
        Some(labels),
    )?)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc
}

/// `Z_m ⋊ Z_k` on pairs `(i, j)` with
/// `(i₁,j₁)·(i₂,j₂) = (i₁ + a^j₁·i₂ mod m, j₁ + j₂ mod k)`.
///
/// Generators are `x = (1,0)` and `y = (0,1)`, and `y x y⁻¹ = x^a`. For the
/// involutive actions used throughout (`a² ≡ 1`) this is also `y⁻¹ x y`.
pub fn semidirect_cyclic(m: u64, k: u64, a: i64) -> Result<FiniteGroup, FamilyError> {
    if m == 0 || k == 0 {
        return Err(FamilyError::UnsupportedParameter(
            "semidirect factors must have positive order".into(),
        ));
    }
    let a = a.rem_euclid(m as i64) as u64;
    if gcd(a, m) != 1 && m > 1 {
        return Err(FamilyError::InvalidAction(format!("gcd({a}, {m}) != 1")));
    }
    if pow_mod(a, k, m) != 1 % m {
        return Err(FamilyError::InvalidAction(format!(
            "{a}^{k} is not 1 mod {m}"
        )));
    }
    let order = (m * k) as usize;
    let idx = |i: u64, j: u64| (i + m * j) as usize;
    let powers: Vec<u64> = (0..k).map(|j| pow_mod(a, j, m)).collect();
    let mut table = vec![0; order * order];
    for j1 in 0..k {
        for i1 in 0..m {
            for j2 in 0..k {
                for i2 in 0..m {
                    let i = (i1 + powers[j1 as usize] * i2) % m;
                    table[idx(i1, j1) * order + idx(i2, j2)] = idx(i, (j1 + j2) % k);
                }
            }
        }
    }
    let labels = (0..k)
        .flat_map(|j| (0..m).map(move |i| pair_label(i, j)))
        .collect();
    let gens = vec![
        ("x".to_string(), idx(1 % m, 0)),
        ("y".to_string(), idx(0, 1 % k)),
    ];
    Ok(FiniteGroup::from_flat(
        order,
        table,
        Some(gens),
        Some(labels),
    )?)
}

/// `Z_m`-by-`Z_4` group on pairs `x^i y^j` with `y²` central and
/// `y x y⁻¹ = x^s y²`; needs `s² ≡ 1 (mod m)` and `m` even.
///
/// Odd powers of `y` send `x^i` to `x^(s·i) y^(2i)`, so
/// `(i₁,j₁)·(i₂,j₂) = (i₁ + s^j₁·i₂, j₁ + j₂ + 2·j₁·i₂ mod 4)`.
fn central_twist(m: u64, s: u64) -> Result<FiniteGroup, GroupError> {
    let order = (m * 4) as usize;
    let idx = |i: u64, j: u64| (i + m * j) as usize;
    let mut table = vec![0; order * order];
    for j1 in 0..4 {
        for i1 in 0..m {
            for j2 in 0..4 {
                for i2 in 0..m {
                    let (i, j) = if j1 % 2 == 1 {
                        ((i1 + s * i2) % m, (j1 + j2 + 2 * (i2 % 2)) % 4)
                    } else {
                        ((i1 + i2) % m, (j1 + j2) % 4)
                    };
                    table[idx(i1, j1) * order + idx(i2, j2)] = idx(i, j);
                }
            }
        }
    }
    let labels = (0..4)
        .flat_map(|j| (0..m).map(move |i| pair_label(i, j)))
        .collect();
    let gens = vec![("x".to_string(), idx(1, 0)), ("y".to_string(), idx(0, 1))];
    FiniteGroup::from_flat(order, table, Some(gens), Some(labels))
}

/// Builds the order-`2^(n+1)` covering group of the given kind, asserting
/// that both distinguished subgroups are central of order 2 and free of
/// nontrivial commutators.
///
/// * `DQ`: `⟨x, y | x^(2^(n-1)) = y⁴ = 1, x^y = x⁻¹⟩`.
/// * `QSD`: `⟨x, y | x^(2^(n-1)) = y⁴ = 1, y² central, x^y = x^(2^(n-2)-1)·y²⟩`.
///
/// The split group `Z_(2^(n-1)) ⋊ Z_4` with action `2^(n-2)-1` does not
/// serve for `QSD`: both of its commutator-free central quotients of order
/// `2^n` are semidihedral. The extra `y²` in the conjugation makes the
/// quotient by `⟨x^(2^(n-2))·y²⟩` generalized quaternion while the quotient
/// by `⟨y²⟩` stays semidihedral.
pub fn cover_group(kind: CoverKind, n: u32) -> Result<CoverGroup, FamilyError> {
    let min = match kind {
        CoverKind::DQ => 3,
        CoverKind::QSD => 4,
    };
    if n < min || n > 30 {
        return Err(FamilyError::UnsupportedParameter(format!(
            "{kind:?} cover needs {min} <= n <= 30, got {n}"
        )));
    }
    let m = 1u64 << (n - 1);
    let group = match kind {
        CoverKind::DQ => semidirect_cyclic(m, 4, m as i64 - 1)?,
        CoverKind::QSD => central_twist(m, m / 2 - 1)?,
    };
    let x = group.generator("x").expect("cover has x");
    let y = group.generator("y").expect("cover has y");
    let y2 = group.pow(y, 2);
    let y2_sub = group.closure([y2]);
    let quat_sub = group.closure([group.mul(group.pow(x, (m / 2) as i64), y2)]);
    let (z_first, z_second) = match kind {
        CoverKind::DQ => (y2_sub, quat_sub),
        CoverKind::QSD => (quat_sub, y2_sub),
    };

    let commutators = group.commutator_set();
    for z in [&z_first, &z_second] {
        assert_eq!(z.order(), 2, "distinguished subgroup has order 2");
        assert!(group.is_central(z), "distinguished subgroup is central");
        assert!(
            commutators
                .iter()
                .all(|&c| c == group.identity() || !z.contains(c)),
            "distinguished subgroup avoids nontrivial commutators"
        );
    }
    assert_eq!(group.order() as u64, 1 << (n + 1));

    Ok(CoverGroup {
        group,
        z_first,
        z_second,
        kind,
        n,
    })
}

/// Multiset of element orders, sorted.
pub fn element_order_census(g: &FiniteGroup) -> Vec<usize> {
    let mut orders: Vec<usize> = g.elements().map(|e| g.element_order(e)).collect();
    orders.sort_unstable();
    orders
}
