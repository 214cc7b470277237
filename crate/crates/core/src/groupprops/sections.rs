use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::permcore::{PermGroup, Permutation};

use super::{class_representatives, composition_factor_orders, is_simple, GroupPropsError};

/// Default bound on `|S|` for the exact section test.
pub const DEFAULT_SECTION_CAP: u64 = 2000;

/// Smallest order shared by two non-isomorphic finite simple groups
/// (`A8` and `PSL(3,4)`); below it, a simple group is determined by its order.
const FIRST_ORDER_COLLISION: u64 = 20160;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SectionVerdict {
    Yes,
    No,
    Unknown,
}

/// Whether a simple group `m` is a section `H/K` (`K ⊴ H ≤ s`) of `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionReport {
    pub order_divides: bool,
    pub prime_spectrum_ok: bool,
    pub element_order_spectrum_ok: bool,
    pub exact: SectionVerdict,
    pub witness: Option<String>,
}

impl SectionReport {
    pub fn necessary_ok(&self) -> bool {
        self.order_divides && self.prime_spectrum_ok && self.element_order_spectrum_ok
    }
}

fn primes_of(mut n: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            out.insert(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.insert(n);
    }
    out
}

fn element_orders(g: &PermGroup, cap: u64) -> Result<BTreeSet<BigUint>, GroupPropsError> {
    Ok(g.enumerate_elements(cap)?
        .iter()
        .map(Permutation::order)
        .collect())
}

fn to_u64(n: &BigUint) -> Result<u64, GroupPropsError> {
    n.to_u64()
        .ok_or_else(|| GroupPropsError::InvariantViolation(format!("order {n} exceeds u64")))
}

/// Necessary conditions for the simple group `m` to be a section of `s`:
/// `|m|` divides `|s|`, every prime of `|m|` divides `|s|`, and every element
/// order of `m` divides an element order of `s`. A failed condition settles
/// the question (`exact = No`); otherwise `exact` is `Unknown`.
pub fn section_necessary(
    m: &PermGroup,
    s: &PermGroup,
    enum_cap: u64,
) -> Result<SectionReport, GroupPropsError> {
    if !is_simple(m, enum_cap)? {
        return Err(GroupPropsError::NotSimple);
    }
    let (om, os) = (m.order(), s.order());
    let order_divides = os.is_multiple_of(&om);
    let primes_s = primes_of(to_u64(&os)?);
    let missing_prime = primes_of(to_u64(&om)?)
        .into_iter()
        .find(|p| !primes_s.contains(p));
    let orders_m = element_orders(m, enum_cap)?;
    let orders_s = element_orders(s, enum_cap)?;
    let missing_order = orders_m
        .iter()
        .find(|&a| !orders_s.iter().any(|b| b.is_multiple_of(a)))
        .cloned();

    let witness = if !order_divides {
        Some(format!("|M| = {om} does not divide |S| = {os}"))
    } else if let Some(p) = missing_prime {
        Some(format!("prime {p} divides |M| but not |S|"))
    } else {
        missing_order
            .as_ref()
            .map(|k| format!("M has an element of order {k}; no element order of S is a multiple"))
    };
    let report = SectionReport {
        order_divides,
        prime_spectrum_ok: missing_prime.is_none(),
        element_order_spectrum_ok: missing_order.is_none(),
        exact: if witness.is_some() {
            SectionVerdict::No
        } else {
            SectionVerdict::Unknown
        },
        witness,
    };
    Ok(report)
}

/// Exact section test for `|s| ≤ cap`.
///
/// A prime-order `m` is a section iff its order divides `|s|`. A non-abelian
/// simple `m` is 2-generated, so if `m ≅ H/K` with `H ≤ s`, lifting two
/// generators gives a 2-generated `L ≤ H` mapping onto `m`; hence it suffices
/// to look for `m` among the composition factors of the subgroups `⟨x, y⟩`,
/// with `x` running over class representatives of `s`.
pub fn section_exact_small(m: &PermGroup, s: &PermGroup, cap: u64) -> SectionVerdict {
    match exact_inner(m, s, cap) {
        Ok(v) => v,
        Err(_) => SectionVerdict::Unknown,
    }
}

fn exact_inner(m: &PermGroup, s: &PermGroup, cap: u64) -> Result<SectionVerdict, GroupPropsError> {
    let (om, os) = (m.order(), s.order());
    if os > BigUint::from(cap) {
        return Ok(SectionVerdict::Unknown);
    }
    if !os.is_multiple_of(&om) {
        return Ok(SectionVerdict::No);
    }
    if m.is_abelian() {
        // simple abelian: cyclic of prime order, present by Cauchy
        return Ok(SectionVerdict::Yes);
    }
    let ambiguous = om >= BigUint::from(FIRST_ORDER_COLLISION);
    let elements = s.enumerate_elements(cap)?;
    let reps = class_representatives(&elements, s.generators());
    let mut seen: HashSet<Vec<Permutation>> = HashSet::new();
    let mut saw_candidate = false;
    for x in reps.iter().skip(1) {
        for y in &elements {
            let l = PermGroup::new(s.degree(), vec![x.clone(), y.clone()])?;
            let ol = l.order();
            if !(&ol % &om).is_zero() || l.is_solvable() {
                continue;
            }
            let mut key = l.enumerate_elements(cap)?;
            key.sort();
            if !seen.insert(key) {
                continue;
            }
            if composition_factor_orders(&l, cap)?.contains(&om) {
                if !ambiguous {
                    return Ok(SectionVerdict::Yes);
                }
                saw_candidate = true;
            }
        }
    }
    Ok(if saw_candidate {
        SectionVerdict::Unknown
    } else {
        SectionVerdict::No
    })
}

/// Whether `S / (S ∩ M)` is solvable, where `S` and `S ∩ M` are the
/// stabilizers of `point` in `p` and `m`: true iff the derived series of `S`
/// descends into `S ∩ M`.
pub fn solvable_outer_check(
    p: &PermGroup,
    m: &PermGroup,
    point: usize,
) -> Result<bool, GroupPropsError> {
    if !m.is_normal_in(p) {
        return Err(GroupPropsError::NotNormal);
    }
    let s = p.point_stabilizer(point)?;
    let s_cap_m = m.point_stabilizer(point)?;
    let series = s.derived_series();
    let terminal = series.last().expect("non-empty");
    Ok(terminal.order().is_one() || terminal.is_subgroup_of(&s_cap_m))
}
