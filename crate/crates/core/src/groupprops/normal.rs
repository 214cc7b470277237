use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::order::Order;
use crate::permcore::{PermGroup, Permutation};

use super::GroupPropsError;

/// Socle type of a permutation group, as far as the obstruction needs it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QpTag {
    /// Quasi-primitive with a unique minimal normal subgroup, which is simple
    /// and non-abelian.
    AlmostSimple,
    /// Quasi-primitive with two minimal normal subgroups, both regular.
    TwoRegularMns,
    OtherQuasiprimitive,
    NotQuasiprimitive,
    Intransitive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QpType {
    pub tag: QpTag,
    pub mns_orders: Vec<Order>,
    pub socle_order: Order,
}

/// [`QpType`] together with the subgroups it was computed from.
#[derive(Clone, Debug)]
pub struct QpAnalysis {
    pub qp_type: QpType,
    pub transitive: bool,
    pub minimal_normal: Vec<PermGroup>,
    pub socle: PermGroup,
}

impl QpAnalysis {
    pub fn is_quasiprimitive(&self) -> bool {
        !matches!(
            self.qp_type.tag,
            QpTag::NotQuasiprimitive | QpTag::Intransitive
        )
    }
}

/// One representative per conjugacy class of `elements` under conjugation by
/// `gens`, identity first.
pub fn class_representatives(elements: &[Permutation], gens: &[Permutation]) -> Vec<Permutation> {
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut seen = vec![false; elements.len()];
    let mut reps = Vec::new();
    let mut order: Vec<usize> = (0..elements.len()).collect();
    // identity first, then by discovery order
    order.sort_by_key(|&i| !elements[i].is_identity());
    for start in order {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        reps.push(elements[start].clone());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for g in gens {
                let c = elements[i].conjugate_by(g);
                let j = index[&c];
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    reps
}

fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Minimal normal subgroups, as the minimal members of the normal closures of
/// single elements. Requires `order(g) ≤ enum_cap`.
pub fn minimal_normal_subgroups(
    g: &PermGroup,
    enum_cap: u64,
) -> Result<Vec<PermGroup>, GroupPropsError> {
    if g.order().is_one() {
        return Ok(Vec::new());
    }
    let elements = g.enumerate_elements(enum_cap)?;
    let reps = class_representatives(&elements, g.generators());
    // Every non-trivial normal subgroup holds an element of prime order.
    let mut closures: Vec<PermGroup> = Vec::new();
    for x in reps.iter().skip(1) {
        if !x.order().to_u64().is_some_and(is_prime) {
            continue;
        }
        let n = g.normal_closure(std::slice::from_ref(x))?;
        if !closures
            .iter()
            .any(|c| c.order() == n.order() && n.is_subgroup_of(c))
        {
            closures.push(n);
        }
    }
    let mut minimal: Vec<PermGroup> = closures
        .iter()
        .filter(|n| {
            !closures
                .iter()
                .any(|c| c.order() < n.order() && c.is_subgroup_of(n))
        })
        .cloned()
        .collect();
    minimal.sort_by_key(|n| n.order());
    Ok(minimal)
}

/// Simple: non-trivial, and the normal closure of every non-identity element
/// is the whole group.
pub fn is_simple(g: &PermGroup, enum_cap: u64) -> Result<bool, GroupPropsError> {
    let order = g.order();
    if order.is_one() {
        return Ok(false);
    }
    let elements = g.enumerate_elements(enum_cap)?;
    for x in class_representatives(&elements, g.generators())
        .iter()
        .skip(1)
    {
        if g.normal_closure(std::slice::from_ref(x))?.order() != order {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Minimal normal subgroups, socle and quasi-primitive type in one pass.
pub fn qp_analysis(g: &PermGroup, enum_cap: u64) -> Result<QpAnalysis, GroupPropsError> {
    let transitive = super::is_transitive(g)?;
    let mns = minimal_normal_subgroups(g, enum_cap)?;
    let socle_gens: Vec<Permutation> = mns
        .iter()
        .flat_map(|n| n.generators().iter().cloned())
        .collect();
    let socle = PermGroup::trivial(g.degree()).join(&socle_gens)?;
    let quasiprimitive = transitive && mns.iter().all(PermGroup::is_transitive_on_all_points);
    let degree = BigUint::from(g.degree());

    let tag = if !transitive {
        QpTag::Intransitive
    } else if !quasiprimitive {
        QpTag::NotQuasiprimitive
    } else {
        match mns.len() {
            1 if !mns[0].is_abelian() && is_simple(&mns[0], enum_cap)? => QpTag::AlmostSimple,
            1 => QpTag::OtherQuasiprimitive,
            2 if mns.iter().all(|n| n.order() == degree) => QpTag::TwoRegularMns,
            n => {
                return Err(GroupPropsError::InvariantViolation(format!(
                    "quasi-primitive group with {n} minimal normal subgroups \
                     (expected one, or two regular ones)"
                )))
            }
        }
    };
    Ok(QpAnalysis {
        qp_type: QpType {
            tag,
            mns_orders: mns.iter().map(|n| Order(n.order())).collect(),
            socle_order: Order(socle.order()),
        },
        transitive,
        minimal_normal: mns,
        socle,
    })
}

pub fn classify_qp(g: &PermGroup, enum_cap: u64) -> Result<QpType, GroupPropsError> {
    Ok(qp_analysis(g, enum_cap)?.qp_type)
}

/// Transitive, and every non-trivial normal subgroup is transitive (checked
/// on the minimal ones).
pub fn is_quasiprimitive(g: &PermGroup, enum_cap: u64) -> Result<bool, GroupPropsError> {
    if !super::is_transitive(g)? {
        return Ok(false);
    }
    Ok(minimal_normal_subgroups(g, enum_cap)?
        .iter()
        .all(PermGroup::is_transitive_on_all_points))
}

fn prime_factors_with_multiplicity(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            out.push(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Normal subgroups of `g` (closed under joins of single-element closures),
/// excluding `g` itself.
fn proper_normal_subgroups(
    g: &PermGroup,
    enum_cap: u64,
) -> Result<Vec<PermGroup>, GroupPropsError> {
    let order = g.order();
    let elements = g.enumerate_elements(enum_cap)?;
    let mut found: Vec<PermGroup> = Vec::new();
    let push = |found: &mut Vec<PermGroup>, n: PermGroup| {
        if n.order() != order
            && !found
                .iter()
                .any(|c| c.order() == n.order() && n.is_subgroup_of(c))
        {
            found.push(n);
            true
        } else {
            false
        }
    };
    for x in class_representatives(&elements, g.generators())
        .iter()
        .skip(1)
    {
        let n = g.normal_closure(std::slice::from_ref(x))?;
        push(&mut found, n);
    }
    let mut i = 0;
    while i < found.len() {
        for j in 0..i {
            let joined = found[i].join(found[j].generators())?;
            push(&mut found, joined);
        }
        i += 1;
    }
    Ok(found)
}

/// Orders of the composition factors (a multiset, sorted ascending).
///
/// The solvable layers of the derived series contribute the primes of their
/// orders; the perfect core is split by repeatedly taking a maximal normal
/// subgroup, ties broken by largest order.
pub fn composition_factor_orders(
    g: &PermGroup,
    enum_cap: u64,
) -> Result<Vec<BigUint>, GroupPropsError> {
    let mut factors = Vec::new();
    let mut current = g.clone();
    loop {
        let series = current.derived_series();
        for pair in series.windows(2) {
            let index = pair[0].order() / pair[1].order();
            if !index.is_one() {
                let index = index.to_u64().ok_or_else(|| {
                    GroupPropsError::InvariantViolation("abelian layer too large".into())
                })?;
                factors.extend(
                    prime_factors_with_multiplicity(index)
                        .into_iter()
                        .map(BigUint::from),
                );
            }
        }
        let core = series.last().expect("non-empty").clone();
        if core.order().is_one() {
            break;
        }
        let normals = proper_normal_subgroups(&core, enum_cap)?;
        let maximal = normals
            .iter()
            .filter(|n| {
                !normals
                    .iter()
                    .any(|c| c.order() > n.order() && n.is_subgroup_of(c))
            })
            .max_by_key(|n| n.order());
        let next = match maximal {
            Some(n) => n.clone(),
            None => PermGroup::trivial(g.degree()),
        };
        factors.push(core.order() / next.order());
        current = next;
    }
    factors.sort();
    Ok(factors)
}
