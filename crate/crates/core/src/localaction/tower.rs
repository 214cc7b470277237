use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::permcore::{PermGroup, Permutation};
use crate::vhcomplex::{horizontal_automaton, vertical_automaton, MealyAutomaton, VhDatum};
use crate::Order;

use super::sphere::{rank, sphere_size};
use super::{sphere_index_bounded, LocalActionError, SphereIndex, DEFAULT_WORD_BOUND};

/// Which tree a local action lives on: `Horizontal` is `T_n` (acted on by
/// the vertical letters), `Vertical` is `T_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Horizontal,
    Vertical,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Horizontal => Side::Vertical,
            Side::Vertical => Side::Horizontal,
        }
    }

    pub fn degree(self, d: &VhDatum) -> usize {
        match self {
            Side::Horizontal => d.n(),
            Side::Vertical => d.m(),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Horizontal => "horizontal",
            Side::Vertical => "vertical",
        })
    }
}

/// The automaton whose states act on the tree of `side`.
pub fn automaton_for(d: &VhDatum, side: Side) -> Result<MealyAutomaton, LocalActionError> {
    Ok(match side {
        Side::Horizontal => vertical_automaton(d)?,
        Side::Vertical => horizontal_automaton(d)?,
    })
}

/// One generator per automaton state, in state order.
fn state_permutations(
    aut: &MealyAutomaton,
    index: &SphereIndex,
) -> Result<Vec<Permutation>, LocalActionError> {
    let mut image = Vec::with_capacity(index.depth);
    (0..aut.states.size())
        .map(|s| {
            let mut images = Vec::with_capacity(index.len());
            for w in &index.words {
                aut.act_word_into(s, w, &mut image);
                images.push(rank(&aut.letters, &image)?);
            }
            Ok(Permutation::from_images(images)?)
        })
        .collect()
}

fn level(aut: &MealyAutomaton, depth: usize, bound: u64) -> Result<PermGroup, LocalActionError> {
    let index = sphere_index_bounded(&aut.letters, depth, bound)?;
    let gens = state_permutations(aut, &index)?;
    Ok(PermGroup::new(index.len(), gens)?.build_bsgs())
}

/// `P_k`: the group generated by the states acting on the words of length
/// `k` over the letters of `side`.
pub fn local_group(d: &VhDatum, side: Side, k: usize) -> Result<PermGroup, LocalActionError> {
    let aut = automaton_for(d, side)?;
    level(&aut, k, DEFAULT_WORD_BOUND)
}

#[derive(Clone, Debug)]
pub struct LocalTower {
    pub side: Side,
    /// Degree of the tree.
    pub degree: usize,
    /// `groups[k - 1]` is `P_k`.
    pub groups: Vec<PermGroup>,
    pub orders: Vec<Order>,
    /// `kernel_orders[k - 1]` is the order of the kernel of `P_{k+1} → P_k`.
    pub kernel_orders: Vec<Order>,
}

pub fn tower(d: &VhDatum, side: Side, depth: usize) -> Result<LocalTower, LocalActionError> {
    tower_bounded(d, side, depth, DEFAULT_WORD_BOUND)
}

/// Builds `P_1 … P_K`, checking that truncation maps each level's generators
/// onto the previous level's, that `|P_{k+1}| = |ker| · |P_k|`, and that a
/// stabilized tower stays stabilized.
pub fn tower_bounded(
    d: &VhDatum,
    side: Side,
    depth: usize,
    bound: u64,
) -> Result<LocalTower, LocalActionError> {
    if depth == 0 {
        return Err(LocalActionError::ZeroDepth);
    }
    let aut = automaton_for(d, side)?;
    let n = aut.letters.size();
    let words = sphere_size(n, depth);
    if words > bound as u128 {
        return Err(LocalActionError::DepthOverflow {
            depth,
            words,
            bound,
        });
    }
    let groups = (1..=depth)
        .into_par_iter()
        .map(|k| level(&aut, k, bound))
        .collect::<Result<Vec<_>, _>>()?;
    for k in 1..depth {
        check_truncation(&groups[k - 1], &groups[k], n, k)?;
    }
    let kernel_orders = (1..depth)
        .into_par_iter()
        .map(|k| kernel_order(&groups[k - 1], &groups[k], k))
        .collect::<Result<Vec<_>, _>>()?;
    let orders: Vec<Order> = groups.iter().map(|g| Order(g.order())).collect();
    if orders.len() >= 2 {
        let raw: Vec<BigUint> = orders.iter().map(|o| o.0.clone()).collect();
        verdict_from_orders(&raw)?;
    }
    Ok(LocalTower {
        side,
        degree: n,
        groups,
        orders,
        kernel_orders: kernel_orders.into_iter().map(Order).collect(),
    })
}

/// Word `i` of length `k + 1` truncates to word `i / (n − 1)`.
fn check_truncation(
    lower: &PermGroup,
    upper: &PermGroup,
    n: usize,
    k: usize,
) -> Result<(), LocalActionError> {
    for (s, (g, h)) in lower
        .generators()
        .iter()
        .zip(upper.generators())
        .enumerate()
    {
        for i in 0..upper.degree() {
            if h.apply(i) / (n - 1) != g.apply(i / (n - 1)) {
                return Err(LocalActionError::Incompatible {
                    depth: k + 1,
                    detail: format!("state {s} disagrees with its truncation on word {i}"),
                });
            }
        }
    }
    let (lo, hi) = (lower.order(), upper.order());
    if !hi.is_multiple_of(&lo) {
        return Err(LocalActionError::Incompatible {
            depth: k + 1,
            detail: format!("|P_{k}| = {lo} does not divide |P_{}| = {hi}", k + 1),
        });
    }
    Ok(())
}

/// Order of the kernel of `P_{k+1} → P_k`, computed as the pointwise
/// stabilizer of the short words in the diagonal action on both spheres.
fn kernel_order(
    lower: &PermGroup,
    upper: &PermGroup,
    k: usize,
) -> Result<BigUint, LocalActionError> {
    let (dl, du) = (lower.degree(), upper.degree());
    let gens = lower
        .generators()
        .iter()
        .zip(upper.generators())
        .map(|(g, h)| Permutation::from_images(g.images().chain(h.images().map(|x| x + dl))))
        .collect::<Result<Vec<_>, _>>()?;
    let diagonal = PermGroup::new(dl + du, gens)?;
    let incompatible = |detail: String| LocalActionError::Incompatible {
        depth: k + 1,
        detail,
    };
    if diagonal.order() != upper.order() {
        return Err(incompatible(format!(
            "truncation is not a homomorphism (diagonal order {})",
            diagonal.order()
        )));
    }
    // The kernel fixes every short word, hence every block of long words.
    let short: Vec<usize> = (0..dl).collect();
    let kernel = if lower.is_trivial() {
        upper.order()
    } else {
        diagonal.pointwise_stabilizer(&short)?.order()
    };
    if &kernel * lower.order() != upper.order() {
        return Err(incompatible(format!(
            "|ker| · |P_{k}| = {} · {} ≠ |P_{}| = {}",
            kernel,
            lower.order(),
            k + 1,
            upper.order()
        )));
    }
    Ok(kernel)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiscretenessVerdict {
    /// `|P_{at+1}| = |P_at|`: the projection's closure is discrete.
    Discrete { at: usize },
    /// Orders still growing at the last computed depth `at`. Evidence only.
    NoStabilization { at: usize },
    /// No tower available (raw group input).
    NotApplicable,
}

impl DiscretenessVerdict {
    pub fn is_discrete(&self) -> bool {
        matches!(self, DiscretenessVerdict::Discrete { .. })
    }
}

impl fmt::Display for DiscretenessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiscretenessVerdict::Discrete { at } => {
                write!(f, "discrete (stabilizes at depth {at})")
            }
            DiscretenessVerdict::NoStabilization { at } => {
                write!(
                    f,
                    "no stabilization up to depth {at} (evidence, not a certificate)"
                )
            }
            DiscretenessVerdict::NotApplicable => f.write_str("not applicable"),
        }
    }
}

/// Verdict from the orders `|P_1|, …, |P_K|`.
pub fn verdict_from_orders(orders: &[BigUint]) -> Result<DiscretenessVerdict, LocalActionError> {
    if orders.len() < 2 {
        return Err(LocalActionError::TowerTooShort { len: orders.len() });
    }
    let Some(i) = orders.windows(2).position(|w| w[0] == w[1]) else {
        return Ok(DiscretenessVerdict::NoStabilization { at: orders.len() });
    };
    if let Some(j) = orders[i..].iter().position(|o| *o != orders[i]) {
        return Err(LocalActionError::PersistenceViolated {
            at: i + 1,
            grows_at: i + j + 1,
        });
    }
    Ok(DiscretenessVerdict::Discrete { at: i + 1 })
}

pub fn discreteness_verdict(t: &LocalTower) -> Result<DiscretenessVerdict, LocalActionError> {
    let raw: Vec<BigUint> = t.orders.iter().map(|o| o.0.clone()).collect();
    verdict_from_orders(&raw)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TowerReport {
    pub side: Side,
    pub depths: usize,
    pub orders: Vec<Order>,
    pub verdict: DiscretenessVerdict,
}

impl LocalTower {
    pub fn report(&self) -> Result<TowerReport, LocalActionError> {
        Ok(TowerReport {
            side: self.side,
            depths: self.groups.len(),
            orders: self.orders.clone(),
            verdict: discreteness_verdict(self)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn verdicts() {
        assert_eq!(
            verdict_from_orders(&orders(&[1, 1])).unwrap(),
            DiscretenessVerdict::Discrete { at: 1 }
        );
        assert_eq!(
            verdict_from_orders(&orders(&[4, 8, 8, 8])).unwrap(),
            DiscretenessVerdict::Discrete { at: 2 }
        );
        assert_eq!(
            verdict_from_orders(&orders(&[2, 4, 8, 16, 32])).unwrap(),
            DiscretenessVerdict::NoStabilization { at: 5 }
        );
        assert!(matches!(
            verdict_from_orders(&orders(&[4])),
            Err(LocalActionError::TowerTooShort { len: 1 })
        ));
        assert!(matches!(
            verdict_from_orders(&orders(&[4, 4, 8])),
            Err(LocalActionError::PersistenceViolated { at: 1, grows_at: 3 })
        ));
    }

    #[test]
    fn verdict_json_shape() {
        let v = serde_json::to_value(DiscretenessVerdict::Discrete { at: 2 }).unwrap();
        assert_eq!(v, serde_json::json!({"kind": "discrete", "at": 2}));
        let v = serde_json::to_value(DiscretenessVerdict::NoStabilization { at: 5 }).unwrap();
        assert_eq!(v, serde_json::json!({"kind": "no_stabilization", "at": 5}));
    }

    #[test]
    fn commuting_tower_is_trivial() {
        let d = VhDatum::commuting(4, 6).unwrap();
        for side in [Side::Horizontal, Side::Vertical] {
            let t = tower(&d, side, 5).unwrap();
            assert!(t.orders.iter().all(|o| *o == 1));
            assert_eq!(
                t.groups[2].degree(),
                side.degree(&d) * (side.degree(&d) - 1).pow(2)
            );
            assert_eq!(
                discreteness_verdict(&t).unwrap(),
                DiscretenessVerdict::Discrete { at: 1 }
            );
        }
        let report =
            serde_json::to_value(tower(&d, Side::Horizontal, 2).unwrap().report().unwrap())
                .unwrap();
        assert_eq!(
            report,
            serde_json::json!({"side": "horizontal", "depths": 2, "orders": [1, 1],
                               "verdict": {"kind": "discrete", "at": 1}})
        );
    }
}
