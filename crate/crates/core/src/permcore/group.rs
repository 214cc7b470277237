use std::collections::VecDeque;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::One;

use super::chain::StabChain;
use super::{PermError, Permutation};

/// Default cap on explicit element enumeration.
pub const DEFAULT_ENUM_CAP: u64 = 1_000_000;

/// A permutation group given by generators, with a lazily built and cached
/// stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<Arc<StabChain>>,
}

impl PartialEq for PermGroup {
    /// Equality as subgroups of the symmetric group.
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.is_subgroup_of(other) && other.is_subgroup_of(self)
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(PermError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        Ok(Self {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    pub(crate) fn from_chain(degree: usize, chain: StabChain) -> Self {
        let generators = chain.strong_generators();
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(chain));
        Self {
            degree,
            generators,
            chain: cell,
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("positive degree")
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[&(0..n).collect::<Vec<_>>()]).unwrap());
            gens.push(Permutation::from_cycles(n, &[&[0, 1]]).unwrap());
        }
        Self::new(n, gens).expect("valid generators")
    }

    pub fn alternating(n: usize) -> Self {
        let gens = (2..n)
            .map(|k| Permutation::from_cycles(n, &[&[0, 1, k]]).unwrap())
            .collect();
        Self::new(n, gens).expect("valid generators")
    }

    pub fn cyclic(n: usize) -> Self {
        let gens = if n >= 2 {
            vec![Permutation::from_cycles(n, &[&(0..n).collect::<Vec<_>>()]).unwrap()]
        } else {
            Vec::new()
        };
        Self::new(n, gens).expect("valid generators")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// The cached chain, building it on first use.
    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| {
            Arc::new(StabChain::from_generators(
                self.degree,
                &[],
                self.generators.iter(),
            ))
        })
    }

    /// Returns the group with its stabilizer chain attached.
    pub fn build_bsgs(self) -> Self {
        self.chain();
        self
    }

    pub fn has_bsgs(&self) -> bool {
        self.chain.get().is_some()
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// `order()` as a `u64`, when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        u64::try_from(self.order()).ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Permutation::is_identity)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, PermError> {
        self.check_degree(p)?;
        Ok(self.chain().contains(p))
    }

    fn check_degree(&self, p: &Permutation) -> Result<(), PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        Ok(())
    }

    fn check_point(&self, point: usize) -> Result<(), PermError> {
        if point >= self.degree {
            return Err(PermError::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        Ok(())
    }

    /// The orbit of `point`, in breadth-first discovery order.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>, PermError> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut orbit = vec![point];
        let mut queue = VecDeque::from([point]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        Ok(orbit)
    }

    /// All orbits, each sorted, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if seen[p] {
                continue;
            }
            let mut orbit = self.orbit(p).expect("point in range");
            for &x in &orbit {
                seen[x] = true;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive_on_all_points(&self) -> bool {
        self.orbit(0)
            .map(|o| o.len() == self.degree)
            .unwrap_or(false)
    }

    /// Every element, provided there are at most `cap` of them.
    pub fn enumerate_elements(&self, cap: u64) -> Result<Vec<Permutation>, PermError> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(PermError::TooLarge { order, cap });
        }
        let mut out = Vec::with_capacity(u64::try_from(&order).unwrap_or(0) as usize);
        self.chain().for_each_element(|g| out.push(g.clone()));
        Ok(out)
    }

    /// The stabilizer of `point`, computed from a chain based at `point`;
    /// the returned group carries the tail of that chain as its BSGS.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup, PermError> {
        self.check_point(point)?;
        let chain = StabChain::from_generators(self.degree, &[point], self.generators.iter());
        Ok(Self::from_chain(self.degree, chain.tail(1)))
    }

    /// The pointwise stabilizer of `points`.
    pub fn pointwise_stabilizer(&self, points: &[usize]) -> Result<PermGroup, PermError> {
        for &p in points {
            self.check_point(p)?;
        }
        let chain = StabChain::from_generators(self.degree, points, self.generators.iter());
        let fixed = chain
            .levels
            .iter()
            .take_while(|l| points.contains(&l.base_point))
            .count();
        Ok(Self::from_chain(self.degree, chain.tail(fixed)))
    }

    /// The subgroup generated by `self` together with `extra`.
    pub fn join(&self, extra: &[Permutation]) -> Result<PermGroup, PermError> {
        for p in extra {
            self.check_degree(p)?;
        }
        let mut chain = self.chain().clone();
        for p in extra {
            chain.add_generator(p);
        }
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(chain));
        Ok(Self {
            degree: self.degree,
            generators: gens,
            chain: cell,
        })
    }

    /// Smallest subgroup containing `seeds` and normalized by `self`.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup, PermError> {
        for p in seeds {
            self.check_degree(p)?;
        }
        let mut chain = StabChain::empty(self.degree);
        let mut gens: Vec<Permutation> = Vec::new();
        for s in seeds {
            if chain.add_generator(s) {
                gens.push(s.clone());
            }
        }
        let mut next = 0;
        while next < gens.len() {
            let n = gens[next].clone();
            for g in &self.generators {
                let c = n.conjugate_by(g);
                if chain.add_generator(&c) {
                    gens.push(c);
                }
            }
            next += 1;
        }
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(chain));
        Ok(Self {
            degree: self.degree,
            generators: gens,
            chain: cell,
        })
    }

    /// `[G, G]`: the normal closure of the commutators of the generators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut commutators = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = Permutation::commutator(a, b);
                if !c.is_identity() && !commutators.contains(&c) {
                    commutators.push(c);
                }
            }
        }
        self.normal_closure(&commutators).expect("same degree")
    }

    /// `G ⊇ G′ ⊇ G″ ⊇ …` until stationary. A series ending in the trivial
    /// group stops there; one ending in a non-trivial perfect group lists
    /// that group twice, so `[A₅, A₅]` shows `A₅′ = A₅`.
    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().expect("non-empty");
            if last.order().is_one() {
                return series;
            }
            let next = last.derived_subgroup();
            let stationary = next.order() == last.order();
            series.push(next);
            if stationary {
                return series;
            }
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series()
            .last()
            .map(|g| g.order().is_one())
            .unwrap_or(true)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.mul(b) == b.mul(a))
        })
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.chain().contains(g))
    }

    /// Whether `self` is a normal subgroup of `other`.
    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other)
            && self.generators.iter().all(|n| {
                other
                    .generators
                    .iter()
                    .all(|g| self.chain().contains(&n.conjugate_by(g)))
            })
    }
}
