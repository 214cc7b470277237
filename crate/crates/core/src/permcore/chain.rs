//! Base and strong generating set, built by deterministic Schreier–Sims.
//!
//! Every level keeps an explicit transversal. Orbits are only ever extended,
//! so a Schreier generator that has sifted once keeps sifting as the chain
//! below it grows; each level remembers how many (orbit point, generator)
//! pairs it has already checked and never re-checks them.

use num_bigint::BigUint;

use super::Permutation;

const NOT_IN_ORBIT: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) base_point: usize,
    /// Strong generators fixing all earlier base points.
    pub(crate) gens: Vec<Permutation>,
    pub(crate) orbit: Vec<usize>,
    /// `reps[i]` maps the base point to `orbit[i]`.
    pub(crate) reps: Vec<Permutation>,
    reps_inv: Vec<Permutation>,
    position: Vec<u32>,
    checked: Vec<usize>,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut position = vec![NOT_IN_ORBIT; degree];
        position[base_point] = 0;
        Self {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            reps: vec![Permutation::identity(degree)],
            reps_inv: vec![Permutation::identity(degree)],
            position,
            checked: vec![0],
        }
    }

    #[inline]
    fn index_of(&self, point: usize) -> Option<usize> {
        match self.position[point] {
            NOT_IN_ORBIT => None,
            i => Some(i as usize),
        }
    }

    pub(crate) fn contains_point(&self, point: usize) -> bool {
        self.position[point] != NOT_IN_ORBIT
    }

    /// Adds a generator and closes the orbit under all generators.
    fn push_generator(&mut self, g: Permutation) {
        self.gens.push(g);
        let new = self.gens.len() - 1;
        let known = self.orbit.len();
        // Old points only need the new generator; new points need all.
        for i in 0..known {
            let image = self.gens[new].apply(self.orbit[i]);
            if !self.contains_point(image) {
                let rep = self.gens[new].mul(&self.reps[i]);
                self.push_point(image, rep);
            }
        }
        let mut i = known;
        while i < self.orbit.len() {
            for gi in 0..self.gens.len() {
                let image = self.gens[gi].apply(self.orbit[i]);
                if !self.contains_point(image) {
                    let rep = self.gens[gi].mul(&self.reps[i]);
                    self.push_point(image, rep);
                }
            }
            i += 1;
        }
    }

    fn push_point(&mut self, point: usize, rep: Permutation) {
        self.position[point] = self.orbit.len() as u32;
        self.orbit.push(point);
        self.reps_inv.push(rep.inverse());
        self.reps.push(rep);
        self.checked.push(0);
    }
}

/// A stabilizer chain `G = G⁽⁰⁾ ≥ G⁽¹⁾ ≥ … ≥ G⁽ᵏ⁾ = 1`.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl StabChain {
    pub(crate) fn empty(degree: usize) -> Self {
        Self {
            degree,
            levels: Vec::new(),
        }
    }

    /// Builds a chain whose base begins with `prefix` (in order).
    pub(crate) fn with_base_prefix(degree: usize, prefix: &[usize]) -> Self {
        let mut chain = Self::empty(degree);
        for &b in prefix {
            if chain.levels.iter().all(|l| l.base_point != b) {
                chain.levels.push(Level::new(degree, b));
            }
        }
        chain
    }

    pub(crate) fn from_generators<'a, I>(degree: usize, prefix: &[usize], gens: I) -> Self
    where
        I: IntoIterator<Item = &'a Permutation>,
    {
        let mut chain = Self::with_base_prefix(degree, prefix);
        for g in gens {
            chain.add_generator(g);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// All strong generators, each listed once (at the shallowest level that
    /// received it).
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn basic_orbits(&self) -> Vec<Vec<usize>> {
        self.levels.iter().map(|l| l.orbit.clone()).collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::from(1u32), |acc, l| {
            acc * BigUint::from(l.orbit.len())
        })
    }

    /// Order of the subgroup fixing the first `k` base points.
    #[cfg(test)]
    pub(crate) fn order_from(&self, k: usize) -> BigUint {
        self.levels[k.min(self.levels.len())..]
            .iter()
            .fold(BigUint::from(1u32), |acc, l| {
                acc * BigUint::from(l.orbit.len())
            })
    }

    /// Sifts `g` through levels `start..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` when it went all the way).
    pub(crate) fn strip(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let beta = h.apply(level.base_point);
            match level.index_of(beta) {
                Some(k) => {
                    if k != 0 {
                        h = level.reps_inv[k].mul(&h);
                    }
                }
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (h, j) = self.strip(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Adds `g` to the generated group; returns false when `g` was already
    /// a member.
    pub(crate) fn add_generator(&mut self, g: &Permutation) -> bool {
        debug_assert_eq!(g.degree(), self.degree);
        let (h, j) = self.strip(g, 0);
        if j == self.levels.len() && h.is_identity() {
            return false;
        }
        let deepest = self.insert_residue(h, 0, j);
        self.complete(deepest);
        true
    }

    /// Adds a non-trivial residue (which fixes base points `0..j`) as a strong
    /// generator at levels `from..=j`, growing the base if needed.
    fn insert_residue(&mut self, h: Permutation, from: usize, j: usize) -> usize {
        if j == self.levels.len() {
            let b = h
                .first_moved_point()
                .expect("a non-member residue is never the identity");
            self.levels.push(Level::new(self.degree, b));
        }
        for l in from..=j {
            self.levels[l].push_generator(h.clone());
        }
        j
    }

    /// Restores the BSGS property for levels `0..=top`, assuming every level
    /// deeper than `top` is already complete.
    fn complete(&mut self, top: usize) {
        let mut i = top as isize;
        'levels: while i >= 0 {
            let li = i as usize;
            let mut p = 0;
            while p < self.levels[li].orbit.len() {
                while self.levels[li].checked[p] < self.levels[li].gens.len() {
                    let gi = self.levels[li].checked[p];
                    self.levels[li].checked[p] += 1;
                    let level = &self.levels[li];
                    let x = &level.gens[gi];
                    let image = x.apply(level.orbit[p]);
                    let q = level.index_of(image).expect("orbit is generator-closed");
                    // u_{x(β)}⁻¹ · x · u_β fixes the base point.
                    let schreier = level.reps_inv[q].mul(&x.mul(&level.reps[p]));
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = self.strip(&schreier, li + 1);
                    if j < self.levels.len() || !h.is_identity() {
                        let deepest = self.insert_residue(h, li + 1, j);
                        i = deepest as isize;
                        continue 'levels;
                    }
                }
                p += 1;
            }
            i -= 1;
        }
    }

    /// The chain of the stabilizer of the first `k` base points.
    pub(crate) fn tail(&self, k: usize) -> StabChain {
        StabChain {
            degree: self.degree,
            levels: self.levels[k.min(self.levels.len())..].to_vec(),
        }
    }

    /// Calls `f` on every element, as products `u₀ · u₁ · … · u_{k-1}` of
    /// transversal elements.
    pub(crate) fn for_each_element<F: FnMut(&Permutation)>(&self, mut f: F) {
        fn rec<F: FnMut(&Permutation)>(
            levels: &[Level],
            depth: usize,
            prefix: &Permutation,
            f: &mut F,
        ) {
            if depth == levels.len() {
                f(prefix);
                return;
            }
            for rep in &levels[depth].reps {
                let next = prefix.mul(rep);
                rec(levels, depth + 1, &next, f);
            }
        }
        rec(&self.levels, 0, &Permutation::identity(self.degree), &mut f);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(d: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(d, cycles).unwrap()
    }

    #[test]
    fn symmetric_group_order() {
        let gens = [cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1]])];
        let chain = StabChain::from_generators(5, &[], gens.iter());
        assert_eq!(chain.order(), BigUint::from(120u32));
        // Every generator sifts to the identity.
        assert!(gens.iter().all(|g| chain.contains(g)));
    }

    #[test]
    fn prescribed_base_prefix_is_respected() {
        let gens = [cyc(6, &[&[0, 1, 2]]), cyc(6, &[&[1, 2, 3, 4, 5]])];
        let chain = StabChain::from_generators(6, &[4], gens.iter());
        assert_eq!(chain.base()[0], 4);
        assert_eq!(chain.order(), BigUint::from(360u32));
        assert_eq!(chain.order_from(1), BigUint::from(60u32));
    }

    #[test]
    fn enumerated_elements_are_distinct_members() {
        let gens = [cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])];
        let chain = StabChain::from_generators(4, &[], gens.iter());
        let mut all = Vec::new();
        chain.for_each_element(|g| all.push(g.clone()));
        assert_eq!(all.len(), 8);
        all.sort();
        all.dedup();
        assert_eq!(all.len(), 8);
    }
}
