//! The seeded group suite shared by the oracle tests and the acceptance run.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use super::oracles::Elem;

/// A permutation moving only a random subset of the points, so that small
/// and intransitive groups show up as often as the full symmetric group.
pub fn random_perm(rng: &mut StdRng, degree: usize) -> Elem {
    let support = rng.gen_range(2..=degree);
    let mut points: Vec<usize> = (0..degree).collect();
    points.shuffle(rng);
    let moved = &points[..support];
    let mut shuffled = moved.to_vec();
    shuffled.shuffle(rng);
    let mut images: Elem = (0..degree).collect();
    for (&from, &to) in moved.iter().zip(&shuffled) {
        images[from] = to;
    }
    images
}

pub fn random_groups(count: usize, seed: u64) -> Vec<(usize, Vec<Elem>)> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let degree = rng.gen_range(3..=8);
            let ngens = rng.gen_range(1..=2);
            let gens = (0..ngens).map(|_| random_perm(&mut rng, degree)).collect();
            (degree, gens)
        })
        .collect()
}

/// Thirty seeded groups plus a few structured ones with rich block and
/// normal structure.
pub fn suite() -> Vec<(usize, Vec<Elem>)> {
    let mut all = random_groups(30, 0x5eed);
    all.push((4, vec![vec![1, 2, 3, 0]]));
    all.push((4, vec![vec![1, 0, 2, 3], vec![0, 1, 3, 2]]));
    all.push((
        8,
        vec![vec![1, 2, 3, 0, 5, 6, 7, 4], vec![4, 5, 6, 7, 0, 1, 2, 3]],
    ));
    all.push((6, vec![vec![1, 2, 0, 4, 5, 3], vec![3, 4, 5, 0, 1, 2]]));
    all.push((
        8,
        vec![vec![1, 2, 3, 4, 5, 6, 7, 0], vec![0, 7, 6, 5, 4, 3, 2, 1]],
    ));
    all.push((6, vec![vec![1, 2, 3, 4, 5, 0], vec![1, 0, 2, 3, 4, 5]]));
    all
}
