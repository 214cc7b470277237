//! Schreier–Sims, primitivity and minimal normal subgroups against
//! brute-force closure, partition search and the normal-subgroup lattice.

mod common;

use std::collections::BTreeSet;

use common::oracles::{self, Elem};
use common::suite::suite;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use wangcheck::groupprops::{
    composition_factor_orders, is_primitive, is_simple, is_transitive, minimal_block_systems,
    minimal_normal_subgroups, section_exact_small, SectionVerdict, DEFAULT_SECTION_CAP,
};
use wangcheck::permcore::DEFAULT_ENUM_CAP;
use wangcheck::{PermGroup, Permutation};

fn to_group(degree: usize, gens: &[Elem]) -> PermGroup {
    let gens = gens
        .iter()
        .map(|g| Permutation::from_images(g.iter().copied()).unwrap())
        .collect();
    PermGroup::new(degree, gens).unwrap()
}

fn elem(p: &Permutation) -> Elem {
    p.images().collect()
}

fn element_set(g: &PermGroup) -> BTreeSet<Elem> {
    g.enumerate_elements(DEFAULT_ENUM_CAP)
        .unwrap()
        .iter()
        .map(elem)
        .collect()
}

#[test]
fn schreier_sims_order_and_membership_match_closure() {
    for (degree, gens) in suite() {
        let g = to_group(degree, &gens);
        let closure = oracles::closure(degree, &gens);
        assert_eq!(
            g.order().to_usize().unwrap(),
            closure.len(),
            "order of <{gens:?}>"
        );
        assert_eq!(element_set(&g), closure.iter().cloned().collect());
        // every permutation of the degree is a member iff it is in the closure
        if degree <= 6 {
            for p in oracles::closure(degree, &[sym_gen(degree, 0), sym_gen(degree, 1)]) {
                let member = g
                    .contains(&Permutation::from_images(p.iter().copied()).unwrap())
                    .unwrap();
                assert_eq!(member, closure.contains(&p));
            }
        }
    }
}

/// Generators of the symmetric group: an n-cycle and a transposition.
fn sym_gen(degree: usize, which: usize) -> Elem {
    if which == 0 {
        (0..degree).map(|i| (i + 1) % degree).collect()
    } else {
        let mut t: Elem = (0..degree).collect();
        t.swap(0, 1);
        t
    }
}

#[test]
fn primitivity_and_blocks_match_partition_search() {
    let mut transitive_seen = 0;
    for (degree, gens) in suite() {
        let g = to_group(degree, &gens);
        let transitive = oracles::is_transitive(degree, &gens);
        assert_eq!(is_transitive(&g).unwrap(), transitive);
        assert_eq!(
            is_primitive(&g).unwrap(),
            oracles::is_primitive(degree, &gens),
            "primitivity of <{gens:?}>"
        );
        if !transitive {
            continue;
        }
        transitive_seen += 1;
        let systems = minimal_block_systems(&g).unwrap();
        for beta in 1..degree {
            let block: BTreeSet<usize> = systems[beta - 1]
                .iter()
                .find(|b| b.contains(&0))
                .unwrap()
                .iter()
                .copied()
                .collect();
            assert_eq!(block, oracles::minimal_block(degree, &gens, beta));
        }
    }
    assert!(
        transitive_seen >= 5,
        "suite should exercise transitive groups"
    );
}

#[test]
fn minimal_normal_subgroups_match_the_lattice() {
    let mut checked = 0;
    for (degree, gens) in suite() {
        let closure = oracles::closure(degree, &gens);
        if closure.len() > 200 || closure.len() == 1 {
            continue;
        }
        checked += 1;
        let elements: Vec<Elem> = closure.into_iter().collect();
        let expected = oracles::minimal_normal_subgroups(&elements);
        let g = to_group(degree, &gens);
        let got: BTreeSet<BTreeSet<Elem>> = minimal_normal_subgroups(&g, DEFAULT_ENUM_CAP)
            .unwrap()
            .iter()
            .map(element_set)
            .collect();
        assert_eq!(got, expected, "minimal normal subgroups of <{gens:?}>");

        let normals = oracles::normal_subgroups(&elements);
        assert_eq!(
            is_simple(&g, DEFAULT_ENUM_CAP).unwrap(),
            elements.len() > 1 && normals.len() == 2
        );
    }
    assert!(checked >= 10, "only {checked} groups of order at most 200");
}

#[test]
fn composition_factors_multiply_to_the_order() {
    for (degree, gens) in suite() {
        let g = to_group(degree, &gens);
        let product = composition_factor_orders(&g, DEFAULT_ENUM_CAP)
            .unwrap()
            .into_iter()
            .fold(num_bigint::BigUint::from(1u32), |acc, f| acc * f);
        assert_eq!(product, g.order());
    }
}

#[test]
fn known_orders() {
    assert_eq!(PermGroup::symmetric(8).order_u64(), Some(40320));
    assert_eq!(PermGroup::alternating(7).order_u64(), Some(2520));
    assert_eq!(PermGroup::cyclic(9).order_u64(), Some(9));
    let (_, m12) = wangcheck::catalog::load_group("m12").unwrap();
    assert_eq!(m12.order_u64(), Some(95040));
    // the point stabilizer has order 7920, beyond the exact section cap
    let m11 = m12.point_stabilizer(0).unwrap();
    assert_eq!(m11.order_u64(), Some(7920));
    assert_eq!(
        section_exact_small(&PermGroup::alternating(5), &m11, DEFAULT_SECTION_CAP),
        SectionVerdict::Unknown
    );
}

#[test]
fn enumeration_cap() {
    assert!(PermGroup::alternating(6).enumerate_elements(100).is_err());
    assert_eq!(
        PermGroup::symmetric(3)
            .enumerate_elements(10)
            .unwrap()
            .len(),
        6
    );
    assert_eq!(
        PermGroup::trivial(4).enumerate_elements(1).unwrap().len(),
        1
    );
}

fn perm_strategy(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

proptest! {
    #[test]
    fn inverse_and_composition(
        (p, q, r) in (1usize..12).prop_flat_map(|d| (perm_strategy(d), perm_strategy(d), perm_strategy(d)))
    ) {
        let id = Permutation::identity(p.degree());
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), id.clone());
        prop_assert_eq!(p.inverse().compose(&p).unwrap(), id);
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        // compose(p, q)(x) = p(q(x))
        let pq = p.compose(&q).unwrap();
        for x in 0..p.degree() {
            prop_assert_eq!(pq.apply(x), p.apply(q.apply(x)));
        }
    }

    #[test]
    fn element_order_is_lcm_of_cycle_lengths(p in (1usize..12).prop_flat_map(perm_strategy)) {
        let k = p.order().to_usize().unwrap();
        let mut power = Permutation::identity(p.degree());
        for i in 1..=k {
            power = power.compose(&p).unwrap();
            prop_assert_eq!(power.is_identity(), i == k);
        }
        prop_assert_eq!(p.cycle_lengths().iter().sum::<usize>(), p.degree());
    }

    #[test]
    fn group_order_is_independent_of_generator_order(
        gens in (3usize..8).prop_flat_map(|d| prop::collection::vec(perm_strategy(d), 1..4))
    ) {
        let d = gens[0].degree();
        let forward = PermGroup::new(d, gens.clone()).unwrap();
        let mut reversed = gens.clone();
        reversed.reverse();
        let backward = PermGroup::new(d, reversed).unwrap();
        prop_assert_eq!(forward.order(), backward.order());
        prop_assert!(forward.is_subgroup_of(&backward));
        prop_assert!(gens.iter().all(|g| forward.contains(g).unwrap()));
    }
}
