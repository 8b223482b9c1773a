//! Permutation arithmetic, closure and conjugacy classes of enumerated groups, and
//! linear characters and power maps of computed tables.

use ctk::fixtures;
use ctk::{dixon, GeneratorSet, GroupData, Permutation};
use num_integer::Integer;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

proptest! {
    #[test]
    fn composition_is_associative_with_inverses(
        (a, b, c) in (1usize..12).prop_flat_map(|n| (permutation(n), permutation(n), permutation(n)))
    ) {
        prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
        prop_assert!(a.then(&a.inverse()).is_identity());
        prop_assert_eq!(a.then(&b).inverse(), b.inverse().then(&a.inverse()));
        prop_assert!(a.pow(a.order()).is_identity());
        prop_assert_eq!(a.cycle_type().iter().sum::<usize>(), a.degree());
        let lcm = a.cycle_type().iter().fold(1u64, |acc, &l| acc.lcm(&(l as u64)));
        prop_assert_eq!(lcm, a.order());
    }

    #[test]
    fn cycle_notation_round_trips(a in (1usize..12).prop_flat_map(permutation)) {
        let back = Permutation::parse_cycles(a.degree(), &a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn generator_files_round_trip(gens in (2usize..9).prop_flat_map(|n| prop::collection::vec(permutation(n), 1..4))) {
        let set = GeneratorSet::new("G", gens[0].degree(), gens);
        prop_assert_eq!(GeneratorSet::parse(&set.render()).unwrap(), set);
    }
}

fn groups() -> Vec<GroupData> {
    let mut sets = fixtures::small_catalog();
    sets.push(fixtures::quaternion8().direct_product(&fixtures::cyclic(3)));
    sets.push(fixtures::dihedral(4).direct_product(&fixtures::extraspecial27()));
    sets.iter().map(|s| s.enumerate().unwrap()).collect()
}

fn check_closure(g: &GroupData, rng: &mut ChaCha8Rng) {
    let n = g.elements.len();
    let pairs: Box<dyn Iterator<Item = (usize, usize)>> = if n <= 1000 {
        Box::new((0..n).flat_map(move |i| (0..n).map(move |j| (i, j))))
    } else {
        let picks: Vec<_> = (0..10_000).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        Box::new(picks.into_iter())
    };
    for (i, j) in pairs {
        assert!(g.index_of(&g.elements[i].then(&g.elements[j])).is_some());
    }
}

#[test]
fn enumerated_groups_are_closed_and_classes_are_conjugation_orbits() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in groups() {
        check_closure(&g, &mut rng);
        let n = g.elements.len();
        let sizes: u64 = g.class_sizes().iter().sum();
        assert_eq!(sizes, g.order());
        for c in 0..g.num_classes() {
            assert_eq!(g.centralizer_orders[c] * g.class_sizes()[c], g.order());
        }
        for _ in 0..500 {
            let x = &g.elements[rng.gen_range(0..n)];
            let y = &g.elements[rng.gen_range(0..n)];
            let conj = y.inverse().then(x).then(y);
            assert_eq!(g.class_of(x), g.class_of(&conj));
        }
    }
}

#[test]
fn nilpotency_matches_construction() {
    let products = [
        fixtures::quaternion8().direct_product(&fixtures::cyclic(3)),
        fixtures::dihedral(4).direct_product(&fixtures::extraspecial27()),
        fixtures::modular16().direct_product(&fixtures::cyclic(5)),
    ];
    for p in products {
        assert!(p.enumerate().unwrap().is_nilpotent(), "{:?}", p.name);
    }
    let a4 = GeneratorSet::parse("domain: 4\n(0 1 2)\n(1 2 3)\n").unwrap();
    for set in [fixtures::symmetric(3), a4, fixtures::alternating(5)] {
        assert!(!set.enumerate().unwrap().is_nilpotent());
    }
}

#[test]
fn linear_characters_are_multiplicative() {
    for set in [
        fixtures::cyclic(12),
        fixtures::cyclic(2).direct_product(&fixtures::cyclic(2)),
        fixtures::cyclic(4).direct_product(&fixtures::cyclic(6)),
    ] {
        let g = set.enumerate().unwrap();
        let t = dixon::character_table(&g, "G").unwrap();
        for row in t.values.iter().filter(|r| r[0] == ctk::Cyclotomic::one()) {
            for x in &g.elements {
                for y in &g.elements {
                    let lhs = &row[g.class_of(&x.then(y)).unwrap()];
                    let rhs = &row[g.class_of(x).unwrap()] * &row[g.class_of(y).unwrap()];
                    assert_eq!(*lhs, rhs);
                }
            }
        }
    }
}

#[test]
fn power_maps_agree_with_galois_action() {
    for g in groups() {
        let t = dixon::character_table(&g, "G").unwrap();
        for c in 0..t.num_classes() {
            let m = t.element_orders[c];
            let rep = g.representative(c);
            for s in (1..m).filter(|s| s.gcd(&m) == 1) {
                let target = g.class_of(&rep.pow(s)).unwrap();
                assert_eq!(t.power_maps[s as usize][c], target);
                for row in &t.values {
                    assert_eq!(row[target], row[c].galois_conjugate(s as i64).unwrap());
                }
            }
        }
    }
}
