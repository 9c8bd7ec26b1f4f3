//! Algebraic laws checked on random inputs.

use std::collections::{BTreeMap, HashSet};

use nilmult::grid::group_grid;
use nilmult::{
    ext1, free_product_coprime_cyclic, free_product_n2, hall_basis, hom, nilpotent_multiplier,
    schur_direct_product, schur_multiplier, tensor, tensor_t, tor1, witt_count, Cardinality,
    FgAbGroup,
};
use num_bigint::BigUint;
use num_integer::Integer;
use proptest::prelude::*;

fn group_from(free: u8, orders: &[u16]) -> FgAbGroup {
    let free = std::iter::repeat_n(0u32, free as usize);
    FgAbGroup::from_cyclic_orders(free.chain(orders.iter().map(|&d| d as u32))).unwrap()
}

fn groups() -> impl Strategy<Value = FgAbGroup> {
    (0u8..3, prop::collection::vec(1u16..=60, 0..4)).prop_map(|(r, o)| group_from(r, &o))
}

fn finite_groups() -> impl Strategy<Value = FgAbGroup> {
    prop::collection::vec(1u16..=60, 0..4).prop_map(|o| group_from(0, &o))
}

/// Words of length `w` over `n` letters that are strictly smaller than all
/// their proper rotations, counted by letter content.
fn lyndon_words_by_content(n: usize, w: usize) -> BTreeMap<Vec<usize>, usize> {
    let mut out = BTreeMap::new();
    let total = n.pow(w as u32);
    for code in 0..total {
        let mut word = Vec::with_capacity(w);
        let mut c = code;
        for _ in 0..w {
            word.push(c % n);
            c /= n;
        }
        let is_lyndon = (1..w).all(|s| {
            let rotated: Vec<usize> = word[s..].iter().chain(&word[..s]).copied().collect();
            word < rotated
        });
        if is_lyndon {
            let mut content = vec![0; n];
            for &l in &word {
                content[l] += 1;
            }
            *out.entry(content).or_default() += 1;
        }
    }
    out
}

#[test]
fn hall_basis_matches_lyndon_words() {
    for n in 1..=5usize {
        for w in 1..=6usize {
            if n.pow(w as u32) > 20_000 {
                continue;
            }
            let basis = hall_basis(n, w).unwrap();
            let lyndon = lyndon_words_by_content(n, w);
            assert_eq!(
                BigUint::from(basis.len()),
                witt_count(n as u32, w as u32),
                "n={n} w={w}"
            );
            assert_eq!(basis.len(), lyndon.values().sum::<usize>(), "n={n} w={w}");

            let mut by_content: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            for bc in &basis {
                assert_eq!(bc.weight(), w);
                let mut content = vec![0; n];
                for (letter, k) in bc.letter_multiset() {
                    content[letter - 1] += k;
                }
                *by_content.entry(content).or_default() += 1;
            }
            assert_eq!(by_content, lyndon, "n={n} w={w}");

            let distinct: HashSet<_> = basis.iter().collect();
            assert_eq!(distinct.len(), basis.len());
        }
    }
}

#[test]
fn multiplier_of_small_grid_matches_commutator_construction() {
    for g in group_grid(1, 2, 6) {
        let summands = g.cyclic_summands(8).unwrap();
        for c in 1..=3u32 {
            let expected = tensor_t(&summands, c as usize + 1).unwrap();
            assert_eq!(nilpotent_multiplier(&g, c).unwrap(), expected, "{g}, c={c}");
        }
    }
}

#[test]
fn elementary_abelian_multipliers() {
    for p in [2u32, 3, 5] {
        for k in 0..=4u32 {
            let g = FgAbGroup::cyclic(p).power(&BigUint::from(k));
            for c in 1..=3 {
                let m = nilpotent_multiplier(&g, c).unwrap();
                let b = witt_count(k, c + 1);
                assert!(m.is_trivial() || m.is_elementary_abelian(&BigUint::from(p)));
                assert_eq!(
                    m.order(),
                    Cardinality::Finite(BigUint::from(p).pow(b.try_into().unwrap()))
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn order_of_cyclic_factors_is_irrelevant(mut orders in prop::collection::vec(0u32..=40, 0..6), seed in any::<u64>()) {
        let g = FgAbGroup::from_cyclic_orders(orders.iter().copied()).unwrap();
        let len = orders.len().max(1);
        orders.rotate_left((seed as usize) % len);
        orders.reverse();
        prop_assert_eq!(FgAbGroup::from_cyclic_orders(orders.iter().copied()).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_a_divisibility_chain(g in groups()) {
        let factors: Vec<&BigUint> = g.torsion().iter().map(|(d, _)| d).collect();
        for w in factors.windows(2) {
            prop_assert!(w[0] > w[1] && w[0].is_multiple_of(w[1]));
        }
        prop_assert!(factors.iter().all(|d| **d >= BigUint::from(2u32)));
    }

    #[test]
    fn direct_sum_is_a_commutative_monoid(a in groups(), b in groups(), c in groups()) {
        prop_assert_eq!(a.direct_sum(&b), b.direct_sum(&a));
        prop_assert_eq!(a.direct_sum(&b).direct_sum(&c), a.direct_sum(&b.direct_sum(&c)));
        prop_assert_eq!(a.direct_sum(&FgAbGroup::trivial()), a.clone());
    }

    #[test]
    fn summands(a in groups(), b in groups()) {
        let s = a.direct_sum(&b);
        prop_assert!(a.is_direct_summand(&s));
        prop_assert!(b.is_direct_summand(&s));
        prop_assert!(FgAbGroup::trivial().is_direct_summand(&a));
        if a.is_direct_summand(&b) && b.is_direct_summand(&a) {
            prop_assert_eq!(&a, &b);
        }
    }

    #[test]
    fn tensor_and_tor_are_symmetric(a in groups(), b in groups()) {
        prop_assert_eq!(tensor(&a, &b), tensor(&b, &a));
        prop_assert_eq!(tor1(&a, &b), tor1(&b, &a));
    }

    #[test]
    fn functors_are_additive(a in groups(), b in groups(), c in groups()) {
        let ab = a.direct_sum(&b);
        prop_assert_eq!(tensor(&ab, &c), tensor(&a, &c).direct_sum(&tensor(&b, &c)));
        prop_assert_eq!(tor1(&ab, &c), tor1(&a, &c).direct_sum(&tor1(&b, &c)));
        prop_assert_eq!(hom(&ab, &c), hom(&a, &c).direct_sum(&hom(&b, &c)));
        prop_assert_eq!(hom(&c, &ab), hom(&c, &a).direct_sum(&hom(&c, &b)));
        prop_assert_eq!(ext1(&ab, &c), ext1(&a, &c).direct_sum(&ext1(&b, &c)));
        prop_assert_eq!(ext1(&c, &ab), ext1(&c, &a).direct_sum(&ext1(&c, &b)));
    }

    #[test]
    fn ext_is_symmetric_for_finite_groups(a in finite_groups(), b in finite_groups()) {
        prop_assert_eq!(ext1(&a, &b), ext1(&b, &a));
        prop_assert_eq!(hom(&a, &b), tensor(&a, &b));
    }

    #[test]
    fn schur_multiplier_of_a_sum(a in groups(), b in groups()) {
        prop_assert_eq!(schur_direct_product(&a, &b), schur_multiplier(&a.direct_sum(&b)));
    }

    #[test]
    fn multiplier_of_a_summand_is_a_summand(t in groups(), n in groups(), c in 1u32..=3) {
        let small = nilpotent_multiplier(&t, c).unwrap();
        let big = nilpotent_multiplier(&t.direct_sum(&n), c).unwrap();
        prop_assert!(small.is_direct_summand(&big), "{} in {}", small, big);
    }

    #[test]
    fn coprime_cyclic_free_products(a in 2u32..=60, b in 2u32..=60) {
        let (ga, gb) = (FgAbGroup::cyclic(a), FgAbGroup::cyclic(b));
        let two = free_product_n2(&ga, &gb);
        prop_assert_eq!(&two, &tor1(&ga, &gb));
        if a.gcd(&b) == 1 {
            prop_assert!(two.is_trivial());
            prop_assert_eq!(free_product_coprime_cyclic(&[a, b], 2).unwrap(), two);
        } else {
            prop_assert!(free_product_coprime_cyclic(&[a, b], 2).is_err());
        }
    }
}
