use nilmult::{check_commutation, closed_form, pipeline, CompositionId, FgAbGroup, Functor};
use num_bigint::BigUint;
use proptest::prelude::*;

fn groups() -> impl Strategy<Value = FgAbGroup> {
    (0usize..4, prop::collection::vec(1u32..=200, 0..5)).prop_map(|(r, orders)| {
        let free = std::iter::repeat_n(0u32, r);
        FgAbGroup::from_cyclic_orders(free.chain(orders)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Beyond the verification grid: larger orders, more factors, m up to 500.
    #[test]
    fn closed_forms_agree_off_grid(d in groups(), m in 2u32..=500, c in 1u32..=4) {
        let m = BigUint::from(m);
        for id in CompositionId::ALL {
            prop_assert_eq!(closed_form(id, &m, c, &d).unwrap(), pipeline(id, &m, c, &d).unwrap(), "{}", id);
        }
        let reports = check_commutation(&m, c, &d).unwrap();
        prop_assert_eq!(reports.len(), 12);
        for r in &reports {
            if d.is_finite() {
                prop_assert!(r.commutes_with_partner, "{}", r.id);
            }
            prop_assert_eq!(r.commutes_with_partner, r.lhs == r.partner);
        }
    }
}

#[test]
fn ids_pair_up() {
    for id in CompositionId::ALL {
        assert_ne!(id, id.partner());
        assert_eq!(id.partner().partner(), id);
        assert_eq!(
            CompositionId::new(id.functor(), id.multiplier_outside()),
            id
        );
    }
    assert_eq!(Functor::ALL.len() * 2, CompositionId::ALL.len());
}

#[test]
fn finite_and_trivial_inputs_commute() {
    let d = FgAbGroup::from_cyclic_orders([4u32, 2]).unwrap();
    let reports = check_commutation(&BigUint::from(2u32), 1, &d).unwrap();
    assert!(reports.iter().all(|r| r.commutes_with_partner));
    let reports = check_commutation(&BigUint::from(9u32), 3, &FgAbGroup::trivial()).unwrap();
    assert!(reports
        .iter()
        .all(|r| r.lhs.is_trivial() && r.partner.is_trivial()));
}

#[test]
fn free_rank_alone_need_not_break_commutation() {
    // Z + Z2 with m odd: both sides are trivial for every functor that can fail.
    let d = FgAbGroup::from_cyclic_orders([0u32, 2]).unwrap();
    let reports = check_commutation(&BigUint::from(3u32), 2, &d).unwrap();
    assert!(reports.iter().all(|r| r.commutes_with_partner));
}
