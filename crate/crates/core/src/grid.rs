//! Finite families of groups used by the verification sweeps.

use num_bigint::BigUint;

use crate::fgab::FgAbGroup;

/// Divisibility chains `n_1, ..., n_k` with `n_{i+1} | n_i`, every entry in
/// `2..=max_top` and `k <= max_len`, including the empty chain.
pub fn invariant_factor_chains(max_len: usize, max_top: u64) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for chain in &frontier {
            let bound = chain.last().copied().unwrap_or(max_top);
            for d in 2..=bound {
                if chain.last().is_none_or(|last| last % d == 0) {
                    let mut longer = chain.clone();
                    longer.push(d);
                    next.push(longer);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// `Z^(r) + Z_{n_1} + ...` for every `r <= max_free_rank` and every chain of
/// [`invariant_factor_chains`].
pub fn group_grid(max_free_rank: u32, max_len: usize, max_top: u64) -> Vec<FgAbGroup> {
    let chains = invariant_factor_chains(max_len, max_top);
    let mut out = Vec::new();
    for r in 0..=max_free_rank {
        for chain in &chains {
            let orders = std::iter::repeat_n(0u64, r as usize).chain(chain.iter().copied());
            out.push(FgAbGroup::from_cyclic_orders(orders).expect("orders are non-negative"));
        }
    }
    out
}

/// Every finite abelian group of order at most `max_order`, each exactly once.
pub fn finite_groups_up_to(max_order: u64) -> Vec<FgAbGroup> {
    fn extend(chain: &mut Vec<u64>, order: u64, max_order: u64, out: &mut Vec<FgAbGroup>) {
        out.push(FgAbGroup::from_cyclic_orders(chain.iter().copied()).expect("positive orders"));
        let bound = chain.last().copied().unwrap_or(max_order);
        for d in 2..=bound {
            let divides = chain.last().is_none_or(|last| last % d == 0);
            if divides && order * d <= max_order {
                chain.push(d);
                extend(chain, order * d, max_order, out);
                chain.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_order, &mut out);
    out
}

/// Values `lo..=hi` as big integers.
pub fn range(lo: u64, hi: u64) -> Vec<BigUint> {
    (lo..=hi).map(BigUint::from).collect()
}
