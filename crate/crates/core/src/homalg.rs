//! `⊗`, `Hom`, `Ext¹` and `Tor₁` over the integers.
//!
//! Each functor is fixed by its value on a pair of cyclic groups and extended
//! additively in both arguments. Quotients `Z_m / nZ_m` are never built; they
//! are always written as `Z_gcd(m, n)`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fgab::{Cyclic, FgAbGroup};

/// Value of a functor on two cyclic groups. `None` is the trivial group.
type CyclicRule = fn(&Cyclic, &Cyclic) -> Option<Cyclic>;

fn tensor_rule(a: &Cyclic, b: &Cyclic) -> Option<Cyclic> {
    match (a, b) {
        (Cyclic::Infinite, Cyclic::Infinite) => Some(Cyclic::Infinite),
        (Cyclic::Infinite, Cyclic::Finite(d)) | (Cyclic::Finite(d), Cyclic::Infinite) => {
            Some(Cyclic::Finite(d.clone()))
        }
        (Cyclic::Finite(x), Cyclic::Finite(y)) => Some(Cyclic::Finite(x.gcd(y))),
    }
}

fn hom_rule(a: &Cyclic, b: &Cyclic) -> Option<Cyclic> {
    match (a, b) {
        (Cyclic::Infinite, b) => Some(b.clone()),
        (Cyclic::Finite(_), Cyclic::Infinite) => None,
        (Cyclic::Finite(x), Cyclic::Finite(y)) => Some(Cyclic::Finite(x.gcd(y))),
    }
}

fn ext1_rule(a: &Cyclic, b: &Cyclic) -> Option<Cyclic> {
    match (a, b) {
        (Cyclic::Infinite, _) => None,
        (Cyclic::Finite(x), Cyclic::Infinite) => Some(Cyclic::Finite(x.clone())),
        (Cyclic::Finite(x), Cyclic::Finite(y)) => Some(Cyclic::Finite(x.gcd(y))),
    }
}

fn tor1_rule(a: &Cyclic, b: &Cyclic) -> Option<Cyclic> {
    match (a, b) {
        (Cyclic::Finite(x), Cyclic::Finite(y)) => Some(Cyclic::Finite(x.gcd(y))),
        _ => None,
    }
}

/// Summands of `g` as `(cyclic, multiplicity)` without expanding.
fn summands(g: &FgAbGroup) -> impl Iterator<Item = (Cyclic, &BigUint)> {
    let free = (!g.free_rank().is_zero()).then(|| (Cyclic::Infinite, g.free_rank()));
    free.into_iter().chain(
        g.torsion()
            .iter()
            .map(|(d, m)| (Cyclic::Finite(d.clone()), m)),
    )
}

fn biadditive(a: &FgAbGroup, b: &FgAbGroup, rule: CyclicRule) -> FgAbGroup {
    let mut free_rank = BigUint::zero();
    let mut parts = Vec::new();
    for (x, mx) in summands(a) {
        for (y, my) in summands(b) {
            match rule(&x, &y) {
                None => {}
                Some(Cyclic::Infinite) => free_rank += mx * my,
                Some(Cyclic::Finite(d)) => parts.push((d, mx * my)),
            }
        }
    }
    FgAbGroup::from_parts(free_rank, parts)
}

pub fn tensor(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    biadditive(a, b, tensor_rule)
}

pub fn hom(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    biadditive(a, b, hom_rule)
}

/// `Ext¹(a, b)`; for `a = Z_m` this is `b / mb`.
pub fn ext1(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    biadditive(a, b, ext1_rule)
}

/// `Tor₁(a, b)`; for `a = Z_m` this is the `m`-torsion `b[m]`.
pub fn tor1(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    biadditive(a, b, tor1_rule)
}

/// `Ext^n` for `n >= 2`, which always vanishes over the integers.
pub fn ext_n(_a: &FgAbGroup, _b: &FgAbGroup, degree: u32) -> Result<FgAbGroup> {
    if degree < 2 {
        return Err(Error::InvalidDegree(degree));
    }
    Ok(FgAbGroup::trivial())
}

/// `Tor_n` for `n >= 2`, which always vanishes over the integers.
pub fn tor_n(_a: &FgAbGroup, _b: &FgAbGroup, degree: u32) -> Result<FgAbGroup> {
    if degree < 2 {
        return Err(Error::InvalidDegree(degree));
    }
    Ok(FgAbGroup::trivial())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[i64]) -> FgAbGroup {
        FgAbGroup::from_cyclic_orders(orders.iter().copied()).unwrap()
    }

    #[test]
    fn tensor_base_cases() {
        assert_eq!(tensor(&g(&[4]), &g(&[6])), g(&[2]));
        assert_eq!(tensor(&g(&[0, 0]), &g(&[3])), g(&[3, 3]));
        assert_eq!(tensor(&g(&[2, 2]), &g(&[2])), g(&[2, 2]));
        assert_eq!(tensor(&g(&[0]), &g(&[0])), g(&[0]));
        assert_eq!(
            tensor(&g(&[12, 2]), &FgAbGroup::trivial()),
            FgAbGroup::trivial()
        );
        assert_eq!(tensor(&g(&[0, 12, 2]), &g(&[0])), g(&[0, 12, 2]));
    }

    #[test]
    fn hom_base_cases() {
        assert!(hom(&g(&[5]), &g(&[0])).is_trivial());
        assert_eq!(hom(&g(&[0]), &g(&[5])), g(&[5]));
        assert_eq!(hom(&g(&[6, 2]), &g(&[9, 3])), g(&[3, 3]));
        assert_eq!(hom(&g(&[0, 0]), &g(&[0])), g(&[0, 0]));
    }

    #[test]
    fn ext1_base_cases() {
        assert_eq!(ext1(&g(&[6]), &g(&[0])), g(&[6]));
        assert!(ext1(&g(&[0]), &g(&[0, 12, 2])).is_trivial());
        assert_eq!(ext1(&g(&[4]), &g(&[6])), g(&[2]));
        // not symmetric once Z is involved
        assert!(ext1(&g(&[0]), &g(&[6])).is_trivial());
    }

    #[test]
    fn tor1_base_cases() {
        assert_eq!(tor1(&g(&[2]), &g(&[2])), g(&[2]));
        assert!(tor1(&g(&[7]), &g(&[0])).is_trivial());
        assert_eq!(tor1(&g(&[4]), &g(&[6])), g(&[2]));
    }

    #[test]
    fn higher_degrees_vanish() {
        assert!(ext_n(&g(&[4]), &g(&[6]), 2).unwrap().is_trivial());
        assert!(tor_n(&g(&[0]), &g(&[0]), 5).unwrap().is_trivial());
        assert!(ext_n(&FgAbGroup::trivial(), &FgAbGroup::trivial(), 3)
            .unwrap()
            .is_trivial());
        assert_eq!(ext_n(&g(&[4]), &g(&[6]), 1), Err(Error::InvalidDegree(1)));
        assert_eq!(tor_n(&g(&[4]), &g(&[6]), 0), Err(Error::InvalidDegree(0)));
    }
}
