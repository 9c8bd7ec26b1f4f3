//! Nilpotent multipliers of finitely generated abelian groups.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::commutators::MultiplierParams;
use crate::error::{Error, Result};
use crate::fgab::FgAbGroup;
use crate::homalg::{tensor, tor1};

/// The `c`-nilpotent multiplier of `g`.
///
/// With `g = Z^(n) + Z_{n_1} + ... + Z_{n_k}` (invariant factors largest
/// first) the result is `Z^(b_n) + sum_i Z_{n_i}^(b_{n+i} - b_{n+i-1})`
/// where `b_j` counts basic commutators of weight `c + 1` on `j` letters.
/// Runs of equal factors telescope, so nothing is expanded.
pub fn nilpotent_multiplier(g: &FgAbGroup, c: u32) -> Result<FgAbGroup> {
    let params = MultiplierParams::new(c, 0)?;
    let mut position = g.free_rank().clone();
    let mut below = params.b(&position);
    let free_rank = below.clone();
    let mut torsion = Vec::with_capacity(g.torsion().len());
    for (d, mult) in g.torsion() {
        position += mult;
        let upto = params.b(&position);
        let copies = &upto - &below;
        if !copies.is_zero() {
            torsion.push((d.clone(), copies));
        }
        below = upto;
    }
    Ok(FgAbGroup::from_canonical_parts(free_rank, torsion))
}

/// Schur multiplier, i.e. the class-1 nilpotent multiplier.
pub fn schur_multiplier(g: &FgAbGroup) -> FgAbGroup {
    nilpotent_multiplier(g, 1).expect("class 1 is valid")
}

/// `M(A x B) = M(A) + M(B) + (A ⊗ B)` for abelian `A`, `B`.
pub fn schur_direct_product(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    schur_multiplier(a)
        .direct_sum(&schur_multiplier(b))
        .direct_sum(&tensor(a, b))
}

/// Class-2 multiplier of the free product `A * B` of two abelian groups:
/// `N2M(A) + N2M(B) + (M(A) ⊗ B) + (A ⊗ M(B)) + Tor₁(A, B)`.
pub fn free_product_n2(a: &FgAbGroup, b: &FgAbGroup) -> FgAbGroup {
    FreeProductInvariants::of(a).join(a, b).class_two
}

/// Class-2 multiplier of `G_1 * G_2 * ... * G_r` for abelian factors.
///
/// Folds the two-factor formula from the left. The partial product is not
/// abelian, so the fold carries its Schur multiplier (additive over free
/// products) and its abelianization (the direct sum) alongside.
pub fn free_product_n2_all(factors: &[FgAbGroup]) -> FgAbGroup {
    let Some((first, rest)) = factors.split_first() else {
        return FgAbGroup::trivial();
    };
    let mut acc = FreeProductInvariants::of(first);
    let mut abelianization = first.clone();
    for g in rest {
        acc = acc.join(&abelianization, g);
        abelianization = abelianization.direct_sum(g);
    }
    acc.class_two
}

struct FreeProductInvariants {
    class_two: FgAbGroup,
    schur: FgAbGroup,
}

impl FreeProductInvariants {
    fn of(g: &FgAbGroup) -> Self {
        FreeProductInvariants {
            class_two: nilpotent_multiplier(g, 2).expect("class 2 is valid"),
            schur: schur_multiplier(g),
        }
    }

    /// Invariants of `G * h` given those of `G` and its abelianization.
    fn join(&self, abelianization: &FgAbGroup, h: &FgAbGroup) -> Self {
        let other = Self::of(h);
        let class_two = self
            .class_two
            .direct_sum(&other.class_two)
            .direct_sum(&tensor(&self.schur, h))
            .direct_sum(&tensor(abelianization, &other.schur))
            .direct_sum(&tor1(abelianization, h));
        FreeProductInvariants {
            class_two,
            schur: self.schur.direct_sum(&other.schur),
        }
    }
}

/// `c`-nilpotent multiplier of a free product of finite cyclic groups of
/// pairwise coprime orders: the direct sum of the factors' multipliers.
pub fn free_product_coprime_cyclic<T>(orders: &[T], c: u32) -> Result<FgAbGroup>
where
    T: Clone + Into<BigUint>,
{
    if c == 0 {
        return Err(Error::InvalidClass(c));
    }
    let orders: Vec<BigUint> = orders.iter().cloned().map(Into::into).collect();
    if let Some(d) = orders.iter().find(|d| d < &&BigUint::from(2u32)) {
        return Err(Error::Malformed(format!(
            "cyclic free factor order {d} must be >= 2"
        )));
    }
    for (i, a) in orders.iter().enumerate() {
        for b in &orders[i + 1..] {
            if !a.gcd(b).is_one() {
                return Err(Error::NotCoprime(a.to_string(), b.to_string()));
            }
        }
    }
    let mut total = FgAbGroup::trivial();
    for d in &orders {
        total = total.direct_sum(&nilpotent_multiplier(&FgAbGroup::cyclic(d.clone()), c)?);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutators::witt_count;
    use crate::fgab::Cardinality;

    fn g(orders: &[i64]) -> FgAbGroup {
        FgAbGroup::from_cyclic_orders(orders.iter().copied()).unwrap()
    }

    #[test]
    fn cyclic_groups_have_trivial_multipliers() {
        for c in 1..5 {
            assert!(nilpotent_multiplier(&g(&[2]), c).unwrap().is_trivial());
            assert!(nilpotent_multiplier(&g(&[0]), c).unwrap().is_trivial());
        }
    }

    #[test]
    fn z4_squared() {
        assert_eq!(nilpotent_multiplier(&g(&[4, 4]), 1).unwrap(), g(&[4]));
        assert_eq!(schur_multiplier(&g(&[4, 4])), g(&[4]));
        assert_eq!(schur_direct_product(&g(&[4]), &g(&[4])), g(&[4]));
    }

    #[test]
    fn elementary_abelian_order() {
        let p = BigUint::from(3u32);
        for k in 0..5u32 {
            let grp = FgAbGroup::cyclic(3u32).power(&BigUint::from(k));
            let m = nilpotent_multiplier(&grp, 2).unwrap();
            assert!(m.is_elementary_abelian(&p));
            let expected = num_traits::Pow::pow(&p, &witt_count(k, 3));
            assert_eq!(m.order(), Cardinality::Finite(expected));
        }
    }

    #[test]
    fn mixed_free_and_torsion() {
        assert_eq!(nilpotent_multiplier(&g(&[0, 4]), 2).unwrap(), g(&[4, 4]));
        assert_eq!(nilpotent_multiplier(&g(&[0, 0]), 1).unwrap(), g(&[0]));
    }

    #[test]
    fn invalid_class() {
        assert_eq!(
            nilpotent_multiplier(&g(&[2, 2]), 0),
            Err(Error::InvalidClass(0))
        );
    }

    #[test]
    fn schur_of_direct_products() {
        let a = g(&[12, 2]);
        assert_eq!(
            schur_direct_product(&a, &FgAbGroup::trivial()),
            schur_multiplier(&a)
        );
        assert_eq!(schur_direct_product(&g(&[2]), &g(&[2, 2])), g(&[2, 2, 2]));
    }

    #[test]
    fn free_products() {
        assert_eq!(free_product_n2(&g(&[2]), &g(&[2])), g(&[2]));
        assert!(free_product_n2(&g(&[3]), &g(&[5])).is_trivial());
        assert_eq!(free_product_n2(&g(&[4]), &g(&[6])), g(&[2]));
        assert_eq!(free_product_n2_all(&[g(&[2]), g(&[2])]), g(&[2]));
        assert!(free_product_n2_all(&[]).is_trivial());
        assert!(free_product_n2_all(&[g(&[2]), g(&[3]), g(&[5])]).is_trivial());
        // Z2 * Z2 * Z2: three pairwise Tor terms
        assert_eq!(
            free_product_n2_all(&[g(&[2]), g(&[2]), g(&[2])]),
            g(&[2, 2, 2])
        );
    }

    #[test]
    fn coprime_cyclic_free_products() {
        assert!(free_product_coprime_cyclic(&[2u32, 3, 5], 2)
            .unwrap()
            .is_trivial());
        assert!(free_product_coprime_cyclic(&[7u32], 4)
            .unwrap()
            .is_trivial());
        assert!(matches!(
            free_product_coprime_cyclic(&[2u32, 2], 2),
            Err(Error::NotCoprime(..))
        ));
        assert!(matches!(
            free_product_coprime_cyclic(&[1u32, 2], 2),
            Err(Error::Malformed(_))
        ));
    }
}
