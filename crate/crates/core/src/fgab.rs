//! Finitely generated abelian groups in invariant-factor form.
//!
//! A group is stored as `Z^(r) + Z_{d_1}^(m_1) + ... + Z_{d_s}^(m_s)` with
//! `d_1 > d_2 > ... > d_s >= 2` and `d_{i+1} | d_i`. Repeated factors are
//! never expanded, so multiplicities can be astronomically large.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::{smith_normal_form, IntMatrix};

/// A cyclic group: `Z` or `Z_d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cyclic {
    Infinite,
    Finite(BigUint),
}

impl Cyclic {
    /// `0` means `Z`, anything else is `Z_d`.
    pub fn of_order(d: impl Into<BigUint>) -> Self {
        let d = d.into();
        if d.is_zero() {
            Cyclic::Infinite
        } else {
            Cyclic::Finite(d)
        }
    }
}

impl fmt::Display for Cyclic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cyclic::Infinite => write!(f, "Z"),
            Cyclic::Finite(d) => write!(f, "Z{d}"),
        }
    }
}

/// Order or exponent of a group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cardinality {
    Finite(BigUint),
    Infinite,
}

impl fmt::Display for Cardinality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinality::Finite(n) => write!(f, "{n}"),
            Cardinality::Infinite => write!(f, "infinite"),
        }
    }
}

/// Canonical form of a finitely generated abelian group. Two values are
/// isomorphic exactly when they compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FgAbGroup {
    free_rank: BigUint,
    torsion: Vec<(BigUint, BigUint)>,
}

impl Default for FgAbGroup {
    fn default() -> Self {
        Self::trivial()
    }
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        FgAbGroup {
            free_rank: BigUint::zero(),
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: impl Into<BigUint>) -> Self {
        FgAbGroup {
            free_rank: rank.into(),
            torsion: Vec::new(),
        }
    }

    /// `Z_d`, with the usual conventions: `0` gives `Z` and `1` the trivial group.
    pub fn cyclic(d: impl Into<BigUint>) -> Self {
        Self::from_cyclic(&Cyclic::of_order(d))
    }

    pub fn from_cyclic(c: &Cyclic) -> Self {
        match c {
            Cyclic::Infinite => Self::free(1u32),
            Cyclic::Finite(d) if d.is_one() => Self::trivial(),
            Cyclic::Finite(d) => FgAbGroup {
                free_rank: BigUint::zero(),
                torsion: vec![(d.clone(), BigUint::one())],
            },
        }
    }

    /// Validates an already canonical description.
    pub fn new(free_rank: impl Into<BigUint>, torsion: Vec<(BigUint, BigUint)>) -> Result<Self> {
        for (i, (d, mult)) in torsion.iter().enumerate() {
            if d < &BigUint::from(2u32) {
                return Err(Error::Malformed(format!("torsion factor {d} must be >= 2")));
            }
            if mult.is_zero() {
                return Err(Error::Malformed(format!("factor {d} has multiplicity 0")));
            }
            if i > 0 {
                let prev = &torsion[i - 1].0;
                if prev <= d || !prev.is_multiple_of(d) {
                    return Err(Error::Malformed(format!(
                        "factor {d} must strictly divide its predecessor {prev}"
                    )));
                }
            }
        }
        Ok(FgAbGroup {
            free_rank: free_rank.into(),
            torsion,
        })
    }

    /// Caller guarantees the canonical invariants.
    pub(crate) fn from_canonical_parts(
        free_rank: BigUint,
        torsion: Vec<(BigUint, BigUint)>,
    ) -> Self {
        debug_assert!(Self::new(free_rank.clone(), torsion.clone()).is_ok());
        FgAbGroup { free_rank, torsion }
    }

    /// Direct sum of cyclic groups of the given orders; `0` stands for `Z`
    /// and `1` for the trivial group.
    pub fn from_cyclic_orders<I, T>(orders: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut free_rank = BigUint::zero();
        let mut finite = Vec::new();
        for order in orders {
            let order: BigInt = order.into();
            match order.sign() {
                Sign::Minus => {
                    return Err(Error::Malformed(format!("negative cyclic order {order}")))
                }
                Sign::NoSign => free_rank += 1u32,
                Sign::Plus => finite.push((order.magnitude().clone(), BigUint::one())),
            }
        }
        Ok(Self::from_parts(free_rank, finite))
    }

    /// Canonicalizes `Z^(free_rank)` plus an arbitrary multiset of finite
    /// cyclic groups `Z_d^(mult)`. Orders must be positive; `Z_1` and zero
    /// multiplicities are dropped.
    ///
    /// Orders are split over a coprime base of all the orders involved, which
    /// plays the role of the prime-power decomposition without factoring.
    pub fn from_parts<I>(free_rank: BigUint, parts: I) -> Self
    where
        I: IntoIterator<Item = (BigUint, BigUint)>,
    {
        let parts: Vec<_> = parts
            .into_iter()
            .filter(|(d, m)| !m.is_zero() && d > &BigUint::one())
            .collect();
        let base = coprime_base(parts.iter().map(|(d, _)| d));
        let profiles = exponent_profiles(&base, &parts);

        // Walk all exponent profiles in parallel, largest exponents first.
        let mut cursors: Vec<(usize, BigUint)> = profiles
            .iter()
            .map(|p| (0, p.runs.first().map(|r| r.1.clone()).unwrap_or_default()))
            .collect();
        let mut torsion = Vec::new();
        loop {
            let active: Vec<usize> = (0..profiles.len())
                .filter(|&q| cursors[q].0 < profiles[q].runs.len())
                .collect();
            if active.is_empty() {
                break;
            }
            let step = active.iter().map(|&q| &cursors[q].1).min().unwrap().clone();
            let mut factor = BigUint::one();
            for &q in &active {
                let e = profiles[q].runs[cursors[q].0].0;
                factor *= Pow::pow(&profiles[q].base, e);
                let (run, left) = &mut cursors[q];
                *left -= &step;
                if left.is_zero() {
                    *run += 1;
                    if let Some(next) = profiles[q].runs.get(*run) {
                        *left = next.1.clone();
                    }
                }
            }
            torsion.push((factor, step));
        }
        FgAbGroup { free_rank, torsion }
    }

    /// `Z^cols` modulo the row space of `m`.
    pub fn from_presentation(m: &IntMatrix) -> Self {
        let snf = smith_normal_form(m);
        let factors = snf.invariant_factors();
        let free_rank = BigUint::from(m.cols() - factors.len());
        // SNF gives an ascending chain; canonical storage is descending.
        let mut torsion: Vec<(BigUint, BigUint)> = Vec::new();
        for d in factors.iter().rev().map(|d| d.magnitude().clone()) {
            if d.is_one() {
                continue;
            }
            match torsion.last_mut() {
                Some((last, mult)) if *last == d => *mult += 1u32,
                _ => torsion.push((d, BigUint::one())),
            }
        }
        Self::from_canonical_parts(free_rank, torsion)
    }

    pub fn free_rank(&self) -> &BigUint {
        &self.free_rank
    }

    /// Invariant factors `(d, multiplicity)`, largest first.
    pub fn torsion(&self) -> &[(BigUint, BigUint)] {
        &self.torsion
    }

    /// Number `k` of torsion invariant factors counted with multiplicity.
    pub fn torsion_length(&self) -> BigUint {
        self.torsion.iter().map(|(_, m)| m).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank.is_zero() && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank.is_zero()
    }

    /// Cyclic summands, free ones first, then invariant factors largest first.
    /// Fails when there are more than `limit` of them.
    pub fn cyclic_summands(&self, limit: usize) -> Result<Vec<Cyclic>> {
        let total = &self.free_rank + self.torsion_length();
        let count = total
            .to_usize()
            .filter(|&n| n <= limit)
            .ok_or(Error::Capacity {
                what: "cyclic summands",
                value: total.to_usize().unwrap_or(usize::MAX),
                limit,
            })?;
        let mut out = Vec::with_capacity(count);
        let free = self.free_rank.to_usize().unwrap();
        out.extend(std::iter::repeat_n(Cyclic::Infinite, free));
        for (d, m) in &self.torsion {
            out.extend(std::iter::repeat_n(
                Cyclic::Finite(d.clone()),
                m.to_usize().unwrap(),
            ));
        }
        Ok(out)
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        if other.torsion.is_empty() || self.torsion.is_empty() {
            let torsion = if self.torsion.is_empty() {
                other.torsion.clone()
            } else {
                self.torsion.clone()
            };
            return FgAbGroup {
                free_rank: &self.free_rank + &other.free_rank,
                torsion,
            };
        }
        Self::from_parts(
            &self.free_rank + &other.free_rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    /// Direct sum of `mult` copies of `self`.
    pub fn power(&self, mult: &BigUint) -> FgAbGroup {
        if mult.is_zero() {
            return Self::trivial();
        }
        FgAbGroup {
            free_rank: &self.free_rank * mult,
            torsion: self
                .torsion
                .iter()
                .map(|(d, m)| (d.clone(), m * mult))
                .collect(),
        }
    }

    pub fn is_isomorphic(&self, other: &FgAbGroup) -> bool {
        self == other
    }

    /// Whether `self + C` is isomorphic to `other` for some group `C`.
    pub fn is_direct_summand(&self, other: &FgAbGroup) -> bool {
        if self.free_rank > other.free_rank {
            return false;
        }
        let base = coprime_base(self.torsion.iter().chain(&other.torsion).map(|(d, _)| d));
        let mine = exponent_profiles(&base, &self.torsion);
        let theirs = exponent_profiles(&base, &other.torsion);
        mine.iter().zip(&theirs).all(|(a, b)| {
            let available: BTreeMap<u32, &BigUint> = b.runs.iter().map(|(e, m)| (*e, m)).collect();
            a.runs
                .iter()
                .all(|(e, m)| available.get(e).is_some_and(|have| *have >= m))
        })
    }

    pub fn order(&self) -> Cardinality {
        if !self.is_finite() {
            return Cardinality::Infinite;
        }
        Cardinality::Finite(self.torsion.iter().map(|(d, m)| Pow::pow(d, m)).product())
    }

    pub fn exponent(&self) -> Cardinality {
        if !self.is_finite() {
            return Cardinality::Infinite;
        }
        Cardinality::Finite(
            self.torsion
                .first()
                .map(|(d, _)| d.clone())
                .unwrap_or_else(BigUint::one),
        )
    }

    /// Finite, and every invariant factor equals the prime `p`. The trivial
    /// group counts as elementary abelian.
    pub fn is_elementary_abelian(&self, p: &BigUint) -> bool {
        if !self.is_finite() || !is_probable_prime(p) {
            return false;
        }
        match self.torsion.as_slice() {
            [] => true,
            [(d, _)] => d == p,
            _ => false,
        }
    }
}

impl fmt::Display for FgAbGroup {
    /// `Z^2 + Z12 + Z2^3`; the trivial group is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let mut terms = Vec::new();
        if !self.free_rank.is_zero() {
            if self.free_rank.is_one() {
                terms.push("Z".to_string());
            } else {
                terms.push(format!("Z^{}", self.free_rank));
            }
        }
        for (d, m) in &self.torsion {
            if m.is_one() {
                terms.push(format!("Z{d}"));
            } else {
                terms.push(format!("Z{d}^{m}"));
            }
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// Pairwise coprime integers `> 1` such that every input `> 1` is a product
/// of powers of them.
fn coprime_base<'a>(values: impl IntoIterator<Item = &'a BigUint>) -> Vec<BigUint> {
    let mut base: BTreeSet<BigUint> = values
        .into_iter()
        .filter(|v| !v.is_one())
        .cloned()
        .collect();
    loop {
        let split = base.iter().enumerate().find_map(|(i, a)| {
            base.iter().skip(i + 1).find_map(|b| {
                let g = a.gcd(b);
                (!g.is_one()).then(|| (a.clone(), b.clone(), g))
            })
        });
        let Some((a, b, g)) = split else {
            break;
        };
        base.remove(&a);
        base.remove(&b);
        for x in [&a / &g, &b / &g, g] {
            if !x.is_one() {
                base.insert(x);
            }
        }
    }
    base.into_iter().collect()
}

struct ExponentProfile {
    base: BigUint,
    /// (exponent >= 1, multiplicity), exponents strictly decreasing.
    runs: Vec<(u32, BigUint)>,
}

fn exponent_profiles(base: &[BigUint], parts: &[(BigUint, BigUint)]) -> Vec<ExponentProfile> {
    base.iter()
        .map(|q| {
            let mut by_exp: BTreeMap<u32, BigUint> = BTreeMap::new();
            for (d, m) in parts {
                let mut rest = d.clone();
                let mut e = 0u32;
                loop {
                    let (quot, rem) = rest.div_rem(q);
                    if !rem.is_zero() {
                        break;
                    }
                    rest = quot;
                    e += 1;
                }
                if e > 0 {
                    *by_exp.entry(e).or_default() += m;
                }
            }
            ExponentProfile {
                base: q.clone(),
                runs: by_exp.into_iter().rev().collect(),
            }
        })
        .collect()
}

/// Miller-Rabin with the first twelve prime bases; exact below 3.3e24.
pub(crate) fn is_probable_prime(n: &BigUint) -> bool {
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    let two = BigUint::from(2u32);
    if n < &two {
        return false;
    }
    for p in BASES {
        let p = BigUint::from(p);
        if n == &p {
            return true;
        }
        if n.is_multiple_of(&p) {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for a in BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(orders: &[i64]) -> FgAbGroup {
        FgAbGroup::from_cyclic_orders(orders.iter().copied()).unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn crt_merges_coprime_parts() {
        let a = g(&[4, 6]);
        assert_eq!(a.free_rank(), &big(0));
        assert_eq!(a.torsion(), &[(big(12), big(1)), (big(2), big(1))]);
    }

    #[test]
    fn trivial_and_free_inputs() {
        assert!(g(&[1]).is_trivial());
        assert!(g(&[]).is_trivial());
        let a = g(&[0, 2, 2]);
        assert_eq!(a.free_rank(), &big(1));
        assert_eq!(a.torsion(), &[(big(2), big(2))]);
    }

    #[test]
    fn negative_order_rejected() {
        assert!(matches!(
            FgAbGroup::from_cyclic_orders([-3i64]),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn new_rejects_non_chains() {
        assert!(FgAbGroup::new(0u32, vec![(big(2), big(1)), (big(4), big(1))]).is_err());
        assert!(FgAbGroup::new(0u32, vec![(big(6), big(1)), (big(4), big(1))]).is_err());
        assert!(FgAbGroup::new(0u32, vec![(big(1), big(1))]).is_err());
        assert!(FgAbGroup::new(0u32, vec![(big(4), big(0))]).is_err());
        assert!(FgAbGroup::new(2u32, vec![(big(12), big(1)), (big(6), big(3))]).is_ok());
    }

    #[test]
    fn composite_coprime_base() {
        // 36 = 2^2 3^2 and 6 share a base element 6; 10 splits it.
        let a = g(&[36, 6, 10, 15]);
        let b = g(&[4, 9, 2, 3, 2, 5, 3, 5]);
        assert_eq!(a, b);
        assert_eq!(
            a.torsion(),
            &[(big(180), big(1)), (big(30), big(1)), (big(6), big(1))]
        );
    }

    #[test]
    fn presentation_ingestion() {
        let m = IntMatrix::from_rows(1, &[vec![4i64]]).unwrap();
        assert_eq!(FgAbGroup::from_presentation(&m), g(&[4]));
        let m = IntMatrix::from_rows(2, &[vec![2i64, 0], vec![0, 3]]).unwrap();
        assert_eq!(FgAbGroup::from_presentation(&m), g(&[6]));
        assert_eq!(
            FgAbGroup::from_presentation(&IntMatrix::zeros(0, 2)),
            FgAbGroup::free(2u32)
        );
    }

    #[test]
    fn direct_sums() {
        assert_eq!(g(&[4]).direct_sum(&g(&[6])), g(&[12, 2]));
        assert_eq!(g(&[12, 2]).direct_sum(&FgAbGroup::trivial()), g(&[12, 2]));
        let a = g(&[0]).direct_sum(&g(&[2]));
        assert_eq!(a.free_rank(), &big(1));
        assert_eq!(a.torsion(), &[(big(2), big(1))]);
    }

    #[test]
    fn isomorphism() {
        assert!(g(&[4, 6]).is_isomorphic(&g(&[12, 2])));
        assert!(!g(&[2]).is_isomorphic(&g(&[3])));
        let a = g(&[0, 8, 4]);
        assert!(a.is_isomorphic(&a));
    }

    #[test]
    fn summands() {
        assert!(g(&[2]).is_direct_summand(&g(&[4, 2])));
        assert!(!g(&[4]).is_direct_summand(&g(&[2, 2])));
        assert!(!g(&[2]).is_direct_summand(&g(&[4])));
        assert!(FgAbGroup::trivial().is_direct_summand(&g(&[0, 3])));
        assert!(!g(&[0]).is_direct_summand(&g(&[5])));
        assert!(g(&[6]).is_direct_summand(&g(&[2, 3, 9])));
    }

    #[test]
    fn order_and_exponent() {
        assert_eq!(g(&[4, 2]).order(), Cardinality::Finite(big(8)));
        assert_eq!(g(&[12, 2]).exponent(), Cardinality::Finite(big(12)));
        assert_eq!(g(&[0, 2]).order(), Cardinality::Infinite);
        assert_eq!(FgAbGroup::trivial().order(), Cardinality::Finite(big(1)));
        assert!(g(&[2, 2]).is_elementary_abelian(&big(2)));
        assert!(!g(&[4, 2]).is_elementary_abelian(&big(2)));
        assert!(!g(&[4, 4]).is_elementary_abelian(&big(4)));
        assert!(FgAbGroup::trivial().is_elementary_abelian(&big(3)));
    }

    #[test]
    fn huge_multiplicities_stay_compressed() {
        let m = BigUint::parse_bytes(b"1000000000000000000000000", 10).unwrap();
        let a = FgAbGroup::from_parts(big(0), [(big(6), m.clone()), (big(4), m.clone())]);
        assert_eq!(a.torsion(), &[(big(12), m.clone()), (big(2), m)]);
    }

    #[test]
    fn render() {
        assert_eq!(FgAbGroup::trivial().to_string(), "1");
        assert_eq!(g(&[0, 0, 12, 2]).to_string(), "Z^2 + Z12 + Z2");
        assert_eq!(g(&[0, 2, 2, 2]).to_string(), "Z + Z2^3");
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..200u64)
            .filter(|&n| is_probable_prime(&big(n)))
            .collect();
        let naive: Vec<u64> = (0..200u64)
            .filter(|&n| n >= 2 && (2..n).all(|d| n % d != 0))
            .collect();
        assert_eq!(primes, naive);
        assert!(is_probable_prime(&big(1_000_000_007)));
        assert!(!is_probable_prime(&big(3_215_031_751)));
    }
}
