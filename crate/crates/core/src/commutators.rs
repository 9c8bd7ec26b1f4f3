//! Basic commutators: counting them with the Witt formula, listing a Hall
//! basis explicitly, and the tensor construction indexed by that basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::fgab::{Cyclic, FgAbGroup};
use crate::homalg::tensor;

/// Largest number of letters [`hall_basis`] and [`tensor_t`] will enumerate.
pub const MAX_LETTERS: usize = 6;
/// Largest weight [`hall_basis`] and [`tensor_t`] will enumerate.
pub const MAX_WEIGHT: usize = 8;

pub fn mobius(d: u64) -> Result<i8> {
    if d == 0 {
        return Err(Error::MobiusDomain);
    }
    let mut n = d;
    let mut sign = 1i8;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    Ok(sign)
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Number of basic commutators of weight `weight` on `letters` letters:
/// `(1/w) * sum_{d | w} mu(d) * n^(w/d)`. Weight 0 yields 0.
pub fn witt_count(letters: impl Into<BigUint>, weight: u32) -> BigUint {
    if weight == 0 {
        return BigUint::zero();
    }
    let n = BigInt::from(letters.into());
    let mut sum = BigInt::zero();
    for d in divisors(weight) {
        let mu = mobius(u64::from(d)).expect("divisors are positive");
        if mu != 0 {
            sum += BigInt::from(mu) * Pow::pow(&n, weight / d);
        }
    }
    let (q, r) = sum.div_rem(&BigInt::from(weight));
    debug_assert!(r.is_zero() && !q.is_negative());
    q.magnitude().clone()
}

/// The class `c` of a nilpotent multiplier together with the counts
/// `b_j = witt_count(j, c + 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierParams {
    c: u32,
    weight: u32,
    b_table: Vec<BigUint>,
}

impl MultiplierParams {
    /// Precomputes `b_0 ..= b_table_len`.
    pub fn new(c: u32, table_len: usize) -> Result<Self> {
        if c == 0 {
            return Err(Error::InvalidClass(c));
        }
        let weight = c + 1;
        let b_table = (0..=table_len).map(|j| witt_count(j, weight)).collect();
        Ok(MultiplierParams { c, weight, b_table })
    }

    pub fn class(&self) -> u32 {
        self.c
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn b_table(&self) -> &[BigUint] {
        &self.b_table
    }

    /// `b_j`, from the table when it covers `j`.
    pub fn b(&self, j: &BigUint) -> BigUint {
        match j.to_usize().and_then(|j| self.b_table.get(j)) {
            Some(b) => b.clone(),
            None => witt_count(j.clone(), self.weight),
        }
    }
}

/// A basic commutator on letters `x_1, x_2, ...` (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BasicCommutator {
    Letter(usize),
    Bracket(Arc<BasicCommutator>, Arc<BasicCommutator>),
}

impl BasicCommutator {
    pub fn weight(&self) -> usize {
        match self {
            BasicCommutator::Letter(_) => 1,
            BasicCommutator::Bracket(u, v) => u.weight() + v.weight(),
        }
    }

    /// Letter index to number of occurrences.
    pub fn letter_multiset(&self) -> BTreeMap<usize, usize> {
        let mut counts = BTreeMap::new();
        self.collect_letters(&mut counts);
        counts
    }

    fn collect_letters(&self, counts: &mut BTreeMap<usize, usize>) {
        match self {
            BasicCommutator::Letter(i) => *counts.entry(*i).or_default() += 1,
            BasicCommutator::Bracket(u, v) => {
                u.collect_letters(counts);
                v.collect_letters(counts);
            }
        }
    }
}

impl fmt::Display for BasicCommutator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasicCommutator::Letter(i) => write!(f, "x{i}"),
            BasicCommutator::Bracket(u, v) => write!(f, "[{u},{v}]"),
        }
    }
}

pub fn letter_multiset(bc: &BasicCommutator) -> BTreeMap<usize, usize> {
    bc.letter_multiset()
}

#[derive(Clone, Copy)]
enum Node {
    Letter(usize),
    Bracket { left: usize, right: usize },
}

/// All basic commutators up to a weight, stored by position in the Hall
/// order. Positions increase with weight; inside one weight, brackets are
/// ordered by (left position, right position).
struct HallArena {
    nodes: Vec<Node>,
    weight_start: Vec<usize>,
    letter_counts: Vec<[u8; MAX_LETTERS]>,
}

impl HallArena {
    fn build(letters: usize, max_weight: usize) -> Self {
        let mut arena = HallArena {
            nodes: Vec::new(),
            weight_start: vec![0, 0],
            letter_counts: Vec::new(),
        };
        for i in 1..=letters {
            arena.nodes.push(Node::Letter(i));
            let mut counts = [0u8; MAX_LETTERS];
            counts[i - 1] = 1;
            arena.letter_counts.push(counts);
        }
        for w in 2..=max_weight {
            arena.weight_start.push(arena.nodes.len());
            // [u, v] with weight(u) >= weight(v), so u runs over weights
            // ceil(w/2) .. w-1 in increasing position.
            let left_range = arena.weight_start[w.div_ceil(2)]..arena.weight_start[w];
            for left in left_range {
                let wl = arena.weight_of(left);
                let wr = w - wl;
                let right_end = arena.weight_start[wr + 1].min(left);
                for right in arena.weight_start[wr]..right_end {
                    if let Node::Bracket { right: b, .. } = arena.nodes[left] {
                        if b > right {
                            continue;
                        }
                    }
                    arena.nodes.push(Node::Bracket { left, right });
                    let mut counts = arena.letter_counts[left];
                    for (c, r) in counts.iter_mut().zip(arena.letter_counts[right]) {
                        *c += r;
                    }
                    arena.letter_counts.push(counts);
                }
            }
        }
        arena.weight_start.push(arena.nodes.len());
        arena
    }

    fn weight_of(&self, pos: usize) -> usize {
        // weight_start is non-decreasing; weight w occupies [start[w], start[w+1]).
        self.weight_start.partition_point(|&s| s <= pos) - 1
    }

    fn range(&self, w: usize) -> std::ops::Range<usize> {
        self.weight_start[w]..self.weight_start[w + 1]
    }

    fn to_trees(&self, w: usize) -> Vec<BasicCommutator> {
        let mut built: Vec<Option<Arc<BasicCommutator>>> = vec![None; self.nodes.len()];
        let end = self.weight_start[w + 1];
        for pos in 0..end {
            let tree = match self.nodes[pos] {
                Node::Letter(i) => BasicCommutator::Letter(i),
                Node::Bracket { left, right } => BasicCommutator::Bracket(
                    built[left].clone().unwrap(),
                    built[right].clone().unwrap(),
                ),
            };
            built[pos] = Some(Arc::new(tree));
        }
        self.range(w)
            .map(|pos| Arc::unwrap_or_clone(built[pos].take().unwrap()))
            .collect()
    }
}

fn check_caps(letters: usize, weight: usize) -> Result<()> {
    if letters > MAX_LETTERS {
        return Err(Error::Capacity {
            what: "letters",
            value: letters,
            limit: MAX_LETTERS,
        });
    }
    if weight > MAX_WEIGHT {
        return Err(Error::Capacity {
            what: "weight",
            value: weight,
            limit: MAX_WEIGHT,
        });
    }
    if weight == 0 {
        return Err(Error::Malformed("weight must be >= 1".into()));
    }
    Ok(())
}

/// Hall basis of weight exactly `weight` on `letters` letters, in Hall order.
pub fn hall_basis(letters: usize, weight: usize) -> Result<Vec<BasicCommutator>> {
    check_caps(letters, weight)?;
    Ok(HallArena::build(letters, weight).to_trees(weight))
}

/// Direct sum, over the Hall basis of the given weight on `factors.len()`
/// letters, of the tensor product of the factors each basic commutator
/// involves (with repetition).
pub fn tensor_t(factors: &[Cyclic], weight: usize) -> Result<FgAbGroup> {
    check_caps(factors.len(), weight)?;
    let arena = HallArena::build(factors.len(), weight);

    let mut by_content: HashMap<[u8; MAX_LETTERS], u64> = HashMap::new();
    for pos in arena.range(weight) {
        *by_content.entry(arena.letter_counts[pos]).or_default() += 1;
    }
    let mut contents: Vec<_> = by_content.into_iter().collect();
    contents.sort();

    let mut total = FgAbGroup::trivial();
    for (counts, how_many) in contents {
        let mut product: Option<FgAbGroup> = None;
        for (letter, &times) in counts.iter().enumerate().filter(|(_, &t)| t > 0) {
            let h = FgAbGroup::from_cyclic(&factors[letter]);
            for _ in 0..times {
                product = Some(match product {
                    None => h.clone(),
                    Some(p) => tensor(&p, &h),
                });
            }
        }
        let product = product.expect("every basic commutator has a letter");
        total = total.direct_sum(&product.power(&BigUint::from(how_many)));
    }
    Ok(total)
}
