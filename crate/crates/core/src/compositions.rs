//! Composites of the nilpotent multiplier with `Hom`, `⊗`, `Ext¹` and
//! `Tor₁` against a cyclic group `Z_m`.
//!
//! Every composite is evaluated twice: once through its closed form in the
//! invariant factors of `D`, and once by literally chaining the functors.
//! The two must agree. On top of that, each composite is compared with its
//! partner (the same functor applied in the other order) to decide whether
//! the multiplier commutes with that functor at `D`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::commutators::{witt_count, MultiplierParams};
use crate::error::{Error, Result};
use crate::fgab::FgAbGroup;
use crate::homalg::{ext1, hom, tensor, tor1};
use crate::multiplier::nilpotent_multiplier;

/// A functor of one abelian-group argument built from `Z_m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Functor {
    /// `Ext¹(Z_m, -)`
    ExtFromCyclic,
    /// `Ext¹(-, Z_m)`
    ExtIntoCyclic,
    /// `Tor₁(Z_m, -)`
    TorWithCyclic,
    /// `Hom(Z_m, -)`
    HomFromCyclic,
    /// `Hom(-, Z_m)`
    HomIntoCyclic,
    /// `Z_m ⊗ -`
    TensorWithCyclic,
}

impl Functor {
    pub const ALL: [Functor; 6] = [
        Functor::ExtFromCyclic,
        Functor::ExtIntoCyclic,
        Functor::TorWithCyclic,
        Functor::HomFromCyclic,
        Functor::HomIntoCyclic,
        Functor::TensorWithCyclic,
    ];

    pub fn apply(self, zm: &FgAbGroup, g: &FgAbGroup) -> FgAbGroup {
        match self {
            Functor::ExtFromCyclic => ext1(zm, g),
            Functor::ExtIntoCyclic => ext1(g, zm),
            Functor::TorWithCyclic => tor1(zm, g),
            Functor::HomFromCyclic => hom(zm, g),
            Functor::HomIntoCyclic => hom(g, zm),
            Functor::TensorWithCyclic => tensor(zm, g),
        }
    }

    /// Whether the multiplier is known to commute with this functor at `D`.
    /// `None` means commutation can go either way.
    pub fn always_commutes(self, d: &FgAbGroup) -> Option<bool> {
        match self {
            Functor::ExtFromCyclic | Functor::HomIntoCyclic | Functor::TensorWithCyclic => {
                Some(true)
            }
            Functor::ExtIntoCyclic | Functor::TorWithCyclic | Functor::HomFromCyclic => {
                d.is_finite().then_some(true)
            }
        }
    }

    fn render(self, arg: &str) -> String {
        match self {
            Functor::ExtFromCyclic => format!("Ext1(Z_m, {arg})"),
            Functor::ExtIntoCyclic => format!("Ext1({arg}, Z_m)"),
            Functor::TorWithCyclic => format!("Tor1(Z_m, {arg})"),
            Functor::HomFromCyclic => format!("Hom(Z_m, {arg})"),
            Functor::HomIntoCyclic => format!("Hom({arg}, Z_m)"),
            Functor::TensorWithCyclic => format!("Z_m (x) {arg}"),
        }
    }
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("-"))
    }
}

/// One composite functor: the multiplier applied after or before a
/// [`Functor`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompositionId {
    MultiplierOfExtFromCyclic,
    ExtFromCyclicOfMultiplier,
    MultiplierOfExtIntoCyclic,
    ExtIntoCyclicOfMultiplier,
    MultiplierOfTor,
    TorOfMultiplier,
    MultiplierOfHomFromCyclic,
    HomFromCyclicOfMultiplier,
    MultiplierOfHomIntoCyclic,
    HomIntoCyclicOfMultiplier,
    MultiplierOfTensor,
    TensorOfMultiplier,
}

impl CompositionId {
    pub const ALL: [CompositionId; 12] = [
        CompositionId::MultiplierOfExtFromCyclic,
        CompositionId::ExtFromCyclicOfMultiplier,
        CompositionId::MultiplierOfExtIntoCyclic,
        CompositionId::ExtIntoCyclicOfMultiplier,
        CompositionId::MultiplierOfTor,
        CompositionId::TorOfMultiplier,
        CompositionId::MultiplierOfHomFromCyclic,
        CompositionId::HomFromCyclicOfMultiplier,
        CompositionId::MultiplierOfHomIntoCyclic,
        CompositionId::HomIntoCyclicOfMultiplier,
        CompositionId::MultiplierOfTensor,
        CompositionId::TensorOfMultiplier,
    ];

    pub fn new(functor: Functor, multiplier_outside: bool) -> Self {
        use CompositionId::*;
        match (functor, multiplier_outside) {
            (Functor::ExtFromCyclic, true) => MultiplierOfExtFromCyclic,
            (Functor::ExtFromCyclic, false) => ExtFromCyclicOfMultiplier,
            (Functor::ExtIntoCyclic, true) => MultiplierOfExtIntoCyclic,
            (Functor::ExtIntoCyclic, false) => ExtIntoCyclicOfMultiplier,
            (Functor::TorWithCyclic, true) => MultiplierOfTor,
            (Functor::TorWithCyclic, false) => TorOfMultiplier,
            (Functor::HomFromCyclic, true) => MultiplierOfHomFromCyclic,
            (Functor::HomFromCyclic, false) => HomFromCyclicOfMultiplier,
            (Functor::HomIntoCyclic, true) => MultiplierOfHomIntoCyclic,
            (Functor::HomIntoCyclic, false) => HomIntoCyclicOfMultiplier,
            (Functor::TensorWithCyclic, true) => MultiplierOfTensor,
            (Functor::TensorWithCyclic, false) => TensorOfMultiplier,
        }
    }

    pub fn functor(self) -> Functor {
        use CompositionId::*;
        match self {
            MultiplierOfExtFromCyclic | ExtFromCyclicOfMultiplier => Functor::ExtFromCyclic,
            MultiplierOfExtIntoCyclic | ExtIntoCyclicOfMultiplier => Functor::ExtIntoCyclic,
            MultiplierOfTor | TorOfMultiplier => Functor::TorWithCyclic,
            MultiplierOfHomFromCyclic | HomFromCyclicOfMultiplier => Functor::HomFromCyclic,
            MultiplierOfHomIntoCyclic | HomIntoCyclicOfMultiplier => Functor::HomIntoCyclic,
            MultiplierOfTensor | TensorOfMultiplier => Functor::TensorWithCyclic,
        }
    }

    pub fn multiplier_outside(self) -> bool {
        use CompositionId::*;
        matches!(
            self,
            MultiplierOfExtFromCyclic
                | MultiplierOfExtIntoCyclic
                | MultiplierOfTor
                | MultiplierOfHomFromCyclic
                | MultiplierOfHomIntoCyclic
                | MultiplierOfTensor
        )
    }

    /// The same functor composed in the other order.
    pub fn partner(self) -> Self {
        Self::new(self.functor(), !self.multiplier_outside())
    }
}

impl fmt::Display for CompositionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplier_outside() {
            write!(f, "NcM({})", self.functor().render("D"))
        } else {
            write!(f, "{}", self.functor().render("NcM(D)"))
        }
    }
}

fn validate(m: &BigUint, c: u32) -> Result<()> {
    if m < &BigUint::from(2u32) {
        return Err(Error::Malformed(format!("m must be >= 2, got {m}")));
    }
    if c == 0 {
        return Err(Error::InvalidClass(c));
    }
    Ok(())
}

/// Value of the composite read off the invariant factors of `d`.
///
/// Writing `d = Z^(n) + Z_{n_1} + ... + Z_{n_k}` and `g_i = gcd(n_i, m)`,
/// every composite is a sum of `Z_{g_i}^(b_{s+i} - b_{s+i-1})` over `i`,
/// with shift `s = n` or `s = 0`, plus possibly `Z_m^(b_n)`. Since
/// `g_{i+1} | g_i | m` no further normalization of the exponents is needed.
pub fn closed_form(id: CompositionId, m: &BigUint, c: u32, d: &FgAbGroup) -> Result<FgAbGroup> {
    validate(m, c)?;
    let params = MultiplierParams::new(c, 0)?;
    let n = d.free_rank();
    let gcd_runs = |shift: &BigUint| -> Vec<(BigUint, BigUint)> {
        let mut position = shift.clone();
        let mut below = params.b(&position);
        let mut parts = Vec::new();
        for (factor, mult) in d.torsion() {
            position += mult;
            let upto = params.b(&position);
            parts.push((factor.gcd(m), &upto - &below));
            below = upto;
        }
        parts
    };
    let free_copies = (m.clone(), params.b(n));

    use CompositionId::*;
    let parts = match id {
        MultiplierOfExtFromCyclic
        | ExtFromCyclicOfMultiplier
        | MultiplierOfHomIntoCyclic
        | HomIntoCyclicOfMultiplier
        | MultiplierOfTensor
        | TensorOfMultiplier => {
            let mut parts = vec![free_copies];
            parts.extend(gcd_runs(n));
            parts
        }
        MultiplierOfExtIntoCyclic | MultiplierOfTor | MultiplierOfHomFromCyclic => {
            gcd_runs(&BigUint::zero())
        }
        ExtIntoCyclicOfMultiplier | TorOfMultiplier | HomFromCyclicOfMultiplier => gcd_runs(n),
    };
    Ok(FgAbGroup::from_parts(BigUint::zero(), parts))
}

/// Value of the composite obtained by applying the functor and the
/// multiplier one after the other.
pub fn pipeline(id: CompositionId, m: &BigUint, c: u32, d: &FgAbGroup) -> Result<FgAbGroup> {
    validate(m, c)?;
    let zm = FgAbGroup::cyclic(m.clone());
    let functor = id.functor();
    if id.multiplier_outside() {
        nilpotent_multiplier(&functor.apply(&zm, d), c)
    } else {
        Ok(functor.apply(&zm, &nilpotent_multiplier(d, c)?))
    }
}

/// Both evaluations of one composite together with its partner.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CommutationReport {
    pub id: CompositionId,
    pub m: BigUint,
    pub c: u32,
    pub d: FgAbGroup,
    /// The composite, evaluated by chaining functors.
    pub lhs: FgAbGroup,
    pub rhs_closed_form: FgAbGroup,
    /// The partner composite, evaluated by chaining functors.
    pub partner: FgAbGroup,
    pub commutes_with_partner: bool,
}

/// Evaluates every composite at `(m, c, d)`.
///
/// Fails if a closed form disagrees with its pipeline, or if a functor that
/// must commute with the multiplier at `d` does not.
pub fn check_commutation(m: &BigUint, c: u32, d: &FgAbGroup) -> Result<Vec<CommutationReport>> {
    let mut values = BTreeMap::new();
    for id in CompositionId::ALL {
        values.insert(id, pipeline(id, m, c, d)?);
    }
    let mut reports = Vec::with_capacity(values.len());
    for (&id, lhs) in &values {
        let closed = closed_form(id, m, c, d)?;
        if &closed != lhs {
            return Err(Error::Verification(format!(
                "{id} at m={m}, c={c}, D={d}: closed form {closed} but evaluation gives {lhs}"
            )));
        }
        let partner = values[&id.partner()].clone();
        let commutes = lhs == &partner;
        if id.functor().always_commutes(d) == Some(true) && !commutes {
            return Err(Error::Verification(format!(
                "{id} at m={m}, c={c}, D={d}: expected {partner}, got {lhs}"
            )));
        }
        reports.push(CommutationReport {
            id,
            m: m.clone(),
            c,
            d: d.clone(),
            lhs: lhs.clone(),
            rhs_closed_form: closed,
            partner,
            commutes_with_partner: commutes,
        });
    }
    Ok(reports)
}

/// Aggregate of [`check_commutation`] over many inputs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub cases: usize,
    pub reports: usize,
    /// First input (in sweep order) at which the multiplier fails to commute
    /// with each functor.
    pub witnesses: BTreeMap<Functor, (BigUint, u32, FgAbGroup)>,
}

pub fn sweep(ms: &[BigUint], cs: &[u32], groups: &[FgAbGroup]) -> Result<SweepSummary> {
    let mut summary = SweepSummary::default();
    for d in groups {
        for &c in cs {
            for m in ms {
                let reports = check_commutation(m, c, d)?;
                summary.cases += 1;
                summary.reports += reports.len();
                for r in reports.iter().filter(|r| !r.commutes_with_partner) {
                    summary
                        .witnesses
                        .entry(r.id.functor())
                        .or_insert_with(|| (m.clone(), c, d.clone()));
                }
            }
        }
    }
    Ok(summary)
}

/// The multiplier fails to commute with `Tor₁(Z_4, -)`, `Ext¹(-, Z_4)` and
/// `Hom(Z_4, -)` at `D = Z + Z_4`: one side is trivial, the other is
/// `Z_4^(b_2)`. Returns the three reports with the multiplier outside.
pub fn free_rank_witness(c: u32) -> Result<Vec<CommutationReport>> {
    let m = BigUint::from(4u32);
    let d = FgAbGroup::from_cyclic_orders([0u32, 4]).expect("valid orders");
    let expected = FgAbGroup::cyclic(4u32).power(&witt_count(2u32, c + 1));
    let reports: Vec<_> = check_commutation(&m, c, &d)?
        .into_iter()
        .filter(|r| {
            r.id.multiplier_outside()
                && matches!(
                    r.id.functor(),
                    Functor::TorWithCyclic | Functor::ExtIntoCyclic | Functor::HomFromCyclic
                )
        })
        .collect();
    for r in &reports {
        if r.commutes_with_partner || !r.lhs.is_trivial() || r.partner != expected {
            return Err(Error::Verification(format!(
                "{} at m=4, c={c}, D={d}: got {} vs {}, expected 1 vs {expected}",
                r.id, r.lhs, r.partner
            )));
        }
    }
    Ok(reports)
}

/// One of the fixed examples showing that the multiplier does not commute
/// with a functor built from a non-cyclic group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub label: char,
    pub statement: String,
    pub lhs: FgAbGroup,
    pub rhs: FgAbGroup,
    pub expected_lhs: FgAbGroup,
    pub isomorphic: bool,
}

/// Examples (a)-(e) use `Z_n + Z_n` and `Z_n`; (f) and (g) use fixed groups.
/// Fails if any example does not come out as `expected_lhs` versus a
/// trivial right-hand side.
pub fn counterexample_suite(n: &BigUint, c: u32) -> Result<Vec<CounterexampleReport>> {
    if n < &BigUint::from(2u32) {
        return Err(Error::Malformed(format!("n must be >= 2, got {n}")));
    }
    let mult = |g: &FgAbGroup| nilpotent_multiplier(g, c);
    let b2 = witt_count(2u32, c + 1);
    let zn = FgAbGroup::cyclic(n.clone());
    let zn2 = zn.direct_sum(&zn);
    let copies = |d: u32| FgAbGroup::cyclic(d).power(&b2);
    let fixed = |orders: [u32; 2]| FgAbGroup::from_cyclic_orders(orders).expect("positive orders");

    let mut out = Vec::new();
    let mut push =
        |label, statement: String, lhs: FgAbGroup, rhs: FgAbGroup, expected: FgAbGroup| {
            let isomorphic = lhs == rhs;
            out.push(CounterexampleReport {
                label,
                statement,
                lhs,
                rhs,
                expected_lhs: expected,
                isomorphic,
            });
        };
    let expected_n = zn.power(&b2);
    push(
        'a',
        format!("NcM(Ext1(Z{n}+Z{n}, Z{n})) vs Ext1(Z{n}+Z{n}, NcM(Z{n}))"),
        mult(&ext1(&zn2, &zn))?,
        ext1(&zn2, &mult(&zn)?),
        expected_n.clone(),
    );
    push(
        'b',
        format!("NcM(Ext1(Z{n}, Z{n}+Z{n})) vs Ext1(NcM(Z{n}), Z{n}+Z{n})"),
        mult(&ext1(&zn, &zn2))?,
        ext1(&mult(&zn)?, &zn2),
        expected_n.clone(),
    );
    push(
        'c',
        format!("NcM(Tor1(Z{n}+Z{n}, Z{n})) vs Tor1(Z{n}+Z{n}, NcM(Z{n}))"),
        mult(&tor1(&zn2, &zn))?,
        tor1(&zn2, &mult(&zn)?),
        expected_n.clone(),
    );
    push(
        'd',
        format!("NcM((Z{n}+Z{n}) (x) Z{n}) vs (Z{n}+Z{n}) (x) NcM(Z{n})"),
        mult(&tensor(&zn2, &zn))?,
        tensor(&zn2, &mult(&zn)?),
        expected_n.clone(),
    );
    push(
        'e',
        format!("NcM(Hom(Z{n}+Z{n}, Z{n})) vs Hom(Z{n}+Z{n}, NcM(Z{n}))"),
        mult(&hom(&zn2, &zn))?,
        hom(&zn2, &mult(&zn)?),
        expected_n,
    );
    let (a, b) = (fixed([14, 2]), fixed([6, 3]));
    push(
        'f',
        "NcM(Hom(Z14+Z2, Z6+Z3)) vs Hom(Z14+Z2, NcM(Z6+Z3))".to_string(),
        mult(&hom(&a, &b))?,
        hom(&a, &mult(&b)?),
        copies(2),
    );
    let (a, b) = (fixed([6, 2]), fixed([9, 3]));
    push(
        'g',
        "NcM(Hom(Z6+Z2, Z9+Z3)) vs Hom(NcM(Z6+Z2), Z9+Z3)".to_string(),
        mult(&hom(&a, &b))?,
        hom(&mult(&a)?, &b),
        copies(3),
    );

    for r in &out {
        if r.lhs != r.expected_lhs || !r.rhs.is_trivial() || r.isomorphic {
            return Err(Error::Verification(format!(
                "example ({}) {}: got {} vs {}, expected {} vs 1",
                r.label, r.statement, r.lhs, r.rhs, r.expected_lhs
            )));
        }
    }
    Ok(out)
}
