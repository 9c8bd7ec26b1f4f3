//! Group expressions such as `Z^2 + Z12 + Z2` or `Z2 * Z3`.
//!
//! ```text
//! expr := sum ('*' sum)*
//! sum  := atom ('+' atom)*
//! atom := 'Z' NAT? ('^' NAT)? | '1'
//! ```
//!
//! Whitespace is ignored. `Z` alone is infinite cyclic, `Z<d>` is cyclic of
//! order `d >= 1`, `^<r>` takes `r` copies and `1` is the trivial group.

use std::fmt;

use nilmult::{Cyclic, FgAbGroup};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: {message}")]
pub struct SyntaxError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub cyclic: Cyclic,
    pub power: BigUint,
}

impl Atom {
    pub fn to_group(&self) -> FgAbGroup {
        FgAbGroup::from_cyclic(&self.cyclic).power(&self.power)
    }
}

/// A free product of direct sums. A plain direct sum has one factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupExpr {
    pub factors: Vec<Vec<Atom>>,
}

impl GroupExpr {
    pub fn is_free_product(&self) -> bool {
        self.factors.len() > 1
    }

    /// Canonical form of every free factor.
    pub fn free_factors(&self) -> Vec<FgAbGroup> {
        self.factors
            .iter()
            .map(|sum| {
                sum.iter().fold(FgAbGroup::trivial(), |acc, atom| {
                    acc.direct_sum(&atom.to_group())
                })
            })
            .collect()
    }

    /// The group, if the expression is a plain direct sum.
    pub fn as_direct_sum(&self) -> Option<FgAbGroup> {
        match self.free_factors().as_slice() {
            [g] => Some(g.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .free_factors()
            .iter()
            .map(ToString::to_string)
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

pub fn parse_group(text: &str) -> Result<GroupExpr, SyntaxError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.error("empty input"));
    }
    let mut factors = vec![p.sum()?];
    while p.eat(b'*') {
        factors.push(p.sum()?);
    }
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error(format!("unexpected character '{}'", c as char)));
    }
    Ok(GroupExpr { factors })
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Vec<Atom>, SyntaxError> {
        let mut atoms = vec![self.atom()?];
        while self.eat(b'+') {
            atoms.push(self.atom()?);
        }
        Ok(atoms)
    }

    fn atom(&mut self) -> Result<Atom, SyntaxError> {
        self.skip_ws();
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                self.skip_ws();
                let cyclic = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    let start = self.pos;
                    let d = self.nat()?;
                    if d.is_zero() {
                        return Err(SyntaxError {
                            offset: start,
                            message: "cyclic order must be at least 1".into(),
                        });
                    }
                    Cyclic::Finite(d)
                } else {
                    Cyclic::Infinite
                };
                let power = if self.eat(b'^') {
                    self.skip_ws();
                    self.nat()?
                } else {
                    BigUint::one()
                };
                Ok(Atom { cyclic, power })
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let n = self.nat()?;
                if !n.is_one() {
                    return Err(SyntaxError {
                        offset: start,
                        message: format!("bare number {n}; only 1 (the trivial group) is allowed"),
                    });
                }
                Ok(Atom {
                    cyclic: Cyclic::Finite(BigUint::one()),
                    power: BigUint::one(),
                })
            }
            Some(b'(') | Some(b')') => Err(self
                .error("parentheses are not supported; '*' may only join top-level direct sums")),
            Some(c) => Err(self.error(format!(
                "unexpected character '{}', expected a group",
                c as char
            ))),
            None => Err(self.error("unexpected end of input, expected a group")),
        }
    }

    fn nat(&mut self) -> Result<BigUint, SyntaxError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a natural number"));
        }
        let digits = &self.src[start..self.pos];
        Ok(BigUint::parse_bytes(digits, 10).expect("ascii digits"))
    }
}
