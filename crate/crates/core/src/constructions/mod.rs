//! Knot generators: closed 2-braids, 2-bridge knots from continued
//! fractions, twist knots, 2-cables and twisted doubles.

mod rational;
mod satellite;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::DiagramError;

pub use rational::{rational_knot, torus_2n, twist_knot};
pub use satellite::{cable2, paper_family, whitehead_double, whitehead_double_framed, DoubleSpec, FamilyMember};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("empty continued fraction")]
    EmptyFraction,
    #[error("continued fraction entries must be nonzero")]
    ZeroEntry,
    #[error("continued fraction has a zero denominator")]
    ZeroDenominator,
    #[error("continued fraction overflows")]
    Overflow,
    #[error("{0} describes a two-component link, not a knot")]
    Link(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

/// A reduced fraction `±p/q` with `p, q > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Fraction {
    pub p: u64,
    pub q: u64,
    pub negative: bool,
}

impl Fraction {
    /// The knot case: odd numerator.
    pub fn is_knot(&self) -> bool {
        self.p % 2 == 1
    }

    /// Whether `self` and `other` give the same unoriented 2-bridge knot up
    /// to mirror image: equal `p` and `q ≡ ±q'^{±1} (mod p)`.
    pub fn same_knot_up_to_mirror(&self, other: &Fraction) -> bool {
        if self.p != other.p {
            return false;
        }
        let p = self.p as u128;
        let (a, b) = (self.q as u128 % p, other.q as u128 % p);
        let b_neg = (p - b) % p;
        a == b || a == b_neg || (a * b) % p == 1 % p || (a * b_neg) % p == 1 % p
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { "-" } else { "" };
        write!(f, "{sign}{}/{}", self.p, self.q)
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Evaluates `[a1, ..., an]` as `an + 1/(a(n-1) + 1/(... + 1/a1))`.
pub fn cf_to_fraction(cf: &[i64]) -> Result<Fraction, ConstructionError> {
    if cf.is_empty() {
        return Err(ConstructionError::EmptyFraction);
    }
    if cf.contains(&0) {
        return Err(ConstructionError::ZeroEntry);
    }
    let (mut num, mut den): (i128, i128) = (cf[0] as i128, 1);
    for &a in &cf[1..] {
        if num == 0 {
            return Err(ConstructionError::ZeroDenominator);
        }
        // a + den/num
        let next = (a as i128)
            .checked_mul(num)
            .and_then(|x| x.checked_add(den))
            .ok_or(ConstructionError::Overflow)?;
        (num, den) = (next, num);
        let g = gcd(num, den).max(1);
        num /= g;
        den /= g;
    }
    if den == 0 {
        return Err(ConstructionError::ZeroDenominator);
    }
    let negative = (num < 0) != (den < 0) && num != 0;
    Ok(Fraction {
        p: num.unsigned_abs() as u64,
        q: den.unsigned_abs() as u64,
        negative,
    })
}
