use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// An integer Laurent polynomial in `t`, stored sparsely without zero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct LaurentPoly {
    coefficients: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::from_coefficients(0, &[1])
    }

    /// `coeffs[i]` is the coefficient of `t^(low + i)`.
    pub fn from_coefficients(low: i32, coeffs: &[i64]) -> Self {
        let coefficients = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (low + i as i32, c))
            .collect();
        LaurentPoly { coefficients }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, exponent: i32) -> i64 {
        self.coefficients.get(&exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coefficients.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.coefficients.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.coefficients.keys().next_back().copied()
    }

    /// Difference between the highest and lowest exponents; 0 for zero.
    pub fn span(&self) -> u32 {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => (hi - lo) as u32,
            _ => 0,
        }
    }

    /// Representative of the class up to `±t^k`: lowest exponent 0,
    /// positive leading coefficient.
    pub fn canonical(&self) -> LaurentPoly {
        let Some(lo) = self.min_exponent() else {
            return LaurentPoly::zero();
        };
        let hi = self.max_exponent().expect("nonzero");
        let flip = if self.coefficients[&hi] < 0 { -1 } else { 1 };
        LaurentPoly {
            coefficients: self
                .coefficients
                .iter()
                .map(|(&e, &c)| (e - lo, flip * c))
                .collect(),
        }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }

    /// Value at an integer point; negative exponents need `x = ±1`.
    pub fn eval(&self, x: i64) -> i128 {
        self.coefficients
            .iter()
            .map(|(&e, &c)| {
                let p = if e >= 0 {
                    (x as i128).pow(e as u32)
                } else {
                    assert!(x.abs() == 1, "negative powers only at ±1");
                    (x as i128).pow((-e) as u32)
                };
                c as i128 * p
            })
            .sum()
    }

    /// `c_i = c_{lo+hi-i}` for every exponent.
    pub fn is_palindromic(&self) -> bool {
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return true;
        };
        self.coefficients
            .iter()
            .all(|(&e, &c)| self.coefficient(lo + hi - e) == c)
    }

    /// `p(t^-1)`.
    pub fn reciprocal(&self) -> LaurentPoly {
        LaurentPoly {
            coefficients: self.coefficients.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Dense coefficients from the lowest exponent upward.
    pub fn dense(&self) -> Vec<i64> {
        match (self.min_exponent(), self.max_exponent()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|e| self.coefficient(e)).collect(),
            _ => vec![0],
        }
    }
}

/// Space-separated coefficients of the canonical form, degree 0 first.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.canonical().dense().iter().map(i64::to_string).collect();
        f.write_str(&text.join(" "))
    }
}

impl FromStr for LaurentPoly {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let coeffs = s
            .split_whitespace()
            .map(|w| w.parse::<i64>().map_err(|e| format!("bad coefficient `{w}`: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.is_empty() {
            return Err("empty polynomial".into());
        }
        Ok(LaurentPoly::from_coefficients(0, &coeffs))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let p = LaurentPoly::from_coefficients(-1, &[-1, 1, -1]);
        assert_eq!(p.canonical(), LaurentPoly::from_coefficients(0, &[1, -1, 1]));
        assert_eq!(p.to_string(), "1 -1 1");
        assert_eq!(p.span(), 2);
        assert!(p.is_palindromic());
        assert_eq!(p.eval(-1), 3);
    }

    #[test]
    fn text_round_trip() {
        let p: LaurentPoly = "2 -5 2".parse().unwrap();
        assert_eq!(p.to_string(), "2 -5 2");
        assert_eq!(p.eval(1), -1);
        assert!("".parse::<LaurentPoly>().is_err());
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
