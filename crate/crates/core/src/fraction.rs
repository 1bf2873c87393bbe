//! Exact rational thresholds.
//!
//! Every "at most ρn" style test in the solver goes through [`Fraction::admits`],
//! which compares `count * den <= num * n` in integers.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// A rational number in `[0, 1]`.
///
/// Values built with [`Fraction::new`] or parsed from text are strictly
/// positive. Derived thresholds such as `1 - γ` may reach zero, in which case
/// [`Fraction::admits`] only accepts a count of zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction(Ratio<i64>);

impl Fraction {
    pub const ONE: Fraction = Fraction(Ratio::new_raw(1, 1));

    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 || numer == 0 || numer > denom || denom > i64::MAX as u64 {
            return Err(Error::InvalidFraction(format!("{numer}/{denom}")));
        }
        Ok(Fraction(Ratio::new(numer as i64, denom as i64)))
    }

    pub(crate) fn from_ratio(r: Ratio<i64>) -> Result<Self> {
        if r < Ratio::from_integer(0) || r > Ratio::from_integer(1) {
            return Err(Error::InvalidFraction(r.to_string()));
        }
        Ok(Fraction(r))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer() as u64
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom() as u64
    }

    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }

    /// `count <= self * n`, decided in integer arithmetic.
    pub fn admits(&self, count: usize, n: usize) -> bool {
        (count as u128) * (self.denom() as u128) <= (self.numer() as u128) * (n as u128)
    }

    /// Largest integer `k` with `k <= self * n`.
    pub fn floor_of(&self, n: usize) -> usize {
        ((self.numer() as u128 * n as u128) / self.denom() as u128) as usize
    }

    pub fn half(&self) -> Fraction {
        Fraction(self.0 / 2)
    }

    /// `1 - self`.
    pub fn complement(&self) -> Fraction {
        Fraction(Ratio::from_integer(1) - self.0)
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `p/q` or a plain decimal such as `0.9996`, which is read
    /// exactly as `9996/10000`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFraction(s.to_string());
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let q: u64 = q.trim().parse().map_err(|_| bad())?;
            return Fraction::new(p, q).map_err(|_| bad());
        }
        let (int_part, frac_part) = s.split_once('.').unwrap_or((s, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().all(|c| c.is_ascii_digit())
            || !frac_part.chars().all(|c| c.is_ascii_digit())
            || frac_part.len() > 18
        {
            return Err(bad());
        }
        let denom = 10u64.pow(frac_part.len() as u32);
        let int_val: u64 = if int_part.is_empty() {
            0
        } else {
            int_part.parse().map_err(|_| bad())?
        };
        let frac_val: u64 = if frac_part.is_empty() {
            0
        } else {
            frac_part.parse().map_err(|_| bad())?
        };
        let numer = int_val
            .checked_mul(denom)
            .and_then(|v| v.checked_add(frac_val))
            .ok_or_else(bad)?;
        Fraction::new(numer, denom).map_err(|_| bad())
    }
}
