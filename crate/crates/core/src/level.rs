//! Exact certainty levels in `[0, 1]`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::Error;

/// A rational number in `[0, 1]`. Comparisons are exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Level(Ratio<i64>);

impl Level {
    pub const ZERO: Level = Level(Ratio::new_raw(0, 1));
    pub const ONE: Level = Level(Ratio::new_raw(1, 1));

    pub fn new(numer: i64, denom: i64) -> Result<Level, Error> {
        if denom == 0 {
            return Err(Error::BadLevel(format!("{numer}/{denom}")));
        }
        Level::from_ratio(Ratio::new(numer, denom))
    }

    pub fn from_ratio(r: Ratio<i64>) -> Result<Level, Error> {
        if r < Ratio::zero() || r > Ratio::one() {
            return Err(Error::LevelOutOfRange(r.to_string()));
        }
        Ok(Level(r))
    }

    /// Panicking constructor for literals known to be in range.
    pub fn frac(numer: i64, denom: i64) -> Level {
        Level::new(numer, denom).expect("level literal in [0, 1]")
    }

    pub fn ratio(self) -> Ratio<i64> {
        self.0
    }

    /// `1 - self`.
    pub fn complement(self) -> Level {
        Level(Ratio::one() - self.0)
    }

    pub fn is_zero(self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(self) -> bool {
        self.0.is_one()
    }

    /// Maximum of the iterator, `0` when empty.
    pub fn sup(levels: impl IntoIterator<Item = Level>) -> Level {
        levels.into_iter().max().unwrap_or(Level::ZERO)
    }

    /// Minimum of the iterator, `1` when empty.
    pub fn inf(levels: impl IntoIterator<Item = Level>) -> Level {
        levels.into_iter().min().unwrap_or(Level::ONE)
    }
}

impl Default for Level {
    fn default() -> Self {
        Level::ZERO
    }
}

/// Renders as `0`, `1` or `p/q` in lowest terms.
impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Accepts `p/q`, integers and finite decimals such as `0.25`.
impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text = s.trim();
        let bad = || Error::BadLevel(text.to_string());
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());

        if let Some((n, d)) = text.split_once('/') {
            let (n, d) = (n.trim(), d.trim());
            if !digits(n) || !digits(d) {
                return Err(bad());
            }
            let numer: i64 = n.parse().map_err(|_| bad())?;
            let denom: i64 = d.parse().map_err(|_| bad())?;
            return Level::new(numer, denom);
        }
        if let Some((int, frac)) = text.split_once('.') {
            if !(int.is_empty() || digits(int)) || !digits(frac) || frac.len() > 15 {
                return Err(bad());
            }
            let int: i64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
            let scale = 10i64.pow(frac.len() as u32);
            let frac: i64 = frac.parse().map_err(|_| bad())?;
            return Level::from_ratio(Ratio::new(int * scale + frac, scale));
        }
        if !digits(text) {
            return Err(bad());
        }
        let n: i64 = text.parse().map_err(|_| bad())?;
        Level::from_ratio(Ratio::from_integer(n))
    }
}
