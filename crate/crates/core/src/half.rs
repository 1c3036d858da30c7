//! Exact half-integers stored as doubled `i64` values.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A number in `½ℤ`, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Half(i64);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HalfParseError {
    #[error("cannot parse {0:?} as a half-integer")]
    Syntax(String),
    #[error("{0:?} is not a multiple of 1/2")]
    NotHalfIntegral(String),
}

impl Half {
    pub const ZERO: Half = Half(0);
    pub const HALF: Half = Half(1);
    pub const ONE: Half = Half(2);

    pub const fn from_doubled(d: i64) -> Self {
        Half(d)
    }

    pub const fn from_int(v: i64) -> Self {
        Half(2 * v)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn abs(self) -> Self {
        Half(self.0.abs())
    }

    /// Integer value; `None` for a proper half-integer.
    pub fn to_int(self) -> Option<i64> {
        self.is_integer().then_some(self.0 / 2)
    }

    /// Largest integer not exceeding `self`.
    pub fn floor(self) -> i64 {
        self.0.div_euclid(2)
    }

    /// Fractional part, either 0 or 1/2.
    pub fn frac(self) -> Half {
        Half(self.0.rem_euclid(2))
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, o: Half) -> Half {
        Half(self.0 - o.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl From<i64> for Half {
    fn from(v: i64) -> Self {
        Half::from_int(v)
    }
}

/// Integers print plainly, proper half-integers as `p/2`.
impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Accepts `3`, `-3/2`, `1.5`, `-0.5`.
impl FromStr for Half {
    type Err = HalfParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let syntax = || HalfParseError::Syntax(s.to_string());
        let not_half = || HalfParseError::NotHalfIntegral(s.to_string());
        if let Some((p, q)) = t.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| syntax())?;
            let q: i64 = q.trim().parse().map_err(|_| syntax())?;
            return match q {
                1 => Ok(Half::from_int(p)),
                2 => Ok(Half(p)),
                -1 => Ok(Half::from_int(-p)),
                -2 => Ok(Half(-p)),
                0 => Err(syntax()),
                _ if (2 * p) % q == 0 => Ok(Half(2 * p / q)),
                _ => Err(not_half()),
            };
        }
        if let Some((ip, fp)) = t.split_once('.') {
            let neg = ip.trim_start().starts_with('-');
            let whole: i64 = if ip.is_empty() || ip == "-" || ip == "+" {
                0
            } else {
                ip.parse().map_err(|_| syntax())?
            };
            let digits = fp.trim_end_matches('0');
            if !fp.chars().all(|c| c.is_ascii_digit()) {
                return Err(syntax());
            }
            let half = match digits {
                "" => 0,
                "5" => 1,
                _ => return Err(not_half()),
            };
            let d = 2 * whole.abs() + half;
            return Ok(Half(if neg { -d } else { d }));
        }
        t.parse::<i64>().map(Half::from_int).map_err(|_| syntax())
    }
}

/// Parses a comma-separated list; an empty string yields an empty list.
pub fn parse_list(s: &str) -> Result<Vec<Half>, HalfParseError> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(str::parse).collect()
}

pub fn format_list(v: &[Half]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}
