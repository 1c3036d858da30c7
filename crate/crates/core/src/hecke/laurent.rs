//! Laurent polynomials in `q^{1/2}` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Sparse map from exponent (in units of `1/2`) to coefficient; no zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentHalf {
    terms: BTreeMap<i64, i64>,
}

impl LaurentHalf {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c · q^{e/2}`.
    pub fn monomial(half_exp: i64, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(half_exp, c);
        }
        LaurentHalf { terms }
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(2 * k, 1)
    }

    /// From coefficients of `1, q, q^2, ...`.
    pub fn from_q_poly(coeffs: &[i64]) -> Self {
        let mut out = Self::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            out.add_term(2 * k as i64, c);
        }
        out
    }

    pub fn add_term(&mut self, half_exp: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(half_exp).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&half_exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, half_exp: i64) -> i64 {
        self.terms.get(&half_exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// Largest exponent in half-units.
    pub fn max_half_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `q^{1/2} -> q^{-1/2}`.
    pub fn bar(&self) -> Self {
        LaurentHalf { terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    /// Multiplies by `q^{e/2}`.
    pub fn shift(&self, half_exp: i64) -> Self {
        LaurentHalf { terms: self.terms.iter().map(|(&e, &c)| (e + half_exp, c)).collect() }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        LaurentHalf { terms: self.terms.iter().map(|(&e, &c)| (e, c * k)).collect() }
    }

    /// Coefficients in `ℤ[q]` if every exponent is a nonnegative integer power of `q`.
    pub fn as_q_poly(&self) -> Option<Vec<i64>> {
        if self.terms.keys().any(|&e| e < 0 || e % 2 != 0) {
            return None;
        }
        let top = self.max_half_exp().map_or(0, |e| e / 2 + 1) as usize;
        let mut out = vec![0; top];
        for (&e, &c) in &self.terms {
            out[(e / 2) as usize] = c;
        }
        Some(out)
    }
}

impl Add<&LaurentHalf> for &LaurentHalf {
    type Output = LaurentHalf;
    fn add(self, o: &LaurentHalf) -> LaurentHalf {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl AddAssign<&LaurentHalf> for LaurentHalf {
    fn add_assign(&mut self, o: &LaurentHalf) {
        for (&e, &c) in &o.terms {
            self.add_term(e, c);
        }
    }
}

impl Sub<&LaurentHalf> for &LaurentHalf {
    type Output = LaurentHalf;
    fn sub(self, o: &LaurentHalf) -> LaurentHalf {
        self + &(-o)
    }
}

impl Neg for &LaurentHalf {
    type Output = LaurentHalf;
    fn neg(self) -> LaurentHalf {
        self.scale(-1)
    }
}

impl Mul<&LaurentHalf> for &LaurentHalf {
    type Output = LaurentHalf;
    fn mul(self, o: &LaurentHalf) -> LaurentHalf {
        let mut out = LaurentHalf::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &o.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&e, &c) in self.terms.iter().rev() {
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let var = match e {
                0 => String::new(),
                2 => "q".into(),
                e if e % 2 == 0 => format!("q^{}", e / 2),
                e => format!("q^({e}/2)"),
            };
            let body = match (mag, var.is_empty()) {
                (_, true) => mag.to_string(),
                (1, false) => var,
                (_, false) => format!("{mag}{var}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}
