//! Two-row symbols of types C and D.
//!
//! A type C symbol of rank `n` has rows `α_1 < ... < α_{m+1}` and
//! `β_1 < ... < β_m` with `Σα + Σβ = n + m²`; type D has `m` entries in each
//! row and `Σα + Σβ = n + m(m-1)`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tableaux::{p_of_w, Partition};
use crate::weyl::{ClassKind, GroupType, IntegralClassDecomposition, SignedPermutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymbolError {
    #[error("symbol rows must be strictly increasing")]
    NotIncreasing,
    #[error("row lengths {top} and {bottom} do not fit type {ty}")]
    RowLengths { ty: GroupType, top: usize, bottom: usize },
    #[error("entry sum {found} differs from the required {expected}")]
    InvariantViolation { expected: u64, found: u64 },
    #[error("partition {0} does not split into a symbol of type {1}")]
    ParityMismatch(Partition, GroupType),
    #[error("element does not preserve the integral classes")]
    DecompositionUnavailable,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symbol {
    #[serde(rename = "type")]
    pub ty: GroupType,
    pub n: usize,
    pub top: Vec<u32>,
    pub bottom: Vec<u32>,
}

impl Symbol {
    pub fn new(ty: GroupType, n: usize, top: Vec<u32>, bottom: Vec<u32>) -> Result<Self, SymbolError> {
        let s = Symbol { ty, n, top, bottom };
        s.validate()?;
        Ok(s)
    }

    /// The rank-0 symbol: `((0),())` in type C, `((),())` in type D.
    pub fn trivial(ty: GroupType) -> Self {
        let top = if ty == GroupType::C { vec![0] } else { vec![] };
        Symbol { ty, n: 0, top, bottom: vec![] }
    }

    pub fn m(&self) -> usize {
        self.bottom.len()
    }

    fn required_sum(&self) -> u64 {
        let (n, m) = (self.n as u64, self.m() as u64);
        match self.ty {
            GroupType::C => n + m * m,
            GroupType::D => n + m * m.saturating_sub(1),
        }
    }

    pub fn entry_sum(&self) -> u64 {
        self.top.iter().chain(&self.bottom).map(|&v| v as u64).sum()
    }

    pub fn validate(&self) -> Result<(), SymbolError> {
        let increasing = |r: &[u32]| r.windows(2).all(|p| p[0] < p[1]);
        if !increasing(&self.top) || !increasing(&self.bottom) {
            return Err(SymbolError::NotIncreasing);
        }
        let extra = if self.ty == GroupType::C { 1 } else { 0 };
        if self.top.len() != self.bottom.len() + extra {
            return Err(SymbolError::RowLengths { ty: self.ty, top: self.top.len(), bottom: self.bottom.len() });
        }
        let (expected, found) = (self.required_sum(), self.entry_sum());
        if expected != found {
            return Err(SymbolError::InvariantViolation { expected, found });
        }
        Ok(())
    }

    /// Inverse of stripping: prepend `0` to both rows and raise the rest by one.
    pub fn shifted(&self) -> Symbol {
        let lift = |r: &[u32]| std::iter::once(0).chain(r.iter().map(|v| v + 1)).collect();
        Symbol { ty: self.ty, n: self.n, top: lift(&self.top), bottom: lift(&self.bottom) }
    }

    /// Strips leading `(0, 0)` pairs, shifting the remaining entries down.
    pub fn strip(&self) -> Result<Symbol, SymbolError> {
        self.validate()?;
        let mut s = self.clone();
        while s.top.first() == Some(&0) && s.bottom.first() == Some(&0) {
            s.top = s.top[1..].iter().map(|v| v - 1).collect();
            s.bottom = s.bottom[1..].iter().map(|v| v - 1).collect();
        }
        Ok(s)
    }

    /// `strip`, and in type D also put the lexicographically smaller row on top.
    ///
    /// `ν_D` reads the two rows differently, so it is invariant under `strip` only.
    pub fn normalize(&self) -> Result<Symbol, SymbolError> {
        let mut s = self.strip()?;
        if s.ty == GroupType::D && s.bottom < s.top {
            std::mem::swap(&mut s.top, &mut s.bottom);
        }
        Ok(s)
    }

    pub fn is_special(&self) -> bool {
        let (a, b) = (&self.top, &self.bottom);
        let interleaves = |lo: &[u32], hi: &[u32]| {
            (0..hi.len()).all(|i| lo[i] <= hi[i] && lo.get(i + 1).is_none_or(|&next| hi[i] <= next))
        };
        match self.ty {
            GroupType::C => interleaves(a, b),
            GroupType::D => interleaves(b, a) || interleaves(a, b),
        }
    }

    /// The partition `ν_C` or `ν_D` of `2n`, largest part first.
    pub fn nu(&self) -> Partition {
        let mut merged: Vec<u64> = match self.ty {
            GroupType::C => self
                .top
                .iter()
                .map(|&a| 2 * a as u64)
                .chain(self.bottom.iter().map(|&b| 2 * b as u64 + 1))
                .collect(),
            GroupType::D => self
                .top
                .iter()
                .map(|&a| 2 * a as u64 + 1)
                .chain(self.bottom.iter().map(|&b| 2 * b as u64))
                .collect(),
        };
        merged.sort_unstable();
        Partition::from_parts(merged.iter().enumerate().map(|(j, &v)| (v - j as u64) as usize).collect())
    }

    /// All entries of both rows, sorted.
    pub fn entry_multiset(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.top.iter().chain(&self.bottom).copied().collect();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{}{}(({}),({}))", self.ty, self.n, row(&self.top), row(&self.bottom))
    }
}

/// Builds the symbol whose `ν` is the given partition of `2n`.
pub fn symbol_of_partition(p: &Partition, ty: GroupType) -> Result<Symbol, SymbolError> {
    let n = p.size() / 2;
    let mut q: Vec<usize> = p.rows().iter().rev().copied().collect();
    let want_odd = ty == GroupType::C;
    if (q.len() % 2 == 1) != want_odd {
        q.insert(0, 0);
    }
    let mut evens = Vec::new();
    let mut odds = Vec::new();
    for (i, &qi) in q.iter().enumerate() {
        let mu = (qi + i) as u32;
        if mu % 2 == 0 {
            evens.push(mu);
        } else {
            odds.push(mu);
        }
    }
    let (top, bottom): (Vec<u32>, Vec<u32>) = match ty {
        GroupType::C => (evens.iter().map(|e| e / 2).collect(), odds.iter().map(|o| (o - 1) / 2).collect()),
        GroupType::D => (odds.iter().map(|o| (o - 1) / 2).collect(), evens.iter().map(|e| e / 2).collect()),
    };
    Symbol::new(ty, n, top, bottom).map_err(|_| SymbolError::ParityMismatch(p.clone(), ty))
}

/// `Λ(w)` from the shape `p(w)`.
pub fn symbol_of_w(w: &SignedPermutation) -> Result<Symbol, SymbolError> {
    symbol_of_partition(&p_of_w(w), w.group_type())
}

/// Restriction of `w` to the positive indices of a class, relabeled to `1..r`.
fn restrict(w: &SignedPermutation, positive: &[i32], ty: GroupType) -> Result<SignedPermutation, SymbolError> {
    let images = positive
        .iter()
        .map(|&a| {
            let v = w.apply(a);
            positive
                .iter()
                .position(|&b| b == v.abs())
                .map(|k| v.signum() * (k as i32 + 1))
                .ok_or(SymbolError::DecompositionUnavailable)
        })
        .collect::<Result<Vec<_>, _>>()?;
    SignedPermutation::from_images(images, ty).map_err(|_| SymbolError::DecompositionUnavailable)
}

/// `(Λ(w_1), Λ(w_2))` for the integral and half-integral factors.
pub fn symbol_of_factored(
    w: &SignedPermutation,
    decomposition: &IntegralClassDecomposition,
) -> Result<(Symbol, Symbol), SymbolError> {
    if w.rank() != decomposition.coords.len() {
        return Err(SymbolError::DecompositionUnavailable);
    }
    let integral_ty = decomposition.alg.weyl_type();
    let mut first = Symbol::trivial(integral_ty);
    let mut second = Symbol::trivial(GroupType::D);
    for class in &decomposition.classes {
        let pos = class.positive_indices();
        match class.kind {
            ClassKind::Integral => first = symbol_of_w(&restrict(w, &pos, integral_ty)?)?,
            ClassKind::HalfIntegral => second = symbol_of_w(&restrict(w, &pos, GroupType::D)?)?,
            ClassKind::Other => {
                restrict(w, &pos, GroupType::C)?;
            }
        }
    }
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{integral_class_decomposition, Algebra};
    use num_rational::Rational64;

    fn c(n: usize, top: &[u32], bottom: &[u32]) -> Symbol {
        Symbol::new(GroupType::C, n, top.to_vec(), bottom.to_vec()).unwrap()
    }

    #[test]
    fn normalization() {
        let s = c(2, &[0, 2], &[1]);
        assert_eq!(s.normalize().unwrap(), s);
        let one = c(1, &[1], &[]);
        assert_eq!(one.shifted(), c(1, &[0, 2], &[0]));
        assert_eq!(one.shifted().normalize().unwrap(), one);
        let d = Symbol::new(GroupType::D, 2, vec![2], vec![0]).unwrap();
        assert_eq!(d.normalize().unwrap(), Symbol::new(GroupType::D, 2, vec![0], vec![2]).unwrap());
        assert!(matches!(
            Symbol::new(GroupType::C, 2, vec![0, 1], vec![0]),
            Err(SymbolError::InvariantViolation { .. })
        ));
    }

    #[test]
    fn specialness() {
        assert!(c(1, &[1], &[]).is_special());
        assert!(c(2, &[0, 2], &[1]).is_special());
        assert!(!c(6, &[0, 3], &[4]).is_special());
    }

    #[test]
    fn nu_examples() {
        assert_eq!(c(1, &[1], &[]).nu().rows(), &[2]);
        assert_eq!(c(1, &[1], &[]).shifted().nu().rows(), &[2]);
        assert_eq!(c(1, &[0, 1], &[1]).nu().rows(), &[1, 1]);
    }

    #[test]
    fn rank_one_elements() {
        let id = SignedPermutation::identity(1, GroupType::C);
        assert_eq!(symbol_of_w(&id).unwrap(), c(1, &[0, 1], &[1]));
        let s = SignedPermutation::simple(1, GroupType::C, 1).unwrap();
        assert_eq!(symbol_of_w(&s).unwrap(), c(1, &[1], &[]));
    }

    #[test]
    fn round_trip_small_groups() {
        for (n, ty) in [(2, GroupType::C), (2, GroupType::D), (3, GroupType::C), (3, GroupType::D)] {
            for w in SignedPermutation::all_elements(n, ty) {
                let s = symbol_of_w(&w).unwrap();
                assert_eq!(s.nu(), p_of_w(&w), "{w} {s}");
                assert_eq!(s.strip().unwrap().nu(), s.nu());
                if ty == GroupType::C {
                    assert_eq!(s.normalize().unwrap(), s.strip().unwrap());
                }
            }
        }
    }

    #[test]
    fn factored_symbols() {
        let r = |p: i64, q: i64| Rational64::new(p, q);
        let w = SignedPermutation::simple(2, GroupType::C, 2).unwrap();
        let dec = integral_class_decomposition(&[r(1, 1), r(0, 1)], Algebra::Sp);
        let (a, b) = symbol_of_factored(&w, &dec).unwrap();
        assert_eq!(a, symbol_of_w(&w).unwrap());
        assert_eq!(b, Symbol::trivial(GroupType::D));

        let half = integral_class_decomposition(&[r(3, 2), r(1, 2)], Algebra::Sp);
        let wd = SignedPermutation::from_images(vec![-1, -2], GroupType::C).unwrap();
        let (a, b) = symbol_of_factored(&wd, &half).unwrap();
        assert_eq!(a, Symbol::trivial(GroupType::C));
        assert_eq!(b, symbol_of_w(&SignedPermutation::from_images(vec![-1, -2], GroupType::D).unwrap()).unwrap());

        let mixed = integral_class_decomposition(&[r(1, 1), r(1, 2)], Algebra::Sp);
        let id = SignedPermutation::identity(2, GroupType::C);
        let (a, b) = symbol_of_factored(&id, &mixed).unwrap();
        assert_eq!(a, symbol_of_w(&SignedPermutation::identity(1, GroupType::C)).unwrap());
        assert_eq!(b, symbol_of_w(&SignedPermutation::identity(1, GroupType::D)).unwrap());
        let swap = SignedPermutation::simple(2, GroupType::C, 1).unwrap();
        assert_eq!(symbol_of_factored(&swap, &mixed), Err(SymbolError::DecompositionUnavailable));
    }
}
