//! Triples `(x, y, Z)`, their highest weights and level sets, central
//! characters, Weyl-group equivalence, window extraction, and dimensions.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::branching::{is_admissible, is_bounded_hw_sp, Boundedness};
use crate::cls::{level_set, nf_from_triple, ClsError, Triple};
use crate::half::{format_list, Half};
use crate::symbols::{symbol_of_factored, SymbolError};
use crate::tableaux::{rs_insert_sequence, rs_of_permutation};
use crate::weyl::{Algebra, IntegralClassDecomposition, SignedPermutation, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PrimError {
    #[error("rank {got} is below the required {need}")]
    RankTooSmall { need: usize, got: usize },
    #[error("elements live in different Weyl groups")]
    GroupMismatch,
    #[error("index {0} is outside the allowed range")]
    IndexOutOfRange(i32),
    #[error("no positive interval of length >= {0}")]
    NoQualifyingInterval(usize),
    #[error("window ({0}) is not strictly decreasing and positive")]
    NotRegular(String),
    #[error("r must be even, got {0}")]
    OddR(u32),
    #[error("({0}) is not dominant for {1}")]
    NotDominant(String, Algebra),
    #[error("({0}) is not a bounded sp highest weight")]
    NotBounded(String),
    #[error("dimension {dim} is not divisible by {divisor}")]
    NotDivisible { dim: String, divisor: String },
    #[error(transparent)]
    Cls(#[from] ClsError),
    #[error(transparent)]
    Symbol(#[from] SymbolError),
}

/// Highest weight of `V(x, y, Z)(2n)`; an error while `n` is too small for it to be dominant.
pub fn highest_weight_v(t: &Triple, n: usize, alg: Algebra) -> Result<Weight, PrimError> {
    let rows = t.z.rows();
    let x = t.x as usize;
    if n < x + rows.len() {
        return Err(PrimError::RankTooSmall { need: x + rows.len(), got: n });
    }
    let fy = t.y.frac();
    let (head, tail) = match alg {
        Algebra::O => (Half::from_int(n as i64) + fy, t.y),
        Algebra::Sp => (Half::from_int(n as i64) - fy, t.y - fy - fy),
    };
    let coords = (0..n)
        .map(|i| {
            if i < x {
                head
            } else if i < x + rows.len() {
                Half::from_int(rows[i - x] as i64) + tail
            } else {
                tail
            }
        })
        .collect::<Vec<_>>();
    if coords.windows(2).any(|p| p[0] < p[1]) {
        return Err(PrimError::NotDominant(format_list(&coords), alg));
    }
    Ok(Weight::new(coords))
}

fn ser_rationals<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

/// Casimir eigenvalues `g_1(λ), ..., g_n(λ)`, exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CentralCharacter {
    pub n: usize,
    #[serde(serialize_with = "ser_rationals")]
    pub values: Vec<BigRational>,
}

/// `g_s(λ) = (-1)^s Σ_{i_1 <= ... <= i_s} Π_j ((λ_{i_j} + n - i_j + 1)^2 - (i_j + j - 1)^2)`.
///
/// These are factorial complete symmetric functions in the squares
/// `(λ_i + n - i + 1)^2`, hence invariant under signed permutations of the
/// shifted coordinates. [`central_character_as_displayed`] keeps the other
/// offset `(i_j - j + 1)^2`, which agrees for `s = 1` only.
pub fn central_character(lambda: &Weight) -> CentralCharacter {
    casimir(lambda, |i, j| i + j - 1)
}

/// Same sum with offsets `(i_j - j + 1)^2`; not symmetric for `s >= 2`.
pub fn central_character_as_displayed(lambda: &Weight) -> CentralCharacter {
    casimir(lambda, |i, j| i - j + 1)
}

fn casimir(lambda: &Weight, offset: fn(i64, i64) -> i64) -> CentralCharacter {
    let n = lambda.rank();
    // a_i doubled, so squares carry a factor 4
    let a2: Vec<BigInt> = (1..=n)
        .map(|i| {
            let d = lambda.coords[i - 1].doubled() + 2 * (n as i64 - i as i64 + 1);
            BigInt::from(d) * BigInt::from(d)
        })
        .collect();
    let term = |i: usize, j: usize| -> BigInt {
        let c = 2 * offset(i as i64, j as i64);
        &a2[i - 1] - BigInt::from(c * c)
    };
    let mut values = Vec::with_capacity(n);
    // prefix sums over chains of length s - 1, scaled by 4^{s-1}
    let mut prev: Vec<BigInt> = vec![BigInt::one(); n + 1];
    let mut scale = BigInt::one();
    for s in 1..=n {
        scale *= 4;
        let mut cur = vec![BigInt::zero(); n + 1];
        for i in 1..=n {
            cur[i] = &cur[i - 1] + &prev[i] * term(i, s);
        }
        let sign = if s % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        values.push(BigRational::new(sign * &cur[n], scale.clone()));
        prev = cur;
    }
    CentralCharacter { n, values }
}

/// Outcome of comparing two level sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Separation {
    Separated {
        n: usize,
        bound: u32,
        weight: String,
        /// 1 or 2: which triple's level set contains the weight.
        member_of: u8,
    },
    Indistinguishable { n: usize, bound: u32 },
}

fn symmetric_difference_witness(
    t1: &Triple,
    t2: &Triple,
    n: usize,
    bound: u32,
    alg: Algebra,
) -> Result<Option<(Vec<Half>, u8)>, PrimError> {
    if n == 0 {
        return Err(PrimError::RankTooSmall { need: 1, got: 0 });
    }
    let s1 = level_set(&nf_from_triple(t1, alg), n, Some(bound))?;
    let s2 = level_set(&nf_from_triple(t2, alg), n, Some(bound))?;
    if let Some(w) = s1.difference(&s2).next() {
        return Ok(Some((w.clone(), 1)));
    }
    Ok(s2.difference(&s1).next().map(|w| (w.clone(), 2)))
}

/// Whether the two level sets agree at rank `n` within the cap `bound`.
pub fn ideals_equal_at_level(t1: &Triple, t2: &Triple, n: usize, bound: u32, alg: Algebra) -> Result<bool, PrimError> {
    Ok(symmetric_difference_witness(t1, t2, n, bound, alg)?.is_none())
}

/// Searches `1 <= n <= nmax`, `0 <= B <= bmax` for a weight in exactly one level set.
pub fn separate(t1: &Triple, t2: &Triple, nmax: usize, bmax: u32, alg: Algebra) -> Result<Separation, PrimError> {
    for n in 1..=nmax {
        for bound in 0..=bmax {
            if let Some((w, member_of)) = symmetric_difference_witness(t1, t2, n, bound, alg)? {
                return Ok(Separation::Separated { n, bound, weight: format_list(&w), member_of });
            }
        }
    }
    Ok(Separation::Indistinguishable { n: nmax, bound: bmax })
}

/// Equality of insertion tableaux.
pub fn weyl_equiv(w1: &SignedPermutation, w2: &SignedPermutation) -> Result<bool, PrimError> {
    if w1.rank() != w2.rank() || w1.group_type() != w2.group_type() {
        return Err(PrimError::GroupMismatch);
    }
    Ok(rs_of_permutation(w1).0 == rs_of_permutation(w2).0)
}

/// Per-factor comparison through the symbols of the integral and half-integral factors.
pub fn weyl_equiv_factored(
    w1: &SignedPermutation,
    w2: &SignedPermutation,
    decomposition: &IntegralClassDecomposition,
) -> Result<bool, PrimError> {
    if w1.rank() != w2.rank() || w1.group_type() != w2.group_type() {
        return Err(PrimError::GroupMismatch);
    }
    Ok(symbol_of_factored(w1, decomposition)? == symbol_of_factored(w2, decomposition)?)
}

/// The eight sufficient conditions on `v = w^{-1}` for `s_{-i,-i+1} w ~ w`,
/// evaluated separately; `-n + 1 <= i <= -1`.
pub fn tau_conditions(w: &SignedPermutation, i: i32) -> Result<[bool; 8], PrimError> {
    let n = w.rank() as i32;
    if i < -n + 1 || i > -1 {
        return Err(PrimError::IndexOutOfRange(i));
    }
    let v = w.inverse();
    let at = |k: i32| v.apply(k);
    let mid = -n < i && i < -1;
    let low = -n + 1 < i && i < 0;
    let low_mid = -n + 1 < i && i < -1;
    Ok([
        mid && at(i - 1) > at(i + 1) && at(i + 1) > at(i) && at(i) > 0,
        mid && at(i) > at(i + 1) && at(i + 1) > at(i - 1) && at(i - 1) > 0,
        low && at(i - 1) > at(i - 2) && at(i - 2) > at(i) && at(i) > 0,
        low && at(i) > at(i - 2) && at(i - 2) > at(i - 1) && at(i - 1) > 0,
        mid && at(i) > 0 && at(i - 1) < 0 && at(i - 1) > at(i + 1),
        mid && at(i) < 0 && at(i - 1) > 0 && at(i + 1) > at(i),
        low_mid && at(i) > 0 && at(i - 1) < 0 && at(i - 2) > at(i),
        low_mid && at(i) < 0 && at(i - 1) > 0 && at(i - 2) > at(i - 1),
    ])
}

/// Whether any of the eight conditions holds.
pub fn tau_move_applies(w: &SignedPermutation, i: i32) -> Result<bool, PrimError> {
    Ok(tau_conditions(w, i)?.iter().any(|&c| c))
}

/// `s_{-i,-i+1} w`, the reflection in `ε_{-i} - ε_{-i+1}` applied on the left.
pub fn tau_move(w: &SignedPermutation, i: i32) -> Result<SignedPermutation, PrimError> {
    let n = w.rank() as i32;
    if i < -n + 1 || i > -1 {
        return Err(PrimError::IndexOutOfRange(i));
    }
    let s = SignedPermutation::simple(w.rank(), w.group_type(), (-i) as usize).map_err(|_| PrimError::IndexOutOfRange(i))?;
    s.compose(w).map_err(|_| PrimError::GroupMismatch)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WindowResult {
    /// Entries erased to the left of the interval.
    pub k: usize,
    /// Entries erased to the right of the interval.
    pub m: usize,
    pub window: Vec<i64>,
    pub r: u32,
    pub f: i64,
}

/// Locates the leftmost maximal positive run of length at least
/// `⌊(n - 3r/2)/(r + 1)⌋` (and at least 1), rearranges it as the rows of its
/// insertion tableau, shortest first, and drops the first `r/2` entries.
/// Here `n = #h + r/2`.
pub fn extract_dominant_window(h: &[i64], r: u32) -> Result<WindowResult, PrimError> {
    if r % 2 != 0 {
        return Err(PrimError::OddR(r));
    }
    let half_r = (r / 2) as i64;
    let n = h.len() as i64 + half_r;
    let f_raw = (n - 3 * half_r).div_euclid(r as i64 + 1);
    let threshold = f_raw.max(1) as usize;
    let mut start = 0;
    let mut found = None;
    while start < h.len() {
        if h[start] <= 0 {
            start += 1;
            continue;
        }
        let mut end = start;
        while end < h.len() && h[end] > 0 {
            end += 1;
        }
        if end - start >= threshold {
            found = Some((start, end));
            break;
        }
        start = end;
    }
    let (a, b) = found.ok_or(PrimError::NoQualifyingInterval(threshold))?;
    let (y0, _) = rs_insert_sequence(&h[a..b]).map_err(|_| PrimError::NoQualifyingInterval(threshold))?;
    let mut rows = y0.rows.clone();
    rows.sort_by_key(Vec::len);
    let arranged: Vec<i64> = rows.into_iter().flatten().map(i64::from).collect();
    let window: Vec<i64> = arranged.into_iter().skip(half_r as usize).collect();
    if window.is_empty() || window.windows(2).any(|p| p[0] <= p[1]) || window.iter().any(|&x| x <= 0) {
        return Err(PrimError::NotRegular(window.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")));
    }
    Ok(WindowResult { k: a, m: h.len() - b, window, r, f: f_raw - half_r })
}

fn positive_roots(alg: Algebra, n: usize) -> Vec<Vec<i64>> {
    let mut roots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut a = vec![0; n];
            a[i] = 1;
            a[j] = -1;
            roots.push(a.clone());
            a[j] = 1;
            roots.push(a);
        }
        if alg == Algebra::Sp {
            let mut a = vec![0; n];
            a[i] = 2;
            roots.push(a);
        }
    }
    roots
}

/// Weyl's dimension formula `Π_{α>0} (λ + ρ, α) / (ρ, α)`.
pub fn weyl_dimension(lambda: &Weight, alg: Algebra) -> Result<BigInt, PrimError> {
    if !is_admissible(&lambda.coords, alg) {
        return Err(PrimError::NotDominant(format_list(&lambda.coords), alg));
    }
    let n = lambda.rank();
    let rho = Weight::rho(alg, n).doubled();
    let lr: Vec<i64> = lambda.doubled().iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut out = BigRational::one();
    for alpha in positive_roots(alg, n) {
        let num: i64 = alpha.iter().zip(&lr).map(|(a, b)| a * b).sum();
        let den: i64 = alpha.iter().zip(&rho).map(|(a, b)| a * b).sum();
        out *= BigRational::new(BigInt::from(num), BigInt::from(den));
    }
    debug_assert!(out.is_integer() && out.is_positive());
    Ok(out.to_integer())
}

/// `dim_{o(2n)} L(λ + ε) / 2^{n-1}` for a bounded infinite-dimensional `sp(2n)` weight.
pub fn degree_of_bounded(lambda: &Weight) -> Result<BigInt, PrimError> {
    if lambda.rank() == 0 || is_bounded_hw_sp(&lambda.coords) != Boundedness::BoundedInfinite {
        return Err(PrimError::NotBounded(format_list(&lambda.coords)));
    }
    let n = lambda.rank();
    let shifted = lambda.add(&Weight::epsilon(n)).expect("same rank");
    let dim = weyl_dimension(&shifted, Algebra::O)?;
    let divisor = BigInt::one() << (n - 1);
    if !(&dim % &divisor).is_zero() {
        return Err(PrimError::NotDivisible { dim: dim.to_string(), divisor: divisor.to_string() });
    }
    Ok(dim / divisor)
}

/// Distinct central characters over a level set; a coarse fingerprint of the ideal.
pub fn central_character_set(t: &Triple, n: usize, bound: u32, alg: Algebra) -> Result<BTreeSet<Vec<String>>, PrimError> {
    let set = level_set(&nf_from_triple(t, alg), n, Some(bound))?;
    Ok(set
        .into_iter()
        .map(|w| central_character(&Weight::new(w)).values.iter().map(ToString::to_string).collect())
        .collect())
}
