//! Coherent local systems of highest weights for `o(∞)` and `sp(∞)`.
//!
//! A system is stored in normal form `(L^∞_v L_{v+1}^{x_{v+1}} ... ) E^m [R]`.
//! Its level `n` is the set of dominant weights `λ` of rank `n` with
//! `λ_i <= b_i`, where `b_i = m + Σ_{p >= i} x_p` (plus `½` with an `R` factor)
//! for `i > v` and `b_i = ∞` for `i <= v`. The half-integral `sp` systems are
//! the `o` spinor systems shifted by `-ε`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::branching::{bounded_branch_sp, branch_step, is_admissible, BranchError};
use crate::half::{format_list, Half};
use crate::tableaux::Partition;
use crate::weyl::Algebra;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClsError {
    #[error("a bound on the free coordinates is required (v > 0 or E^inf)")]
    BoundRequired,
    #[error("normal forms carry different algebra tags")]
    AlgMismatch,
    #[error("R*R is not a c.l.s. for sp")]
    SpinorSquare,
    #[error("invalid normal form: {0}")]
    Invalid(String),
    #[error("y must be a nonnegative half-integer, got {0}")]
    BadY(Half),
    #[error(transparent)]
    Branch(#[from] BranchError),
}

/// Zhilinskii-style normal form of a c.l.s. (or of a c.l.s.b. when `alg = sp` and `spinor`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalForm {
    pub v: u32,
    #[serde(rename = "L")]
    pub x: BTreeMap<u32, u32>,
    pub m: u32,
    #[serde(rename = "R")]
    pub spinor: bool,
    #[serde(rename = "Einf", default, skip_serializing_if = "std::ops::Not::not")]
    pub e_inf: bool,
    pub alg: Algebra,
}

/// Parameter `(x, y, Z)` of a primitive ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub x: u32,
    pub y: Half,
    #[serde(rename = "Z")]
    pub z: Partition,
}

impl Triple {
    pub fn new(x: u32, y: Half, z: Partition) -> Result<Self, ClsError> {
        if y.doubled() < 0 {
            return Err(ClsError::BadY(y));
        }
        Ok(Triple { x, y, z })
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, [{}])", self.x, self.y, self.z)
    }
}

impl NormalForm {
    pub fn new(v: u32, x: BTreeMap<u32, u32>, m: u32, spinor: bool, alg: Algebra) -> Result<Self, ClsError> {
        let nf = NormalForm { v, x, m, spinor, e_inf: false, alg };
        nf.validate()?;
        Ok(nf)
    }

    pub fn trivial(alg: Algebra) -> Self {
        NormalForm { v: 0, x: BTreeMap::new(), m: 0, spinor: false, e_inf: false, alg }
    }

    /// `E^m`.
    pub fn e_power(m: u32, alg: Algebra) -> Self {
        NormalForm { m, ..Self::trivial(alg) }
    }

    /// `L^∞_v`.
    pub fn l_inf(v: u32, alg: Algebra) -> Self {
        NormalForm { v, ..Self::trivial(alg) }
    }

    /// `L_p^k`.
    pub fn l_power(p: u32, k: u32, alg: Algebra) -> Self {
        let mut x = BTreeMap::new();
        if k > 0 && p > 0 {
            x.insert(p, k);
        }
        NormalForm { x, ..Self::trivial(alg) }
    }

    /// `R`.
    pub fn spinor(alg: Algebra) -> Self {
        NormalForm { spinor: true, ..Self::trivial(alg) }
    }

    /// `E^∞`: all integral (or, with `R`, all half-integral) weights.
    pub fn e_infinity(alg: Algebra) -> Self {
        NormalForm { e_inf: true, ..Self::trivial(alg) }
    }

    pub fn validate(&self) -> Result<(), ClsError> {
        if let Some((&p, _)) = self.x.iter().find(|(&p, _)| p <= self.v) {
            return Err(ClsError::Invalid(format!("L_{p} index must exceed v = {}", self.v)));
        }
        if self.x.values().any(|&e| e == 0) {
            return Err(ClsError::Invalid("zero L exponent".into()));
        }
        if self.e_inf && (self.v > 0 || !self.x.is_empty() || self.m > 0) {
            return Err(ClsError::Invalid("E^inf absorbs every other factor except R".into()));
        }
        Ok(())
    }

    /// Whether level sets need a cap on the first coordinates.
    pub fn has_free_coordinates(&self) -> bool {
        self.e_inf || self.v > 0
    }

    /// Largest index `p` with a factor `L_p` or `L^∞_p`.
    pub fn support(&self) -> u32 {
        self.x.keys().next_back().copied().unwrap_or(0).max(self.v)
    }

    /// Doubled upper bound on coordinate `i` (1-based) on the `o` side for spinor systems, `None` if free.
    fn coordinate_bound(&self, i: u32) -> Option<i64> {
        if self.e_inf || i <= self.v {
            return None;
        }
        let tail: u32 = self.x.range(i..).map(|(_, &e)| e).sum();
        Some(2 * (self.m + tail) as i64 + i64::from(self.spinor))
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.e_inf {
            parts.push("E^inf".to_string());
        }
        if self.v > 0 {
            parts.push(format!("L^inf_{}", self.v));
        }
        for (p, e) in &self.x {
            parts.push(if *e == 1 { format!("L_{p}") } else { format!("L_{p}^{e}") });
        }
        if self.m > 0 {
            parts.push(if self.m == 1 { "E".into() } else { format!("E^{}", self.m) });
        }
        if self.spinor {
            parts.push("R".into());
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        write!(f, "{} [{}]", parts.join(" "), self.alg)
    }
}

/// `(L^∞_x L_{x+1}^{l_1 - l_2} ... L_{x+s}^{l_s}) E^{⌊y⌋} [R]`, where `l_i` are the rows of `Z`.
///
/// The `L` exponents are consecutive row differences, so that the bound on
/// coordinate `x + i` is `y + l_i`.
pub fn nf_from_triple(t: &Triple, alg: Algebra) -> NormalForm {
    let rows = t.z.rows();
    let mut x = BTreeMap::new();
    for (i, &l) in rows.iter().enumerate() {
        let next = rows.get(i + 1).copied().unwrap_or(0);
        if l > next {
            x.insert(t.x + i as u32 + 1, (l - next) as u32);
        }
    }
    NormalForm {
        v: t.x,
        x,
        m: t.y.floor() as u32,
        spinor: !t.y.is_integer(),
        e_inf: false,
        alg,
    }
}

/// Inverse of [`nf_from_triple`] on forms without `E^∞`.
pub fn triple_from_nf(nf: &NormalForm) -> Option<Triple> {
    if nf.e_inf {
        return None;
    }
    let top = nf.support();
    let rows: Vec<usize> = (nf.v + 1..=top)
        .map(|i| nf.x.range(i..).map(|(_, &e)| e as usize).sum())
        .collect();
    let y = Half::from_doubled(2 * nf.m as i64 + i64::from(nf.spinor));
    Some(Triple { x: nf.v, y, z: Partition::from_parts(rows) })
}

/// The product `Q'Q''`: `v` takes the maximum, `L` and `E` exponents add.
///
/// Coordinate bounds add, and an infinite bound absorbs; `L_p` factors with
/// `p <= v` only bound free coordinates and disappear. For `o`, `R·R = E`.
pub fn nf_product(a: &NormalForm, b: &NormalForm) -> Result<NormalForm, ClsError> {
    if a.alg != b.alg {
        return Err(ClsError::AlgMismatch);
    }
    if a.spinor && b.spinor && a.alg == Algebra::Sp {
        return Err(ClsError::SpinorSquare);
    }
    let both = a.spinor && b.spinor;
    let spinor = a.spinor ^ b.spinor;
    if a.e_inf || b.e_inf {
        return Ok(NormalForm { spinor, ..NormalForm::e_infinity(a.alg) });
    }
    let v = a.v.max(b.v);
    let mut x = BTreeMap::new();
    for (&p, &e) in a.x.iter().chain(&b.x) {
        if p > v {
            *x.entry(p).or_insert(0) += e;
        }
    }
    Ok(NormalForm { v, x, m: a.m + b.m + u32::from(both), spinor, e_inf: false, alg: a.alg })
}

/// Same `(v, L, m, R)` data with the other tag.
pub fn clsb_shift(nf: &NormalForm) -> NormalForm {
    let alg = match nf.alg {
        Algebra::O => Algebra::Sp,
        Algebra::Sp => Algebra::O,
    };
    NormalForm { alg, ..nf.clone() }
}

/// Level `n` of the system. Free coordinates are capped by `bound` (at `bound + ½`
/// for half-integral systems).
pub fn level_set(nf: &NormalForm, n: usize, bound: Option<u32>) -> Result<BTreeSet<Vec<Half>>, ClsError> {
    nf.validate()?;
    if nf.has_free_coordinates() && bound.is_none() {
        return Err(ClsError::BoundRequired);
    }
    let sp_half = nf.alg == Algebra::Sp && nf.spinor;
    // enumeration happens on the o side for half-integral sp
    let (enum_alg, shift) = if sp_half { (Algebra::O, 2) } else { (nf.alg, 0) };
    let cap = bound.map(|b| 2 * b as i64 + i64::from(nf.spinor) + shift);
    let upper: Vec<i64> = (1..=n as u32)
        .map(|i| nf.coordinate_bound(i).unwrap_or_else(|| cap.unwrap_or(0)))
        .collect();
    let parity = i64::from(nf.spinor);
    let mut out = BTreeSet::new();
    let mut cur = Vec::with_capacity(n);
    enumerate(&upper, enum_alg, parity, &mut cur, &mut |d| {
        out.insert(d.iter().map(|&x| Half::from_doubled(x - shift)).collect());
    });
    Ok(out)
}

fn enumerate(upper: &[i64], alg: Algebra, parity: i64, cur: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
    let n = upper.len();
    let i = cur.len();
    if i == n {
        let t: Vec<Half> = cur.iter().map(|&x| Half::from_doubled(x)).collect();
        if is_admissible(&t, alg) {
            emit(cur);
        }
        return;
    }
    let last = i + 1 == n;
    let mut hi = upper[i].min(cur.last().copied().unwrap_or(i64::MAX));
    if (hi - parity).rem_euclid(2) != 0 {
        hi -= 1;
    }
    let lo = match alg {
        Algebra::Sp => 0,
        Algebra::O if last => -upper[i],
        Algebra::O => parity,
    };
    let mut v = hi;
    while v >= lo {
        cur.push(v);
        enumerate(upper, alg, parity, cur, emit);
        cur.pop();
        v -= 2;
    }
}

/// Membership without enumeration.
pub fn level_contains(nf: &NormalForm, lam: &[Half]) -> bool {
    let sp_half = nf.alg == Algebra::Sp && nf.spinor;
    let shifted: Vec<Half> = if sp_half {
        lam.iter().map(|&h| h + Half::ONE).collect()
    } else {
        lam.to_vec()
    };
    let alg = if sp_half { Algebra::O } else { nf.alg };
    if shifted.iter().any(|h| h.is_integer() == nf.spinor) || !is_admissible(&shifted, alg) {
        return false;
    }
    let n = shifted.len();
    shifted.iter().enumerate().all(|(i, h)| match nf.coordinate_bound(i as u32 + 1) {
        None => true,
        Some(b) => {
            let val = if i + 1 == n { h.abs() } else { *h };
            val.doubled() <= b
        }
    })
}

/// Restricts a level set one step down with the branching rule that fits the system.
pub fn branch_level(nf: &NormalForm, weights: &BTreeSet<Vec<Half>>) -> Result<BTreeSet<Vec<Half>>, ClsError> {
    let mut out = BTreeSet::new();
    for w in weights {
        let step = if nf.alg == Algebra::Sp && nf.spinor { bounded_branch_sp(w)? } else { branch_step(w, nf.alg)? };
        out.extend(step);
    }
    Ok(out)
}

/// Whether the level-`n` set branches exactly onto the level `n - 1` set (same cap).
pub fn is_coherent_at(nf: &NormalForm, n: usize, bound: Option<u32>) -> Result<bool, ClsError> {
    let upper = level_set(nf, n, bound)?;
    let lower = level_set(nf, n - 1, bound)?;
    Ok(branch_level(nf, &upper)? == lower)
}

/// The c.l.s. `Q(λ) = ∪_k Q(k, λ_k)` attached to an admissible tuple.
///
/// For `o` the last index compares absolute values, and weights of the other
/// parity always belong to the system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlsClosure {
    pub lambda: Vec<Half>,
    pub alg: Algebra,
}

pub fn pls_to_cls(lambda: &[Half], alg: Algebra) -> Result<PlsClosure, ClsError> {
    if !is_admissible(lambda, alg) {
        return Err(BranchError::NotAdmissible(format_list(lambda), alg).into());
    }
    Ok(PlsClosure { lambda: lambda.to_vec(), alg })
}

impl PlsClosure {
    pub fn contains(&self, mu: &[Half]) -> bool {
        let l = self.lambda.len();
        if l == 0 {
            return false;
        }
        if mu.len() < l {
            return true;
        }
        if self.alg == Algebra::O && mu.first().is_some_and(|m| m.is_integer() != self.lambda[0].is_integer()) {
            return true;
        }
        (0..l).any(|k| {
            if self.alg == Algebra::O && k + 1 == l {
                mu[k].abs() < self.lambda[k].abs()
            } else {
                mu[k] < self.lambda[k]
            }
        })
    }

    /// Admissible weights of rank `m` in the system, entries bounded by `bound` in absolute value.
    pub fn level(&self, m: usize, bound: u32) -> BTreeSet<Vec<Half>> {
        let mut out = BTreeSet::new();
        let parities: &[i64] = match self.alg {
            Algebra::Sp => &[0],
            Algebra::O => &[0, 1],
        };
        for &p in parities {
            let upper = vec![2 * bound as i64 + p; m];
            let mut cur = Vec::with_capacity(m);
            enumerate(&upper, self.alg, p, &mut cur, &mut |d| {
                let t: Vec<Half> = d.iter().map(|&x| Half::from_doubled(x)).collect();
                if self.contains(&t) {
                    out.insert(t);
                }
            });
        }
        out
    }
}
