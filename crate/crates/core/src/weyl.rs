//! Weyl groups of types C_n and D_n as signed permutations.
//!
//! An element `w` is stored through its values `w(1), ..., w(n)`; the values on
//! negative indices follow from `w(-i) = -w(i)`. Simple reflections are indexed
//! `1..=n`: `s_k` for `k < n` swaps `k` and `k+1`; `s_n` negates `n` in type C and
//! sends `n-1 -> -n`, `n -> -(n-1)` in type D. The positive roots are
//! `e_i - e_j`, `e_i + e_j` (`i < j`) and, in type C, `2e_i`, so that dominant
//! weights are weakly decreasing.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::half::Half;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupType {
    C,
    D,
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupType::C => "C",
            GroupType::D => "D",
        })
    }
}

/// The two classical series handled throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Algebra {
    #[serde(rename = "o")]
    O,
    #[serde(rename = "sp")]
    Sp,
}

impl Algebra {
    pub fn weyl_type(self) -> GroupType {
        match self {
            Algebra::O => GroupType::D,
            Algebra::Sp => GroupType::C,
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::O => "o",
            Algebra::Sp => "sp",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WeylError {
    #[error("one-line data is not a bijection of {{±1..±n}}")]
    NotABijection,
    #[error("w(-{0}) must equal -w({0})")]
    AntisymmetryViolated(usize),
    #[error("type D elements need an even number of sign changes")]
    OddSignChanges,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("group type mismatch")]
    TypeMismatch,
    #[error("simple reflection index {0} out of range")]
    BadGenerator(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
    ty: GroupType,
}

impl SignedPermutation {
    /// Builds an element from its one-line notation `w(-n), ..., w(-1), w(1), ..., w(n)`.
    pub fn from_one_line(one_line: &[i32], ty: GroupType) -> Result<Self, WeylError> {
        if one_line.len() % 2 != 0 {
            return Err(WeylError::NotABijection);
        }
        let n = one_line.len() / 2;
        let images: Vec<i32> = one_line[n..].to_vec();
        for i in 1..=n {
            if one_line[n - i] != -one_line[n + i - 1] {
                return Err(WeylError::AntisymmetryViolated(i));
            }
        }
        Self::from_images(images, ty)
    }

    /// Builds an element from `w(1), ..., w(n)`.
    pub fn from_images(images: Vec<i32>, ty: GroupType) -> Result<Self, WeylError> {
        let n = images.len() as i32;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v == 0 || v.abs() > n || seen[(v.abs() - 1) as usize] {
                return Err(WeylError::NotABijection);
            }
            seen[(v.abs() - 1) as usize] = true;
        }
        let w = SignedPermutation { images, ty };
        if ty == GroupType::D && w.sign_changes() % 2 == 1 {
            return Err(WeylError::OddSignChanges);
        }
        Ok(w)
    }

    pub fn identity(n: usize, ty: GroupType) -> Self {
        SignedPermutation { images: (1..=n as i32).collect(), ty }
    }

    /// The simple reflection `s_k`, `1 <= k <= n`.
    pub fn simple(n: usize, ty: GroupType, k: usize) -> Result<Self, WeylError> {
        if k == 0 || k > n || (ty == GroupType::D && n == 1) {
            return Err(WeylError::BadGenerator(k));
        }
        let mut images: Vec<i32> = (1..=n as i32).collect();
        if k < n {
            images.swap(k - 1, k);
        } else if ty == GroupType::C {
            images[n - 1] = -(n as i32);
        } else {
            images[n - 2] = -(n as i32);
            images[n - 1] = -(n as i32 - 1);
        }
        Ok(SignedPermutation { images, ty })
    }

    /// All simple reflections in index order.
    pub fn simple_reflections(n: usize, ty: GroupType) -> Vec<Self> {
        let count = if ty == GroupType::D && n == 1 { 0 } else { n };
        (1..=count).map(|k| Self::simple(n, ty, k).expect("valid index")).collect()
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn group_type(&self) -> GroupType {
        self.ty
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// Value on a signed index `i` in `±1..±n`.
    pub fn apply(&self, i: i32) -> i32 {
        if i > 0 {
            self.images[(i - 1) as usize]
        } else {
            -self.images[(-i - 1) as usize]
        }
    }

    /// `w(-n), ..., w(-1), w(1), ..., w(n)`.
    pub fn one_line(&self) -> Vec<i32> {
        let mut out: Vec<i32> = self.images.iter().rev().map(|v| -v).collect();
        out.extend_from_slice(&self.images);
        out
    }

    pub fn sign_changes(&self) -> usize {
        self.images.iter().filter(|&&v| v < 0).count()
    }

    /// `self ∘ other`, i.e. `other` acts first.
    pub fn compose(&self, other: &Self) -> Result<Self, WeylError> {
        if self.rank() != other.rank() {
            return Err(WeylError::RankMismatch(self.rank(), other.rank()));
        }
        let images = other.images.iter().map(|&v| self.apply(v)).collect();
        let ty = if self.ty == other.ty { self.ty } else { GroupType::C };
        Ok(SignedPermutation { images, ty })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.rank()];
        for (i, &v) in self.images.iter().enumerate() {
            let sign = v.signum();
            images[(v.abs() - 1) as usize] = sign * (i as i32 + 1);
        }
        SignedPermutation { images, ty: self.ty }
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let n = self.rank();
        let mut len = 0;
        for i in 0..n {
            let (a, sa) = (self.images[i].abs(), self.images[i].signum());
            if self.ty == GroupType::C && sa < 0 {
                len += 1;
            }
            for j in i + 1..n {
                let (b, sb) = (self.images[j].abs(), self.images[j].signum());
                // image of e_i - e_j is sa e_a - sb e_b; of e_i + e_j is sa e_a + sb e_b
                let minus_pos = if a < b { sa > 0 } else { sb < 0 };
                let plus_pos = if a < b { sa > 0 } else { sb > 0 };
                len += usize::from(!minus_pos) + usize::from(!plus_pos);
            }
        }
        len
    }

    /// Lexicographically smallest reduced word `a_1 ... a_k` with `w = s_{a_1} ... s_{a_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let gens = Self::simple_reflections(self.rank(), self.ty);
        let mut w = self.clone();
        let mut word = Vec::new();
        let mut len = w.length();
        while len > 0 {
            for (k, s) in gens.iter().enumerate() {
                let sw = s.compose(&w).expect("same rank");
                let l = sw.length();
                if l < len {
                    word.push(k + 1);
                    w = sw;
                    len = l;
                    break;
                }
            }
        }
        word
    }

    /// Product of simple reflections along a word.
    pub fn from_word(n: usize, ty: GroupType, word: &[usize]) -> Result<Self, WeylError> {
        let mut w = Self::identity(n, ty);
        for &k in word {
            w = w.compose(&Self::simple(n, ty, k)?)?;
        }
        Ok(w)
    }

    /// Every element of the group, ordered by length and then by reduced word.
    pub fn all_elements(n: usize, ty: GroupType) -> Vec<Self> {
        let mut out = Vec::new();
        let mut images: Vec<i32> = (1..=n as i32).collect();
        let mut perms = Vec::new();
        permutations(&mut images, 0, &mut perms);
        for p in perms {
            for mask in 0u32..(1 << n) {
                if ty == GroupType::D && mask.count_ones() % 2 == 1 {
                    continue;
                }
                let imgs: Vec<i32> = p
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                    .collect();
                out.push(SignedPermutation { images: imgs, ty });
            }
        }
        let mut keyed: Vec<_> = out.into_iter().map(|w| ((w.length(), w.reduced_word()), w)).collect();
        keyed.sort();
        keyed.into_iter().map(|(_, w)| w).collect()
    }
}

fn permutations(v: &mut Vec<i32>, k: usize, out: &mut Vec<Vec<i32>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(ToString::to_string).collect();
        write!(f, "{}[{}]", self.ty, parts.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct SignedPermutationJson {
    #[serde(rename = "type")]
    ty: GroupType,
    #[serde(rename = "oneLine")]
    one_line: Vec<i32>,
}

impl Serialize for SignedPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SignedPermutationJson { ty: self.ty, one_line: self.one_line() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SignedPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = SignedPermutationJson::deserialize(d)?;
        SignedPermutation::from_one_line(&raw.one_line, raw.ty).map_err(serde::de::Error::custom)
    }
}

/// Bruhat order through the subword property on one reduced word of `y`.
pub fn bruhat_leq(x: &SignedPermutation, y: &SignedPermutation) -> Result<bool, WeylError> {
    if x.rank() != y.rank() {
        return Err(WeylError::RankMismatch(x.rank(), y.rank()));
    }
    if x.ty != y.ty {
        return Err(WeylError::TypeMismatch);
    }
    Ok(lower_interval(y).contains(&x.images))
}

/// All products of subwords of a reduced word of `y`, that is the interval `[e, y]`.
pub fn lower_interval(y: &SignedPermutation) -> HashSet<Vec<i32>> {
    let n = y.rank();
    let gens = SignedPermutation::simple_reflections(n, y.ty);
    let mut set: HashSet<Vec<i32>> = HashSet::new();
    set.insert((1..=n as i32).collect());
    for k in y.reduced_word() {
        let s = &gens[k - 1];
        let grown: Vec<Vec<i32>> = set
            .iter()
            .map(|u| {
                let w = SignedPermutation { images: u.clone(), ty: y.ty };
                w.compose(s).expect("same rank").images
            })
            .collect();
        set.extend(grown);
    }
    set
}

/// A weight `sum λ_i e_i` with half-integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Half>,
}

impl Weight {
    pub fn new(coords: Vec<Half>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Weight { coords: v.iter().map(|&x| Half::from_int(x)).collect() }
    }

    pub fn from_doubled(v: &[i64]) -> Self {
        Weight { coords: v.iter().map(|&x| Half::from_doubled(x)).collect() }
    }

    pub fn zero(n: usize) -> Self {
        Weight { coords: vec![Half::ZERO; n] }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn doubled(&self) -> Vec<i64> {
        self.coords.iter().map(|h| h.doubled()).collect()
    }

    /// Half the sum of positive roots: `(n, ..., 1)` for sp, `(n-1, ..., 0)` for o.
    pub fn rho(alg: Algebra, n: usize) -> Self {
        let shift = match alg {
            Algebra::Sp => 0,
            Algebra::O => 1,
        };
        Weight::from_ints(&(0..n).map(|i| (n - i) as i64 - shift).collect::<Vec<_>>())
    }

    /// `(1, ..., 1)`, the difference of the two `ρ`'s.
    pub fn epsilon(n: usize) -> Self {
        Weight::from_ints(&vec![1; n])
    }

    /// All entries integral, or all entries in `½ + ℤ`.
    pub fn is_homogeneous(&self) -> bool {
        self.coords.windows(2).all(|p| p[0].is_integer() == p[1].is_integer())
    }

    pub fn add(&self, other: &Weight) -> Result<Weight, WeylError> {
        if self.rank() != other.rank() {
            return Err(WeylError::RankMismatch(self.rank(), other.rank()));
        }
        Ok(Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| *a + *b).collect() })
    }

    pub fn sub(&self, other: &Weight) -> Result<Weight, WeylError> {
        if self.rank() != other.rank() {
            return Err(WeylError::RankMismatch(self.rank(), other.rank()));
        }
        Ok(Weight { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| *a - *b).collect() })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", crate::half::format_list(&self.coords))
    }
}

#[derive(Serialize, Deserialize)]
struct WeightJson {
    n: usize,
    coords2: Vec<i64>,
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        WeightJson { n: self.rank(), coords2: self.doubled() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = WeightJson::deserialize(d)?;
        if raw.n != raw.coords2.len() {
            return Err(serde::de::Error::custom("n does not match coords2 length"));
        }
        Ok(Weight::from_doubled(&raw.coords2))
    }
}

/// Linear action: `w(sum λ_i e_i) = sum λ_i e_{w(i)}` with `e_{-k} = -e_k`.
pub fn act(w: &SignedPermutation, lambda: &Weight) -> Result<Weight, WeylError> {
    if w.rank() != lambda.rank() {
        return Err(WeylError::RankMismatch(w.rank(), lambda.rank()));
    }
    let mut out = vec![Half::ZERO; lambda.rank()];
    for (i, &v) in w.images.iter().enumerate() {
        let c = lambda.coords[i];
        out[(v.abs() - 1) as usize] = if v > 0 { c } else { -c };
    }
    Ok(Weight { coords: out })
}

/// `w·λ = w(λ + ρ) - ρ`.
pub fn dot_action(w: &SignedPermutation, lambda: &Weight, rho: &Weight) -> Result<Weight, WeylError> {
    act(w, &lambda.add(rho)?)?.sub(rho)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassKind {
    Integral,
    HalfIntegral,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactorType {
    A,
    C,
    D,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralClass {
    pub kind: ClassKind,
    /// Signed indices, closed under negation, sorted.
    pub indices: Vec<i32>,
    pub factor: FactorType,
}

impl IntegralClass {
    pub fn positive_indices(&self) -> Vec<i32> {
        self.indices.iter().copied().filter(|&i| i > 0).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralClassDecomposition {
    pub alg: Algebra,
    pub coords: Vec<(i64, i64)>,
    pub classes: Vec<IntegralClass>,
}

fn is_int(r: &Rational64) -> bool {
    r.is_integer()
}

/// Splits `{±1..±n}` by integrality of coordinate differences.
pub fn integral_class_decomposition(lambda: &[Rational64], alg: Algebra) -> IntegralClassDecomposition {
    let half = Rational64::new(1, 2);
    let mut integral = Vec::new();
    let mut half_integral = Vec::new();
    let mut others: Vec<Vec<i32>> = Vec::new();
    for (idx, x) in lambda.iter().enumerate() {
        let i = idx as i32 + 1;
        if is_int(x) {
            integral.push(i);
        } else if is_int(&(x - half)) {
            half_integral.push(i);
        } else {
            let found = others.iter_mut().find(|cls| {
                let y = &lambda[(cls[0] - 1) as usize];
                is_int(&(x - y)) || is_int(&(x + y))
            });
            match found {
                Some(cls) => cls.push(i),
                None => others.push(vec![i]),
            }
        }
    }
    let signed = |pos: &[i32]| {
        let mut v: Vec<i32> = pos.iter().flat_map(|&i| [i, -i]).collect();
        v.sort_unstable();
        v
    };
    let mut classes = Vec::new();
    if !integral.is_empty() {
        let factor = if alg == Algebra::Sp { FactorType::C } else { FactorType::D };
        classes.push(IntegralClass { kind: ClassKind::Integral, indices: signed(&integral), factor });
    }
    if !half_integral.is_empty() {
        classes.push(IntegralClass { kind: ClassKind::HalfIntegral, indices: signed(&half_integral), factor: FactorType::D });
    }
    for cls in others {
        classes.push(IntegralClass { kind: ClassKind::Other, indices: signed(&cls), factor: FactorType::A });
    }
    IntegralClassDecomposition {
        alg,
        coords: lambda.iter().map(|r| (*r.numer(), *r.denom())).collect(),
        classes,
    }
}

impl IntegralClassDecomposition {
    fn lambda(&self) -> Vec<Rational64> {
        self.coords.iter().map(|&(p, q)| Rational64::new(p, q)).collect()
    }

    /// Reflections generating the factor `W_k` inside the ambient Weyl group.
    pub fn factor_generators(&self, k: usize) -> Vec<SignedPermutation> {
        let lambda = self.lambda();
        let n = lambda.len();
        let ty = self.alg.weyl_type();
        let cls = &self.classes[k];
        let pos = cls.positive_indices();
        let mut gens = Vec::new();
        let reflect = |a: i32, b: i32, plus: bool| {
            let mut images: Vec<i32> = (1..=n as i32).collect();
            let (sa, sb) = if plus { (-1, -1) } else { (1, 1) };
            images[(a - 1) as usize] = sb * b;
            images[(b - 1) as usize] = sa * a;
            SignedPermutation { images, ty }
        };
        for p in pos.windows(2) {
            let (a, b) = (p[0], p[1]);
            let (x, y) = (&lambda[(a - 1) as usize], &lambda[(b - 1) as usize]);
            let plus = cls.factor == FactorType::A && !is_int(&(x - y));
            gens.push(reflect(a, b, plus));
        }
        match cls.factor {
            FactorType::A => {}
            FactorType::C => {
                if let Some(&a) = pos.last() {
                    let mut images: Vec<i32> = (1..=n as i32).collect();
                    images[(a - 1) as usize] = -a;
                    gens.push(SignedPermutation { images, ty: GroupType::C });
                }
            }
            FactorType::D => {
                if pos.len() >= 2 {
                    let (a, b) = (pos[pos.len() - 2], pos[pos.len() - 1]);
                    gens.push(reflect(a, b, true));
                }
            }
        }
        gens
    }
}

/// `w(λ) - λ` has integral entries.
pub fn preserves_integral_class(w: &SignedPermutation, lambda: &[Rational64]) -> bool {
    let mut out = vec![Rational64::zero(); lambda.len()];
    for (i, &v) in w.images.iter().enumerate() {
        let c = lambda[i];
        out[(v.abs() - 1) as usize] = if v > 0 { c } else { -c };
    }
    out.iter().zip(lambda).all(|(a, b)| is_int(&(a - b)))
}

/// Lengths of all elements by breadth-first search over simple reflections; an oracle for `length`.
pub fn word_lengths_by_search(n: usize, ty: GroupType) -> BTreeMap<Vec<i32>, usize> {
    let gens = SignedPermutation::simple_reflections(n, ty);
    let mut dist = BTreeMap::new();
    let id = SignedPermutation::identity(n, ty);
    dist.insert(id.images.clone(), 0);
    let mut frontier = vec![id];
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for s in &gens {
                let ws = w.compose(s).expect("same rank");
                if !dist.contains_key(&ws.images) {
                    dist.insert(ws.images.clone(), d);
                    next.push(ws);
                }
            }
        }
        frontier = next;
    }
    dist
}

pub fn rational_abs(r: &Rational64) -> Rational64 {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2(one: &[i32]) -> SignedPermutation {
        SignedPermutation::from_one_line(one, GroupType::C).unwrap()
    }

    #[test]
    fn construction_examples() {
        let id = SignedPermutation::from_one_line(&[-2, -1, 1, 2], GroupType::D).unwrap();
        assert_eq!(id, SignedPermutation::identity(2, GroupType::D));
        let w = c2(&[-2, 1, -1, 2]);
        assert_eq!(w.sign_changes(), 1);
        assert_eq!(
            SignedPermutation::from_one_line(&[-2, 1, -1, 2], GroupType::D),
            Err(WeylError::OddSignChanges)
        );
        assert_eq!(
            SignedPermutation::from_one_line(&[-2, -1, 1, 1], GroupType::C),
            Err(WeylError::AntisymmetryViolated(2))
        );
        assert_eq!(SignedPermutation::from_images(vec![1, 1], GroupType::C), Err(WeylError::NotABijection));
    }

    #[test]
    fn length_examples() {
        assert_eq!(SignedPermutation::identity(2, GroupType::C).length(), 0);
        for s in SignedPermutation::simple_reflections(3, GroupType::D) {
            assert_eq!(s.length(), 1);
        }
        assert_eq!(c2(&[2, 1, -1, -2]).length(), 4);
    }

    #[test]
    fn length_matches_search() {
        for (n, ty) in [(1, GroupType::C), (2, GroupType::C), (3, GroupType::C), (2, GroupType::D), (3, GroupType::D), (4, GroupType::D)] {
            let dist = word_lengths_by_search(n, ty);
            let all = SignedPermutation::all_elements(n, ty);
            assert_eq!(all.len(), dist.len());
            for w in all {
                assert_eq!(w.length(), dist[w.images()], "{w}");
                assert_eq!(SignedPermutation::from_word(n, ty, &w.reduced_word()).unwrap(), w);
                assert_eq!(w.reduced_word().len(), w.length());
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let s1 = SignedPermutation::simple(2, GroupType::C, 1).unwrap();
        let s2 = SignedPermutation::simple(2, GroupType::C, 2).unwrap();
        let s1s2 = s1.compose(&s2).unwrap();
        let s2s1 = s2.compose(&s1).unwrap();
        assert!(!bruhat_leq(&s1s2, &s2s1).unwrap());
        for w in SignedPermutation::all_elements(2, GroupType::C) {
            assert!(bruhat_leq(&SignedPermutation::identity(2, GroupType::C), &w).unwrap());
            assert!(bruhat_leq(&w, &w).unwrap());
        }
        let d = SignedPermutation::identity(3, GroupType::D);
        assert_eq!(bruhat_leq(&s1, &d), Err(WeylError::RankMismatch(2, 3)));
    }

    #[test]
    fn bruhat_is_partial_order_compatible_with_length() {
        for (n, ty) in [(3, GroupType::C), (3, GroupType::D)] {
            let all = SignedPermutation::all_elements(n, ty);
            let below: Vec<HashSet<Vec<i32>>> = all.iter().map(lower_interval).collect();
            let leq = |i: usize, j: usize| below[j].contains(all[i].images());
            for i in 0..all.len() {
                assert!(leq(i, i));
                for j in 0..all.len() {
                    if leq(i, j) {
                        assert!(all[i].length() <= all[j].length());
                        if i != j {
                            assert!(!leq(j, i));
                            assert!(all[i].length() < all[j].length());
                        }
                        for k in 0..all.len() {
                            if leq(j, k) {
                                assert!(leq(i, k));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn length_changes_by_one_under_simple_reflections() {
        for ty in [GroupType::C, GroupType::D] {
            let gens = SignedPermutation::simple_reflections(3, ty);
            let all = SignedPermutation::all_elements(3, ty);
            for x in &all {
                for s in &gens {
                    let l = x.compose(s).unwrap().length() as i64;
                    assert_eq!((l - x.length() as i64).abs(), 1);
                }
                for y in &all {
                    assert!(x.compose(y).unwrap().length() <= x.length() + y.length());
                }
            }
        }
    }

    #[test]
    fn dot_action_examples() {
        let rho = Weight::rho(Algebra::Sp, 2);
        assert_eq!(rho, Weight::from_ints(&[2, 1]));
        let lambda = Weight::from_ints(&[1, 0]);
        let id = SignedPermutation::identity(2, GroupType::C);
        assert_eq!(dot_action(&id, &lambda, &rho).unwrap(), lambda);
        let s2 = SignedPermutation::simple(2, GroupType::C, 2).unwrap();
        assert_eq!(dot_action(&s2, &lambda, &rho).unwrap(), Weight::from_ints(&[1, -2]));
        let minus_rho = Weight::from_ints(&[-2, -1]);
        for w in SignedPermutation::all_elements(2, GroupType::C) {
            assert_eq!(dot_action(&w, &minus_rho, &rho).unwrap(), minus_rho);
        }
    }

    #[test]
    fn decomposition_examples() {
        let r = |p: i64, q: i64| Rational64::new(p, q);
        let d = integral_class_decomposition(&[r(3, 1), r(1, 1), r(0, 1)], Algebra::Sp);
        assert_eq!(d.classes.len(), 1);
        assert_eq!(d.classes[0].factor, FactorType::C);
        let d = integral_class_decomposition(&[r(1, 2), r(-1, 2)], Algebra::Sp);
        assert_eq!(d.classes.len(), 1);
        assert_eq!(d.classes[0].kind, ClassKind::HalfIntegral);
        assert_eq!(d.classes[0].factor, FactorType::D);
        let d = integral_class_decomposition(&[r(1, 1), r(1, 2), r(1, 3)], Algebra::Sp);
        let idx: Vec<Vec<i32>> = d.classes.iter().map(|c| c.indices.clone()).collect();
        assert_eq!(idx, vec![vec![-1, 1], vec![-2, 2], vec![-3, 3]]);
        assert_eq!(d.classes[2].factor, FactorType::A);
    }

    #[test]
    fn weight_json_round_trip() {
        let w = Weight::from_doubled(&[3, -1]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"n":2,"coords2":[3,-1]}"#);
        assert_eq!(serde_json::from_str::<Weight>(&s).unwrap(), w);
        let p = c2(&[-2, 1, -1, 2]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"type":"C","oneLine":[-2,1,-1,2]}"#);
        assert_eq!(serde_json::from_str::<SignedPermutation>(&s).unwrap(), p);
    }
}
