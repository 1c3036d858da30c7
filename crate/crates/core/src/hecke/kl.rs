//! Hecke algebra arithmetic and the Kazhdan–Lusztig basis.
//!
//! Relations: `T_x T_s = T_{xs}` if `ℓ(xs) > ℓ(x)`, otherwise
//! `(q - 1) T_x + q T_{xs}`. The canonical element is
//! `C_w = Σ_y (-1)^{ℓ(w)-ℓ(y)} q^{ℓ(w)/2 - ℓ(y)} \bar{P_{y,w}} T_y`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{CoxeterGroup, HeckeError, LaurentHalf};

/// Finite linear combination of `T_w`, tied to one Coxeter system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    system: u64,
    terms: BTreeMap<usize, LaurentHalf>,
}

impl HeckeElement {
    pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentHalf)> {
        self.terms.iter().map(|(&w, c)| (w, c))
    }

    pub fn coeff(&self, w: usize) -> LaurentHalf {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: usize, c: &LaurentHalf) {
        let entry = self.terms.entry(w).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        if self.system != other.system {
            return Err(HeckeError::SystemMismatch);
        }
        let mut out = self.clone();
        for (&w, c) in &other.terms {
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentHalf) -> HeckeElement {
        let mut out = HeckeElement { system: self.system, terms: BTreeMap::new() };
        for (&w, a) in &self.terms {
            out.add_term(w, &(a * c));
        }
        out
    }
}

pub struct HeckeAlgebra<'g> {
    group: &'g CoxeterGroup,
    bar_t: Vec<Option<HeckeElement>>,
}

impl<'g> HeckeAlgebra<'g> {
    pub fn new(group: &'g CoxeterGroup) -> Self {
        HeckeAlgebra { group, bar_t: vec![None; group.size()] }
    }

    pub fn group(&self) -> &CoxeterGroup {
        self.group
    }

    pub fn zero(&self) -> HeckeElement {
        HeckeElement { system: self.group.id(), terms: BTreeMap::new() }
    }

    /// `c · T_w`.
    pub fn basis(&self, w: usize, c: LaurentHalf) -> Result<HeckeElement, HeckeError> {
        if w >= self.group.size() {
            return Err(HeckeError::NoSuchElement(w));
        }
        let mut out = self.zero();
        out.add_term(w, &c);
        Ok(out)
    }

    pub fn t(&self, w: usize) -> HeckeElement {
        self.basis(w, LaurentHalf::one()).expect("valid index")
    }

    fn check(&self, a: &HeckeElement) -> Result<(), HeckeError> {
        if a.system != self.group.id() {
            return Err(HeckeError::SystemMismatch);
        }
        Ok(())
    }

    /// `a · T_s`.
    pub fn mul_s(&self, a: &HeckeElement, s: usize) -> HeckeElement {
        let g = self.group;
        let q = LaurentHalf::q_pow(1);
        let qm1 = &q - &LaurentHalf::one();
        let mut out = self.zero();
        for (&x, c) in &a.terms {
            let xs = g.right_mul(x, s);
            if g.length(xs) > g.length(x) {
                out.add_term(xs, c);
            } else {
                out.add_term(x, &(c * &qm1));
                out.add_term(xs, &(c * &q));
            }
        }
        out
    }

    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        self.check(a)?;
        self.check(b)?;
        let mut out = self.zero();
        for (&y, c) in &b.terms {
            let mut acc = a.scale(c);
            for &s in self.group.word(y) {
                acc = self.mul_s(&acc, s);
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    /// `\bar{T_w} = T_{w^{-1}}^{-1}`, built letter by letter from `\bar{T_s} = q^{-1} T_s + (q^{-1} - 1) T_e`.
    fn bar_basis(&mut self, w: usize) -> HeckeElement {
        if let Some(h) = &self.bar_t[w] {
            return h.clone();
        }
        let out = match self.group.word(w).last() {
            None => self.t(0),
            Some(&s) => {
                let prefix = self.group.right_mul(w, s);
                let h = self.bar_basis(prefix);
                let qinv = LaurentHalf::q_pow(-1);
                let coeff = &qinv - &LaurentHalf::one();
                self.mul_s(&h, s).scale(&qinv).add(&h.scale(&coeff)).expect("same system")
            }
        };
        self.bar_t[w] = Some(out.clone());
        out
    }

    pub fn bar(&mut self, a: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        self.check(a)?;
        let mut out = self.zero();
        for (&w, c) in &a.terms {
            out = out.add(&self.bar_basis(w).scale(&c.bar()))?;
        }
        Ok(out)
    }
}

/// Table of all `P_{x,y}` as coefficient vectors in `ℤ[q]`.
#[derive(Clone, Debug)]
pub struct KlTable {
    size: usize,
    p: Vec<Vec<Vec<i64>>>,
}

/// One entry of a serialized table.
#[derive(Clone, Debug, Serialize)]
pub struct KlEntry {
    pub x: usize,
    pub y: usize,
    /// `[exponent of q, coefficient]` pairs.
    #[serde(rename = "P")]
    pub p: Vec<[i64; 2]>,
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn add_scaled(acc: &mut Vec<i64>, src: &[i64], shift: usize, k: i64) {
    if acc.len() < src.len() + shift {
        acc.resize(src.len() + shift, 0);
    }
    for (i, &c) in src.iter().enumerate() {
        acc[i + shift] += k * c;
    }
}

impl KlTable {
    /// Computes every `P_{x,y}`; refuses groups with more than `limit` elements.
    pub fn compute_with_limit(g: &CoxeterGroup, limit: usize) -> Result<Self, HeckeError> {
        let n = g.size();
        if n > limit {
            return Err(HeckeError::SystemTooLarge(limit));
        }
        let mut p: Vec<Vec<Vec<i64>>> = vec![vec![Vec::new(); n]; n];
        // mu_list[v] = (z, μ(z, v)) over z < v with nonzero μ
        let mut mu_list: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        for w in 0..n {
            p[w][w] = vec![1];
            if w == 0 {
                continue;
            }
            let s = g.word(w)[0];
            let v = g.left_mul(s, w);
            let lw = g.length(w);
            let correction: Vec<(usize, i64)> =
                mu_list[v].iter().copied().filter(|&(z, _)| g.length(g.left_mul(s, z)) < g.length(z)).collect();
            for x in 0..w {
                if !g.bruhat_leq(x, w) {
                    continue;
                }
                let sx = g.left_mul(s, x);
                let c = usize::from(g.length(sx) < g.length(x));
                let mut acc = Vec::new();
                add_scaled(&mut acc, &p[sx][v], 1 - c, 1);
                add_scaled(&mut acc, &p[x][v], c, 1);
                for &(z, mu) in &correction {
                    let lz = g.length(z);
                    add_scaled(&mut acc, &p[x][z], (lw - lz) / 2, -mu);
                }
                p[x][w] = trim(acc);
            }
            for z in 0..w {
                let lz = g.length(z);
                if lz < lw && (lw - lz) % 2 == 1 {
                    let d = (lw - lz - 1) / 2;
                    if let Some(&mu) = p[z][w].get(d) {
                        if mu != 0 {
                            mu_list[w].push((z, mu));
                        }
                    }
                }
            }
        }
        Ok(KlTable { size: n, p })
    }

    pub fn compute(g: &CoxeterGroup) -> Result<Self, HeckeError> {
        Self::compute_with_limit(g, 5000)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Coefficients of `P_{x,y}` in increasing powers of `q` (empty for zero).
    pub fn polynomial(&self, x: usize, y: usize) -> &[i64] {
        &self.p[x][y]
    }

    pub fn laurent(&self, x: usize, y: usize) -> LaurentHalf {
        LaurentHalf::from_q_poly(&self.p[x][y])
    }

    /// `μ(x, y)`: coefficient of `q^{(ℓ(y)-ℓ(x)-1)/2}` when that is an integer.
    pub fn mu(&self, g: &CoxeterGroup, x: usize, y: usize) -> i64 {
        let (lx, ly) = (g.length(x), g.length(y));
        if lx >= ly || (ly - lx) % 2 == 0 {
            return 0;
        }
        self.p[x][y].get((ly - lx - 1) / 2).copied().unwrap_or(0)
    }

    pub fn canonical(&self, h: &HeckeAlgebra<'_>, w: usize) -> HeckeElement {
        let g = h.group();
        let lw = g.length(w) as i64;
        let mut out = h.zero();
        for y in 0..self.size {
            if self.p[y][w].is_empty() {
                continue;
            }
            let ly = g.length(y) as i64;
            let sign = if (lw - ly) % 2 == 0 { 1 } else { -1 };
            let c = self.laurent(y, w).bar().shift(lw - 2 * ly).scale(sign);
            out.add_term(y, &c);
        }
        out
    }

    pub fn entries(&self) -> Vec<KlEntry> {
        let mut out = Vec::new();
        for y in 0..self.size {
            for x in 0..self.size {
                let poly = &self.p[x][y];
                if poly.is_empty() {
                    continue;
                }
                let p = poly.iter().enumerate().filter(|(_, &c)| c != 0).map(|(e, &c)| [e as i64, c]).collect();
                out.push(KlEntry { x, y, p });
            }
        }
        out
    }
}
