//! Finite Coxeter groups as explicit multiplication tables.
//!
//! Elements are indexed `0..N` in order of length, then lexicographically smallest
//! reduced word; index `0` is the identity. Generators are indexed `0..rank` here
//! and printed `1..=rank` to users.

use std::collections::{HashMap, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use super::HeckeError;
use crate::weyl::{GroupType, SignedPermutation};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Default cap on the number of cosets or elements.
pub const DEFAULT_LIMIT: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoxeterType {
    A,
    C,
    D,
}

#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    id: u64,
    matrix: Vec<Vec<u32>>,
    lengths: Vec<usize>,
    words: Vec<Vec<usize>>,
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
    below: Vec<Vec<u64>>,
    realization: Option<Vec<Vec<i32>>>,
}

impl CoxeterGroup {
    /// Builds the group from a Coxeter matrix (`0` for `∞`) by coset enumeration.
    pub fn from_coxeter_matrix(matrix: Vec<Vec<u32>>) -> Result<Self, HeckeError> {
        Self::from_coxeter_matrix_with_limit(matrix, DEFAULT_LIMIT)
    }

    pub fn from_coxeter_matrix_with_limit(matrix: Vec<Vec<u32>>, limit: usize) -> Result<Self, HeckeError> {
        validate_matrix(&matrix)?;
        let r = matrix.len();
        let mut relators = Vec::new();
        for s in 0..r {
            for t in s + 1..r {
                match matrix[s][t] {
                    0 => return Err(HeckeError::SystemTooLarge(usize::MAX)),
                    m => relators.push((0..m).flat_map(|_| [s, t]).collect::<Vec<_>>()),
                }
            }
        }
        let table = todd_coxeter(r, &relators, limit)?;
        Self::from_right_table(matrix, table, None)
    }

    /// Closure of signed permutations under composition; every generator must be an involution.
    pub fn from_generators(gens: &[Vec<i32>]) -> Result<Self, HeckeError> {
        Self::from_generators_with_limit(gens, DEFAULT_LIMIT)
    }

    pub fn from_generators_with_limit(gens: &[Vec<i32>], limit: usize) -> Result<Self, HeckeError> {
        let n = gens.first().map_or(0, Vec::len);
        if gens.iter().any(|g| g.len() != n || compose(g, g) != identity(n)) {
            return Err(HeckeError::InvalidGenerators);
        }
        let mut index: HashMap<Vec<i32>, usize> = HashMap::new();
        let mut elems = vec![identity(n)];
        index.insert(identity(n), 0);
        let mut table: Vec<Vec<usize>> = Vec::new();
        let mut k = 0;
        while k < elems.len() {
            let mut row = Vec::with_capacity(gens.len());
            for g in gens {
                let ws = compose(&elems[k], g);
                let next = elems.len();
                let id = *index.entry(ws.clone()).or_insert(next);
                if id == next {
                    if next >= limit {
                        return Err(HeckeError::SystemTooLarge(limit));
                    }
                    elems.push(ws);
                }
                row.push(id);
            }
            table.push(row);
            k += 1;
        }
        let matrix = (0..gens.len())
            .map(|s| (0..gens.len()).map(|t| product_order(&gens[s], &gens[t])).collect())
            .collect();
        Self::from_right_table(matrix, table, Some(elems))
    }

    /// Weyl group of type `A_k`, `C_k` or `D_k` realized by (signed) permutations.
    pub fn of_type(ty: CoxeterType, rank: usize) -> Result<Self, HeckeError> {
        let gens: Vec<Vec<i32>> = match ty {
            CoxeterType::A => (1..=rank)
                .map(|k| {
                    let mut p: Vec<i32> = (1..=rank as i32 + 1).collect();
                    p.swap(k - 1, k);
                    p
                })
                .collect(),
            CoxeterType::C | CoxeterType::D => {
                let gt = if ty == CoxeterType::C { GroupType::C } else { GroupType::D };
                if gt == GroupType::D && rank < 2 {
                    return Err(HeckeError::InvalidGenerators);
                }
                SignedPermutation::simple_reflections(rank, gt).iter().map(|s| s.images().to_vec()).collect()
            }
        };
        Self::from_generators(&gens)
    }

    fn from_right_table(
        matrix: Vec<Vec<u32>>,
        table: Vec<Vec<usize>>,
        realization: Option<Vec<Vec<i32>>>,
    ) -> Result<Self, HeckeError> {
        let n = table.len();
        let r = matrix.len();
        // breadth-first reduced words from the identity
        let mut len = vec![usize::MAX; n];
        let mut word: Vec<Vec<usize>> = vec![Vec::new(); n];
        len[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(w) = queue.pop_front() {
            for s in 0..r {
                let ws = table[w][s];
                if len[ws] == usize::MAX {
                    len[ws] = len[w] + 1;
                    let mut wd = word[w].clone();
                    wd.push(s);
                    word[ws] = wd;
                    queue.push_back(ws);
                }
            }
        }
        let eval = |start: usize, wd: &[usize]| wd.iter().fold(start, |x, &s| table[x][s]);
        let left: Vec<Vec<usize>> = (0..n).map(|w| (0..r).map(|s| eval(table[0][s], &word[w])).collect()).collect();
        // lexicographically smallest reduced words via smallest left descents
        let mut by_len: Vec<usize> = (0..n).collect();
        by_len.sort_by_key(|&w| len[w]);
        let mut lex: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &w in &by_len {
            if len[w] == 0 {
                continue;
            }
            let s = (0..r).find(|&s| len[left[w][s]] < len[w]).expect("nonidentity has a left descent");
            let mut wd = vec![s];
            wd.extend_from_slice(&lex[left[w][s]]);
            lex[w] = wd;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| (len[a], &lex[a]).cmp(&(len[b], &lex[b])));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let relabel = |t: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
            order.iter().map(|&old| t[old].iter().map(|&x| pos[x]).collect()).collect()
        };
        let right = relabel(&table);
        let left = relabel(&left);
        let lengths: Vec<usize> = order.iter().map(|&old| len[old]).collect();
        let words: Vec<Vec<usize>> = order.iter().map(|&old| lex[old].clone()).collect();
        let realization = realization.map(|el| order.iter().map(|&old| el[old].clone()).collect());
        // [e, w] = [e, ws] ∪ [e, ws]s for a right descent s
        let blocks = n.div_ceil(64);
        let mut below: Vec<Vec<u64>> = vec![vec![0; blocks]; n];
        below[0][0] = 1;
        for w in 1..n {
            let s = *words[w].last().expect("nonidentity");
            let v = right[w][s];
            let mut set = below[v].clone();
            for x in 0..n {
                if below[v][x / 64] >> (x % 64) & 1 == 1 {
                    let xs = right[x][s];
                    set[xs / 64] |= 1 << (xs % 64);
                }
            }
            below[w] = set;
        }
        Ok(CoxeterGroup {
            id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
            matrix,
            lengths,
            words,
            right,
            left,
            below,
            realization,
        })
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.lengths.len()
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    /// Lexicographically smallest reduced word, generators `0..rank`.
    pub fn word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }

    /// `w s`.
    pub fn right_mul(&self, w: usize, s: usize) -> usize {
        self.right[w][s]
    }

    /// `s w`.
    pub fn left_mul(&self, s: usize, w: usize) -> usize {
        self.left[w][s]
    }

    pub fn generator(&self, s: usize) -> usize {
        self.right[0][s]
    }

    /// Element given by a word in the generators.
    pub fn eval_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |x, &s| self.right[x][s])
    }

    pub fn bruhat_leq(&self, x: usize, y: usize) -> bool {
        self.below[y][x / 64] >> (x % 64) & 1 == 1
    }

    pub fn longest(&self) -> usize {
        self.size() - 1
    }

    pub fn realization(&self, w: usize) -> Option<&[i32]> {
        self.realization.as_ref().map(|r| r[w].as_slice())
    }

    /// Position of a realized element.
    pub fn index_of(&self, images: &[i32]) -> Option<usize> {
        self.realization.as_ref()?.iter().position(|r| r == images)
    }
}

fn validate_matrix(m: &[Vec<u32>]) -> Result<(), HeckeError> {
    let r = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != r || row[i] != 1 {
            return Err(HeckeError::InvalidMatrix);
        }
        for (j, &v) in row.iter().enumerate() {
            if v != m[j][i] || (i != j && v == 1) {
                return Err(HeckeError::InvalidMatrix);
            }
        }
    }
    Ok(())
}

fn identity(n: usize) -> Vec<i32> {
    (1..=n as i32).collect()
}

/// `(a ∘ b)(i) = a(b(i))`.
fn compose(a: &[i32], b: &[i32]) -> Vec<i32> {
    b.iter().map(|&v| v.signum() * a[(v.abs() - 1) as usize]).collect()
}

fn product_order(a: &[i32], b: &[i32]) -> u32 {
    let ab = compose(a, b);
    let id = identity(a.len());
    let mut cur = ab.clone();
    let mut k = 1;
    while cur != id {
        cur = compose(&cur, &ab);
        k += 1;
    }
    k
}

/// Coset table of the trivial subgroup for involutive generators.
struct CosetTable {
    rows: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    live: usize,
    limit: usize,
}

impl CosetTable {
    fn find(&mut self, mut c: usize) -> usize {
        while self.parent[c] != c {
            self.parent[c] = self.parent[self.parent[c]];
            c = self.parent[c];
        }
        c
    }

    fn get(&mut self, c: usize, s: usize) -> Option<usize> {
        let d = self.rows[c][s]?;
        Some(self.find(d))
    }

    fn new_coset(&mut self) -> Result<usize, HeckeError> {
        if self.live >= self.limit {
            return Err(HeckeError::SystemTooLarge(self.limit));
        }
        let gens = self.rows.first().map_or(0, Vec::len);
        self.rows.push(vec![None; gens]);
        let id = self.parent.len();
        self.parent.push(id);
        self.live += 1;
        Ok(id)
    }

    /// Records `c·s = d` (hence `d·s = c`), queueing any conflicts.
    fn link(&mut self, c: usize, s: usize, d: usize, queue: &mut Vec<(usize, usize)>) {
        if let Some(e) = self.get(c, s) {
            if e != d {
                queue.push((e, d));
            }
        }
        if let Some(f) = self.get(d, s) {
            if f != c {
                queue.push((f, c));
            }
        }
        self.rows[c][s] = Some(d);
        self.rows[d][s] = Some(c);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = vec![(a, b)];
        while let Some((a, b)) = queue.pop() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (keep, kill) = if a < b { (a, b) } else { (b, a) };
            self.parent[kill] = keep;
            self.live -= 1;
            for s in 0..self.rows[kill].len() {
                if let Some(d) = self.rows[kill][s].take() {
                    let d = self.find(d);
                    let k = self.find(keep);
                    self.link(k, s, d, &mut queue);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, rel: &[usize]) -> Result<(), HeckeError> {
        loop {
            let c = self.find(c);
            let (mut f, mut i) = (c, 0usize);
            let (mut b, mut j) = (c, rel.len());
            while i < j {
                match self.get(f, rel[i]) {
                    Some(next) => {
                        f = next;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == j {
                if f != c {
                    self.coincidence(f, c);
                }
                return Ok(());
            }
            while j > i {
                match self.get(b, rel[j - 1]) {
                    Some(prev) => {
                        b = prev;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                let mut queue = Vec::new();
                self.link(f, rel[i], b, &mut queue);
                for (x, y) in queue {
                    self.coincidence(x, y);
                }
                return Ok(());
            }
            let d = self.new_coset()?;
            let mut queue = Vec::new();
            self.link(f, rel[i], d, &mut queue);
            for (x, y) in queue {
                self.coincidence(x, y);
            }
        }
    }
}

fn todd_coxeter(gens: usize, relators: &[Vec<usize>], limit: usize) -> Result<Vec<Vec<usize>>, HeckeError> {
    let mut t = CosetTable { rows: vec![vec![None; gens]], parent: vec![0], live: 1, limit };
    let mut c = 0;
    while c < t.rows.len() {
        if t.find(c) == c {
            for rel in relators {
                t.scan_and_fill(c, rel)?;
                if t.find(c) != c {
                    break;
                }
            }
            for s in 0..gens {
                if t.find(c) != c {
                    break;
                }
                if t.get(c, s).is_none() {
                    let d = t.new_coset()?;
                    let mut queue = Vec::new();
                    t.link(c, s, d, &mut queue);
                    for (x, y) in queue {
                        t.coincidence(x, y);
                    }
                }
            }
        }
        c += 1;
    }
    let live: Vec<usize> = (0..t.rows.len()).filter(|&c| t.parent[c] == c).collect();
    let mut pos = vec![usize::MAX; t.rows.len()];
    for (k, &c) in live.iter().enumerate() {
        pos[c] = k;
    }
    let mut out = Vec::with_capacity(live.len());
    for &c in &live {
        let mut row = Vec::with_capacity(gens);
        for s in 0..gens {
            let d = t.get(c, s).ok_or(HeckeError::InvalidMatrix)?;
            row.push(pos[d]);
        }
        out.push(row);
    }
    Ok(out)
}

/// Coxeter matrix of `A_k`, `C_k` (`B_k`) or `D_k` with the generator order used by `of_type`.
pub fn coxeter_matrix(ty: CoxeterType, rank: usize) -> Vec<Vec<u32>> {
    let mut m = vec![vec![2u32; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for i in 0..rank.saturating_sub(1) {
        m[i][i + 1] = 3;
        m[i + 1][i] = 3;
    }
    match ty {
        CoxeterType::A => {}
        CoxeterType::C => {
            if rank >= 2 {
                m[rank - 2][rank - 1] = 4;
                m[rank - 1][rank - 2] = 4;
            }
        }
        CoxeterType::D => {
            if rank >= 3 {
                m[rank - 2][rank - 1] = 2;
                m[rank - 1][rank - 2] = 2;
                m[rank - 3][rank - 1] = 3;
                m[rank - 1][rank - 3] = 3;
            } else if rank == 2 {
                m[0][1] = 2;
                m[1][0] = 2;
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        let cases = [
            (CoxeterType::A, 1, 2),
            (CoxeterType::A, 2, 6),
            (CoxeterType::A, 3, 24),
            (CoxeterType::C, 2, 8),
            (CoxeterType::C, 3, 48),
            (CoxeterType::D, 3, 24),
            (CoxeterType::D, 4, 192),
        ];
        for (ty, r, order) in cases {
            let concrete = CoxeterGroup::of_type(ty, r).unwrap();
            let abstract_ = CoxeterGroup::from_coxeter_matrix(coxeter_matrix(ty, r)).unwrap();
            assert_eq!(concrete.size(), order, "{ty:?}{r}");
            assert_eq!(abstract_.size(), order, "{ty:?}{r}");
            assert_eq!(concrete.matrix(), coxeter_matrix(ty, r).as_slice());
            for w in 0..order {
                assert_eq!(concrete.word(w), abstract_.word(w));
                assert_eq!(concrete.length(w), abstract_.length(w));
            }
        }
    }

    #[test]
    fn other_finite_types() {
        let h3 = vec![vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]];
        assert_eq!(CoxeterGroup::from_coxeter_matrix(h3).unwrap().size(), 120);
        let g2 = vec![vec![1, 6], vec![6, 1]];
        assert_eq!(CoxeterGroup::from_coxeter_matrix(g2).unwrap().size(), 12);
        let f4 = coxeter_matrix(CoxeterType::A, 4);
        let mut f4 = f4;
        f4[1][2] = 4;
        f4[2][1] = 4;
        assert_eq!(CoxeterGroup::from_coxeter_matrix(f4).unwrap().size(), 1152);
    }

    #[test]
    fn infinite_or_bad_input() {
        let affine = vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]];
        assert!(matches!(
            CoxeterGroup::from_coxeter_matrix_with_limit(affine, 500),
            Err(HeckeError::SystemTooLarge(_))
        ));
        assert!(matches!(
            CoxeterGroup::from_coxeter_matrix(vec![vec![1, 3], vec![2, 1]]),
            Err(HeckeError::InvalidMatrix)
        ));
    }

    #[test]
    fn multiplication_tables_agree() {
        let g = CoxeterGroup::of_type(CoxeterType::C, 3).unwrap();
        for w in 0..g.size() {
            assert_eq!(g.eval_word(g.word(w)), w);
            for s in 0..g.rank() {
                let ws = g.right_mul(w, s);
                assert_eq!(g.length(ws).abs_diff(g.length(w)), 1);
                assert_eq!(g.right_mul(ws, s), w);
                let sw = g.left_mul(s, w);
                let mut word = vec![s];
                word.extend_from_slice(g.word(w));
                assert_eq!(g.eval_word(&word), sw);
            }
        }
        assert_eq!(g.length(g.longest()), 9);
    }

    #[test]
    fn bruhat_matches_signed_permutations() {
        let g = CoxeterGroup::of_type(CoxeterType::D, 3).unwrap();
        for x in 0..g.size() {
            let px = SignedPermutation::from_images(g.realization(x).unwrap().to_vec(), GroupType::D).unwrap();
            assert_eq!(px.length(), g.length(x));
            for y in 0..g.size() {
                let py = SignedPermutation::from_images(g.realization(y).unwrap().to_vec(), GroupType::D).unwrap();
                assert_eq!(crate::weyl::bruhat_leq(&px, &py).unwrap(), g.bruhat_leq(x, y));
            }
        }
    }
}
