//! Partitions, tableaux, and a Robinson–Schensted variant with decreasing rows.
//!
//! Insertion of `e` into a row finds the leftmost entry `l <= e`; if none exists,
//! `e` is appended, otherwise `l` is replaced by `e` and bumped into the next row.
//! Rows therefore strictly decrease and columns weakly decrease. The recording
//! tableau stores `n - s + 1` for the box created at step `s`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::weyl::SignedPermutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauxError {
    #[error("empty input sequence")]
    EmptyInput,
    #[error("entry {0} is not positive")]
    NonPositive(i64),
    #[error("row lengths {0:?} are not a partition")]
    NotAPartition(Vec<usize>),
}

/// Weakly decreasing positive row lengths.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    rows: Vec<usize>,
}

impl Partition {
    pub fn new(mut rows: Vec<usize>) -> Result<Self, TableauxError> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|p| p[0] < p[1]) || rows.contains(&0) {
            return Err(TableauxError::NotAPartition(rows));
        }
        Ok(Partition { rows })
    }

    /// Sorts and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { rows: parts }
    }

    pub fn empty() -> Self {
        Partition { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// All partitions of `k`, largest first part first.
    pub fn all_of(k: usize) -> Vec<Partition> {
        fn go(k: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if k == 0 {
                out.push(Partition { rows: cur.clone() });
                return;
            }
            for p in (1..=k.min(max)).rev() {
                cur.push(p);
                go(k - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(k, k, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn shape(&self) -> Partition {
        Partition { rows: self.rows.iter().map(Vec::len).collect() }
    }

    /// Rows strictly decrease, columns weakly decrease, row lengths form a partition.
    pub fn is_standard(&self) -> bool {
        let lens: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        if lens.contains(&0) || lens.windows(2).any(|p| p[0] < p[1]) {
            return false;
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|p| p[0] > p[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|pair| pair[1].iter().zip(&pair[0]).all(|(lo, hi)| lo <= hi));
        rows_ok && cols_ok
    }

    pub fn entries(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }
}

/// Snapshot after one insertion step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RsStep {
    pub insertion: Tableau,
    pub recording: Tableau,
}

/// Inserts `e`, returning the row index of the new box.
fn insert(t: &mut Tableau, mut e: u32) -> usize {
    let mut row = 0;
    loop {
        if row == t.rows.len() {
            t.rows.push(vec![e]);
            return row;
        }
        match t.rows[row].iter().position(|&l| l <= e) {
            None => {
                t.rows[row].push(e);
                return row;
            }
            Some(j) => {
                e = std::mem::replace(&mut t.rows[row][j], e);
                row += 1;
            }
        }
    }
}

/// Runs the insertion on the whole sequence and returns every intermediate pair.
pub fn rs_insert_steps(seq: &[i64]) -> Result<Vec<RsStep>, TableauxError> {
    if seq.is_empty() {
        return Err(TableauxError::EmptyInput);
    }
    if let Some(&bad) = seq.iter().find(|&&v| v <= 0 || v > u32::MAX as i64) {
        return Err(TableauxError::NonPositive(bad));
    }
    let n = seq.len();
    let mut ins = Tableau::default();
    let mut rec = Tableau::default();
    let mut steps = Vec::with_capacity(n);
    for (idx, &d) in seq.iter().enumerate() {
        let row = insert(&mut ins, d as u32);
        let label = (n - idx) as u32;
        if row == rec.rows.len() {
            rec.rows.push(vec![label]);
        } else {
            rec.rows[row].push(label);
        }
        steps.push(RsStep { insertion: ins.clone(), recording: rec.clone() });
    }
    Ok(steps)
}

/// Final insertion and recording tableaux.
pub fn rs_insert_sequence(seq: &[i64]) -> Result<(Tableau, Tableau), TableauxError> {
    let last = rs_insert_steps(seq)?.pop().expect("nonempty");
    Ok((last.insertion, last.recording))
}

/// Order-preserving relabeling of a one-line sequence on `±1..±n` onto `1..2n`.
pub fn relabel_signed(seq: &[i32], n: usize) -> Vec<i64> {
    let n = n as i64;
    seq.iter()
        .map(|&v| {
            let v = v as i64;
            if v < 0 {
                v + n + 1
            } else {
                v + n
            }
        })
        .collect()
}

/// Tableaux of the one-line sequence `w(-n), ..., w(n)` after relabeling.
pub fn rs_of_permutation(w: &SignedPermutation) -> (Tableau, Tableau) {
    if w.rank() == 0 {
        return (Tableau::default(), Tableau::default());
    }
    rs_insert_sequence(&relabel_signed(&w.one_line(), w.rank())).expect("relabeled values are positive")
}

/// Tableaux of a plain permutation in one-line notation.
pub fn rs_of_plain(perm: &[u32]) -> Result<(Tableau, Tableau), TableauxError> {
    rs_insert_sequence(&perm.iter().map(|&v| v as i64).collect::<Vec<_>>())
}

/// The partition `p(w)` of `2n`.
pub fn p_of_w(w: &SignedPermutation) -> Partition {
    rs_of_permutation(w).0.shape()
}
