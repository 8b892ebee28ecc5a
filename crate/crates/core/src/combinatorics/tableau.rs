use rustc_hash::FxHashMap;

use super::partition::Partition;
use crate::error::{Error, Result};

/// Largest shape size the tableau routines accept by default.
pub const DEFAULT_TABLEAU_CAP: usize = 14;

/// A standard Young tableau; `rows[r][c]` holds the entry in row `r`, column `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect::<Vec<_>>())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Parse(format!("entry {v} repeated or out of range")));
                }
                if c > 0 && row[c - 1] >= v {
                    return Err(Error::Parse(format!("row {r} not increasing")));
                }
                if r > 0 && rows[r - 1][c] >= v {
                    return Err(Error::Parse(format!("column {c} not increasing")));
                }
            }
        }
        Ok(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// `row_of[v]` is the row holding `v` (index 0 unused).
    fn row_of(&self) -> Vec<usize> {
        let mut row_of = vec![0; self.shape.size() + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v] = r;
            }
        }
        row_of
    }

    /// Entries `i` such that `i + 1` sits in a strictly lower row.
    pub fn descents(&self) -> Vec<usize> {
        let row_of = self.row_of();
        (1..self.shape.size())
            .filter(|&i| row_of[i + 1] > row_of[i])
            .collect()
    }
}

pub fn major_index(t: &StandardTableau) -> usize {
    t.descents().iter().sum()
}

/// Every standard tableau of the given shape.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn go(
        shape: &Partition,
        next: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > shape.size() {
            out.push(StandardTableau {
                shape: shape.clone(),
                rows: rows.clone(),
            });
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            let fits = len < shape.part(r) && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(next);
                go(shape, next + 1, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    go(shape, 1, &mut rows, &mut out);
    out
}

/// `f^λ = n! / Π hooks`.
pub fn hook_length_dimension(shape: &Partition) -> u128 {
    let n = shape.size() as u128;
    let num: u128 = (1..=n).product();
    let hooks: u128 = shape.cells().map(|(r, c)| shape.hook(r, c) as u128).product();
    num / hooks
}

/// Histogram of major indices modulo `|λ|`, via depth-first placement of
/// `1, 2, …, n` memoized on (filled shape, row of the last entry).
fn maj_histogram(shape: &Partition) -> Vec<u64> {
    let n = shape.size();
    if n == 0 {
        return vec![1];
    }
    let target = shape.parts().to_vec();
    let mut memo: FxHashMap<(Vec<usize>, usize), Vec<u64>> = FxHashMap::default();

    fn go(
        target: &[usize],
        filled: &mut Vec<usize>,
        placed: usize,
        last_row: usize,
        modulus: usize,
        memo: &mut FxHashMap<(Vec<usize>, usize), Vec<u64>>,
    ) -> Vec<u64> {
        if placed == modulus {
            let mut h = vec![0; modulus];
            h[0] = 1;
            return h;
        }
        let key = (filled.clone(), last_row);
        if let Some(h) = memo.get(&key) {
            return h.clone();
        }
        let mut hist = vec![0u64; modulus];
        for r in 0..target.len() {
            let fits = filled[r] < target[r] && (r == 0 || filled[r - 1] > filled[r]);
            if !fits {
                continue;
            }
            // Entry `placed + 1` goes to row r; `placed` is a descent if r is lower.
            let shift = if placed > 0 && r > last_row { placed % modulus } else { 0 };
            filled[r] += 1;
            let sub = go(target, filled, placed + 1, r, modulus, memo);
            filled[r] -= 1;
            for (res, count) in sub.iter().enumerate() {
                hist[(res + shift) % modulus] += count;
            }
        }
        memo.insert(key, hist.clone());
        hist
    }

    let mut filled = vec![0; target.len()];
    go(&target, &mut filled, 0, 0, n, &mut memo)
}

/// Number of standard tableaux of shape `λ` with `maj ≡ j (mod |λ|)`, which
/// is the multiplicity of the character `χ^j` of the cyclic group `C_k` in
/// the restriction of the Specht module `S^λ` (Kraśkiewicz–Weyman).
pub fn kw_multiplicity(shape: &Partition, j: usize) -> Result<u64> {
    kw_multiplicity_with_cap(shape, j, DEFAULT_TABLEAU_CAP)
}

pub fn kw_multiplicity_with_cap(shape: &Partition, j: usize, cap: usize) -> Result<u64> {
    let k = shape.size();
    if k == 0 {
        return Err(Error::Precondition("kw_multiplicity needs |λ| >= 1".into()));
    }
    if k > cap {
        return Err(Error::Precondition(format!(
            "|λ| = {k} exceeds the tableau enumeration cap {cap}"
        )));
    }
    Ok(maj_histogram(shape)[j % k])
}
