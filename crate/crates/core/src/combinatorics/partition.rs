use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The empty partition is legal and stands for the trivial representation.
/// Serializes as a plain integer list.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// Cycle type of a conjugacy class of `S_k`.
pub type CycleType = Partition;

impl Partition {
    /// Accepts trailing zeros; rejects increasing sequences.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Parse(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts; handy for cycle types given in arbitrary order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(n)`
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// `(1^n)`
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        Partition(
            (0..width)
                .map(|c| self.0.iter().take_while(|&&r| r > c).count())
                .collect(),
        )
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Boxes as `(row, col)`, 0-based, in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.part(row) - col - 1;
        let leg = self.conjugate_part(col) - row - 1;
        arm + leg + 1
    }

    fn conjugate_part(&self, col: usize) -> usize {
        self.0.iter().take_while(|&&r| r > col).count()
    }

    /// Every part occurs an even number of times (`λ'` has even parts).
    pub fn has_paired_parts(&self) -> bool {
        self.len().is_multiple_of(2) && self.0.chunks(2).all(|c| c[0] == c[1])
    }

    pub fn all_parts_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Partitions obtained by deleting one removable box.
    pub fn remove_one_box(&self) -> Vec<Partition> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| {
                let mut p = self.0.clone();
                p[i] -= 1;
                Partition::from_unsorted(p)
            })
            .collect()
    }

    /// Partitions obtained by adding one box.
    pub fn add_one_box(&self) -> Vec<Partition> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i - 1) > self.part(i))
            .map(|i| {
                let mut p = self.0.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                Partition(p)
            })
            .collect()
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    /// `[3,1,1]`, with `[0]` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "[0]");
        }
        let body: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", body.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `3,1,1`, `[3,1,1]`, `(3,1,1)`, `1^5`, `2^2,1^3`, `0` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_matches(|c| matches!(c, '[' | ']' | '(' | ')'));
        let mut parts = Vec::new();
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let bad = || Error::Parse(format!("bad partition token {tok:?}"));
            match tok.split_once('^') {
                Some((p, e)) => {
                    let p: usize = p.trim().parse().map_err(|_| bad())?;
                    let e: usize = e.trim().parse().map_err(|_| bad())?;
                    parts.extend(std::iter::repeat_n(p, e));
                }
                None => parts.push(tok.parse().map_err(|_| bad())?),
            }
        }
        Partition::new(parts)
    }
}

/// All partitions of `n` in reverse lexicographic order (`(n)` first).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
