use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tensor::Permutation;

/// A perfect matching on `2k` points: top row `0..k`, bottom row `k..2k`.
///
/// Stored as a partner array, which is canonical. A permutation diagram
/// joining top `p` to bottom `q` stands for the place permutation `σ` with
/// `σ(q) = p`, so stacking `D_1` over `D_2` matches the product `D_1 D_2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BrauerDiagram {
    k: usize,
    partner: Vec<u8>,
}

impl BrauerDiagram {
    pub fn identity(k: usize) -> Self {
        let partner = (0..2 * k).map(|p| ((p + k) % (2 * k)) as u8).collect();
        BrauerDiagram { k, partner }
    }

    /// From edges given as `(point, point)` with points `0..2k` (top first).
    pub fn from_edges(k: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![u8::MAX; 2 * k];
        if edges.len() != k {
            return Err(Error::Parse(format!("a {k}-diagram needs {k} edges, got {}", edges.len())));
        }
        for &(a, b) in edges {
            if a == b || a >= 2 * k || b >= 2 * k || partner[a] != u8::MAX || partner[b] != u8::MAX {
                return Err(Error::Parse(format!("bad edge ({a}, {b})")));
            }
            partner[a] = b as u8;
            partner[b] = a as u8;
        }
        Ok(BrauerDiagram { k, partner })
    }

    /// Diagram of a place permutation.
    pub fn from_permutation(p: &Permutation) -> Self {
        let k = p.degree();
        let mut partner = vec![0u8; 2 * k];
        for q in 1..=k {
            let top = p.image(q) - 1;
            let bottom = k + q - 1;
            partner[top] = bottom as u8;
            partner[bottom] = top as u8;
        }
        BrauerDiagram { k, partner }
    }

    /// `s_i`, 1-based.
    pub fn s(k: usize, i: usize) -> Self {
        Self::from_permutation(&Permutation::s(k, i))
    }

    /// `γ_i`: cup on top `i, i+1`, cap on bottom `i, i+1`, 1-based.
    pub fn gamma(k: usize, i: usize) -> Self {
        assert!(i >= 1 && i < k, "γ_{i} undefined for k = {k}");
        let mut d = Self::identity(k);
        let (a, b) = (i - 1, i);
        d.partner[a] = b as u8;
        d.partner[b] = a as u8;
        d.partner[k + a] = (k + b) as u8;
        d.partner[k + b] = (k + a) as u8;
        d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn partner(&self, point: usize) -> usize {
        self.partner[point] as usize
    }

    /// Edges `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..2 * self.k)
            .filter(|&a| a < self.partner(a))
            .map(|a| (a, self.partner(a)))
            .collect()
    }

    pub fn is_top(&self, point: usize) -> bool {
        point < self.k
    }

    /// Number of top–top edges.
    pub fn cup_count(&self) -> usize {
        (0..self.k).filter(|&a| self.partner(a) < self.k && a < self.partner(a)).count()
    }

    pub fn to_permutation(&self) -> Option<Permutation> {
        if self.cup_count() > 0 {
            return None;
        }
        let images: Vec<usize> = (0..self.k).map(|q| self.partner(self.k + q) + 1).collect();
        Permutation::from_images(&images).ok()
    }

    /// Every `k`-diagram, `(2k − 1)!!` of them.
    pub fn all(k: usize) -> Vec<BrauerDiagram> {
        fn go(partner: &mut Vec<u8>, k: usize, out: &mut Vec<BrauerDiagram>) {
            let Some(a) = partner.iter().position(|&p| p == u8::MAX) else {
                out.push(BrauerDiagram { k, partner: partner.clone() });
                return;
            };
            for b in a + 1..2 * k {
                if partner[b] == u8::MAX {
                    partner[a] = b as u8;
                    partner[b] = a as u8;
                    go(partner, k, out);
                    partner[a] = u8::MAX;
                    partner[b] = u8::MAX;
                }
            }
        }
        let mut out = Vec::new();
        go(&mut vec![u8::MAX; 2 * k], k, &mut out);
        out
    }
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = |p: usize| {
            if p < self.k {
                format!("t{}", p + 1)
            } else {
                format!("b{}", p - self.k + 1)
            }
        };
        let edges: Vec<String> = self.edges().into_iter().map(|(a, b)| format!("{}-{}", label(a), label(b))).collect();
        write!(f, "B[{}]", edges.join(" "))
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Stacks `d1` over `d2`, returning the resulting diagram and the number
/// of closed loops in the middle row.
pub fn compose_diagrams(d1: &BrauerDiagram, d2: &BrauerDiagram) -> Result<(BrauerDiagram, usize)> {
    if d1.k != d2.k {
        return Err(Error::DegreeMismatch { expected: d1.k, found: d2.k });
    }
    let k = d1.k;
    // Levels: 0..k top of d1, k..2k middle, 2k..3k bottom of d2.
    let mut parent: Vec<usize> = (0..3 * k).collect();
    let union = |a: usize, b: usize, parent: &mut Vec<usize>| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    };
    for (a, b) in d1.edges() {
        union(a, b, &mut parent);
    }
    for (a, b) in d2.edges() {
        union(a + k, b + k, &mut parent);
    }
    let mut outer_of_root: Vec<Vec<usize>> = vec![Vec::new(); 3 * k];
    for p in (0..k).chain(2 * k..3 * k) {
        let r = find(&mut parent, p);
        outer_of_root[r].push(p);
    }
    let mut loops = 0;
    let mut seen = vec![false; 3 * k];
    for p in k..2 * k {
        let r = find(&mut parent, p);
        if !seen[r] {
            seen[r] = true;
            if outer_of_root[r].is_empty() {
                loops += 1;
            }
        }
    }
    let mut partner = vec![0u8; 2 * k];
    let relabel = |p: usize| if p < k { p } else { p - k };
    for ends in outer_of_root.iter().filter(|e| !e.is_empty()) {
        debug_assert_eq!(ends.len(), 2);
        let (a, b) = (relabel(ends[0]), relabel(ends[1]));
        partner[a] = b as u8;
        partner[b] = a as u8;
    }
    Ok((BrauerDiagram { k, partner }, loops))
}
