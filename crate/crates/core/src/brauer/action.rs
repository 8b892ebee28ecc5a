use std::fmt;

use super::diagram::BrauerDiagram;
use super::element::{multiply, BrauerElement};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::random::random_panel;
use crate::rational::{int, Coeff};
use crate::tensor::{sp_maximal_vector, Permutation, SparseTensor, SymplecticSpace, Word};

/// A generator of `B_k(−2g)`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    S(usize),
    Gamma(usize),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::S(i) => write!(f, "s{i}"),
            Generator::Gamma(i) => write!(f, "γ{i}"),
        }
    }
}

impl Generator {
    fn diagram(self, k: usize) -> BrauerDiagram {
        match self {
            Generator::S(i) => BrauerDiagram::s(k, i),
            Generator::Gamma(i) => BrauerDiagram::gamma(k, i),
        }
    }
}

fn check_index(t: &SparseTensor, i: usize) -> Result<()> {
    if i == 0 || i >= t.degree() {
        return Err(Error::IndexOutOfRange { index: i, max: t.degree().saturating_sub(1) });
    }
    Ok(())
}

/// Twisted action of one generator: `s_j` is minus the swap of places
/// `j, j+1`; `γ_j` sends `w` to `−⟨w_j, w_{j+1}⟩ · (w with ω at j, j+1)`.
pub fn act_generator(t: &SparseTensor, gen: Generator) -> Result<SparseTensor> {
    match gen {
        Generator::S(j) => {
            check_index(t, j)?;
            Ok(-t.permuted(&Permutation::s(t.degree(), j))?)
        }
        Generator::Gamma(j) => {
            check_index(t, j)?;
            let space = t.space();
            Ok(t.map_words(t.degree(), |w, c, emit| {
                let pair = space.pairing_unchecked(w[j - 1] as usize, w[j] as usize);
                if pair == 0 {
                    return;
                }
                let base: Coeff = c * int(-pair);
                for r in 1..=space.dim() {
                    let (d, s) = space.dual_unchecked(r);
                    let mut nw: Word = w.clone();
                    nw[j - 1] = r as u8;
                    nw[j] = d as u8;
                    emit(nw, if s == 1 { base.clone() } else { -&base });
                }
            }))
        }
    }
}

fn act_signed_perm(t: &SparseTensor, p: &Permutation) -> Result<SparseTensor> {
    let u = t.permuted(p)?;
    Ok(if p.sign() == 1 { u } else { -u })
}

/// Twisted action of a single diagram, via `D = P_1 · γ_1 γ_3 ⋯ γ_{2c−1} · P_2`
/// with permutation diagrams `P_1, P_2`.
pub fn act_diagram(t: &SparseTensor, d: &BrauerDiagram) -> Result<SparseTensor> {
    let k = d.k();
    if t.degree() != k {
        return Err(Error::DegreeMismatch { expected: k, found: t.degree() });
    }
    let cups: Vec<(usize, usize)> = (0..k).filter(|&a| d.partner(a) < k && a < d.partner(a)).map(|a| (a, d.partner(a))).collect();
    let caps: Vec<(usize, usize)> = (k..2 * k)
        .filter(|&a| d.partner(a) >= k && a < d.partner(a))
        .map(|a| (a - k, d.partner(a) - k))
        .collect();
    let through: Vec<(usize, usize)> = (0..k).filter(|&a| d.partner(a) >= k).map(|a| (a, d.partner(a) - k)).collect();
    let c = cups.len();
    // σ(bottom) = top, 0-based.
    let mut p1 = vec![0usize; k];
    let mut p2 = vec![0usize; k];
    for (i, &(a, b)) in cups.iter().enumerate() {
        p1[2 * i] = a;
        p1[2 * i + 1] = b;
    }
    for (i, &(x, y)) in caps.iter().enumerate() {
        p2[x] = 2 * i;
        p2[y] = 2 * i + 1;
    }
    for (m, &(x, y)) in through.iter().enumerate() {
        p1[2 * c + m] = x;
        p2[y] = 2 * c + m;
    }
    let to_perm = |v: &[usize]| Permutation::from_images(&v.iter().map(|x| x + 1).collect::<Vec<_>>()).expect("bijection");
    let mut u = act_signed_perm(t, &to_perm(&p1))?;
    for i in 0..c {
        u = act_generator(&u, Generator::Gamma(2 * i + 1))?;
    }
    act_signed_perm(&u, &to_perm(&p2))
}

/// `t · a` for `a ∈ B_k(−2g)`.
pub fn act_twisted(t: &SparseTensor, a: &BrauerElement) -> Result<SparseTensor> {
    if t.degree() != a.k() {
        return Err(Error::DegreeMismatch { expected: a.k(), found: t.degree() });
    }
    if t.g() != a.g() {
        return Err(Error::GenusMismatch { left: t.g(), right: a.g() });
    }
    let mut out = SparseTensor::zero(t.space(), t.degree());
    for (d, c) in a.iter() {
        out = out.try_add(&act_diagram(t, d)?.scale(c))?;
    }
    Ok(out)
}

struct Relation {
    lhs: Vec<Generator>,
    rhs: Vec<Generator>,
    scale: i64,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |w: &[Generator]| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.iter().map(Generator::to_string).collect::<Vec<_>>().join("·")
            }
        };
        if self.scale == 1 {
            write!(f, "{} = {}", word(&self.lhs), word(&self.rhs))
        } else {
            write!(f, "{} = ({})·{}", word(&self.lhs), self.scale, word(&self.rhs))
        }
    }
}

fn relations(k: usize, g: usize) -> Vec<Relation> {
    use Generator::{Gamma as G, S};
    let rel = |lhs: Vec<Generator>, rhs: Vec<Generator>| Relation { lhs, rhs, scale: 1 };
    let mut out = Vec::new();
    for i in 1..k {
        out.push(rel(vec![S(i), S(i)], vec![]));
        out.push(Relation { lhs: vec![G(i), G(i)], rhs: vec![G(i)], scale: -2 * g as i64 });
        out.push(rel(vec![G(i), S(i)], vec![G(i)]));
        out.push(rel(vec![S(i), G(i)], vec![G(i)]));
        for j in i + 2..k {
            out.push(rel(vec![S(i), S(j)], vec![S(j), S(i)]));
            out.push(rel(vec![S(i), G(j)], vec![G(j), S(i)]));
            out.push(rel(vec![S(j), G(i)], vec![G(i), S(j)]));
            out.push(rel(vec![G(i), G(j)], vec![G(j), G(i)]));
        }
    }
    for i in 1..k.saturating_sub(1) {
        out.push(rel(vec![S(i), S(i + 1), S(i)], vec![S(i + 1), S(i), S(i + 1)]));
        out.push(rel(vec![G(i), G(i + 1), G(i)], vec![G(i)]));
        out.push(rel(vec![G(i + 1), G(i), G(i + 1)], vec![G(i + 1)]));
        out.push(rel(vec![S(i), G(i + 1), G(i)], vec![S(i + 1), G(i)]));
        out.push(rel(vec![G(i + 1), G(i), S(i + 1)], vec![G(i + 1), S(i)]));
    }
    out
}

fn product(k: usize, g: usize, word: &[Generator]) -> BrauerElement {
    word.iter().fold(BrauerElement::identity(k, g), |acc, &x| {
        multiply(&acc, &BrauerElement::from_diagram(x.diagram(k), g)).expect("same k and g")
    })
}

fn act_word(t: &SparseTensor, word: &[Generator]) -> Result<SparseTensor> {
    word.iter().try_fold(t.clone(), |acc, &x| act_generator(&acc, x))
}

/// Every defining relation that fails, either in the diagram calculus or
/// as operators on a seeded random panel of tensors.
pub fn relation_failures(k: usize, g: usize, seed: u64) -> Result<Vec<String>> {
    if k < 2 {
        return Err(Error::Precondition("relations need k >= 2".into()));
    }
    let space = SymplecticSpace::new(g)?;
    let panel = random_panel(seed, space, k, 6, 4);
    let mut failures = Vec::new();
    for rel in relations(k, g) {
        let lhs = product(k, g, &rel.lhs);
        let rhs = product(k, g, &rel.rhs).scale(&int(rel.scale));
        if lhs != rhs {
            failures.push(format!("diagram: {rel}"));
        }
        for t in &panel {
            let l = act_word(t, &rel.lhs)?;
            let r = act_word(t, &rel.rhs)?.scale(&int(rel.scale));
            if l != r {
                failures.push(format!("operator: {rel}"));
                break;
            }
            if act_twisted(t, &lhs)? != l {
                failures.push(format!("diagram action: {rel}"));
                break;
            }
        }
    }
    Ok(failures)
}

/// True iff every defining relation holds both diagrammatically and on a
/// seeded random panel under the twisted action.
pub fn check_relations(k: usize, g: usize, seed: u64) -> bool {
    matches!(relation_failures(k, g, seed), Ok(f) if f.is_empty())
}

/// Whether `v_λ · B_k(−2g)` and `v_λ · Q S_k` have the same span, where
/// `v_λ = ω^{⊗j} ⊗ (column wedges of λ)` and `k = |λ| + 2j`.
pub fn span_equality_check(lambda: &Partition, j: usize, k: usize, g: usize) -> Result<bool> {
    if lambda.size() + 2 * j != k {
        return Err(Error::DegreeMismatch { expected: k, found: lambda.size() + 2 * j });
    }
    let space = SymplecticSpace::new(g)?;
    let v = sp_maximal_vector(space, lambda, j)?;
    let mut brauer = Echelon::new();
    for d in BrauerDiagram::all(k) {
        brauer.insert(&act_diagram(&v, &d)?);
    }
    let mut sym = Echelon::new();
    for p in Permutation::all(k) {
        sym.insert(&act_signed_perm(&v, &p)?);
    }
    Ok(brauer.rank() == sym.rank())
}
