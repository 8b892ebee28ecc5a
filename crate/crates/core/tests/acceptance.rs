//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use jcoker::brauer::{admissible_shapes, check_relations, ram_character, relation_failures, span_equality_check};
use jcoker::combinatorics::{
    brauer_dim, gl_dimension, kw_multiplicity, mult_gl_in_free_lie, mult_sp_in_module, partitions, sp_decomposition,
    witt_rank, Partition, Source,
};
use jcoker::detector::{detect_forced, Verdict};
use jcoker::free_lie::{closed_form_phi, is_in_h, phi_candidate, Family};
use jcoker::identities::{
    alternating_binomial_sum, corollary_identity_holds, rotation_identity_holds, shift_identity_failures,
};
use jcoker::random::random_panel;
use jcoker::rational::{int, to_pq};
use jcoker::tensor::{cont_k, cyclic_project, wedge, SymplecticSpace};
use jcoker::watermark;
use jcoker::weights::{is_maximal, Mode};
use num_bigint::BigUint;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn space(g: usize) -> SymplecticSpace {
    SymplecticSpace::new(g).unwrap()
}

fn wedge_family_k5() {
    let (k, g) = (5, 7);
    watermark::reset();
    let phi = phi_candidate(Family::Wedge, k, g).unwrap();
    assert_eq!(phi, closed_form_phi(Family::Wedge, k, g).unwrap(), "candidate vs closed form");
    assert!(is_in_h(&phi, k).unwrap(), "not in h");
    let (maximal, weight) = is_maximal(&phi, Mode::Sp).unwrap();
    assert!(maximal, "not maximal");
    assert_eq!(weight.unwrap().to_partition(), Some(Partition::column(5)));
    let image = cyclic_project(&cont_k(&phi).unwrap());
    let seed = cyclic_project(&wedge(space(g), &[1, 2, 3, 4, 5]).unwrap());
    assert_eq!(image, seed.scale(&int(-4 * (g as i64 + 1))), "c_5(φ) ≠ −4(g+1)·pr(wedge)");
    assert!(watermark::peak() <= 1_000_000, "peak live terms {}", watermark::peak());
}

fn power_family() {
    let mut wrong = Vec::new();
    for (k, g, want) in [(3, 5, -8i64), (5, 7, -12)] {
        let phi = phi_candidate(Family::Power, k, g).unwrap();
        let image = cyclic_project(&cont_k(&phi).unwrap());
        let seed = cyclic_project(&Family::Power.seed(space(g), k).unwrap());
        let got = image.ratio_to(&seed).expect("proportional to pr(e_1^k)");
        if got != int(want) {
            wrong.push(format!("k={k}, g={g}: scalar {}, expected {want}/1", to_pq(&got)));
        }
    }
    assert!(wrong.is_empty(), "{}", wrong.join("; "));
}

fn h_table() {
    let expected: [(usize, Vec<(Partition, u64)>); 4] = [
        (1, vec![(p(&[1, 1, 1]), 1), (p(&[1]), 1)]),
        (2, vec![(p(&[2, 2]), 1), (p(&[1, 1]), 1), (Partition::empty(), 1)]),
        (3, vec![(p(&[3, 1, 1]), 1), (p(&[2, 1]), 1), (p(&[3]), 1)]),
        (
            4,
            vec![
                (p(&[4, 2]), 1),
                (p(&[3, 1, 1, 1]), 1),
                (p(&[2, 2, 2]), 1),
                (p(&[3, 1]), 2),
                (p(&[2, 1, 1]), 2),
                (p(&[2]), 3),
            ],
        ),
    ];
    for (k, want) in expected {
        let want: BTreeMap<Partition, u64> = want.into_iter().collect();
        assert_eq!(sp_decomposition(Source::H, k, k + 2).unwrap(), want, "k={k}");
    }
}

fn multiplicity_props() {
    let h = |lam: Partition, k: usize| mult_sp_in_module(&lam, Source::H, k, k + 2).unwrap();
    for k in [3, 5, 7] {
        assert_eq!(h(Partition::row(k), k), 1, "[{k}] in h");
    }
    for k in [2, 4, 6] {
        assert_eq!(h(Partition::row(k), k), 0, "[{k}] in h");
    }
    for k in [5, 6] {
        assert_eq!(h(Partition::column(k), k), 1, "[1^{k}] in h");
    }
    for k in [3, 4, 7, 8] {
        assert_eq!(h(Partition::column(k), k), 0, "[1^{k}] in h");
    }
    for k in 1..=7 {
        let m = mult_sp_in_module(&Partition::column(k), Source::Cyclic, k, k + 2).unwrap();
        assert_eq!(m, (k % 2) as u64, "[1^{k}] in cyclic");
    }
}

fn kw_tables() {
    let kw = |parts: Vec<usize>, j: usize| kw_multiplicity(&Partition::new(parts).unwrap(), j).unwrap();
    for m in 2..=12usize {
        let odd = m % 2 == 1;
        assert_eq!((kw(vec![m], 0), kw(vec![m], 1)), (1, 0), "(m), m={m}");
        assert_eq!((kw(vec![m - 1, 1], 0), kw(vec![m - 1, 1], 1)), (0, 1), "(m-1,1), m={m}");
        let col = vec![1; m];
        assert_eq!((kw(col.clone(), 0), kw(col, 1)), (odd as u64, (m == 2) as u64), "(1^m), m={m}");
        let mut hook = vec![2];
        hook.extend(vec![1; m - 2]);
        assert_eq!((kw(hook.clone(), 0), kw(hook, 1)), (!odd as u64, (m != 2) as u64), "(2,1^(m-2)), m={m}");
        if m >= 3 {
            let lam = vec![m - 2, 1, 1];
            let (triv, chi1) = if odd { ((m - 1) / 2, (m - 3) / 2) } else { ((m - 2) / 2, (m - 2) / 2) };
            assert_eq!((kw(lam.clone(), 0), kw(lam, 1)), (triv as u64, chi1 as u64), "(m-2,1^2), m={m}");
        }
        if m >= 4 {
            let mut lam = vec![2, 2];
            lam.extend(vec![1; m - 4]);
            let want = if odd {
                (m - 3) / 2
            } else if m % 4 == 0 {
                (m - 4) / 2
            } else {
                (m - 2) / 2
            };
            assert_eq!(kw(lam, 1), want as u64, "(2^2,1^(m-4)), m={m}");
        }
    }
}

fn corollary_panel() {
    for k in 2..=4 {
        for (i, t) in random_panel(6000 + k as u64, space(k + 2), k + 2, 5, 50).iter().enumerate() {
            assert!(corollary_identity_holds(t, k).unwrap(), "k={k}, tensor {i}");
        }
    }
}

fn brauer_suite() {
    for (k, g) in [(3, 3), (4, 4)] {
        assert!(check_relations(k, g, 7), "relations at k={k}, g={g}");
    }
    for (k, g) in [(2, 1), (3, 2), (4, 3)] {
        let f = relation_failures(k, g, 99).unwrap();
        assert!(f.is_empty(), "k={k} g={g}: {f:?}");
    }
    for k in 1..=6 {
        let g = k + 1;
        for lam in admissible_shapes(k, g) {
            let chi = ram_character(&lam, &Partition::column(k), g).unwrap();
            assert_eq!(chi as u128, brauer_dim(&lam, k, g).unwrap(), "{lam}, k={k}");
        }
    }
    for (lam, j, k) in [(Partition::column(2), 0, 2), (Partition::empty(), 1, 2), (Partition::row(1), 1, 3)] {
        assert!(span_equality_check(&lam, j, k, k + 2).unwrap(), "span {lam}, j={j}");
    }
}

/// Lyndon words of length `k` over `n` letters (Duval's generation).
fn lyndon_count(n: usize, k: usize) -> u128 {
    let mut w = vec![0usize];
    let mut count = 0;
    while !w.is_empty() {
        if w.len() == k {
            count += 1;
        }
        let base = w.len();
        while w.len() < k {
            w.push(w[w.len() - base]);
        }
        while w.last() == Some(&(n - 1)) {
            w.pop();
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    count
}

fn witt_cross_check() {
    for n in [6usize, 8] {
        for k in 1..=6 {
            let total: BigUint = partitions(k)
                .iter()
                .map(|lam| gl_dimension(lam, n) * BigUint::from(mult_gl_in_free_lie(lam, n).unwrap()))
                .sum();
            assert_eq!(total, BigUint::from(witt_rank(n as u64, k as u64)), "n={n}, k={k}");
        }
    }
    for k in 1..=10 {
        assert_eq!(witt_rank(2, k as u64), lyndon_count(2, k), "Lyndon words of length {k}");
    }
}

fn step_identities() {
    let mut cases = vec![(Family::Wedge, 5, 7)];
    cases.extend([3, 5].map(|k| (Family::Power, k, k + 2)));
    for (family, k, g) in cases {
        for r in 2..=k + 1 {
            if family == Family::Wedge && r % 4 != 2 {
                continue;
            }
            assert!(rotation_identity_holds(family, k, g, r).unwrap(), "{family} rotation k={k}, r={r}");
        }
        assert_eq!(shift_identity_failures(family, k, g).unwrap(), vec![], "{family} shift k={k}");
    }
    for k in (5..=29).step_by(4) {
        assert_eq!(alternating_binomial_sum(k), 0, "k={k}");
    }
}

fn negative_controls() {
    let r = detect_forced(Family::Wedge, 4, 6).unwrap();
    assert!(!(r.in_h && r.maximal && !r.contraction_image.is_zero()), "[1^4] passes every stage");
    assert_ne!(r.verdict, Verdict::Detected);
    for k in 2..=7 {
        let pr = cyclic_project(&wedge(space(k), &(1..=k).collect::<Vec<_>>()).unwrap());
        assert_eq!(pr.is_zero(), k % 2 == 0, "pr(wedge(1..{k}))");
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 10] = [
        ("[1^k] reproduction at k=5, g=7", wedge_family_k5),
        ("[k] reproduction at k=3,5 with scalars −8, −12", power_family),
        ("h_{g,1}(k) decomposition table, k ≤ 4", h_table),
        ("[k] and [1^k] multiplicities in h and C", multiplicity_props),
        ("Kraśkiewicz–Weyman example tables, m ≤ 12", kw_tables),
        ("θ_P averaging identity on 50 random tensors", corollary_panel),
        ("Brauer relations, characters and spans", brauer_suite),
        ("Witt rank cross-checks", witt_cross_check),
        ("rotation, shift and alternating-sum identities", step_identities),
        ("negative controls", negative_controls),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {:>2}: FAIL  {name} ({secs:.2}s): {}", i + 1, msg.replace('\n', " "));
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
