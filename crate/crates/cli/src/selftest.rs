use jcoker::brauer::{admissible_shapes, check_relations, ram_character, span_equality_check};
use jcoker::combinatorics::{
    brauer_dim, decomposition_dimension, gl_dimension, module_dimension, mult_gl_in_free_lie, partitions,
    sp_decomposition, witt_rank, Partition, Source,
};
use jcoker::detector::{detect, detect_forced, Verdict};
use jcoker::free_lie::Family;
use jcoker::identities::{
    alternating_binomial_sum, corollary_identity_holds, rotation_identity_holds, shift_identity_failures,
};
use jcoker::random::random_panel;
use jcoker::tensor::SymplecticSpace;
use num_bigint::BigUint;
use serde_json::json;

use crate::commands::{CmdResult, Output};
use crate::config::{Format, RunConfig};
use crate::Level;

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: jcoker::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn relations(pairs: &[(usize, usize)], seed: u64) -> Check {
    for &(k, g) in pairs {
        ensure(check_relations(k, g, seed), || format!("relations fail at k={k}, g={g}"))?;
    }
    Ok(())
}

fn rotation_and_shift(full: bool) -> Check {
    let mut cases = vec![(Family::Power, 3, 5)];
    if full {
        cases.extend([(Family::Power, 5, 7), (Family::Wedge, 5, 7)]);
    }
    for (family, k, g) in cases {
        for r in 2..=k + 1 {
            if family == Family::Wedge && r % 4 != 2 {
                continue;
            }
            ensure(lib(rotation_identity_holds(family, k, g, r))?, || format!("rotation identity {family} k={k} r={r}"))?;
        }
        let bad = lib(shift_identity_failures(family, k, g))?;
        ensure(bad.is_empty(), || format!("shift identity {family} k={k} fails at {bad:?}"))?;
    }
    for k in (5..=29).step_by(4) {
        ensure(alternating_binomial_sum(k) == 0, || format!("alternating sum nonzero at k={k}"))?;
    }
    Ok(())
}

fn decompositions(k_max: usize) -> Check {
    for k in 1..=k_max {
        let g = k + 2;
        for source in [Source::H, Source::Cyclic, Source::TensorPower] {
            let d = lib(sp_decomposition(source, k, g))?;
            ensure(decomposition_dimension(&d, g) == module_dimension(source, k, g), || {
                format!("{source} k={k}: dimensions disagree")
            })?;
        }
    }
    Ok(())
}

fn witt_cross_check(k_max: usize) -> Check {
    for n in [6usize, 8] {
        for k in 1..=k_max {
            let mut total = BigUint::default();
            for lam in partitions(k).into_iter().filter(|l| l.len() <= n) {
                total += gl_dimension(&lam, n) * lib(mult_gl_in_free_lie(&lam, n))?;
            }
            ensure(total == BigUint::from(witt_rank(n as u64, k as u64)), || format!("witt mismatch n={n} k={k}"))?;
        }
    }
    Ok(())
}

fn ram_identity(k_max: usize) -> Check {
    for k in 1..=k_max {
        let g = k + 1;
        let id = Partition::column(k);
        for lam in admissible_shapes(k, g) {
            let chi = lib(ram_character(&lam, &id, g))?;
            ensure(chi as u128 == lib(brauer_dim(&lam, k, g))?, || format!("ram({lam}) at identity, k={k}"))?;
        }
    }
    Ok(())
}

fn corollary(seed: u64) -> Check {
    for k in 2..=3 {
        for t in random_panel(seed, lib(SymplecticSpace::new(k + 2))?, k + 2, 4, 5) {
            ensure(lib(corollary_identity_holds(&t, k))?, || format!("corollary identity fails at k={k}"))?;
        }
    }
    Ok(())
}

fn detection(family: Family, k: usize, g: usize, scalar: &str) -> Check {
    let r = lib(detect(family, k, g))?;
    ensure(r.verdict == Verdict::Detected && r.closed_form_agrees, || format!("{family} k={k}: verdict {:?}", r.verdict))?;
    ensure(r.scalar.as_deref() == Some(scalar), || format!("{family} k={k}: scalar {:?}, expected {scalar}", r.scalar))
}

fn negative_control() -> Check {
    let r = lib(detect_forced(Family::Wedge, 4, 6))?;
    ensure(r.verdict != Verdict::Detected, || "[1^4] candidate was detected".into())
}

fn spans() -> Check {
    let cases = [(Partition::column(2), 0, 2), (Partition::empty(), 1, 2), (Partition::row(1), 1, 3)];
    for (lam, j, k) in cases {
        ensure(lib(span_equality_check(&lam, j, k, k + 2))?, || format!("span check {lam}, j={j}"))?;
    }
    Ok(())
}

type CheckFn = Box<dyn Fn() -> Check>;

pub fn run(config: &RunConfig, level: Level) -> CmdResult {
    let full = level == Level::Full;
    let seed = config.seed;
    let mut checks: Vec<(&str, CheckFn)> = vec![
        ("brauer relations", Box::new(move || relations(&[(2, 2), (3, 3)], seed))),
        ("rotation and shift identities", Box::new(move || rotation_and_shift(false))),
        ("decomposition dimensions", Box::new(|| decompositions(3))),
        ("witt cross-check", Box::new(|| witt_cross_check(5))),
        ("ram characters at identity", Box::new(|| ram_identity(4))),
        ("corollary identity", Box::new(move || corollary(seed))),
        ("detect [k] k=3", Box::new(|| detection(Family::Power, 3, 5, "-16/1"))),
    ];
    if full {
        checks.extend([
            ("brauer relations k=4", Box::new(move || relations(&[(4, 4)], seed)) as Box<dyn Fn() -> Check>),
            ("identities at k=5", Box::new(|| rotation_and_shift(true))),
            ("decomposition dimensions k=4", Box::new(|| decompositions(4))),
            ("ram characters k<=6", Box::new(|| ram_identity(6))),
            ("span equality", Box::new(spans)),
            ("detect [k] k=5", Box::new(|| detection(Family::Power, 5, 7, "-24/1"))),
            ("detect [1^k] k=5", Box::new(|| detection(Family::Wedge, 5, 7, "-32/1"))),
            ("negative control [1^4]", Box::new(negative_control)),
        ]);
    }
    let results: Vec<(&str, Check)> = checks.iter().map(|(name, f)| (*name, f())).collect();
    let failed = results.iter().filter(|(_, r)| r.is_err()).count();
    let text = match config.format_or(Format::Text) {
        Format::Json => {
            let items: Vec<_> = results
                .iter()
                .map(|(name, r)| json!({ "check": name, "passed": r.is_ok(), "detail": r.as_ref().err() }))
                .collect();
            serde_json::to_string_pretty(&json!({ "level": if full { "full" } else { "fast" }, "failed": failed, "checks": items }))
                .expect("json")
                + "\n"
        }
        Format::Csv => crate::commands::to_csv(
            &["check".into(), "passed".into(), "detail".into()],
            &results
                .iter()
                .map(|(name, r)| vec![name.to_string(), r.is_ok().to_string(), r.clone().err().unwrap_or_default()])
                .collect::<Vec<_>>(),
        )?,
        Format::Text => {
            let mut s: String = results
                .iter()
                .map(|(name, r)| match r {
                    Ok(()) => format!("PASS {name}\n"),
                    Err(e) => format!("FAIL {name}: {e}\n"),
                })
                .collect();
            s.push_str(&format!("{} of {} checks passed\n", results.len() - failed, results.len()));
            s
        }
    };
    Ok(Output { text, inconsistent: failed > 0 })
}
