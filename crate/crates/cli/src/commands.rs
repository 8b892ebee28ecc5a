use std::collections::BTreeMap;

use jcoker::brauer::character_table;
use jcoker::combinatorics::{
    decomposition_dimension, gl_to_sp_branching, kw_multiplicity, module_dimension, sp_decomposition, witt_rank, Partition,
    Source,
};
use jcoker::detector::{assess, detect as run_detect, detect_forced, DetectionReport, Verdict};
use jcoker::free_lie::{phi_candidate_unchecked, Family};
use jcoker::rational::one;
use jcoker::tensor::word;
use serde::Serialize;
use serde_json::json;

use crate::config::{Format, RunConfig};
use crate::Fault;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] jcoker::Error),
    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
}

pub type CmdResult = Result<Output, CliError>;

/// Rendered command output plus whether a self-check failed.
pub struct Output {
    pub text: String,
    pub inconsistent: bool,
}

impl Output {
    pub fn ok(text: String) -> Self {
        Output { text, inconsistent: false }
    }
}

pub fn to_csv(header: &[String], rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn table(header: &[&str], rows: Vec<Vec<String>>, format: Format, json: serde_json::Value) -> CmdResult {
    let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    Ok(Output::ok(match format {
        Format::Json => to_json(&json),
        Format::Csv => to_csv(&header, &rows)?,
        Format::Text => {
            let mut s = header.join("\t");
            s.push('\n');
            for r in &rows {
                s.push_str(&r.join("\t"));
                s.push('\n');
            }
            s
        }
    }))
}

pub fn witt(config: &RunConfig, n: u64, k_max: u64) -> CmdResult {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let ranks: Vec<u128> = (1..=k_max).map(|k| witt_rank(n, k)).collect();
    let rows = ranks.iter().enumerate().map(|(i, r)| vec![(i + 1).to_string(), r.to_string()]).collect();
    let json = json!({ "n": n, "ranks": ranks.iter().map(|r| r.to_string()).collect::<Vec<_>>() });
    table(&["k", "rank"], rows, config.format_or(Format::Text), json)
}

fn components_json(map: &BTreeMap<Partition, u64>) -> serde_json::Value {
    map.iter().map(|(p, m)| json!({ "partition": p, "multiplicity": m })).collect()
}

pub fn decompose(config: &RunConfig, source: Source) -> CmdResult {
    let (k, g) = config.kg();
    let mut decomposition = sp_decomposition(source, k, g)?;
    if config.fault == Some(Fault::DecomposeMultiplicity) {
        if let Some(m) = decomposition.values_mut().next() {
            *m += 1;
        }
    }
    let expected = module_dimension(source, k, g);
    let found = decomposition_dimension(&decomposition, g);
    let rows = decomposition.iter().map(|(p, m)| vec![p.to_string(), m.to_string()]).collect();
    let json = json!({
        "source": source.to_string(),
        "k": k,
        "g": g,
        "dimension": expected.to_string(),
        "components": components_json(&decomposition),
    });
    let mut out = table(&["partition", "multiplicity"], rows, config.format_or(Format::Text), json)?;
    if expected != found {
        eprintln!("error: components account for dimension {found}, module has dimension {expected}");
        out.inconsistent = true;
    }
    Ok(out)
}

fn report_rows(r: &DetectionReport) -> Vec<Vec<String>> {
    let opt = |s: Option<String>| s.unwrap_or_default();
    let verdict = serde_json::to_value(r.verdict).expect("enum").as_str().unwrap_or_default().to_string();
    vec![
        vec!["family".into(), r.family.to_string()],
        vec!["k".into(), r.k.to_string()],
        vec!["g".into(), r.g.to_string()],
        vec!["in_h".into(), r.in_h.to_string()],
        vec!["maximal".into(), r.maximal.to_string()],
        vec!["weight".into(), opt(r.weight_partition().map(|p| p.to_string()))],
        vec!["contraction_terms".into(), r.contraction_image.len().to_string()],
        vec!["scalar".into(), opt(r.scalar.clone())],
        vec!["closed_form_agrees".into(), r.closed_form_agrees.to_string()],
        vec!["out_of_theorem_range".into(), r.out_of_theorem_range.to_string()],
        vec!["mult_in_h".into(), opt(r.uniqueness.map(|u| u.mult_in_h.to_string()))],
        vec!["mult_in_cyclic".into(), opt(r.uniqueness.map(|u| u.mult_in_cyclic.to_string()))],
        vec!["verdict".into(), verdict],
    ]
}

pub fn detect(config: &RunConfig, family: Family, force: bool) -> CmdResult {
    let (k, g) = config.kg();
    let report = if config.fault == Some(Fault::DetectCandidate) {
        let out_of_range = family.check_range(k, g).is_err();
        if out_of_range && !force {
            family.check_range(k, g)?;
        }
        let mut phi = phi_candidate_unchecked(family, k, g)?;
        phi.add_term(word(&vec![1; k + 2]), one());
        assess(family, k, g, &phi, out_of_range)?
    } else if force {
        detect_forced(family, k, g)?
    } else {
        run_detect(family, k, g)?
    };
    let text = match config.format_or(Format::Json) {
        Format::Json => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Csv => to_csv(&["field".into(), "value".into()], &report_rows(&report))?,
        Format::Text => report_rows(&report).iter().map(|r| format!("{}: {}\n", r[0], r[1])).collect(),
    };
    if report.verdict == Verdict::Inconsistent {
        eprintln!("error: the candidate disagrees with its closed form");
    }
    Ok(Output { text, inconsistent: report.verdict == Verdict::Inconsistent })
}

pub fn brauer_char(config: &RunConfig) -> CmdResult {
    let (k, g) = config.kg();
    let t = character_table(k, g)?;
    let mut header = vec!["lambda".to_string()];
    header.extend(t.classes.iter().map(ToString::to_string));
    let rows: Vec<Vec<String>> = t
        .rows
        .iter()
        .zip(&t.values)
        .map(|(lam, vals)| std::iter::once(lam.to_string()).chain(vals.iter().map(ToString::to_string)).collect())
        .collect();
    Ok(Output::ok(match config.format_or(Format::Csv) {
        Format::Json => to_json(&t),
        Format::Csv => to_csv(&header, &rows)?,
        Format::Text => std::iter::once(&header).chain(&rows).map(|r| r.join("\t") + "\n").collect(),
    }))
}

pub fn kw(config: &RunConfig) -> CmdResult {
    let shape = &config.partitions[0];
    let m = shape.size();
    if m == 0 {
        return Err(CliError::Usage("shape must be nonempty".into()));
    }
    let mults = (0..m).map(|j| kw_multiplicity(shape, j)).collect::<Result<Vec<_>, _>>()?;
    let rows = mults.iter().enumerate().map(|(j, x)| vec![j.to_string(), x.to_string()]).collect();
    let json = json!({ "shape": shape, "multiplicities": mults });
    table(&["j", "multiplicity"], rows, config.format_or(Format::Text), json)
}

pub fn branch(config: &RunConfig) -> CmdResult {
    let shape = &config.partitions[0];
    let g = config.g.expect("branch takes g");
    if shape.len() > 2 * g {
        return Err(CliError::Usage(format!("{shape} has more than 2g = {} rows", 2 * g)));
    }
    let map = gl_to_sp_branching(shape, g);
    let rows = map.iter().map(|(p, m)| vec![p.to_string(), m.to_string()]).collect();
    let json = json!({ "shape": shape, "g": g, "components": components_json(&map) });
    table(&["partition", "multiplicity"], rows, config.format_or(Format::Text), json)
}
