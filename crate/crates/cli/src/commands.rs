//! Handlers for the single-shot subcommands. Inputs arrive in the text
//! serialization; outputs mirror it, with JSON variants carrying the
//! operation name and the inputs that produced each number.

use std::io::Write;

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::json;

use schurmatch::{
    asc_des_loop, bessel_theta, build_graph_with_bound, check_conjecture, descent_vector,
    enumerate_matchings, enumerate_syt, equivalence_class, forward, inverse, reduce, refine_by,
    schur_expand, shift_expand, short_chord_distribution, Matching, Partition, RefineKey,
    SchurOutcome, Tableau,
};

use crate::config::{OutputFormat, RunConfig};
use crate::report::{write_csv_rows, write_json};

fn parse_matching(text: &str) -> Result<Matching> {
    text.parse::<Matching>()
        .with_context(|| format!("cannot parse matching '{text}'"))
}

fn parse_tableau(text: &str) -> Result<Tableau> {
    text.parse::<Tableau>()
        .with_context(|| format!("cannot parse tableau '{text}'"))
}

#[derive(Serialize)]
struct OutcomeJson {
    symmetric: bool,
    schur_positive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    expansion: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual_at: Option<String>,
}

fn outcome_json(outcome: &SchurOutcome) -> Result<OutcomeJson> {
    Ok(match outcome {
        SchurOutcome::Symmetric(e) => OutcomeJson {
            symmetric: true,
            schur_positive: e.is_schur_positive(),
            expansion: Some(serde_json::to_value(e)?),
            residual_at: None,
        },
        SchurOutcome::NotSymmetric { witness, .. } => OutcomeJson {
            symmetric: false,
            schur_positive: false,
            expansion: None,
            residual_at: Some(witness.to_string()),
        },
    })
}

pub fn enumerate(out: &mut impl Write, cfg: &RunConfig, n: usize, f: usize) -> Result<()> {
    cfg.check_n(n)?;
    let ms = enumerate_matchings(n, f);
    match cfg.format {
        OutputFormat::Text => {
            for m in &ms {
                writeln!(out, "{m}")?;
            }
        }
        OutputFormat::Json => write_json(
            out,
            &json!({
                "op": "enumerate",
                "n": n,
                "f": f,
                "count": ms.len(),
                "matchings": ms.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            }),
        )?,
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = ms
                .iter()
                .enumerate()
                .map(|(i, m)| vec![i.to_string(), m.to_string()])
                .collect();
            write_csv_rows(out, &["index", "matching"], &rows)?;
        }
    }
    Ok(())
}

pub fn short(out: &mut impl Write, cfg: &RunConfig, text: &str) -> Result<()> {
    let m = parse_matching(text)?;
    let s = m.short_set();
    match cfg.format {
        OutputFormat::Json => write_json(
            out,
            &json!({
                "op": "short",
                "input": m.to_string(),
                "short": s.to_vec(),
            }),
        )?,
        _ => writeln!(out, "{s}")?,
    }
    Ok(())
}

pub fn core(out: &mut impl Write, cfg: &RunConfig, text: &str) -> Result<()> {
    let m = parse_matching(text)?;
    let r = reduce(&m);
    match cfg.format {
        OutputFormat::Json => write_json(
            out,
            &json!({
                "op": "core",
                "input": m.to_string(),
                "core": &r.core,
                "stable": r.stable,
                "unstable_chords": r.unstable_chords,
            }),
        )?,
        _ => {
            writeln!(out, "core {}", r.core)?;
            let stable: Vec<String> = r.stable.iter().map(|v| v.to_string()).collect();
            writeln!(out, "stable {{{}}}", stable.join(","))?;
        }
    }
    Ok(())
}

pub fn forward_cmd(out: &mut impl Write, cfg: &RunConfig, text: &str) -> Result<()> {
    let m = parse_matching(text)?;
    let (core, t) = forward(&m);
    match cfg.format {
        OutputFormat::Json => write_json(
            out,
            &json!({
                "op": "forward",
                "input": m.to_string(),
                "core": &core,
                "tableau": t.to_string(),
                "descents": t.descent_set().to_vec(),
            }),
        )?,
        _ => {
            writeln!(out, "core {core}")?;
            writeln!(out, "tableau {t}")?;
        }
    }
    Ok(())
}

pub fn inverse_cmd(
    out: &mut impl Write,
    cfg: &RunConfig,
    core_text: &str,
    tableau_text: &str,
) -> Result<()> {
    let core = parse_matching(core_text)?;
    let t = parse_tableau(tableau_text)?;
    let m = inverse(&core, &t)?;
    match cfg.format {
        OutputFormat::Json => write_json(
            out,
            &json!({
                "op": "inverse",
                "core": core.to_string(),
                "tableau": t.to_string(),
                "matching": &m,
            }),
        )?,
        _ => writeln!(out, "{m}")?,
    }
    Ok(())
}

pub fn classes(out: &mut impl Write, cfg: &RunConfig, n: usize, f: usize) -> Result<()> {
    cfg.check_n(n)?;
    // One row per class: representative core, class size, two-row shape.
    let mut seen = std::collections::HashSet::new();
    let mut rows: Vec<(String, usize, String)> = Vec::new();
    for m in enumerate_matchings(n, f) {
        let core = reduce(&m).core;
        if !seen.insert(core.clone()) {
            continue;
        }
        let class = equivalence_class(&m);
        let k = (n - core.n()) / 2;
        let shape = Partition::two_row(n, k).expect("k <= n/2");
        rows.push((core.to_string(), class.len(), shape.to_string()));
    }
    rows.sort();
    match cfg.format {
        OutputFormat::Text => {
            for (core, size, shape) in &rows {
                writeln!(out, "{core} {size} {shape}")?;
            }
        }
        OutputFormat::Json => write_json(
            out,
            &json!({
                "op": "classes",
                "n": n,
                "f": f,
                "classes": rows
                    .iter()
                    .map(|(core, size, shape)| json!({
                        "core": core,
                        "size": size,
                        "shape": shape,
                    }))
                    .collect::<Vec<_>>(),
            }),
        )?,
        OutputFormat::Csv => {
            let table: Vec<Vec<String>> = rows
                .iter()
                .map(|(c, s, sh)| vec![c.clone(), s.to_string(), sh.clone()])
                .collect();
            write_csv_rows(out, &["core", "size", "shape"], &table)?;
        }
    }
    Ok(())
}

pub enum ExpandTarget {
    Matchings { n: usize, f: usize },
    Syt { shape: Partition },
}

pub fn expand(out: &mut impl Write, cfg: &RunConfig, target: ExpandTarget) -> Result<()> {
    let cache = cfg.open_cache()?;
    let (label, v) = match target {
        ExpandTarget::Matchings { n, f } => {
            cfg.check_n(n)?;
            let ms = enumerate_matchings(n, f);
            (
                json!({"set": "matchings", "N": n, "f": f}),
                descent_vector(&ms, Matching::short_set, n)?,
            )
        }
        ExpandTarget::Syt { shape } => {
            cfg.check_n(shape.weight())?;
            let ts = enumerate_syt(&shape);
            (
                json!({"set": "syt", "shape": shape.parts()}),
                descent_vector(&ts, |t| t.descent_set(), shape.weight())?,
            )
        }
    };
    let outcome = schur_expand(&v, &cache)?;
    match cfg.format {
        OutputFormat::Json => write_json(
            out,
            &json!({
                "op": "expand",
                "input": label,
                "result": outcome_json(&outcome)?,
            }),
        )?,
        _ => match &outcome {
            SchurOutcome::Symmetric(e) => writeln!(out, "{e}")?,
            SchurOutcome::NotSymmetric { witness, count } => {
                writeln!(out, "not symmetric: residual {count} at {witness}")?
            }
        },
    }
    Ok(())
}

pub fn bessel(out: &mut impl Write, cfg: &RunConfig, n: usize) -> Result<()> {
    let theta = bessel_theta(n);
    let shifted = shift_expand(&theta, -1);
    let h: Vec<String> = (0..=n).map(|i| shifted.coeff(i).to_string()).collect();
    match cfg.format {
        OutputFormat::Json => {
            // Distributions stay exact as strings; they outgrow u64 fast.
            let coefficients: Vec<String> =
                (0..=n).map(|d| theta.coeff(d).to_string()).collect();
            write_json(
                out,
                &json!({
                    "op": "bessel",
                    "n": n,
                    "theta": theta.to_string(),
                    "coefficients": coefficients,
                    "h": h,
                }),
            )?;
        }
        _ => {
            writeln!(out, "theta_{n}(x) = {theta}")?;
            writeln!(out, "h(P_{}) = ({})", 2 * n, h.join(","))?;
        }
    }
    Ok(())
}

/// Cross-checks the h-vector by brute force when the caller asks for it.
pub fn bessel_brute_force(out: &mut impl Write, n: usize) -> Result<()> {
    let h = short_chord_distribution(n);
    let h: Vec<String> = h.iter().map(|c| c.to_string()).collect();
    writeln!(out, "brute force h(P_{}) = ({})", 2 * n, h.join(","))?;
    Ok(())
}

pub fn avoid(
    out: &mut impl Write,
    cfg: &RunConfig,
    n: usize,
    f: usize,
    patterns: &[String],
) -> Result<()> {
    cfg.check_n(n)?;
    let patterns: Vec<Matching> = patterns
        .iter()
        .map(|p| parse_matching(p))
        .collect::<Result<_>>()?;
    let avs = schurmatch::avoiders(n, f, &patterns);
    let cache = cfg.open_cache()?;
    let v = descent_vector(&avs, Matching::short_set, n)?;
    let outcome = schur_expand(&v, &cache)?;
    match cfg.format {
        OutputFormat::Text => {
            for m in &avs {
                writeln!(out, "{m}")?;
            }
            match &outcome {
                SchurOutcome::Symmetric(e) => writeln!(out, "expansion {e}")?,
                SchurOutcome::NotSymmetric { witness, count } => {
                    writeln!(out, "not symmetric: residual {count} at {witness}")?
                }
            }
        }
        OutputFormat::Json => write_json(
            out,
            &json!({
                "op": "avoid",
                "n": n,
                "f": f,
                "patterns": patterns.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "count": avs.len(),
                "matchings": avs.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "result": outcome_json(&outcome)?,
            }),
        )?,
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = avs
                .iter()
                .enumerate()
                .map(|(i, m)| vec![i.to_string(), m.to_string()])
                .collect();
            write_csv_rows(out, &["index", "matching"], &rows)?;
        }
    }
    Ok(())
}

pub fn refine(
    out: &mut impl Write,
    cfg: &RunConfig,
    n: usize,
    f: usize,
    key: &str,
) -> Result<()> {
    cfg.check_n(n)?;
    let key = RefineKey::parse(key)?;
    let cache = cfg.open_cache()?;
    let cells = refine_by(n, f, key, &cache)?;
    match cfg.format {
        OutputFormat::Text => {
            for (label, cell) in &cells {
                writeln!(
                    out,
                    "{label} count={} expansion={} schur_positive={}",
                    cell.count,
                    cell.expansion,
                    cell.expansion.is_schur_positive()
                )?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = cells
                .iter()
                .map(|(label, cell)| {
                    Ok(json!({
                        "key": label,
                        "count": cell.count,
                        "expansion": serde_json::to_value(&cell.expansion)?,
                        "schur_positive": cell.expansion.is_schur_positive(),
                    }))
                })
                .collect::<Result<_>>()?;
            write_json(
                out,
                &json!({
                    "op": "refine",
                    "n": n,
                    "f": f,
                    "key": key.name(),
                    "cells": rows,
                }),
            )?;
        }
        OutputFormat::Csv => {
            let rows: Vec<Vec<String>> = cells
                .iter()
                .map(|(label, cell)| {
                    vec![
                        label.clone(),
                        cell.count.to_string(),
                        cell.expansion.to_string(),
                        cell.expansion.is_schur_positive().to_string(),
                    ]
                })
                .collect();
            write_csv_rows(out, &["key", "count", "expansion", "schur_positive"], &rows)?;
        }
    }
    Ok(())
}

pub fn schreier(
    out: &mut impl Write,
    cfg: &RunConfig,
    n2: usize,
    export_dot: bool,
    omit_loops: bool,
) -> Result<()> {
    cfg.check_2n(n2)?;
    let g = build_graph_with_bound(n2, crate::config::HARD_MAX_2N)?;
    if export_dot {
        writeln!(out, "graph schreier_{n2} {{")?;
        for (v, m) in g.vertices().iter().enumerate() {
            writeln!(out, "  v{v} [label=\"{m}\", layer={}];", g.layer(v as u32))?;
        }
        for v in 0..g.len() as u32 {
            for i in 1..=g.generators() {
                let w = g.neighbor(v, i);
                if w == v && omit_loops {
                    continue;
                }
                // Each undirected edge once; loops keep their single entry.
                if v < w || (v == w && !omit_loops) {
                    writeln!(out, "  v{v} -- v{w} [label=\"{i}\"];")?;
                }
            }
        }
        writeln!(out, "}}")?;
        return Ok(());
    }
    let sizes = g.layer_sizes();
    match cfg.format {
        OutputFormat::Json => write_json(
            out,
            &json!({
                "op": "schreier",
                "2n": n2,
                "vertices": g.len(),
                "layer_sizes": sizes,
                "graded": g.verify_graded(),
            }),
        )?,
        _ => {
            writeln!(out, "vertices {}", g.len())?;
            let sizes: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
            writeln!(out, "layers {}", sizes.join(","))?;
            writeln!(out, "graded {}", g.verify_graded())?;
        }
    }
    Ok(())
}

pub fn conjecture(out: &mut impl Write, cfg: &RunConfig, n2: usize) -> Result<()> {
    cfg.check_2n(n2)?;
    let g = build_graph_with_bound(n2, crate::config::HARD_MAX_2N)?;
    let cache = cfg.open_cache()?;
    let report = check_conjecture(&g, &cache)?;
    match cfg.format {
        OutputFormat::Text => {
            writeln!(out, "equidistributed {}", report.equidistributed)?;
            if let SchurOutcome::Symmetric(e) = &report.asc_expansion {
                writeln!(out, "asc {e}")?;
            }
            match &report.des_expansion {
                SchurOutcome::Symmetric(e) => writeln!(out, "des {e}")?,
                SchurOutcome::NotSymmetric { witness, count } => {
                    writeln!(out, "des not symmetric: residual {count} at {witness}")?
                }
            }
        }
        _ => write_json(
            out,
            &json!({
                "op": "conjecture",
                "2n": n2,
                "equidistributed": report.equidistributed,
                "asc": outcome_json(&report.asc_expansion)?,
                "des": outcome_json(&report.des_expansion)?,
            }),
        )?,
    }
    Ok(())
}

/// Per-vertex statistics lookup, used by the schreier subcommand's
/// `--stats` flag.
pub fn schreier_stats(out: &mut impl Write, cfg: &RunConfig, n2: usize, text: &str) -> Result<()> {
    cfg.check_2n(n2)?;
    let m = parse_matching(text)?;
    let g = build_graph_with_bound(n2, crate::config::HARD_MAX_2N)?;
    let (asc, des, lp) = asc_des_loop(&m, &g)?;
    match cfg.format {
        OutputFormat::Json => write_json(
            out,
            &json!({
                "op": "schreier-stats",
                "2n": n2,
                "matching": m.to_string(),
                "layer": g.layer(g.index_of(&m).expect("vertex checked")),
                "asc": asc.to_vec(),
                "des": des.to_vec(),
                "loop": lp.to_vec(),
            }),
        )?,
        _ => {
            writeln!(out, "asc {asc}")?;
            writeln!(out, "des {des}")?;
            writeln!(out, "loop {lp}")?;
        }
    }
    Ok(())
}

pub fn csv_unsupported(op: &str) -> anyhow::Error {
    anyhow::anyhow!("csv output is not defined for '{op}'; use --format text or json")
}

/// Guard used by handlers that have no tabular form.
pub fn reject_csv(cfg: &RunConfig, op: &str) -> Result<()> {
    if cfg.format == OutputFormat::Csv {
        bail!(csv_unsupported(op));
    }
    Ok(())
}
