//! The `apply` subcommand: runs one operation on a parsed involution or
//! biword and renders the result.
//!
//! Involutions use the canonical text form (`"2143"`, or comma-separated
//! past nine symbols). Biwords are written `x=1,1,2;y=2,1,2` with an
//! optional leading `m=M;` fixing the alphabet; without it the alphabet is
//! the largest symbol mentioned.

use selfevac::involutions::Involution;
use selfevac::tableaux::{evacuate_standard, rsk_biword, rsk_involution, GeneralizedInvolution};

use crate::{CliFailure, Format, Operation};

enum Input {
    Involution(Involution),
    Biword(GeneralizedInvolution),
}

fn usage(msg: impl Into<String>) -> CliFailure {
    CliFailure::Usage(msg.into())
}

fn parse_values(text: &str) -> Result<Vec<usize>, CliFailure> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| usage(format!("bad symbol {t:?}: {e}")))
        })
        .collect()
}

fn parse_biword(input: &str) -> Result<GeneralizedInvolution, CliFailure> {
    let mut m: Option<usize> = None;
    let mut x: Option<Vec<usize>> = None;
    let mut y: Option<Vec<usize>> = None;
    for segment in input.split(';') {
        let segment = segment.trim();
        if segment.is_empty() {
            continue;
        }
        let (key, value) = segment
            .split_once('=')
            .ok_or_else(|| usage(format!("expected key=value, got {segment:?}")))?;
        match key.trim() {
            "m" => {
                m = Some(
                    value
                        .trim()
                        .parse::<usize>()
                        .map_err(|e| usage(format!("bad alphabet size: {e}")))?,
                )
            }
            "x" => x = Some(parse_values(value)?),
            "y" => y = Some(parse_values(value)?),
            other => return Err(usage(format!("unknown biword component {other:?}"))),
        }
    }
    let x = x.ok_or_else(|| usage("biword needs an x=... component"))?;
    let y = y.ok_or_else(|| usage("biword needs a y=... component"))?;
    if x.len() != y.len() {
        return Err(usage(format!(
            "x has {} symbols but y has {}",
            x.len(),
            y.len()
        )));
    }
    let max_symbol = x.iter().chain(&y).copied().max().unwrap_or(1);
    let m = m.unwrap_or(max_symbol);
    let pairs: Vec<(usize, usize)> = x.into_iter().zip(y).collect();
    GeneralizedInvolution::from_pairs(m, &pairs).map_err(|e| usage(e.to_string()))
}

fn parse_input(input: &str) -> Result<Input, CliFailure> {
    if input.contains('=') {
        Ok(Input::Biword(parse_biword(input)?))
    } else {
        input
            .parse::<Involution>()
            .map(Input::Involution)
            .map_err(|e| usage(e.to_string()))
    }
}

fn tableau_json(rows: &[Vec<usize>]) -> serde_json::Value {
    serde_json::json!(rows)
}

fn biword_json(alpha: &GeneralizedInvolution) -> serde_json::Value {
    let pairs = alpha.pairs();
    serde_json::json!({
        "m": alpha.alphabet(),
        "x": pairs.iter().map(|p| p.0).collect::<Vec<_>>(),
        "y": pairs.iter().map(|p| p.1).collect::<Vec<_>>(),
    })
}

fn wrap(operation: &str, input: &str, result: serde_json::Value, json: bool, text: String) -> String {
    if json {
        serde_json::to_string_pretty(&serde_json::json!({
            "operation": operation,
            "input": input,
            "result": result,
        }))
        .expect("result serializes")
    } else {
        text
    }
}

pub fn run(operation: Operation, input: &str, format: Format) -> Result<String, CliFailure> {
    if format == Format::Csv {
        return Err(usage("apply renders text or json, not csv"));
    }
    let json = format == Format::Json;
    let parsed = parse_input(input)?;
    let rendered = match (operation, parsed) {
        (Operation::Rsk, Input::Involution(sigma)) => {
            let t = rsk_involution(&sigma);
            wrap("rsk", input, tableau_json(t.rows()), json, t.to_string())
        }
        (Operation::Rsk, Input::Biword(alpha)) => {
            let t = rsk_biword(&alpha);
            wrap("rsk", input, tableau_json(t.rows()), json, t.to_string())
        }
        (Operation::Evacuate, Input::Involution(sigma)) => {
            let ev = sigma.complement_conjugate();
            debug_assert_eq!(
                rsk_involution(&ev),
                evacuate_standard(&rsk_involution(&sigma))
            );
            wrap(
                "evacuate",
                input,
                serde_json::json!(ev.to_string()),
                json,
                ev.to_string(),
            )
        }
        (Operation::Evacuate, Input::Biword(alpha)) => {
            let ev = alpha.evacuate();
            wrap("evacuate", input, biword_json(&ev), json, ev.to_string())
        }
        (Operation::Polarize, Input::Biword(alpha)) => {
            let sigma = alpha.polarize();
            wrap(
                "polarize",
                input,
                serde_json::json!(sigma.to_string()),
                json,
                sigma.to_string(),
            )
        }
        (Operation::Polarize, Input::Involution(_)) => {
            return Err(usage("polarize expects a biword (x=...;y=...)"))
        }
        (Operation::Descents, Input::Involution(sigma)) => {
            let descents = sigma.descent_set();
            wrap(
                "descents",
                input,
                serde_json::json!(descents.positions()),
                json,
                descents.to_string(),
            )
        }
        (Operation::Descents, Input::Biword(_)) => {
            return Err(usage("descents expects an involution"))
        }
        (Operation::SelfEvacCheck, Input::Involution(sigma)) => {
            let answer = sigma.is_self_evacuated();
            wrap(
                "self-evac-check",
                input,
                serde_json::json!(answer),
                json,
                answer.to_string(),
            )
        }
        (Operation::SelfEvacCheck, Input::Biword(alpha)) => {
            let answer = alpha.is_self_evacuated();
            wrap(
                "self-evac-check",
                input,
                serde_json::json!(answer),
                json,
                answer.to_string(),
            )
        }
    };
    Ok(rendered)
}
