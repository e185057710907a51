//! JSON and plain-text graph formats.
//!
//! JSON: `{"rank": r, "vertices": n, "edges": [{"verts": [..], "w": x}, ..]}`.
//! Text: a header line `r n m` followed by m lines `v1 .. vr [w]`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::WeightedHypergraph;

#[derive(Serialize, Deserialize)]
struct JsonEdge {
    verts: Vec<usize>,
    w: f64,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    rank: usize,
    vertices: usize,
    edges: Vec<JsonEdge>,
}

fn perr<T>(location: impl Into<String>, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { location: location.into(), message: message.into() })
}

pub fn to_json(g: &WeightedHypergraph) -> String {
    let doc = JsonGraph {
        rank: g.rank(),
        vertices: g.order(),
        edges: g.edges().map(|(e, w)| JsonEdge { verts: e.to_vec(), w }).collect(),
    };
    serde_json::to_string(&doc).expect("graph serialization cannot fail")
}

fn uint_field(v: &Value, loc: &str) -> Result<usize> {
    match v.as_u64() {
        Some(x) => Ok(x as usize),
        None => perr(loc, "expected a nonnegative integer"),
    }
}

fn check_edge(
    rank: usize,
    n: usize,
    verts: &[usize],
    loc: &str,
    seen: &mut BTreeSet<Vec<usize>>,
) -> Result<Vec<usize>> {
    if verts.len() != rank {
        return perr(loc, format!("edge has {} vertices, rank is {rank}", verts.len()));
    }
    let mut e = verts.to_vec();
    e.sort_unstable();
    if let Some(&v) = e.iter().find(|&&v| v >= n) {
        return perr(loc, format!("vertex {v} out of range for {n} vertices"));
    }
    if e.windows(2).any(|w| w[0] == w[1]) {
        return perr(loc, "repeated vertex");
    }
    if !seen.insert(e.clone()) {
        return perr(loc, "duplicate edge");
    }
    Ok(e)
}

fn check_w(w: f64, loc: &str) -> Result<f64> {
    if !w.is_finite() {
        return perr(loc, "weight is not finite");
    }
    if w < 0.0 {
        return perr(loc, "negative weight");
    }
    Ok(w)
}

pub fn from_json(src: &str) -> Result<WeightedHypergraph> {
    let doc: Value = serde_json::from_str(src)
        .or_else(|e| perr(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    let Some(obj) = doc.as_object() else {
        return perr("document", "expected a JSON object");
    };
    let rank = uint_field(obj.get("rank").unwrap_or(&Value::Null), "rank")?;
    let n = uint_field(obj.get("vertices").unwrap_or(&Value::Null), "vertices")?;
    if rank < 2 {
        return perr("rank", "rank must be at least 2");
    }
    let Some(edges) = obj.get("edges").and_then(Value::as_array) else {
        return perr("edges", "expected an array");
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(edges.len());
    for (i, ev) in edges.iter().enumerate() {
        let loc = format!("edges[{i}]");
        let Some(verts) = ev.get("verts").and_then(Value::as_array) else {
            return perr(format!("{loc}.verts"), "expected an array");
        };
        let verts = verts
            .iter()
            .enumerate()
            .map(|(j, v)| uint_field(v, &format!("{loc}.verts[{j}]")))
            .collect::<Result<Vec<_>>>()?;
        let w = match ev.get("w") {
            None => 1.0,
            Some(w) => match w.as_f64() {
                Some(w) => check_w(w, &format!("{loc}.w"))?,
                None => return perr(format!("{loc}.w"), "expected a number"),
            },
        };
        out.push((check_edge(rank, n, &verts, &loc, &mut seen)?, w));
    }
    WeightedHypergraph::from_edges(rank, n, out)
}

pub fn to_text(g: &WeightedHypergraph) -> String {
    let mut s = format!("{} {} {}\n", g.rank(), g.order(), g.edge_count());
    for (e, w) in g.edges() {
        for v in e {
            s.push_str(&v.to_string());
            s.push(' ');
        }
        s.push_str(&format!("{w:?}\n"));
    }
    s
}

pub fn from_text(src: &str) -> Result<WeightedHypergraph> {
    let mut lines = src.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let Some((hl, header)) = lines.next() else {
        return perr("line 1", "missing header");
    };
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 3 {
        return perr(format!("line {}", hl + 1), "header must be `r n m`");
    }
    let field = |s: &str, name: &str| -> Result<usize> {
        s.parse::<usize>().or_else(|_| perr(format!("line {} field {name}", hl + 1), format!("bad integer `{s}`")))
    };
    let (rank, n, m) = (field(nums[0], "r")?, field(nums[1], "n")?, field(nums[2], "m")?);
    if rank < 2 {
        return perr(format!("line {} field r", hl + 1), "rank must be at least 2");
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(m);
    for (ln, line) in lines {
        let loc = format!("line {}", ln + 1);
        if out.len() == m {
            return perr(loc, format!("more than the {m} declared edges"));
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let w = match toks.len() {
            l if l == rank => 1.0,
            l if l == rank + 1 => {
                let w = toks[rank]
                    .parse::<f64>()
                    .or_else(|_| perr(format!("{loc} field {}", rank + 1), format!("bad weight `{}`", toks[rank])))?;
                check_w(w, &loc)?
            }
            l => return perr(loc, format!("expected {rank} vertices and an optional weight, got {l} fields")),
        };
        let verts = toks[..rank]
            .iter()
            .enumerate()
            .map(|(j, t)| {
                t.parse::<usize>().or_else(|_| perr(format!("{loc} field {}", j + 1), format!("bad vertex `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        out.push((check_edge(rank, n, &verts, &loc, &mut seen)?, w));
    }
    if out.len() != m {
        return perr("end of input", format!("expected {m} edges, found {}", out.len()));
    }
    WeightedHypergraph::from_edges(rank, n, out)
}

/// Parses either format, choosing JSON when the first non-blank byte is `{`.
pub fn parse(bytes: &[u8]) -> Result<WeightedHypergraph> {
    let src =
        std::str::from_utf8(bytes).or_else(|e| perr(format!("byte {}", e.valid_up_to()), "input is not UTF-8"))?;
    if src.trim_start().starts_with('{') {
        from_json(src)
    } else {
        from_text(src)
    }
}
