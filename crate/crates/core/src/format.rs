//! Hypergraph and weight files.
//!
//! Text form, one hyperedge per line:
//!
//! ```text
//! # comment
//! vertices: 1 2 3 4 5
//! e1: 1 2 3
//! e2: 3 4
//! ```
//!
//! The `vertices:` line is optional and only needed for isolated vertices;
//! the vertex set is its union with every hyperedge. JSON form is
//! `{"vertices": [...], "edges": {"e1": [...], ...}}`, where every edge
//! member must be listed in `vertices`.

use std::collections::BTreeSet;

use serde::Deserialize;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::label::Label;
use crate::vector::{parse_rational, Rational};

const VERTICES_KEY: &str = "vertices";

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(s: &str, offset: usize) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = s;
    let mut pos = 0;
    std::iter::from_fn(move || {
        let start = rest.find(|c: char| !c.is_whitespace())?;
        let tail = &rest[start..];
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        let column = offset + s[..pos + start].chars().count() + 1;
        let token = &tail[..len];
        pos += start + len;
        rest = &tail[len..];
        Some((column, token))
    })
}

/// A non-comment line split at its first `:`.
struct Entry<'a> {
    line: usize,
    key: &'a str,
    key_column: usize,
    value: &'a str,
    value_offset: usize,
}

fn entries(src: &str) -> impl Iterator<Item = Result<Entry<'_>>> {
    src.lines().enumerate().filter_map(|(i, raw)| {
        let line = i + 1;
        let content = raw.split_once('#').map_or(raw, |(c, _)| c);
        if content.trim().is_empty() {
            return None;
        }
        let Some((key, value)) = content.split_once(':') else {
            let column = content.chars().take_while(|c| c.is_whitespace()).count() + 1;
            return Some(Err(parse_error(line, column, "expected `name: members`")));
        };
        let key_column = key.chars().take_while(|c| c.is_whitespace()).count() + 1;
        let key_trimmed = key.trim();
        if key_trimmed.is_empty() {
            return Some(Err(parse_error(line, key_column, "missing name before `:`")));
        }
        if key_trimmed.contains(char::is_whitespace) {
            return Some(Err(parse_error(line, key_column, "names cannot contain whitespace")));
        }
        Some(Ok(Entry {
            line,
            key: key_trimmed,
            key_column,
            value,
            value_offset: key.chars().count() + 1,
        }))
    })
}

pub fn parse_text(src: &str) -> Result<Hypergraph> {
    let mut header: Option<usize> = None;
    let mut vertices: BTreeSet<Label> = BTreeSet::new();
    let mut edges: Vec<(Label, Vec<Label>)> = Vec::new();
    for entry in entries(src) {
        let entry = entry?;
        let members: Vec<Label> = tokens(entry.value, entry.value_offset)
            .map(|(_, t)| Label::from(t))
            .collect();
        if entry.key == VERTICES_KEY {
            if let Some(first) = header {
                return Err(parse_error(
                    entry.line,
                    entry.key_column,
                    format!("second `vertices:` line (first on line {first})"),
                ));
            }
            header = Some(entry.line);
        } else {
            if members.is_empty() {
                return Err(parse_error(
                    entry.line,
                    entry.value_offset + 1,
                    format!("hyperedge `{}` has no vertices", entry.key),
                ));
            }
            edges.push((Label::from(entry.key), members.clone()));
        }
        vertices.extend(members);
    }
    if vertices.is_empty() {
        return Err(parse_error(1, 1, "no vertices"));
    }
    Hypergraph::new(vertices, edges)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonFile {
    vertices: Vec<Label>,
    edges: OrderedEdges,
}

/// The `edges` object with its key order kept.
struct OrderedEdges(Vec<(String, Vec<Label>)>);

impl<'de> Deserialize<'de> for OrderedEdges {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct Visitor;
        impl<'de> serde::de::Visitor<'de> for Visitor {
            type Value = OrderedEdges;

            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("an object mapping hyperedge names to vertex lists")
            }

            fn visit_map<A: serde::de::MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<OrderedEdges, A::Error> {
                let mut edges = Vec::new();
                while let Some(entry) = map.next_entry()? {
                    edges.push(entry);
                }
                Ok(OrderedEdges(edges))
            }
        }
        d.deserialize_map(Visitor)
    }
}

pub fn parse_json(src: &str) -> Result<Hypergraph> {
    let file: JsonFile = serde_json::from_str(src).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    Hypergraph::new(file.vertices, file.edges.0)
}

/// JSON when the first non-blank character is `{`, text otherwise.
pub fn parse_hypergraph(src: &str) -> Result<Hypergraph> {
    if src.trim_start().starts_with('{') {
        parse_json(src)
    } else {
        parse_text(src)
    }
}

fn text_safe(s: &str) -> bool {
    !s.is_empty() && !s.contains(|c: char| c.is_whitespace() || c == '#' || c == ':')
}

/// Canonical text form: a `vertices:` line followed by the hyperedges in order.
///
/// Fails when a label cannot be written as a text token; use JSON for those.
pub fn to_text(h: &Hypergraph) -> Result<String> {
    let unsafe_label = h
        .vertices()
        .iter()
        .chain(h.edge_labels())
        .find(|l| !text_safe(l.as_str()));
    if let Some(l) = unsafe_label {
        return Err(Error::InvalidParameters(format!(
            "label `{l}` cannot be written in text form"
        )));
    }
    if h.edge_labels().iter().any(|l| l.as_str() == VERTICES_KEY) {
        return Err(Error::InvalidParameters(
            "a hyperedge named `vertices` cannot be written in text form".into(),
        ));
    }
    let join = |labels: &[Label]| labels.iter().map(Label::as_str).collect::<Vec<_>>().join(" ");
    let mut out = format!("{VERTICES_KEY}: {}\n", join(h.vertices()));
    for (i, label) in h.edge_labels().iter().enumerate() {
        out.push_str(&format!("{label}: {}\n", join(&h.edge_vertex_labels(i))));
    }
    Ok(out)
}

pub fn to_json_value(h: &Hypergraph) -> Value {
    let edges: Map<String, Value> = h
        .edge_labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.to_string(), serde_json::json!(h.edge_vertex_labels(i))))
        .collect();
    serde_json::json!({ "vertices": h.vertices(), "edges": edges })
}

pub fn to_json(h: &Hypergraph) -> String {
    serde_json::to_string_pretty(&to_json_value(h)).expect("hypergraph JSON is always serializable")
}

/// Weight file: `name: value` lines in text form, or a JSON object mapping
/// hyperedge names to fraction strings or integers.
///
/// Values must be exact rationals (`3/4`, `2`, `0.25`); positivity is
/// checked when the weighting is built.
pub fn parse_weights(src: &str) -> Result<Vec<(String, Rational)>> {
    if src.trim_start().starts_with('{') {
        let map: Map<String, Value> =
            serde_json::from_str(src).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
        return map
            .into_iter()
            .map(|(name, v)| {
                let q = match &v {
                    Value::String(s) => parse_rational(s),
                    Value::Number(n) => n.as_i64().map(|n| Rational::from_integer(n.into())),
                    _ => None,
                };
                q.map(|q| (name.clone(), q))
                    .ok_or_else(|| Error::BadWeight(format!("`{name}`: {v} is not an exact rational")))
            })
            .collect();
    }
    let mut out = Vec::new();
    for entry in entries(src) {
        let entry = entry?;
        let toks: Vec<(usize, &str)> = tokens(entry.value, entry.value_offset).collect();
        match toks.as_slice() {
            [(column, value)] => {
                let q = parse_rational(value)
                    .ok_or_else(|| parse_error(entry.line, *column, format!("`{value}` is not an exact rational")))?;
                out.push((entry.key.to_owned(), q));
            }
            [] => return Err(parse_error(entry.line, entry.value_offset + 1, "missing weight")),
            [_, (column, _), ..] => return Err(parse_error(entry.line, *column, "expected a single weight")),
        }
    }
    Ok(out)
}
