//! Plain-text graph and configuration files.
//!
//! A graph file starts with `n m` and lists `m` edges as `u v`, one per
//! line, with 0-based endpoints. Text after `#` is ignored, as are blank
//! lines. A configuration file holds `n` pebble counts on a single line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pebbling::Configuration;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn two_numbers(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut next = || {
        it.next()
            .ok_or_else(|| Error::parse(line, "expected two integers"))?
            .parse::<usize>()
            .map_err(|e| Error::parse(line, e.to_string()))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(Error::parse(line, "trailing tokens"));
    }
    Ok(pair)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_graph_with_max(text, crate::graph::DEFAULT_MAX_ORDER)
}

pub fn parse_graph_with_max(text: &str, max_order: usize) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    let (n, m) = two_numbers(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        let (u, v) = two_numbers(line, body)?;
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("endpoint out of range for n = {n}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(line, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges_with_max(n, edges, max_order)
}

/// Serializes `g`, edges in ascending order. The label, if any, becomes a
/// leading comment.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    if let Some(label) = g.label() {
        let _ = writeln!(out, "# {label}");
    }
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Reads a configuration for a graph of order `n`.
pub fn parse_configuration(text: &str, n: usize) -> Result<Configuration> {
    let mut lines = content_lines(text);
    let f: Configuration = match lines.next() {
        Some((_, body)) => body.parse()?,
        None => Configuration::new(Vec::new()),
    };
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, "configuration must be a single line"));
    }
    if f.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: f.len() });
    }
    Ok(f)
}

pub fn write_configuration(f: &Configuration) -> String {
    format!("{f}\n")
}
