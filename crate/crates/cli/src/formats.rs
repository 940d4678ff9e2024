//! DIMACS and plain edge-list readers and writers.
//!
//! DIMACS: one header `p edge <n> <m>`, then `m` lines `e <u> <v>` with
//! vertices numbered from 1; lines starting with `c` are comments.
//!
//! Edge list: the vertex count on the first line, then one `<u> <v>` pair per
//! line with vertices numbered from 0.
//!
//! Blank lines are ignored by both readers.

use std::fmt::Write as _;
use std::str::FromStr;

use gsplit::Graph;
use thiserror::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Dimacs,
    Edgelist,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number; 0 when the problem is the end of the input.
    pub line: usize,
    pub message: String,
}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

fn number<T: FromStr>(line: usize, token: &str, what: &str) -> Result<T, ParseError> {
    token.parse().or_else(|_| {
        fail(
            line,
            format!("{what} `{token}` is not a non-negative integer"),
        )
    })
}

pub fn parse(input: &str, format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Dimacs => parse_dimacs(input),
        Format::Edgelist => parse_edgelist(input),
    }
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::Dimacs => write_dimacs(g),
        Format::Edgelist => write_edgelist(g),
    }
}

pub fn parse_dimacs(input: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else { continue };
        let rest: Vec<&str> = tokens.collect();
        match kind {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return fail(line, "second problem line");
                }
                let [word, n, m] = rest[..] else {
                    return fail(line, "expected `p edge <n> <m>`");
                };
                if word != "edge" {
                    return fail(line, format!("unsupported problem type `{word}`"));
                }
                header = Some((
                    number(line, n, "vertex count")?,
                    number(line, m, "edge count")?,
                    line,
                ));
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return fail(line, "edge before the problem line");
                };
                let [u, v] = rest[..] else {
                    return fail(line, "expected `e <u> <v>`");
                };
                let u: usize = number(line, u, "vertex")?;
                let v: usize = number(line, v, "vertex")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return fail(line, format!("vertex {x} outside 1..={n}"));
                    }
                }
                if u == v {
                    return fail(line, format!("self-loop on vertex {u}"));
                }
                edges.push((u - 1, v - 1));
            }
            other => return fail(line, format!("unknown line type `{other}`")),
        }
    }
    let Some((n, m, header_line)) = header else {
        return fail(0, "missing problem line `p edge <n> <m>`");
    };
    if edges.len() != m {
        return fail(
            header_line,
            format!("header announces {m} edges, found {}", edges.len()),
        );
    }
    Ok(Graph::from_edges(n, edges).expect("edges checked above"))
}

pub fn parse_edgelist(input: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let Some(n) = n else {
            let [count] = tokens[..] else {
                return fail(line, "expected the vertex count alone on the first line");
            };
            n = Some(number(line, count, "vertex count")?);
            continue;
        };
        let [u, v] = tokens[..] else {
            return fail(line, "expected `<u> <v>`");
        };
        let u: usize = number(line, u, "vertex")?;
        let v: usize = number(line, v, "vertex")?;
        for x in [u, v] {
            if x >= n {
                return fail(line, format!("vertex {x} outside 0..{n}"));
            }
        }
        if u == v {
            return fail(line, format!("self-loop on vertex {u}"));
        }
        edges.push((u, v));
    }
    let Some(n) = n else {
        return fail(0, "empty input, expected the vertex count");
    };
    Ok(Graph::from_edges(n, edges).expect("edges checked above"))
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
