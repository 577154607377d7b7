//! Text formats. Vertices are 1-indexed in files and 0-indexed in memory.
//!
//! * graph: `p <n> <m>` then `m` lines `e <u> <v>`;
//! * decomposition: one event per line, `i <v>` or `f <v>`;
//! * clique-partitioned IS source: a graph plus one `c <v> …` line per clique;
//! * CSP: `csp <n> <q> <m>`, then per constraint `c <x_1> … <x_q> <C>`
//!   followed by `C` lines of `q` values in `0..6`;
//! * lists (certificates, plain solutions): whitespace-separated integers.
//!
//! Lines starting with `#` and blank lines are ignored everywhere.

use std::fmt;
use std::fmt::Write as _;

use updom_core::reductions::{CliquePartitionedIsInstance, CspConstraint, CspInstance, DOMAIN_SIZE};
use updom_core::{Event, Graph, NicePathDecomposition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    MalformedHeader,
    MalformedLine,
    VertexOutOfRange(usize),
    SelfLoop(usize),
    DuplicateEdge(usize, usize),
    CountMismatch { what: &'static str, declared: usize, found: usize },
    Invalid(String),
}

/// A parse failure; `line` is 1-based, `None` for whole-file problems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn at(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line: Some(line), kind }
    }

    fn whole(kind: ParseErrorKind) -> Self {
        ParseError { line: None, kind }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(line) = self.line {
            write!(f, "line {line}: ")?;
        }
        match &self.kind {
            ParseErrorKind::MissingHeader => write!(f, "missing header"),
            ParseErrorKind::MalformedHeader => write!(f, "malformed header"),
            ParseErrorKind::MalformedLine => write!(f, "malformed line"),
            ParseErrorKind::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            ParseErrorKind::SelfLoop(v) => write!(f, "self-loop on vertex {v}"),
            ParseErrorKind::DuplicateEdge(u, v) => write!(f, "duplicate edge {u} {v}"),
            ParseErrorKind::CountMismatch { what, declared, found } => {
                write!(f, "header declares {declared} {what}, found {found}")
            }
            ParseErrorKind::Invalid(why) => write!(f, "{why}"),
        }
    }
}

impl std::error::Error for ParseError {}

/// Non-comment, non-blank lines with their 1-based numbers, split into tokens.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim();
        (!line.is_empty() && !line.starts_with('#')).then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn number(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::at(line, ParseErrorKind::MalformedLine))
}

/// 1-indexed vertex token to 0-indexed vertex of an `n`-vertex graph.
fn vertex(token: &str, n: usize, line: usize) -> Result<usize, ParseError> {
    let v = number(token, line)?;
    if v == 0 || v > n {
        return Err(ParseError::at(line, ParseErrorKind::VertexOutOfRange(v)));
    }
    Ok(v - 1)
}

struct GraphBuilder {
    n: usize,
    declared_m: usize,
    header_line: usize,
    edges: Vec<(usize, usize)>,
    seen: std::collections::HashSet<(usize, usize)>,
}

impl GraphBuilder {
    fn header(tokens: &[&str], line: usize) -> Result<Self, ParseError> {
        let malformed = || ParseError::at(line, ParseErrorKind::MalformedHeader);
        if tokens.len() != 3 || tokens[0] != "p" {
            return Err(malformed());
        }
        let n = tokens[1].parse().map_err(|_| malformed())?;
        let declared_m = tokens[2].parse().map_err(|_| malformed())?;
        Ok(GraphBuilder {
            n,
            declared_m,
            header_line: line,
            edges: Vec::new(),
            seen: Default::default(),
        })
    }

    fn edge(&mut self, tokens: &[&str], line: usize) -> Result<(), ParseError> {
        if tokens.len() != 3 {
            return Err(ParseError::at(line, ParseErrorKind::MalformedLine));
        }
        let u = vertex(tokens[1], self.n, line)?;
        let v = vertex(tokens[2], self.n, line)?;
        if u == v {
            return Err(ParseError::at(line, ParseErrorKind::SelfLoop(u + 1)));
        }
        if !self.seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::at(line, ParseErrorKind::DuplicateEdge(u + 1, v + 1)));
        }
        self.edges.push((u, v));
        Ok(())
    }

    fn finish(self) -> Result<Graph, ParseError> {
        if self.edges.len() != self.declared_m {
            return Err(ParseError::at(
                self.header_line,
                ParseErrorKind::CountMismatch {
                    what: "edges",
                    declared: self.declared_m,
                    found: self.edges.len(),
                },
            ));
        }
        Ok(Graph::from_edges(self.n, self.edges).expect("edges were checked while parsing"))
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (line, tokens) = lines.next().ok_or(ParseError::whole(ParseErrorKind::MissingHeader))?;
    let mut builder = GraphBuilder::header(&tokens, line)?;
    for (line, tokens) in lines {
        match tokens[0] {
            "e" => builder.edge(&tokens, line)?,
            _ => return Err(ParseError::at(line, ParseErrorKind::MalformedLine)),
        }
    }
    builder.finish()
}

/// Header then edges in ascending `(u, v)` order with `u < v`.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Only syntax is checked here; whether the events fit a graph is the
/// validator's job.
pub fn parse_decomposition(text: &str) -> Result<NicePathDecomposition, ParseError> {
    let mut events = Vec::new();
    for (line, tokens) in content_lines(text) {
        if tokens.len() != 2 {
            return Err(ParseError::at(line, ParseErrorKind::MalformedLine));
        }
        let v = vertex(tokens[1], usize::MAX, line)?;
        events.push(match tokens[0] {
            "i" => Event::Introduce(v),
            "f" => Event::Forget(v),
            _ => return Err(ParseError::at(line, ParseErrorKind::MalformedLine)),
        });
    }
    Ok(NicePathDecomposition::new(events))
}

pub fn serialize_decomposition(d: &NicePathDecomposition) -> String {
    let mut out = String::new();
    for e in &d.events {
        match e {
            Event::Introduce(v) => writeln!(out, "i {}", v + 1).unwrap(),
            Event::Forget(v) => writeln!(out, "f {}", v + 1).unwrap(),
        }
    }
    out
}

/// A graph followed (or interleaved) with `c` lines listing each clique.
pub fn parse_is_source(text: &str) -> Result<CliquePartitionedIsInstance, ParseError> {
    let mut lines = content_lines(text);
    let (line, tokens) = lines.next().ok_or(ParseError::whole(ParseErrorKind::MissingHeader))?;
    let mut builder = GraphBuilder::header(&tokens, line)?;
    let mut cliques = Vec::new();
    for (line, tokens) in lines {
        match tokens[0] {
            "e" => builder.edge(&tokens, line)?,
            "c" if tokens.len() > 1 => {
                let clique = tokens[1..]
                    .iter()
                    .map(|t| vertex(t, builder.n, line))
                    .collect::<Result<Vec<_>, _>>()?;
                cliques.push(clique);
            }
            _ => return Err(ParseError::at(line, ParseErrorKind::MalformedLine)),
        }
    }
    let graph = builder.finish()?;
    let inst = CliquePartitionedIsInstance { graph, cliques };
    inst.validate()
        .map_err(|e| ParseError::whole(ParseErrorKind::Invalid(e.to_string())))?;
    Ok(inst)
}

pub fn serialize_is_source(inst: &CliquePartitionedIsInstance) -> String {
    let mut out = serialize_graph(&inst.graph);
    for clique in &inst.cliques {
        out.push('c');
        for v in clique {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_csp(text: &str) -> Result<CspInstance, ParseError> {
    let mut lines = content_lines(text);
    let (line, tokens) = lines.next().ok_or(ParseError::whole(ParseErrorKind::MissingHeader))?;
    let header = || ParseError::at(line, ParseErrorKind::MalformedHeader);
    if tokens.len() != 4 || tokens[0] != "csp" {
        return Err(header());
    }
    let fields: Vec<usize> = tokens[1..]
        .iter()
        .map(|t| t.parse().map_err(|_| header()))
        .collect::<Result<_, _>>()?;
    let (n, q, m) = (fields[0], fields[1], fields[2]);
    let header_line = line;

    let mut constraints = Vec::with_capacity(m);
    while let Some((line, tokens)) = lines.next() {
        if tokens[0] != "c" || tokens.len() != q + 2 {
            return Err(ParseError::at(line, ParseErrorKind::MalformedLine));
        }
        let vars = tokens[1..=q]
            .iter()
            .map(|t| vertex(t, n, line))
            .collect::<Result<Vec<_>, _>>()?;
        let count = number(tokens[q + 1], line)?;
        let mut accepted = Vec::with_capacity(count);
        for _ in 0..count {
            let (line, tokens) = lines.next().ok_or(ParseError::at(
                line,
                ParseErrorKind::Invalid(format!("constraint lists fewer than {count} tuples")),
            ))?;
            if tokens.len() != q {
                return Err(ParseError::at(line, ParseErrorKind::MalformedLine));
            }
            let tuple = tokens
                .iter()
                .map(|t| match t.parse::<u8>() {
                    Ok(x) if x < DOMAIN_SIZE => Ok(x),
                    _ => Err(ParseError::at(
                        line,
                        ParseErrorKind::Invalid(format!("value {t} outside the domain 0..6")),
                    )),
                })
                .collect::<Result<Vec<u8>, _>>()?;
            accepted.push(tuple);
        }
        constraints.push(CspConstraint { vars, accepted });
    }
    if constraints.len() != m {
        return Err(ParseError::at(
            header_line,
            ParseErrorKind::CountMismatch {
                what: "constraints",
                declared: m,
                found: constraints.len(),
            },
        ));
    }
    let inst = CspInstance { n, q, constraints };
    inst.validate()
        .map_err(|e| ParseError::whole(ParseErrorKind::Invalid(e.to_string())))?;
    Ok(inst)
}

pub fn serialize_csp(inst: &CspInstance) -> String {
    let mut out = format!("csp {} {} {}\n", inst.n, inst.q, inst.m());
    for c in &inst.constraints {
        out.push('c');
        for x in &c.vars {
            write!(out, " {}", x + 1).unwrap();
        }
        writeln!(out, " {}", c.accepted.len()).unwrap();
        for t in &c.accepted {
            let values: Vec<String> = t.iter().map(u8::to_string).collect();
            writeln!(out, "{}", values.join(" ")).unwrap();
        }
    }
    out
}

/// Whitespace-separated non-negative integers, comments allowed.
pub fn parse_list(text: &str) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    for (line, tokens) in content_lines(text) {
        for t in tokens {
            out.push(number(t, line)?);
        }
    }
    Ok(out)
}

/// 1-indexed vertex list to sorted 0-indexed vertices.
pub fn parse_vertex_list(text: &str, n: usize) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    for (line, tokens) in content_lines(text) {
        for t in tokens {
            out.push(vertex(t, n, line)?);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// A satisfying assignment for a CSP: one value in `0..6` per variable.
pub fn parse_assignment(text: &str, n: usize) -> Result<Vec<u8>, ParseError> {
    let mut out = Vec::new();
    for (line, tokens) in content_lines(text) {
        for t in tokens {
            match t.parse::<u8>() {
                Ok(x) if x < DOMAIN_SIZE => out.push(x),
                _ => {
                    return Err(ParseError::at(
                        line,
                        ParseErrorKind::Invalid(format!("value {t} outside the domain 0..6")),
                    ))
                }
            }
        }
    }
    if out.len() != n {
        return Err(ParseError::whole(ParseErrorKind::CountMismatch {
            what: "values",
            declared: n,
            found: out.len(),
        }));
    }
    Ok(out)
}
