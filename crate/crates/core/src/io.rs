//! Text formats. Vertex numbers are 1-based in every file and 0-based in
//! memory; readers subtract one, writers add one.
//!
//! Graph (DIMACS):
//! ```text
//! c optional comments
//! p edge <N> <M>
//! e <u> <v>            (M lines)
//! ```
//!
//! Biclique system:
//! ```text
//! c optional comments
//! p bicliques <order> <bound> <parts>
//! b <u> <u> ... | <w> <w> ...   (one line per part)
//! ```
//!
//! Characteristic vectors: one line per vector over `0`, `1`, `*`.
//! Matrices: one line per row over `0`, `1`. Certificates, instances and
//! transcripts: JSON with a fixed key order.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::clis::{CharVector, ClisInstance, Transcript};
use crate::error::{Error, Result};
use crate::graph::{Biclique, BicliqueSystem, Graph};
use crate::oracles::BoolMatrix;

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'))
}

fn number<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} {tok:?}")))
}

fn vertex(tok: &str, order: usize, line: usize) -> Result<usize> {
    let v: usize = number(Some(tok), line, "vertex")?;
    if v == 0 || v > order {
        return Err(Error::parse(line, format!("vertex {v} outside 1..={order}")));
    }
    Ok(v - 1)
}

fn last_line(text: &str) -> usize {
    text.lines().count()
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn read_dimacs(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing 'p edge' header"))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("p") || tok.next() != Some("edge") {
        return Err(Error::parse(hline, "expected 'p edge <N> <M>'"));
    }
    let order: usize = number(tok.next(), hline, "vertex count")?;
    let edges: usize = number(tok.next(), hline, "edge count")?;
    if tok.next().is_some() {
        return Err(Error::parse(hline, "trailing tokens in header"));
    }
    let mut g = Graph::empty(order);
    let mut seen = 0;
    for (line, l) in lines {
        let mut tok = l.split_whitespace();
        if tok.next() != Some("e") {
            return Err(Error::parse(line, "expected 'e <u> <v>'"));
        }
        let (Some(a), Some(b), None) = (tok.next(), tok.next(), tok.next()) else {
            return Err(Error::parse(line, "an edge line has exactly two vertices"));
        };
        let (u, v) = (vertex(a, order, line)?, vertex(b, order, line)?);
        if u == v {
            return Err(Error::parse(line, "self-loop"));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(line, "duplicate edge"));
        }
        g.add_edge(u, v)?;
        seen += 1;
        if seen > edges {
            return Err(Error::parse(line, format!("more than the {edges} declared edges")));
        }
    }
    if seen < edges {
        return Err(Error::parse(
            last_line(text) + 1,
            format!("truncated: header declares {edges} edges, found {seen}"),
        ));
    }
    Ok(g)
}

pub fn write_system(sys: &BicliqueSystem) -> String {
    let mut out = format!("p bicliques {} {} {}\n", sys.host_order(), sys.bound(), sys.len());
    let join = |side: &[usize]| side.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ");
    for b in sys.parts() {
        out.push_str(&format!("b {} | {}\n", join(b.left()), join(b.right())));
    }
    out
}

pub fn read_system(text: &str) -> Result<BicliqueSystem> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing 'p bicliques' header"))?;
    let mut tok = header.split_whitespace();
    if tok.next() != Some("p") || tok.next() != Some("bicliques") {
        return Err(Error::parse(hline, "expected 'p bicliques <order> <bound> <parts>'"));
    }
    let order: usize = number(tok.next(), hline, "order")?;
    let bound: usize = number(tok.next(), hline, "bound")?;
    let count: usize = number(tok.next(), hline, "part count")?;
    if tok.next().is_some() {
        return Err(Error::parse(hline, "trailing tokens in header"));
    }
    let mut parts = Vec::with_capacity(count);
    for (line, l) in lines {
        let body = l
            .strip_prefix('b')
            .filter(|r| r.starts_with(char::is_whitespace))
            .ok_or_else(|| Error::parse(line, "expected 'b <left> | <right>'"))?;
        let (left, right) = body
            .split_once('|')
            .ok_or_else(|| Error::parse(line, "missing '|' between sides"))?;
        let side = |s: &str| -> Result<Vec<usize>> {
            let vs = s
                .split_whitespace()
                .map(|t| vertex(t, order, line))
                .collect::<Result<Vec<_>>>()?;
            let distinct: BTreeSet<_> = vs.iter().collect();
            if distinct.len() != vs.len() {
                return Err(Error::parse(line, "repeated vertex in a side"));
            }
            Ok(vs)
        };
        let b = Biclique::new(side(left)?, side(right)?).map_err(|e| Error::parse(line, e.to_string()))?;
        parts.push(b);
        if parts.len() > count {
            return Err(Error::parse(line, format!("more than the {count} declared parts")));
        }
    }
    if parts.len() < count {
        return Err(Error::parse(
            last_line(text) + 1,
            format!("truncated: header declares {count} parts, found {}", parts.len()),
        ));
    }
    BicliqueSystem::new(order, parts, bound).map_err(|e| Error::parse(hline, e.to_string()))
}

pub fn write_vectors(vectors: &[CharVector]) -> String {
    vectors.iter().map(|v| format!("{v}\n")).collect()
}

pub fn read_vectors(text: &str) -> Result<Vec<CharVector>> {
    let mut out: Vec<CharVector> = Vec::new();
    for (line, l) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if l.is_empty() {
            continue;
        }
        let v: CharVector = l.parse().map_err(|e| match e {
            Error::Parse { message, .. } => Error::parse(line, message),
            other => other,
        })?;
        if let Some(first) = out.first() {
            if first.len() != v.len() {
                return Err(Error::parse(line, format!("vector has length {}, expected {}", v.len(), first.len())));
            }
        }
        out.push(v);
    }
    Ok(out)
}

pub fn write_matrix(m: &BoolMatrix) -> String {
    m.to_string()
}

pub fn read_matrix(text: &str) -> Result<BoolMatrix> {
    text.parse()
}

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line().max(1), e.to_string())
}

pub fn write_certificate(c: &Certificate) -> String {
    c.to_json() + "\n"
}

pub fn read_certificate(text: &str) -> Result<Certificate> {
    serde_json::from_str(text).map_err(json_error)
}

#[derive(Serialize, Deserialize)]
struct InstanceRecord {
    order: usize,
    edges: Vec<[usize; 2]>,
    cliques: Vec<Vec<usize>>,
    independents: Vec<Vec<usize>>,
    matrix: Vec<String>,
}

fn shift(sets: &[Vec<usize>], by: isize) -> Vec<Vec<usize>> {
    sets.iter()
        .map(|s| s.iter().map(|&v| (v as isize + by) as usize).collect())
        .collect()
}

pub fn write_instance(inst: &ClisInstance) -> String {
    let m = inst.matrix();
    let record = InstanceRecord {
        order: inst.gamma().order(),
        edges: inst.gamma().edges().map(|(u, v)| [u + 1, v + 1]).collect(),
        cliques: shift(inst.cliques(), 1),
        independents: shift(inst.independents(), 1),
        matrix: (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| char::from(b'0' + m.get(r, c))).collect())
            .collect(),
    };
    serde_json::to_string_pretty(&record).expect("instance serializes") + "\n"
}

/// Reads an instance and checks the stored matrix against the families.
pub fn read_instance(text: &str) -> Result<ClisInstance> {
    let record: InstanceRecord = serde_json::from_str(text).map_err(json_error)?;
    let in_range = |v: usize| v >= 1 && v <= record.order;
    let all_vertices = record.edges.iter().flatten().chain(record.cliques.iter().flatten()).chain(record.independents.iter().flatten());
    if let Some(v) = all_vertices.copied().find(|&v| !in_range(v)) {
        return Err(Error::invalid(format!("vertex {v} outside 1..={}", record.order)));
    }
    let gamma = Graph::from_edges(record.order, record.edges.iter().map(|[u, v]| (u - 1, v - 1)))?;
    let inst = ClisInstance::new(gamma, shift(&record.cliques, -1), shift(&record.independents, -1))?;
    let stored: String = record.matrix.iter().map(|r| format!("{r}\n")).collect();
    if stored != inst.matrix().to_string() {
        return Err(Error::invalid("stored matrix disagrees with the clique/independent-set families"));
    }
    Ok(inst)
}

pub fn write_transcript(t: &Transcript) -> String {
    serde_json::to_string_pretty(t).expect("transcript serializes") + "\n"
}

pub fn read_transcript(text: &str) -> Result<Transcript> {
    serde_json::from_str(text).map_err(json_error)
}
