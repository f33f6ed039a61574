//! Plain-text instance files and seeded random generation.
//!
//! An instance starts with a header line `n m q` (vertex, edge, and label
//! counts), followed by one line `u v c` per edge with 0-based vertex ids
//! and label. Blank lines and lines starting with `#` are skipped, and
//! both LF and CRLF endings parse. Serialization writes LF with edges in
//! canonical sorted order.

use std::collections::HashSet;

use mlbp_core::{feasibility_check, LabeledGraph, Mode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("edge count mismatch: header declares {expected} edges, file has {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

fn malformed(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        reason: reason.into(),
    }
}

/// Lines that carry data, paired with their 1-based position in the file.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(index, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((index + 1, line))
        }
    })
}

fn parse_fields(line: usize, text: &str, expected: usize) -> Result<Vec<usize>, ParseError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != expected {
        return Err(malformed(
            line,
            format!("expected {expected} fields, found {}", fields.len()),
        ));
    }
    fields
        .into_iter()
        .map(|field| {
            field
                .parse::<usize>()
                .map_err(|_| malformed(line, format!("invalid integer '{field}'")))
        })
        .collect()
}

pub fn parse_instance(text: &str) -> Result<LabeledGraph, ParseError> {
    let mut lines = significant_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| malformed(1, "missing header line 'n m q'"))?;
    let fields = parse_fields(header_line, header, 3)?;
    let (n, m, q) = (fields[0], fields[1], fields[2]);
    if n == 0 {
        return Err(malformed(header_line, "instance needs at least one vertex"));
    }
    if q == 0 {
        return Err(malformed(header_line, "instance needs at least one label"));
    }

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    let mut found = 0usize;
    for (line, text) in lines {
        found += 1;
        if found > m {
            // Keep counting so the mismatch report shows the real total.
            continue;
        }
        let fields = parse_fields(line, text, 3)?;
        let (u, v, c) = (fields[0], fields[1], fields[2]);
        if u == v {
            return Err(malformed(line, format!("self-loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(malformed(
                line,
                format!("vertex out of range in edge ({u}, {v}); n = {n}"),
            ));
        }
        if c >= q {
            return Err(malformed(line, format!("label {c} out of range; q = {q}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(malformed(line, format!("duplicate edge ({u}, {v})")));
        }
        edges.push((u, v, c));
    }
    if found != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found,
        });
    }

    LabeledGraph::build(n, q, &edges)
        .map_err(|e| malformed(header_line, e.to_string()))
}

pub fn serialize_instance(graph: &LabeledGraph) -> String {
    let mut out = format!(
        "{} {} {}\n",
        graph.num_vertices(),
        graph.num_edges(),
        graph.num_labels()
    );
    for edge in graph.edges() {
        out.push_str(&format!("{} {} {}\n", edge.u(), edge.v(), edge.label()));
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct InstanceSpec {
    pub n: usize,
    pub q: usize,
    /// Fraction of the n(n-1)/2 possible edges, in (0, 1].
    pub density: f64,
    pub seed: u64,
    /// Regenerate with stepped seeds until the instance is bi-connected
    /// in this mode.
    pub ensure_feasible: Option<Mode>,
    pub max_retries: usize,
}

impl InstanceSpec {
    pub fn new(n: usize, q: usize, density: f64, seed: u64) -> Self {
        InstanceSpec {
            n,
            q,
            density,
            seed,
            ensure_feasible: None,
            max_retries: 1000,
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum GenerateError {
    #[error("instance needs at least one vertex and one label (n = {n}, q = {q})")]
    InvalidDimensions { n: usize, q: usize },
    #[error("density {density} out of range; need 0 < density <= 1")]
    DensityOutOfRange { density: f64 },
    #[error("no bi-connected instance after {attempts} attempts; raise density or retries")]
    FeasibilityRetriesExhausted { attempts: usize },
}

/// Draws edges uniformly without replacement until the target count is
/// met, then labels each edge uniformly. The edge count is always
/// floor(density * n(n-1)/2); `ensure_feasible` retries whole draws with
/// seed+1, seed+2, ... until the sampled graph passes the mode's check.
pub fn generate(spec: &InstanceSpec) -> Result<LabeledGraph, GenerateError> {
    if spec.n == 0 || spec.q == 0 {
        return Err(GenerateError::InvalidDimensions {
            n: spec.n,
            q: spec.q,
        });
    }
    if !(spec.density > 0.0 && spec.density <= 1.0) {
        return Err(GenerateError::DensityOutOfRange {
            density: spec.density,
        });
    }
    let max_pairs = spec.n * (spec.n.saturating_sub(1)) / 2;
    let m = (spec.density * max_pairs as f64).floor() as usize;
    let attempts = match spec.ensure_feasible {
        Some(_) => spec.max_retries.max(1),
        None => 1,
    };
    for attempt in 0..attempts {
        let graph = sample(spec, spec.seed.wrapping_add(attempt as u64), m, max_pairs);
        match spec.ensure_feasible {
            Some(mode) if !feasibility_check(&graph, mode) => continue,
            _ => return Ok(graph),
        }
    }
    Err(GenerateError::FeasibilityRetriesExhausted { attempts })
}

fn sample(spec: &InstanceSpec, seed: u64, m: usize, max_pairs: usize) -> LabeledGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = rand::seq::index::sample(&mut rng, max_pairs, m).into_vec();
    chosen.sort_unstable();
    let edges: Vec<(usize, usize, usize)> = chosen
        .into_iter()
        .map(|rank| {
            let (u, v) = unrank_pair(spec.n, rank);
            (u, v, rng.gen_range(0..spec.q))
        })
        .collect();
    LabeledGraph::build(spec.n, spec.q, &edges).expect("sampled pairs form a simple graph")
}

/// Inverse of the row-major enumeration (0,1), (0,2), ..., (n-2, n-1).
fn unrank_pair(n: usize, mut rank: usize) -> (usize, usize) {
    for u in 0..n {
        let row = n - 1 - u;
        if rank < row {
            return (u, u + 1 + rank);
        }
        rank -= row;
    }
    unreachable!("pair rank out of range")
}
