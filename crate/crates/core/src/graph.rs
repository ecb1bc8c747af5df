//! Directed graphs, cut assignments and their exact cut / dicut values.
//!
//! Vertices are 0-based in the API and 1-based in the text format.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A directed multigraph on `n` vertices. Self-loops and parallel edges are kept
/// and each occurrence is weighted once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl DirectedGraph {
    /// Builds a graph from 0-based `(tail, head)` pairs.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("a graph needs at least one vertex".into()));
        }
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::Domain(format!(
                "edge ({}, {}) has an endpoint outside 1..={n}",
                u + 1,
                v + 1
            )));
        }
        Ok(Self { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// The same graph with every edge reversed.
    pub fn reversed(&self) -> Self {
        Self {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| (v, u)).collect(),
        }
    }

    /// Undirected value of `c`: the fraction of edges whose endpoints differ.
    pub fn cut_value(&self, c: &CutAssignment) -> Result<CutValue> {
        self.check_evaluable(c)?;
        let s = c.signs();
        let numerator = self.edges.iter().filter(|&&(u, v)| s[u] != s[v]).count();
        Ok(CutValue::new(numerator, self.edges.len()))
    }

    /// Directed value of `c`: the fraction of edges going from the `-1` side to the `+1` side.
    pub fn dicut_value(&self, c: &CutAssignment) -> Result<CutValue> {
        self.check_evaluable(c)?;
        let s = c.signs();
        let numerator = self
            .edges
            .iter()
            .filter(|&&(u, v)| s[u] == -1 && s[v] == 1)
            .count();
        Ok(CutValue::new(numerator, self.edges.len()))
    }

    fn check_evaluable(&self, c: &CutAssignment) -> Result<()> {
        if self.edges.is_empty() {
            return Err(Error::EmptyEdges);
        }
        if c.len() != self.n {
            return Err(Error::AssignmentSize {
                expected: self.n,
                got: c.len(),
            });
        }
        Ok(())
    }

    /// Parses the edge-list format: a header `n m`, then `m` lines `u v` with
    /// 1-based endpoints. Lines starting with `#` and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header \"n m\"".into(),
        })?;
        let [n, m] = parse_pair(header_line, header, "header")?;
        if n == 0 {
            return Err(Error::Parse {
                line: header_line,
                message: "vertex count must be positive".into(),
            });
        }

        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines {
            let [u, v] = parse_pair(line, body, "edge")?;
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::Parse {
                        line,
                        message: format!("endpoint {w} outside 1..={n}"),
                    });
                }
            }
            if edges.len() == m {
                return Err(Error::Parse {
                    line,
                    message: format!("more than the {m} edges declared in the header"),
                });
            }
            edges.push((u - 1, v - 1));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                message: format!("header declares {m} edges but {} were found", edges.len()),
            });
        }
        Ok(Self { n, edges })
    }

    /// Canonical text form: header and edges in stored order, no comments.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }
}

impl FromStr for DirectedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

fn parse_pair(line: usize, body: &str, what: &str) -> Result<[usize; 2]> {
    let tokens: Vec<&str> = body.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("{what} must have exactly two integers, found {} tokens", tokens.len()),
        });
    }
    let mut out = [0usize; 2];
    for (slot, tok) in out.iter_mut().zip(&tokens) {
        *slot = tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("{what}: '{tok}' is not a non-negative integer"),
        })?;
    }
    Ok(out)
}

/// A map from vertices to `{-1, +1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CutAssignment(Vec<i8>);

impl CutAssignment {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if let Some(bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::Domain(format!("cut value {bad} is not +1 or -1")));
        }
        Ok(Self(signs))
    }

    /// Every vertex on the `+1` side.
    pub fn constant(n: usize, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1);
        Self(vec![sign; n])
    }

    /// Vertex `i` gets `-1` iff bit `n - 1 - i` of `mask` is set, so that increasing
    /// masks enumerate assignments lexicographically with `+1 < -1`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Self(
            (0..n)
                .map(|i| if mask >> (n - 1 - i) & 1 == 1 { -1 } else { 1 })
                .collect(),
        )
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negated(&self) -> Self {
        Self(self.0.iter().map(|s| -s).collect())
    }
}

impl fmt::Display for CutAssignment {
    /// Space separated signs in vertex order, e.g. `- + + - +`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(if *s == 1 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// An exact value `numerator / edges`, kept unreduced so that integrality
/// comparisons work directly on numerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CutValue {
    pub numerator: usize,
    pub edges: usize,
}

impl CutValue {
    pub fn new(numerator: usize, edges: usize) -> Self {
        debug_assert!(edges > 0 && numerator <= edges);
        Self { numerator, edges }
    }

    pub fn as_f64(&self) -> f64 {
        self.numerator as f64 / self.edges as f64
    }
}

impl PartialOrd for CutValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CutValue {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.numerator as u128 * other.edges as u128)
            .cmp(&(other.numerator as u128 * self.edges as u128))
            .then(self.edges.cmp(&other.edges))
    }
}

impl fmt::Display for CutValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.edges)
    }
}
