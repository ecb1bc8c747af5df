//! Exact `cut(G)` and `dicut(G)` by enumerating all `2^n` assignments.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{CutAssignment, CutValue, DirectedGraph};

pub const DEFAULT_VERTEX_LIMIT: usize = 24;

const CHUNK_BITS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactValue {
    pub value: CutValue,
    pub witness: CutAssignment,
}

/// Maximum directed value and the lexicographically first maximizer (`+1 < -1`).
pub fn exact_dicut(g: &DirectedGraph, vertex_limit: usize) -> Result<ExactValue> {
    // Vertex i is -1 iff bit (n-1-i) is set; (u, v) is a directed cut edge iff u is -1 and v is +1.
    enumerate(g, vertex_limit, |mask, bit| {
        g.edges()
            .iter()
            .filter(|&&(u, v)| mask & bit[u] != 0 && mask & bit[v] == 0)
            .count()
    })
}

/// Maximum undirected value and the lexicographically first maximizer (`+1 < -1`).
pub fn exact_cut(g: &DirectedGraph, vertex_limit: usize) -> Result<ExactValue> {
    enumerate(g, vertex_limit, |mask, bit| {
        g.edges()
            .iter()
            .filter(|&&(u, v)| (mask & bit[u] == 0) != (mask & bit[v] == 0))
            .count()
    })
}

fn enumerate<F>(g: &DirectedGraph, vertex_limit: usize, score: F) -> Result<ExactValue>
where
    F: Fn(u64, &[u64]) -> usize + Sync,
{
    let n = g.n();
    if n > vertex_limit || n > 63 {
        return Err(Error::VertexLimit {
            n,
            limit: vertex_limit.min(63),
        });
    }
    if g.num_edges() == 0 {
        return Err(Error::EmptyEdges);
    }
    let bit: Vec<u64> = (0..n).map(|i| 1u64 << (n - 1 - i)).collect();
    let total = 1u64 << n;
    let chunk = 1u64 << CHUNK_BITS.min(n);

    // Each chunk reports its first maximizer; the merge keeps the larger score and,
    // on ties, the smaller mask.
    let (best, mask) = (0..total / chunk)
        .into_par_iter()
        .map(|c| {
            let mut best = (0usize, c * chunk);
            for mask in c * chunk..(c + 1) * chunk {
                let s = score(mask, &bit);
                if s > best.0 {
                    best = (s, mask);
                }
            }
            best
        })
        .reduce(
            || (0, u64::MAX),
            |a, b| match a.0.cmp(&b.0) {
                std::cmp::Ordering::Greater => a,
                std::cmp::Ordering::Less => b,
                std::cmp::Ordering::Equal => (a.0, a.1.min(b.1)),
            },
        );

    Ok(ExactValue {
        value: CutValue::new(best, g.num_edges()),
        witness: CutAssignment::from_mask(n, mask),
    })
}
