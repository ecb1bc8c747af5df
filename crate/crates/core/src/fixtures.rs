//! Small named graphs and a seeded random digraph generator used by the test,
//! acceptance and benchmark harnesses.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::DirectedGraph;

/// `([5], {1→2, 3→4, 5→5})`: dicut 2/3 and no undirected cut above 2/3.
pub fn footnote() -> DirectedGraph {
    DirectedGraph::new(5, vec![(0, 1), (2, 3), (4, 4)]).unwrap()
}

pub fn single_edge() -> DirectedGraph {
    DirectedGraph::new(2, vec![(0, 1)]).unwrap()
}

pub fn directed_triangle() -> DirectedGraph {
    DirectedGraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap()
}

/// Complete bipartite `K_{a,b}` with every edge oriented left to right.
pub fn oriented_bipartite(a: usize, b: usize) -> DirectedGraph {
    let edges = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    DirectedGraph::new(a + b, edges).unwrap()
}

/// Uniform random endpoints, loops and parallel edges included.
pub fn random_digraph<R: Rng>(rng: &mut R, n: usize, m: usize) -> DirectedGraph {
    let edges = (0..m)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    DirectedGraph::new(n, edges).unwrap()
}

/// `count` random digraphs with `n ∈ [2, 8]`, `m ∈ [1, 14]`, followed by the
/// footnote graph, a single edge, the directed triangle and oriented `K_{3,3}`.
pub fn desk_suite(seed: u64, count: usize) -> Vec<(String, DirectedGraph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut suite: Vec<(String, DirectedGraph)> = (0..count)
        .map(|i| {
            let n = rng.gen_range(2..=8);
            let m = rng.gen_range(1..=14);
            (format!("random-{i:03}"), random_digraph(&mut rng, n, m))
        })
        .collect();
    suite.push(("footnote".into(), footnote()));
    suite.push(("single-edge".into(), single_edge()));
    suite.push(("triangle".into(), directed_triangle()));
    suite.push(("k33".into(), oriented_bipartite(3, 3)));
    suite
}
