#![allow(dead_code)]

use std::collections::BTreeSet;

use nil_core::wgraph::WeightedGraph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn graph(n: usize, edges: &[(usize, usize, u64)]) -> WeightedGraph {
    WeightedGraph::new(n, edges.iter().copied()).unwrap()
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect()
}

/// Every simple graph on `n` vertices with unit weights, edgeless included.
pub fn all_simple_graphs(n: usize) -> impl Iterator<Item = WeightedGraph> {
    let p = pairs(n);
    (0u64..1 << p.len()).map(move |mask| {
        let edges = p.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &(u, v))| (u, v, 1));
        WeightedGraph::new(n, edges).unwrap()
    })
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64, max_weight: u64) -> WeightedGraph {
    let mut edges = Vec::new();
    for (u, v) in pairs(n) {
        if rng.gen_bool(density) {
            edges.push((u, v, rng.gen_range(1..=max_weight)));
        }
    }
    WeightedGraph::new(n, edges).unwrap()
}

/// Vertices of `g` as a bitmask-indexed adjacency table.
pub fn adjacency(g: &WeightedGraph) -> Vec<u32> {
    let n = g.vertex_count();
    let mut adj = vec![0u32; n + 1];
    for e in g.edges() {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    adj
}

pub fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).collect()
}

/// True iff the subgraph induced on `mask` is a single cycle.
pub fn induces_cycle(adj: &[u32], mask: u32) -> bool {
    let vs = members(mask);
    if vs.len() < 3 || vs.iter().any(|&v| (adj[v] & mask).count_ones() != 2) {
        return false;
    }
    // 2-regular, so connected iff one traversal covers everything
    let mut seen = 1u32 << vs[0];
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in members(frontier) {
            next |= adj[v] & mask & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen == mask
}

/// Vertex sets of every cycle (chorded or not) by depth-first search from
/// each minimum vertex, paired with the cycle length.
pub fn all_cycles(adj: &[u32], n: usize) -> Vec<(u32, usize)> {
    fn go(adj: &[u32], start: usize, v: usize, used: u32, len: usize, out: &mut Vec<(u32, usize)>) {
        for w in members(adj[v]) {
            if w == start && len >= 3 {
                out.push((used, len));
            } else if w > start && used >> w & 1 == 0 {
                go(adj, start, w, used | 1 << w, len + 1, out);
            }
        }
    }
    let mut out = Vec::new();
    for s in 1..=n {
        go(adj, s, s, 1 << s, 1, &mut out);
    }
    // each cycle is found once per direction
    out.sort_unstable();
    out
}

pub fn has_even_cycle_brute(adj: &[u32], n: usize) -> bool {
    fn go(adj: &[u32], start: usize, v: usize, used: u32, len: usize) -> bool {
        for w in members(adj[v]) {
            if w == start && len >= 4 && len % 2 == 0 {
                return true;
            }
            if w > start && used >> w & 1 == 0 && go(adj, start, w, used | 1 << w, len + 1) {
                return true;
            }
        }
        false
    }
    (1..=n).any(|s| go(adj, s, s, 1 << s, 1))
}

/// Every two vertex-disjoint odd cycles (chorded included) share an edge
/// between them.
pub fn odd_cycle_condition_brute(adj: &[u32], n: usize) -> bool {
    let odd: BTreeSet<u32> = all_cycles(adj, n).into_iter().filter(|&(_, l)| l % 2 == 1).map(|(m, _)| m).collect();
    let odd: Vec<u32> = odd.into_iter().collect();
    for (i, &a) in odd.iter().enumerate() {
        for &b in &odd[i + 1..] {
            if a & b == 0 && members(a).iter().all(|&v| adj[v] & b == 0) {
                return false;
            }
        }
    }
    true
}
