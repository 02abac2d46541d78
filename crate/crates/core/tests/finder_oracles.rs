mod common;

use std::collections::BTreeSet;

use common::*;
use nil_core::classifier::{classify, find_f1_f2_f3, find_f4, find_f5, ConfigKind, ForbiddenConfig};
use nil_core::wgraph::WeightedGraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// (kind, vertex mask, split mask) for every configuration, found by testing
/// each vertex subset's induced subgraph directly against the definitions.
fn brute(g: &WeightedGraph) -> BTreeSet<(ConfigKind, u32, u32)> {
    let n = g.vertex_count();
    let adj = adjacency(g);
    let heavy = |u: usize, v: usize| g.weight(u, v).is_some_and(|w| w > 1);
    let mut out = BTreeSet::new();
    for s in (0u32..1 << (n + 1)).step_by(2) {
        let vs = members(s);
        let edges: Vec<(usize, usize)> = vs
            .iter()
            .enumerate()
            .flat_map(|(i, &u)| vs[i + 1..].iter().map(move |&v| (u, v)))
            .filter(|&(u, v)| g.adjacent(u, v))
            .collect();
        if vs.len() == 3 && edges.len() == 2 && edges.iter().all(|&(u, v)| heavy(u, v)) {
            out.insert((ConfigKind::F1, s, 0));
        }
        if vs.len() == 3 && edges.len() == 3 && edges.iter().all(|&(u, v)| heavy(u, v)) {
            out.insert((ConfigKind::F2, s, 0));
        }
        if vs.len() == 4 && edges.len() == 2 {
            let (a, b) = (edges[0], edges[1]);
            let disjoint = [a.0, a.1].iter().all(|x| *x != b.0 && *x != b.1);
            if disjoint && heavy(a.0, a.1) && heavy(b.0, b.1) {
                out.insert((ConfigKind::F3, s, 0));
            }
        }
        // splits s = A ⊔ B, each side listed once via the lowest vertex in A
        let low = s & s.wrapping_neg();
        let mut a = s;
        while a != 0 {
            if a & low != 0 {
                let b = s & !a;
                let crossing: Vec<(usize, usize)> =
                    members(a).into_iter().flat_map(|x| members(adj[x] & b).into_iter().map(move |y| (x, y))).collect();
                let odd = |m: u32| m.count_ones() % 2 == 1 && induces_cycle(&adj, m);
                if crossing.is_empty() {
                    for (c, e) in [(a, b), (b, a)] {
                        let ev = members(e);
                        if odd(c) && ev.len() == 2 && heavy(ev[0], ev[1]) {
                            out.insert((ConfigKind::F4, s, c));
                        }
                    }
                }
                if odd(a) && odd(b) && crossing.iter().all(|&(x, y)| heavy(x, y)) {
                    out.insert((ConfigKind::F5, s, a));
                }
            }
            a = (a - 1) & s;
        }
    }
    out
}

fn mask_of(vs: &[usize]) -> u32 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

fn found(g: &WeightedGraph) -> BTreeSet<(ConfigKind, u32, u32)> {
    let mut all: Vec<ForbiddenConfig> = find_f1_f2_f3(g);
    all.extend(find_f4(g));
    all.extend(find_f5(g));
    let set: BTreeSet<_> = all
        .iter()
        .map(|c| {
            let s = mask_of(&c.vertices);
            let split = match c.kind {
                ConfigKind::F4 => mask_of(c.cycles[0].vertices()),
                ConfigKind::F5 => {
                    let a = mask_of(c.cycles[0].vertices());
                    // normalise to the side holding the lowest vertex
                    if a & s & s.wrapping_neg() != 0 { a } else { s & !a }
                }
                _ => 0,
            };
            (c.kind, s, split)
        })
        .collect();
    assert_eq!(set.len(), all.len(), "duplicate configuration in {g}");
    set
}

fn check_structure(g: &WeightedGraph, c: &ForbiddenConfig) {
    let expect_edges: Vec<_> = g.edges().iter().filter(|e| c.vertices.contains(&e.u) && c.vertices.contains(&e.v)).copied().collect();
    assert_eq!(c.edges, expect_edges);
    match c.kind {
        ConfigKind::F4 => {
            let e = c.pendant.expect("F4 pendant");
            assert!(e.weight > 1 && g.weight(e.u, e.v) == Some(e.weight));
            assert!(c.connectors.is_empty());
        }
        ConfigKind::F5 => {
            assert!(c.cycles[0].len() >= c.cycles[1].len());
            for e in &c.connectors {
                assert!(e.weight > 1);
                assert!(c.cycles[0].contains(e.u) != c.cycles[0].contains(e.v));
            }
        }
        _ => assert!(c.cycles.is_empty() && c.pendant.is_none()),
    }
}

#[test]
fn finders_match_subset_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut graphs = Vec::new();
    for n in 3..=7 {
        for density in [0.25, 0.45, 0.7] {
            for max_weight in [2, 3] {
                graphs.extend((0..60).map(|_| random_graph(&mut rng, n, density, max_weight)));
            }
        }
    }
    let mut nonempty = 0;
    for g in &graphs {
        let f = found(g);
        assert_eq!(f, brute(g), "{g}");
        nonempty += usize::from(!f.is_empty());
        for c in find_f4(g).iter().chain(&find_f5(g)).chain(&find_f1_f2_f3(g)) {
            check_structure(g, c);
        }
    }
    assert!(nonempty > graphs.len() / 2);
}

#[test]
fn every_kind_occurs_in_the_sample() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut seen = BTreeSet::new();
    for _ in 0..2000 {
        let g = random_graph(&mut rng, 7, 0.35, 2);
        seen.extend(brute(&g).into_iter().map(|(k, _, _)| k));
    }
    assert_eq!(seen.len(), 5);
}

/// Weight-1 graphs are normal iff no two disjoint chordless odd cycles have
/// zero edges between them.
#[test]
fn trivial_weight_specialization() {
    let check = |g: WeightedGraph| {
        if g.edge_count() == 0 {
            return;
        }
        let adj = adjacency(&g);
        let odd: Vec<u32> = (0u32..1 << (g.vertex_count() + 1))
            .step_by(2)
            .filter(|&m| m.count_ones() % 2 == 1 && induces_cycle(&adj, m))
            .collect();
        let separated_pair = odd.iter().enumerate().any(|(i, &a)| {
            odd[i + 1..].iter().any(|&b| a & b == 0 && members(a).iter().all(|&v| adj[v] & b == 0))
        });
        let r = classify(&g).unwrap();
        assert!(r.integrally_closed, "{g}");
        assert_eq!(r.normal, !separated_pair, "{g}");
    };
    for n in 1..=6 {
        all_simple_graphs(n).for_each(check);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for density in [0.2, 0.3, 0.4, 0.6] {
        for _ in 0..1500 {
            check(random_graph(&mut rng, 7, density, 1));
        }
    }
}
