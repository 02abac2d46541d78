mod common;

use std::collections::BTreeSet;

use common::*;
use nil_core::wgraph::{Bipartiteness, OddCycleCondition, WeightedGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn mask_of(vs: &[usize]) -> u32 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

fn chordless_brute(g: &WeightedGraph) -> BTreeSet<u32> {
    let n = g.vertex_count();
    let adj = adjacency(g);
    (0u32..1 << (n + 1)).step_by(2).filter(|&m| induces_cycle(&adj, m)).collect()
}

fn graphs_up_to_seven() -> Vec<WeightedGraph> {
    let mut out: Vec<WeightedGraph> = (1..=6).flat_map(all_simple_graphs).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for density in [0.2, 0.35, 0.5, 0.7, 0.9] {
        out.extend((0..400).map(|_| random_graph(&mut rng, 7, density, 1)));
    }
    out
}

#[test]
fn chordless_cycles_match_subset_scan() {
    for g in graphs_up_to_seven() {
        let found = g.chordless_cycles(None);
        let masks: BTreeSet<u32> = found.iter().map(|c| mask_of(c.vertices())).collect();
        assert_eq!(masks.len(), found.len(), "duplicate cycle in {g}");
        assert_eq!(masks, chordless_brute(&g), "{g}");
        for c in &found {
            assert!(c.is_cycle_of(&g) && c.is_chordless_in(&g));
        }
    }
}

#[test]
fn even_cycles_match_dfs() {
    for g in graphs_up_to_seven() {
        let adj = adjacency(&g);
        assert_eq!(g.has_even_cycle(), has_even_cycle_brute(&adj, g.vertex_count()), "{g}");
    }
}

#[test]
fn odd_cycle_condition_matches_all_cycles() {
    for g in graphs_up_to_seven() {
        let adj = adjacency(&g);
        let verdict = g.odd_cycle_condition();
        assert_eq!(verdict.holds(), odd_cycle_condition_brute(&adj, g.vertex_count()), "{g}");
        if let OddCycleCondition::Violated(a, b) = verdict {
            assert!(a.is_odd() && b.is_odd() && a.is_cycle_of(&g) && b.is_cycle_of(&g));
            assert!(a.is_disjoint_from(&b) && !a.joined_to(&b, &g));
            for &x in a.vertices() {
                assert!(b.vertices().iter().all(|&y| !g.adjacent(x, y)));
            }
        }
    }
}

#[test]
fn every_odd_cycle_contains_a_chordless_odd_cycle() {
    for g in graphs_up_to_seven() {
        let adj = adjacency(&g);
        let chordless: Vec<u32> = g.chordless_odd_cycles().iter().map(|c| mask_of(c.vertices())).collect();
        for (m, len) in all_cycles(&adj, g.vertex_count()) {
            if len % 2 == 1 {
                assert!(chordless.iter().any(|&c| c & !m == 0), "{g}: odd cycle {:?}", members(m));
            }
        }
    }
}

#[test]
fn bipartite_iff_no_chordless_odd_cycle() {
    for g in graphs_up_to_seven() {
        let verdict = g.is_bipartite();
        assert_eq!(verdict.is_bipartite(), g.chordless_odd_cycles().is_empty(), "{g}");
        if let Bipartiteness::OddCycle(c) = verdict {
            assert!(c.is_odd() && c.is_cycle_of(&g), "{g}");
        }
    }
}

#[test]
fn identity_induced_subgraph() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 6, 0.5, 4);
        let all: Vec<usize> = g.vertices().collect();
        let sub = g.induced_subgraph(&all).unwrap();
        assert_eq!(sub.graph, g);
        assert!((1..=6).all(|v| sub.old_label(v) == v && sub.new_label(v) == Some(v)));
    }
}
