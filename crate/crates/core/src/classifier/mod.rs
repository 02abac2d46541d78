//! Structural decision procedure for edge-weighted graphs.
//!
//! `I(G, w)` is integrally closed iff `(G, w)` has no induced F1, F2 or F3,
//! and normal iff it has no induced F1, ..., F5:
//!
//! * F1: induced path on three vertices, both weights > 1.
//! * F2: triangle, all weights > 1.
//! * F3: two edges of weight > 1 with no edges between them.
//! * F4: chordless odd cycle plus a disjoint edge of weight > 1, nothing in between.
//! * F5: two disjoint chordless odd cycles, every edge between them of weight > 1.

mod certificate;
mod cross;

use std::fmt;

use thiserror::Error;

use crate::closure::ClosureError;
use crate::ideal::IdealError;
use crate::wgraph::{Cycle, Edge, Vertex, WeightedGraph, DEFAULT_CYCLE_CAP};

pub use certificate::{build_certificate, verify_certificate, Certificate, Verification};
pub use cross::{cross_validate, cross_validate_graphs, CrossValidationReport, Disagreement, GraphFamily, Skip};

pub const DEFAULT_CONFIG_CAP: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifierError {
    #[error("graph has no edges")]
    EdgelessGraph,
    #[error("{kind} configuration has a nontrivial cycle edge {edge}; use an F1/F2/F3 configuration instead")]
    NontrivialCycleEdge { kind: ConfigKind, edge: Edge },
    #[error("no F1/F2/F3 configuration backs an {0} with nontrivial cycle edges")]
    MissingFallback(ConfigKind),
    #[error("witness length {got} does not match vertex count {expected}")]
    WitnessLength { expected: usize, got: usize },
    #[error(transparent)]
    Closure(#[from] ClosureError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Configuration kinds, ordered by certificate priority.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConfigKind {
    F1,
    F2,
    F3,
    F4,
    F5,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 5] = [ConfigKind::F1, ConfigKind::F2, ConfigKind::F3, ConfigKind::F4, ConfigKind::F5];

    pub fn blocks_integral_closure(self) -> bool {
        self <= ConfigKind::F3
    }
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// An induced forbidden configuration located in a graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ForbiddenConfig {
    pub kind: ConfigKind,
    /// Sorted vertex set of the induced subgraph.
    pub vertices: Vec<Vertex>,
    /// Every edge of the induced subgraph.
    pub edges: Vec<Edge>,
    /// F4: the odd cycle. F5: both odd cycles, lengths `2k - 1` then `2l + 1`
    /// where possible.
    pub cycles: Vec<Cycle>,
    /// F4: the nontrivial edge disjoint from the cycle.
    pub pendant: Option<Edge>,
    /// F5: the (nontrivial) edges joining the two cycles; may be empty.
    pub connectors: Vec<Edge>,
}

impl ForbiddenConfig {
    fn plain(kind: ConfigKind, g: &WeightedGraph, mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        let edges = induced_edges(g, &vertices);
        ForbiddenConfig { kind, vertices, edges, cycles: Vec::new(), pendant: None, connectors: Vec::new() }
    }

    /// The power at which this configuration's witness fails (`k` for F4,
    /// `k + l` for F5, and 1 otherwise).
    pub fn witness_power(&self) -> u32 {
        match self.kind {
            ConfigKind::F4 => ((self.cycles[0].len() + 1) / 2) as u32,
            ConfigKind::F5 => ((self.cycles[0].len() + self.cycles[1].len()) / 2) as u32,
            _ => 1,
        }
    }
}

impl fmt::Display for ForbiddenConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {:?}", self.kind, self.vertices)
    }
}

fn induced_edges(g: &WeightedGraph, vertices: &[Vertex]) -> Vec<Edge> {
    let mut out = Vec::new();
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if let Some(weight) = g.weight(u, v) {
                out.push(Edge { u: u.min(v), v: u.max(v), weight });
            }
        }
    }
    out.sort();
    out
}

/// A capped list of configurations; `truncated` means more exist.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConfigList {
    pub configs: Vec<ForbiddenConfig>,
    pub truncated: bool,
}

impl ConfigList {
    fn push(&mut self, c: ForbiddenConfig, cap: usize) -> bool {
        if self.configs.len() >= cap {
            self.truncated = true;
            false
        } else {
            self.configs.push(c);
            true
        }
    }

    fn sorted(mut self) -> Self {
        self.configs.sort();
        self
    }
}

/// Every induced F1, F2 and F3, in canonical order.
pub fn find_f1_f2_f3(g: &WeightedGraph) -> Vec<ForbiddenConfig> {
    let mut all = find_f1(g, usize::MAX).configs;
    all.extend(find_f2(g, usize::MAX).configs);
    all.extend(find_f3(g, usize::MAX).configs);
    all
}

fn nontrivial_edges(g: &WeightedGraph) -> Vec<Edge> {
    g.edges().iter().copied().filter(Edge::is_nontrivial).collect()
}

fn find_f1(g: &WeightedGraph, cap: usize) -> ConfigList {
    let mut list = ConfigList::default();
    'scan: for c in g.vertices() {
        let heavy: Vec<Vertex> = g.neighbors(c).filter(|&x| g.weight(c, x).unwrap() > 1).collect();
        for (i, &x) in heavy.iter().enumerate() {
            for &y in &heavy[i + 1..] {
                if !g.adjacent(x, y) && !list.push(ForbiddenConfig::plain(ConfigKind::F1, g, vec![x, c, y]), cap) {
                    break 'scan;
                }
            }
        }
    }
    list.sorted()
}

fn find_f2(g: &WeightedGraph, cap: usize) -> ConfigList {
    let mut list = ConfigList::default();
    let heavy = nontrivial_edges(g);
    'scan: for e in &heavy {
        for z in g.neighbors(e.v).filter(|&z| z > e.v) {
            let nontrivial = |a, b| g.weight(a, b).is_some_and(|w| w > 1);
            if nontrivial(e.u, z) && nontrivial(e.v, z) && !list.push(ForbiddenConfig::plain(ConfigKind::F2, g, vec![e.u, e.v, z]), cap) {
                break 'scan;
            }
        }
    }
    list.sorted()
}

fn find_f3(g: &WeightedGraph, cap: usize) -> ConfigList {
    let mut list = ConfigList::default();
    let heavy = nontrivial_edges(g);
    'scan: for (i, e) in heavy.iter().enumerate() {
        for f in &heavy[i + 1..] {
            let disjoint = !f.touches(e.u) && !f.touches(e.v);
            let separated = [e.u, e.v].iter().all(|&x| !g.adjacent(x, f.u) && !g.adjacent(x, f.v));
            if disjoint && separated && !list.push(ForbiddenConfig::plain(ConfigKind::F3, g, vec![e.u, e.v, f.u, f.v]), cap) {
                break 'scan;
            }
        }
    }
    list.sorted()
}

/// Every induced F4: a chordless odd cycle with a nontrivial edge that
/// neither meets it nor is joined to it.
pub fn find_f4(g: &WeightedGraph) -> Vec<ForbiddenConfig> {
    find_f4_in(g, &g.chordless_odd_cycles(), usize::MAX).configs
}

fn find_f4_in(g: &WeightedGraph, odd: &[Cycle], cap: usize) -> ConfigList {
    let mut list = ConfigList::default();
    let heavy = nontrivial_edges(g);
    'scan: for c in odd {
        for e in &heavy {
            let clear = [e.u, e.v].iter().all(|&x| !c.contains(x) && g.neighbors(x).all(|y| !c.contains(y)));
            if !clear {
                continue;
            }
            let mut vertices: Vec<Vertex> = c.vertices().to_vec();
            vertices.extend([e.u, e.v]);
            let mut cfg = ForbiddenConfig::plain(ConfigKind::F4, g, vertices);
            cfg.cycles = vec![c.clone()];
            cfg.pendant = Some(*e);
            if !list.push(cfg, cap) {
                break 'scan;
            }
        }
    }
    list.sorted()
}

/// Every induced F5: two disjoint chordless odd cycles all of whose
/// connecting edges are nontrivial.
pub fn find_f5(g: &WeightedGraph) -> Vec<ForbiddenConfig> {
    find_f5_in(g, &g.chordless_odd_cycles(), usize::MAX).configs
}

fn find_f5_in(g: &WeightedGraph, odd: &[Cycle], cap: usize) -> ConfigList {
    let mut list = ConfigList::default();
    'scan: for (i, a) in odd.iter().enumerate() {
        for b in &odd[i + 1..] {
            if !a.is_disjoint_from(b) {
                continue;
            }
            let mut connectors = Vec::new();
            let mut trivial_link = false;
            for &x in a.vertices() {
                for y in g.neighbors(x).filter(|&y| b.contains(y)) {
                    let weight = g.weight(x, y).unwrap();
                    if weight == 1 {
                        trivial_link = true;
                    }
                    connectors.push(Edge { u: x.min(y), v: x.max(y), weight });
                }
            }
            if trivial_link {
                continue;
            }
            connectors.sort();
            let mut vertices: Vec<Vertex> = a.vertices().to_vec();
            vertices.extend_from_slice(b.vertices());
            let mut cfg = ForbiddenConfig::plain(ConfigKind::F5, g, vertices);
            // the cycle of length 2k - 1 >= 3 first, then the one of length 2l + 1
            cfg.cycles = if a.len() >= b.len() { vec![a.clone(), b.clone()] } else { vec![b.clone(), a.clone()] };
            cfg.connectors = connectors;
            if !list.push(cfg, cap) {
                break 'scan;
            }
        }
    }
    list.sorted()
}

/// Knobs for [`classify_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Maximum configurations reported per kind.
    pub per_kind_cap: usize,
    /// Global cap on enumerated chordless cycles.
    pub cycle_cap: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self { per_kind_cap: DEFAULT_CONFIG_CAP, cycle_cap: DEFAULT_CYCLE_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub integrally_closed: bool,
    pub normal: bool,
    /// Located configurations grouped by kind, each group canonically ordered.
    pub found: Vec<ForbiddenConfig>,
    /// Some kind had more configurations than the cap.
    pub truncated: bool,
    /// Built from the first configuration in priority order F1 > ... > F5.
    pub primary_certificate: Option<Certificate>,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn has(&self, kind: ConfigKind) -> bool {
        self.found.iter().any(|c| c.kind == kind)
    }

    pub fn count(&self, kind: ConfigKind) -> usize {
        self.found.iter().filter(|c| c.kind == kind).count()
    }
}

pub fn classify(g: &WeightedGraph) -> Result<ClassificationReport, ClassifierError> {
    classify_with(g, ClassifyOptions::default())
}

pub fn classify_with(g: &WeightedGraph, opts: ClassifyOptions) -> Result<ClassificationReport, ClassifierError> {
    if g.edge_count() == 0 {
        return Err(ClassifierError::EdgelessGraph);
    }
    let mut notes = Vec::new();
    let cycles = g.chordless_cycles_capped(None, opts.cycle_cap);
    if cycles.truncated {
        notes.push(format!(
            "chordless cycle enumeration stopped at {} cycles; F4/F5 search is incomplete",
            opts.cycle_cap
        ));
    }
    let odd: Vec<Cycle> = cycles.cycles.into_iter().filter(Cycle::is_odd).collect();
    let cap = opts.per_kind_cap.max(1);
    let lists = [
        find_f1(g, cap),
        find_f2(g, cap),
        find_f3(g, cap),
        find_f4_in(g, &odd, cap),
        find_f5_in(g, &odd, cap),
    ];
    let truncated = lists.iter().any(|l| l.truncated);
    for (kind, l) in ConfigKind::ALL.iter().zip(&lists) {
        if l.truncated {
            notes.push(format!("{kind} list truncated at {cap}"));
        }
    }
    let found: Vec<ForbiddenConfig> = lists.into_iter().flat_map(|l| l.configs).collect();
    let integrally_closed = !found.iter().any(|c| c.kind.blocks_integral_closure());
    let normal = found.is_empty();
    let primary_certificate = match found.first() {
        None => None,
        Some(first) => Some(build_certificate(g, first).map_err(|e| match e {
            ClassifierError::NontrivialCycleEdge { kind, .. } => ClassifierError::MissingFallback(kind),
            other => other,
        })?),
    };
    Ok(ClassificationReport { integrally_closed, normal, found, truncated, primary_certificate, notes })
}
