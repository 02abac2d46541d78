//! Edge-weighted simple graphs and the combinatorial analyses built on them:
//! induced subgraphs, components, bipartiteness, chordless cycles, even-cycle
//! detection, the odd cycle condition and the classification of compact graphs.
//!
//! Vertices are labelled `1..=n`. All graph values are immutable once built.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type Weight = u64;

/// Default global cap on the number of chordless cycles enumerated.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: Vertex },
    #[error("duplicate edge {{{u},{v}}}")]
    DuplicateEdge { u: Vertex, v: Vertex },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge {{{u},{v}}} has weight {weight}; weights must be >= 1")]
    NonPositiveWeight { u: Vertex, v: Vertex, weight: i64 },
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is disconnected ({components} non-trivial components)")]
    Disconnected { components: usize },
    #[error("vertex {vertex} is a leaf")]
    Leaf { vertex: Vertex },
    #[error("compact graph not matched by any bouquet class: {0}")]
    UnrecognizedCompact(String),
}

/// An edge `{u, v}` with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub weight: Weight,
}

impl Edge {
    pub fn is_nontrivial(&self) -> bool {
        self.weight > 1
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}^{}", self.u, self.v, self.weight)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    // adj[v] sorted by neighbour label; adj[0] unused.
    adj: Vec<Vec<(Vertex, Weight)>>,
}

impl WeightedGraph {
    /// Validates and builds a graph on vertices `1..=n`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, Weight)>,
    {
        let mut adj: Vec<Vec<(Vertex, Weight)>> = vec![Vec::new(); n + 1];
        let mut list = Vec::new();
        let mut seen = BTreeSet::new();
        for (a, b, w) in edges {
            for x in [a, b] {
                if x == 0 || x > n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            let (u, v) = (a.min(b), a.max(b));
            if w == 0 {
                return Err(GraphError::NonPositiveWeight { u, v, weight: 0 });
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            list.push(Edge { u, v, weight: w });
            adj[u].push((v, w));
            adj[v].push((u, w));
        }
        list.sort();
        for row in &mut adj {
            row.sort();
        }
        Ok(Self { n, edges: list, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic `(u, v)` order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn weight(&self, u: Vertex, v: Vertex) -> Option<Weight> {
        let row = self.adj.get(u)?;
        row.binary_search_by_key(&v, |&(x, _)| x)
            .ok()
            .map(|i| row[i].1)
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.weight(u, v).is_some()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(x, _)| x)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn is_trivially_weighted(&self) -> bool {
        self.edges.iter().all(|e| e.weight == 1)
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// The subgraph induced on `vertices`, relabelled `1..=|V|` in ascending
    /// order of the original labels.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<InducedSubgraph, GraphError> {
        let mut labels: Vec<Vertex> = vertices.to_vec();
        labels.sort_unstable();
        labels.dedup();
        for &v in &labels {
            self.check_vertex(v)?;
        }
        let mut new_of = vec![0; self.n + 1];
        for (i, &v) in labels.iter().enumerate() {
            new_of[v] = i + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| new_of[e.u] != 0 && new_of[e.v] != 0)
            .map(|e| (new_of[e.u], new_of[e.v], e.weight));
        let graph = WeightedGraph::new(labels.len(), edges)?;
        Ok(InducedSubgraph { graph, labels })
    }

    /// `G \ e`: same vertex set, one edge removed.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Option<WeightedGraph> {
        self.weight(u, v)?;
        let edges = self
            .edges
            .iter()
            .filter(|e| !(e.touches(u) && e.touches(v)))
            .map(|e| (e.u, e.v, e.weight));
        WeightedGraph::new(self.n, edges).ok()
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &WeightedGraph) -> WeightedGraph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, e.weight))
            .chain(other.edges.iter().map(|e| (e.u + shift, e.v + shift, e.weight)));
        WeightedGraph::new(self.n + other.n, edges).expect("union of valid graphs is valid")
    }

    /// Adds a new vertex `n + 1` joined to `anchor` by an edge of weight `weight`.
    pub fn with_pendant(&self, anchor: Vertex, weight: Weight) -> Result<WeightedGraph, GraphError> {
        self.check_vertex(anchor)?;
        let edges = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, e.weight))
            .chain(std::iter::once((anchor, self.n + 1, weight)));
        WeightedGraph::new(self.n + 1, edges)
    }

    /// Maximal connected vertex sets, each sorted, ordered by minimum vertex.
    /// Isolated vertices are singleton components.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n + 1];
        let mut out = Vec::new();
        for s in 1..=self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut stack = vec![s];
            let mut members = Vec::new();
            while let Some(x) = stack.pop() {
                members.push(x);
                for y in self.neighbors(x) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// BFS 2-colouring. A failed colouring yields an odd cycle built from the
    /// two tree paths to the conflicting edge.
    pub fn is_bipartite(&self) -> Bipartiteness {
        let mut depth = vec![usize::MAX; self.n + 1];
        let mut parent = vec![0; self.n + 1];
        for s in 1..=self.n {
            if depth[s] != usize::MAX {
                continue;
            }
            depth[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if depth[y] == usize::MAX {
                        depth[y] = depth[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    } else if depth[y] % 2 == depth[x] % 2 {
                        return Bipartiteness::OddCycle(odd_cycle_from_conflict(x, y, &depth, &parent));
                    }
                }
            }
        }
        Bipartiteness::Bipartite
    }

    /// All chordless cycles of length at most `max_len`, under the default
    /// global count cap.
    pub fn chordless_cycles(&self, max_len: Option<usize>) -> Vec<Cycle> {
        self.chordless_cycles_capped(max_len, DEFAULT_CYCLE_CAP).cycles
    }

    /// Chordless cycles in canonical form, sorted by length then
    /// lexicographically. Each cycle is found from its minimum vertex `s` by
    /// growing paths over vertices `> s` whose inner vertices carry no chords.
    pub fn chordless_cycles_capped(&self, max_len: Option<usize>, cap: usize) -> CycleEnumeration {
        let max_len = max_len.unwrap_or(usize::MAX);
        let mut search = ChordlessSearch {
            g: self,
            max_len,
            cap,
            on_path: vec![false; self.n + 1],
            path: Vec::new(),
            found: Vec::new(),
            truncated: false,
        };
        if max_len >= 3 {
            'outer: for s in 1..=self.n {
                for p1 in self.neighbors(s).filter(|&p| p > s) {
                    search.path = vec![s, p1];
                    search.on_path[s] = true;
                    search.on_path[p1] = true;
                    search.extend();
                    search.on_path[s] = false;
                    search.on_path[p1] = false;
                    if search.truncated {
                        break 'outer;
                    }
                }
            }
        }
        let mut cycles = search.found;
        cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        CycleEnumeration { cycles, truncated: search.truncated }
    }

    /// Chordless cycles of odd length.
    pub fn chordless_odd_cycles(&self) -> Vec<Cycle> {
        self.chordless_cycles(None).into_iter().filter(Cycle::is_odd).collect()
    }

    /// Biconnected blocks as edge lists (Tarjan, iterative).
    pub fn blocks(&self) -> Vec<Vec<Edge>> {
        let n = self.n;
        let mut disc = vec![0usize; n + 1];
        let mut low = vec![0usize; n + 1];
        let mut time = 0;
        let mut blocks = Vec::new();
        let mut estack: Vec<(Vertex, Vertex)> = Vec::new();
        for root in 1..=n {
            if disc[root] != 0 || self.degree(root) == 0 {
                continue;
            }
            time += 1;
            disc[root] = time;
            low[root] = time;
            // (vertex, parent, next neighbour index)
            let mut stack = vec![(root, 0usize, 0usize)];
            while let Some(&mut (v, p, ref mut idx)) = stack.last_mut() {
                if let Some(&(w, _)) = self.adj[v].get(*idx) {
                    *idx += 1;
                    if disc[w] == 0 {
                        estack.push((v, w));
                        time += 1;
                        disc[w] = time;
                        low[w] = time;
                        stack.push((w, v, 0));
                    } else if w != p && disc[w] < disc[v] {
                        estack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(u, _, _)) = stack.last() {
                        low[u] = low[u].min(low[v]);
                        if low[v] >= disc[u] {
                            let mut block = Vec::new();
                            while let Some((a, b)) = estack.pop() {
                                let w = self.weight(a, b).expect("edge on stack");
                                block.push(Edge { u: a.min(b), v: a.max(b), weight: w });
                                if (a, b) == (u, v) {
                                    break;
                                }
                            }
                            block.sort();
                            blocks.push(block);
                        }
                    }
                }
            }
        }
        blocks.sort();
        blocks
    }

    /// Whether some cycle (not necessarily induced) has even length. A graph
    /// has no even cycle iff each block is a bridge or an odd cycle.
    pub fn has_even_cycle(&self) -> bool {
        self.blocks().iter().any(|block| {
            let verts: BTreeSet<Vertex> = block.iter().flat_map(|e| [e.u, e.v]).collect();
            match block.len() {
                1 => false,
                m if m == verts.len() => m % 2 == 0,
                _ => true,
            }
        })
    }

    /// Every two vertex-disjoint odd cycles must be joined by an edge. Only
    /// chordless odd cycles are checked; every odd cycle contains one.
    pub fn odd_cycle_condition(&self) -> OddCycleCondition {
        let cycles = self.chordless_odd_cycles();
        match first_unjoined_disjoint_pair(self, &cycles) {
            Some((a, b)) => OddCycleCondition::Violated(a.clone(), b.clone()),
            None => OddCycleCondition::Holds,
        }
    }

    /// Degree-1 vertices whose only edge has weight 1, as `(leaf, neighbour)`.
    pub fn trivial_leaves(&self) -> Vec<(Vertex, Vertex)> {
        (1..=self.n)
            .filter(|&v| self.degree(v) == 1 && self.adj[v][0].1 == 1)
            .map(|v| (v, self.adj[v][0].0))
            .collect()
    }

    /// Recognises the connected leafless compact graphs: a bouquet of odd
    /// cycles, two bouquets with adjacent stems (optionally closed by an even
    /// path into one more odd cycle), or three bouquets on a stem triangle.
    /// Isolated vertices are ignored.
    pub fn classify_compact(&self) -> Result<CompactClass, GraphError> {
        if self.edges.is_empty() {
            return Err(GraphError::NoEdges);
        }
        let nontrivial = self
            .connected_components()
            .into_iter()
            .filter(|c| c.len() > 1)
            .count();
        if nontrivial > 1 {
            return Err(GraphError::Disconnected { components: nontrivial });
        }
        if let Some(v) = (1..=self.n).find(|&v| self.degree(v) == 1) {
            return Err(GraphError::Leaf { vertex: v });
        }
        if self.has_even_cycle() || !self.odd_cycle_condition().holds() {
            return Ok(CompactClass::not_compact());
        }
        self.recognize_bouquets()
    }

    fn recognize_bouquets(&self) -> Result<CompactClass, GraphError> {
        let stems: Vec<Vertex> = (1..=self.n).filter(|&v| self.degree(v) >= 3).collect();
        let blocks = self.blocks();
        let block_vertices = |b: &Vec<Edge>| -> BTreeSet<Vertex> { b.iter().flat_map(|e| [e.u, e.v]).collect() };
        // Every block other than the stem block must be an odd cycle through
        // exactly one stem.
        let petals_ok = |skip: Option<usize>| {
            blocks.iter().enumerate().filter(|(i, _)| Some(*i) != skip).all(|(_, b)| {
                let vs = block_vertices(b);
                b.len() == vs.len() && b.len() % 2 == 1 && stems.iter().filter(|s| vs.contains(s)).count() == 1
            })
        };
        let unrecognized = |what: &str| Err(GraphError::UnrecognizedCompact(format!("{what}; stems {stems:?}")));
        match stems.len() {
            0 => {
                let stem = self.edges[0].u;
                Ok(CompactClass { kind: CompactKind::Bouquet, stems: vec![stem], even_path: None })
            }
            1 => {
                if petals_ok(None) {
                    Ok(CompactClass { kind: CompactKind::Bouquet, stems, even_path: None })
                } else {
                    unrecognized("single stem with a block that is not an odd cycle through it")
                }
            }
            2 => {
                let (s, t) = (stems[0], stems[1]);
                if !self.adjacent(s, t) {
                    return unrecognized("two stems that are not adjacent");
                }
                let idx = blocks
                    .iter()
                    .position(|b| b.iter().any(|e| e.u == s && e.v == t))
                    .expect("every edge lies in a block");
                let stem_block = &blocks[idx];
                let even_path = if stem_block.len() == 1 {
                    None
                } else {
                    Some(path_around_cycle(stem_block, s, t))
                };
                if petals_ok(Some(idx)) {
                    Ok(CompactClass { kind: CompactKind::TwoBouquets, stems, even_path })
                } else {
                    unrecognized("two stems with a block that is not a single-stem odd cycle")
                }
            }
            3 => {
                let (a, b, c) = (stems[0], stems[1], stems[2]);
                if !(self.adjacent(a, b) && self.adjacent(b, c) && self.adjacent(a, c)) {
                    return unrecognized("three stems not forming a triangle");
                }
                let idx = blocks
                    .iter()
                    .position(|blk| blk.len() == 3 && blk.iter().all(|e| stems.contains(&e.u) && stems.contains(&e.v)));
                match idx {
                    Some(i) if petals_ok(Some(i)) => {
                        Ok(CompactClass { kind: CompactKind::ThreeBouquets, stems, even_path: None })
                    }
                    _ => unrecognized("stem triangle with extra structure"),
                }
            }
            _ => unrecognized("more than three stems"),
        }
    }
}

impl fmt::Display for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

/// Result of [`WeightedGraph::induced_subgraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: WeightedGraph,
    /// `labels[i]` is the original label of new vertex `i + 1`.
    pub labels: Vec<Vertex>,
}

impl InducedSubgraph {
    pub fn old_label(&self, new: Vertex) -> Vertex {
        self.labels[new - 1]
    }

    pub fn new_label(&self, old: Vertex) -> Option<Vertex> {
        self.labels.binary_search(&old).ok().map(|i| i + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite,
    OddCycle(Cycle),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OddCycleCondition {
    Holds,
    /// Two vertex-disjoint odd cycles with no edge between them.
    Violated(Cycle, Cycle),
}

impl OddCycleCondition {
    pub fn holds(&self) -> bool {
        matches!(self, OddCycleCondition::Holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleEnumeration {
    pub cycles: Vec<Cycle>,
    pub truncated: bool,
}

/// A cycle in canonical form: rotated so the minimum label comes first and
/// reflected so the second vertex is smaller than the last.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle(Vec<Vertex>);

impl Cycle {
    /// Canonicalises `vertices`. Returns `None` for fewer than three or
    /// repeated vertices.
    pub fn new(mut vertices: Vec<Vertex>) -> Option<Self> {
        let m = vertices.len();
        if m < 3 || vertices.iter().collect::<BTreeSet<_>>().len() != m {
            return None;
        }
        let pos = (0..m).min_by_key(|&i| vertices[i]).unwrap();
        vertices.rotate_left(pos);
        if vertices[1] > vertices[m - 1] {
            vertices[1..].reverse();
        }
        Some(Cycle(vertices))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.0.len() % 2 == 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    /// Consecutive pairs `(v_i, v_{i+1})`, closing with `(v_m, v_1)`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let m = self.0.len();
        (0..m).map(move |i| (self.0[i], self.0[(i + 1) % m]))
    }

    /// All consecutive pairs are edges of `g`.
    pub fn is_cycle_of(&self, g: &WeightedGraph) -> bool {
        self.edges().all(|(a, b)| g.adjacent(a, b))
    }

    /// A cycle of `g` with no edge between non-consecutive vertices.
    pub fn is_chordless_in(&self, g: &WeightedGraph) -> bool {
        let m = self.0.len();
        self.is_cycle_of(g)
            && (0..m).all(|i| {
                (i + 2..m).all(|j| (i == 0 && j == m - 1) || !g.adjacent(self.0[i], self.0[j]))
            })
    }

    pub fn is_disjoint_from(&self, other: &Cycle) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    /// Whether some edge of `g` joins a vertex of `self` to one of `other`.
    pub fn joined_to(&self, other: &Cycle, g: &WeightedGraph) -> bool {
        self.0.iter().any(|&x| g.neighbors(x).any(|y| other.contains(y)))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CompactKind {
    NotCompact,
    Bouquet,
    TwoBouquets,
    ThreeBouquets,
}

impl fmt::Display for CompactKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CompactKind::NotCompact => "not-compact",
            CompactKind::Bouquet => "bouquet",
            CompactKind::TwoBouquets => "two-bouquets",
            CompactKind::ThreeBouquets => "three-bouquets",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompactClass {
    pub kind: CompactKind,
    pub stems: Vec<Vertex>,
    /// For two bouquets: the stem-to-stem path of even length, when the stem
    /// edge lies on an odd cycle.
    pub even_path: Option<Vec<Vertex>>,
}

impl CompactClass {
    fn not_compact() -> Self {
        CompactClass { kind: CompactKind::NotCompact, stems: Vec::new(), even_path: None }
    }

    pub fn is_compact(&self) -> bool {
        self.kind != CompactKind::NotCompact
    }
}

struct ChordlessSearch<'a> {
    g: &'a WeightedGraph,
    max_len: usize,
    cap: usize,
    on_path: Vec<bool>,
    path: Vec<Vertex>,
    found: Vec<Cycle>,
    truncated: bool,
}

impl ChordlessSearch<'_> {
    fn extend(&mut self) {
        let g = self.g;
        let s = self.path[0];
        let last = *self.path.last().unwrap();
        let k = self.path.len();
        for v in g.neighbors(last) {
            if v <= s || self.on_path[v] {
                continue;
            }
            if self.path[1..k - 1].iter().any(|&p| g.adjacent(v, p)) {
                continue;
            }
            if g.adjacent(v, s) {
                if self.path[1] < v && k < self.max_len {
                    if self.found.len() >= self.cap {
                        self.truncated = true;
                        return;
                    }
                    let mut vs = self.path.clone();
                    vs.push(v);
                    self.found.push(Cycle(vs));
                }
                continue;
            }
            // Closing after v needs at least one more vertex.
            if k + 2 > self.max_len {
                continue;
            }
            self.path.push(v);
            self.on_path[v] = true;
            self.extend();
            self.on_path[v] = false;
            self.path.pop();
            if self.truncated {
                return;
            }
        }
    }
}

fn odd_cycle_from_conflict(x: Vertex, y: Vertex, depth: &[usize], parent: &[Vertex]) -> Cycle {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while a != b {
        if depth[a] >= depth[b] {
            a = parent[a];
            left.push(a);
        } else {
            b = parent[b];
            right.push(b);
        }
    }
    // both sides end at the common ancestor
    right.pop();
    right.reverse();
    left.extend(right);
    Cycle::new(left).expect("BFS conflict yields a simple cycle")
}

pub(crate) fn first_unjoined_disjoint_pair<'c>(g: &WeightedGraph, cycles: &'c [Cycle]) -> Option<(&'c Cycle, &'c Cycle)> {
    for (i, a) in cycles.iter().enumerate() {
        for b in &cycles[i + 1..] {
            if a.is_disjoint_from(b) && !a.joined_to(b, g) {
                return Some((a, b));
            }
        }
    }
    None
}

// Walks the cycle block from s to t avoiding the edge {s, t}.
fn path_around_cycle(block: &[Edge], s: Vertex, t: Vertex) -> Vec<Vertex> {
    let mut path = vec![s];
    let mut prev = t;
    let mut cur = s;
    while cur != t {
        let next = block
            .iter()
            .filter(|e| e.touches(cur))
            .map(|e| if e.u == cur { e.v } else { e.u })
            .find(|&x| x != prev)
            .expect("cycle block has degree two everywhere");
        prev = cur;
        cur = next;
        path.push(cur);
    }
    path
}
