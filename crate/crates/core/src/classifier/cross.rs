//! Exhaustive agreement check between the structural classifier and the
//! algebraic oracle over a bounded family of graphs.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{classify, verify_certificate, ClassifierError};
use crate::closure::{ClosureOracle, NormalityVerdict, OracleLimits, PowerClosure};
use crate::ideal::MonomialIdeal;
use crate::wgraph::WeightedGraph;

/// Labelled graphs on a fixed vertex set with weights drawn from `weights`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFamily {
    pub max_vertices: usize,
    pub weights: Vec<u64>,
    /// Only graphs on exactly `n` vertices that are connected, for every
    /// `2 <= n <= max_vertices`. Otherwise every edge-weight assignment on
    /// `max_vertices` vertices; smaller graphs appear padded with isolated
    /// vertices.
    pub connected_only: bool,
}

impl GraphFamily {
    pub fn all(max_vertices: usize, weights: &[u64]) -> Self {
        Self { max_vertices, weights: weights.to_vec(), connected_only: false }
    }

    pub fn connected(max_vertices: usize, weights: &[u64]) -> Self {
        Self { max_vertices, weights: weights.to_vec(), connected_only: true }
    }

    /// Every member with at least one edge, in a fixed order.
    pub fn graphs(&self) -> Vec<WeightedGraph> {
        let mut weights = self.weights.clone();
        weights.sort_unstable();
        weights.dedup();
        if weights.is_empty() || self.max_vertices < 2 {
            return Vec::new();
        }
        let sizes: Vec<usize> = if self.connected_only {
            (2..=self.max_vertices).collect()
        } else {
            vec![self.max_vertices]
        };
        let mut out = Vec::new();
        for n in sizes {
            let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
            let base = weights.len() + 1;
            // mixed-radix counter: digit 0 = absent, d = weights[d - 1]
            let mut digits = vec![0usize; pairs.len()];
            loop {
                let edges: Vec<(usize, usize, u64)> = pairs
                    .iter()
                    .zip(&digits)
                    .filter(|(_, &d)| d > 0)
                    .map(|(&(u, v), &d)| (u, v, weights[d - 1]))
                    .collect();
                if !edges.is_empty() {
                    let g = WeightedGraph::new(n, edges).expect("enumerated edges are valid");
                    if !self.connected_only || g.connected_components().len() == 1 {
                        out.push(g);
                    }
                }
                let mut i = 0;
                while i < digits.len() {
                    digits[i] += 1;
                    if digits[i] < base {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
                if i == digits.len() {
                    break;
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub graph: WeightedGraph,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skip {
    pub graph: WeightedGraph,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CrossValidationReport {
    pub t_max: u32,
    pub graphs_checked: usize,
    pub not_integrally_closed: usize,
    pub integrally_closed_not_normal: usize,
    pub normal: usize,
    pub certificates_verified: usize,
    pub disagreements: Vec<Disagreement>,
    pub skipped: Vec<Skip>,
}

impl CrossValidationReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Largest vertex count for which oracle results are shared between
/// isomorphic graphs; above it every graph gets its own oracle run.
const CANONICAL_MAX_VERTICES: usize = 8;

/// Edge weights over all pairs under the relabeling that makes the list
/// lexicographically smallest; equal keys iff the graphs are isomorphic.
fn canonical_key(g: &WeightedGraph) -> Vec<u64> {
    let n = g.vertex_count();
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))).collect();
    let code = |perm: &[usize]| -> Vec<u64> {
        pairs.iter().map(|&(u, v)| g.weight(perm[u - 1], perm[v - 1]).unwrap_or(0)).collect()
    };
    if n > CANONICAL_MAX_VERTICES {
        return code(&(1..=n).collect::<Vec<_>>());
    }
    // Heap's algorithm over all relabelings
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut best = code(&perm);
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let k = code(&perm);
            if k < best {
                best = k;
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// What the oracle says about one graph, independent of the classifier.
#[derive(Clone)]
enum OracleView {
    Ready { closed: PowerClosure, scan: NormalityVerdict },
    Failed(String),
}

fn oracle_view(g: &WeightedGraph, t_max: u32, limits: OracleLimits) -> OracleView {
    let run = || -> Result<OracleView, ClassifierError> {
        let ideal = MonomialIdeal::edge_ideal(g)?;
        let mut oracle = ClosureOracle::new(&ideal, limits)?;
        let closed = oracle.power_closure(1)?;
        let scan = oracle.normality_scan(t_max)?;
        Ok(OracleView::Ready { closed, scan })
    };
    run().unwrap_or_else(|e| OracleView::Failed(e.to_string()))
}

enum Outcome {
    Checked { class: Class, certificate_verified: bool, problems: Vec<String> },
    Skipped(String),
}

#[derive(Clone, Copy)]
enum Class {
    NotIntegrallyClosed,
    NotNormal,
    Normal,
}

/// For each graph: the classifier's integral-closedness verdict must match
/// the oracle at `t = 1` in both directions, every "not normal" verdict must
/// come with a certificate that verifies, and every "normal" verdict must
/// survive `normality_scan` up to `t_max`. Graphs exceeding a resource limit
/// are skipped and listed, never counted as agreeing.
pub fn cross_validate(family: &GraphFamily, t_max: u32, limits: OracleLimits) -> CrossValidationReport {
    cross_validate_graphs(family.graphs(), t_max, limits)
}

/// [`cross_validate`] over an explicit list. The oracle runs once per
/// isomorphism class (its answers do not depend on labels); the classifier
/// and certificate checks run on every graph as given.
pub fn cross_validate_graphs(graphs: Vec<WeightedGraph>, t_max: u32, limits: OracleLimits) -> CrossValidationReport {
    let keys: Vec<Vec<u64>> = graphs.par_iter().map(canonical_key).collect();
    let mut class_of: HashMap<&[u64], usize> = HashMap::new();
    let mut representatives: Vec<usize> = Vec::new();
    let slots: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(i, k)| {
            *class_of.entry(k.as_slice()).or_insert_with(|| {
                representatives.push(i);
                representatives.len() - 1
            })
        })
        .collect();
    let views: Vec<OracleView> = representatives.par_iter().map(|&i| oracle_view(&graphs[i], t_max, limits)).collect();
    let outcomes: Vec<Outcome> = graphs
        .par_iter()
        .zip(slots.par_iter())
        .map(|(g, &slot)| check_graph(g, &views[slot], t_max, limits))
        .collect();

    let mut report = CrossValidationReport { t_max, ..Default::default() };
    for (g, outcome) in graphs.into_iter().zip(outcomes) {
        match outcome {
            Outcome::Skipped(reason) => report.skipped.push(Skip { graph: g, reason }),
            Outcome::Checked { class, certificate_verified, problems } => {
                report.graphs_checked += 1;
                match class {
                    Class::NotIntegrallyClosed => report.not_integrally_closed += 1,
                    Class::NotNormal => report.integrally_closed_not_normal += 1,
                    Class::Normal => report.normal += 1,
                }
                if certificate_verified {
                    report.certificates_verified += 1;
                }
                for reason in problems {
                    report.disagreements.push(Disagreement { graph: g.clone(), reason });
                }
            }
        }
    }
    report
}

fn check_graph(g: &WeightedGraph, view: &OracleView, t_max: u32, limits: OracleLimits) -> Outcome {
    match try_check(g, view, t_max, limits) {
        Ok(o) => o,
        Err(e) => Outcome::Skipped(e.to_string()),
    }
}

fn try_check(g: &WeightedGraph, view: &OracleView, t_max: u32, limits: OracleLimits) -> Result<Outcome, ClassifierError> {
    let report = classify(g)?;
    let (closed, scan) = match view {
        OracleView::Ready { closed, scan } => (closed, scan),
        OracleView::Failed(reason) => return Ok(Outcome::Skipped(reason.clone())),
    };
    let mut problems = Vec::new();

    if closed.is_closed() != report.integrally_closed {
        // witnesses from a shared run may use another labeling; recompute here
        let own = oracle_view(g, t_max, limits);
        let witness = match own {
            OracleView::Ready { closed: PowerClosure::NotClosed(w), .. } => format!("false (witness {w})"),
            OracleView::Ready { .. } => "true".to_string(),
            OracleView::Failed(e) => format!("unavailable: {e}"),
        };
        problems.push(format!(
            "integrally closed: classifier {} vs oracle {witness}",
            report.integrally_closed
        ));
    }

    let mut certificate_verified = false;
    if let Some(cert) = &report.primary_certificate {
        let checked = verify_certificate(g, cert, limits)?;
        certificate_verified = checked.is_verified();
        if !certificate_verified {
            problems.push(format!(
                "{} certificate at t = {} with witness {} did not verify: {}",
                cert.config.kind,
                cert.t,
                cert.witness,
                checked.diagnostic.unwrap_or_default()
            ));
        }
    } else if !report.normal {
        problems.push("not normal but no certificate".to_string());
    }

    if report.normal {
        if let NormalityVerdict::CounterexampleAt { t, .. } = scan {
            let witness = match oracle_view(g, t_max, limits) {
                OracleView::Ready { scan: NormalityVerdict::CounterexampleAt { witness, .. }, .. } => witness.to_string(),
                _ => "unavailable".to_string(),
            };
            problems.push(format!("classifier says normal but closure(I^{t}) contains {witness} outside I^{t}"));
        }
    }

    let class = if !report.integrally_closed {
        Class::NotIntegrallyClosed
    } else if !report.normal {
        Class::NotNormal
    } else {
        Class::Normal
    };
    Ok(Outcome::Checked { class, certificate_verified, problems })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        // 3 pairs, 3 states each, minus the edgeless graph
        assert_eq!(GraphFamily::all(3, &[1, 2]).graphs().len(), 26);
        // connected labelled graphs: n = 2 gives 1, n = 3 gives 4
        assert_eq!(GraphFamily::connected(3, &[1]).graphs().len(), 5);
        assert!(GraphFamily::all(3, &[]).graphs().is_empty());
    }

    #[test]
    fn empty_family_gives_empty_report() {
        let r = cross_validate(&GraphFamily::all(1, &[1]), 3, OracleLimits::default());
        assert_eq!(r.graphs_checked, 0);
        assert!(r.is_clean() && r.skipped.is_empty());
    }

    #[test]
    fn tiny_budget_skips_instead_of_passing() {
        let limits = OracleLimits { box_budget: 1, ..Default::default() };
        let r = cross_validate(&GraphFamily::all(3, &[1]), 2, limits);
        assert_eq!(r.graphs_checked, 0);
        assert_eq!(r.skipped.len(), 7);
    }

    #[test]
    fn canonical_keys_identify_isomorphic_graphs() {
        let a = WeightedGraph::new(4, [(1, 2, 2), (2, 3, 1), (3, 4, 1)]).unwrap();
        let b = WeightedGraph::new(4, [(3, 4, 2), (2, 3, 1), (1, 2, 1)]).unwrap();
        let c = WeightedGraph::new(4, [(1, 2, 1), (2, 3, 2), (3, 4, 1)]).unwrap();
        assert_eq!(canonical_key(&a), canonical_key(&b));
        assert_ne!(canonical_key(&a), canonical_key(&c));
        // 11 unlabelled graphs on 4 vertices, minus the edgeless one
        let all = GraphFamily::all(4, &[1]).graphs();
        let classes: std::collections::HashSet<_> = all.iter().map(canonical_key).collect();
        assert_eq!(classes.len(), 10);
    }

    #[test]
    fn three_vertices_trivial_weights_all_normal() {
        let r = cross_validate(&GraphFamily::all(3, &[1]), 3, OracleLimits::default());
        assert!(r.is_clean());
        assert_eq!(r.normal, r.graphs_checked);
    }
}
