//! Explicit witnesses `(t, f)` with `f` in the closure of `I^t` but not in
//! `I^t`, one construction per configuration kind.

use num_bigint::BigUint;

use super::{ClassifierError, ConfigKind, ForbiddenConfig};
use crate::closure::{lp_max_weight_with, LevelStatus, OracleLimits};
use crate::ideal::{Exponent, MonomialIdeal};
use crate::wgraph::{Edge, Vertex, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verification {
    Unverified,
    Verified,
    FailedVerification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub config: ForbiddenConfig,
    pub t: u32,
    /// Exponent over all `n` vertices, zero outside the configuration.
    pub witness: Exponent,
    pub verified: Verification,
    pub diagnostic: Option<String>,
}

fn shared_vertex(a: &Edge, b: &Edge) -> Vertex {
    if b.touches(a.u) {
        a.u
    } else {
        a.v
    }
}

fn other_end(e: &Edge, x: Vertex) -> Vertex {
    if e.u == x {
        e.v
    } else {
        e.u
    }
}

/// Builds the witness for `config`:
///
/// * F1/F2 with the two lightest edges `{p,c}` of weight `a <= b` on `{c,q}`:
///   `x_p^(a-1) x_c^b x_q^(b-1)` at `t = 1`;
/// * F3 on `{p1,p2}` (weight `a`) and `{q1,q2}` (weight `b`):
///   `(x_p1 x_p2)^(a-1) (x_q1 x_q2)^(b-1)` at `t = 1`;
/// * F4 with a `(2k-1)`-cycle and pendant weight `a`: the product of the cycle
///   variables times `(x x')^(a-1)` over the pendant, at `t = k`;
/// * F5 with cycles of lengths `2k-1` and `2l+1`: the product of all cycle
///   variables at `t = k + l`.
///
/// F4 and F5 require trivially weighted cycles.
pub fn build_certificate(g: &WeightedGraph, config: &ForbiddenConfig) -> Result<Certificate, ClassifierError> {
    let n = g.vertex_count();
    let mut w = vec![0u64; n + 1];
    let t;
    match config.kind {
        ConfigKind::F1 | ConfigKind::F2 => {
            let mut edges = config.edges.clone();
            edges.sort_by_key(|e| (e.weight, e.u, e.v));
            let light = &edges[0];
            // among equally light candidates, continue the path through the larger endpoint
            let heavy = edges[1..]
                .iter()
                .filter(|e| e.weight == edges[1].weight)
                .find(|e| e.touches(light.v))
                .unwrap_or(&edges[1]);
            let c = shared_vertex(light, heavy);
            let p = other_end(light, c);
            let q = other_end(heavy, c);
            w[p] = light.weight - 1;
            w[c] = heavy.weight;
            w[q] = heavy.weight - 1;
            t = 1;
        }
        ConfigKind::F3 => {
            for e in &config.edges {
                w[e.u] = e.weight - 1;
                w[e.v] = e.weight - 1;
            }
            t = 1;
        }
        ConfigKind::F4 | ConfigKind::F5 => {
            for cycle in &config.cycles {
                for (a, b) in cycle.edges() {
                    let weight = g.weight(a, b).expect("cycle edge");
                    if weight > 1 {
                        return Err(ClassifierError::NontrivialCycleEdge {
                            kind: config.kind,
                            edge: Edge { u: a.min(b), v: a.max(b), weight },
                        });
                    }
                }
                for &v in cycle.vertices() {
                    w[v] = 1;
                }
            }
            if let Some(e) = config.pendant {
                w[e.u] = e.weight - 1;
                w[e.v] = e.weight - 1;
            }
            t = config.witness_power();
        }
    }
    Ok(Certificate {
        config: config.clone(),
        t,
        witness: Exponent::from_u64s(&w[1..]),
        verified: Verification::Unverified,
        diagnostic: None,
    })
}

/// Checks by exact computation that the witness lies in `closure(I^t)` and
/// outside `I^t`. Oracle failures leave the certificate `Unverified`.
pub fn verify_certificate(g: &WeightedGraph, cert: &Certificate, limits: OracleLimits) -> Result<Certificate, ClassifierError> {
    let n = g.vertex_count();
    if cert.witness.len() != n {
        return Err(ClassifierError::WitnessLength { expected: n, got: cert.witness.len() });
    }
    let ideal = MonomialIdeal::edge_ideal(g)?;
    let mut out = cert.clone();
    let lp = match lp_max_weight_with(&ideal, &cert.witness, limits.pivot_limit) {
        Ok(lp) => lp,
        Err(e) => {
            out.verified = Verification::Unverified;
            out.diagnostic = Some(e.to_string());
            return Ok(out);
        }
    };
    let in_closure = lp.status(cert.t) == LevelStatus::Feasible;
    let in_power = ideal.contains_power(&cert.witness, cert.t)?;
    if in_closure && !in_power {
        out.verified = Verification::Verified;
        out.diagnostic = None;
    } else {
        out.verified = Verification::FailedVerification;
        out.diagnostic = Some(format!(
            "LP optimum {} vs t = {}; witness {} I^t",
            lp.optimum,
            cert.t,
            if in_power { "lies in" } else { "is outside" }
        ));
    }
    Ok(out)
}

impl Certificate {
    pub fn is_verified(&self) -> bool {
        self.verified == Verification::Verified
    }

    /// Total degree of the witness.
    pub fn witness_degree(&self) -> BigUint {
        self.witness.total_degree()
    }
}
