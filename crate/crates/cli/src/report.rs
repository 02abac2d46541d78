//! Serializable views of the library results. Field order is fixed, so the
//! JSON for a given input and configuration is byte-for-byte stable.

use nil_core::classifier::{
    Certificate, ClassificationReport, CrossValidationReport, ForbiddenConfig, Verification,
};
use nil_core::closure::NormalityVerdict;
use nil_core::ideal::{Exponent, MonomialIdeal};
use nil_core::wgraph::{CompactClass, Edge};
use serde::Serialize;
use serde_json::Number;

/// Exponent vectors serialize as arrays of (arbitrary-size) integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentJson(pub Exponent);

impl Serialize for ExponentJson {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let nums: Vec<Number> = self
            .0
            .coords()
            .iter()
            .map(|c| c.to_string().parse().expect("decimal integer"))
            .collect();
        nums.serialize(s)
    }
}

fn exps(ideal: &MonomialIdeal) -> Vec<ExponentJson> {
    ideal.generators().iter().cloned().map(ExponentJson).collect()
}

fn edge(e: &Edge) -> [u64; 3] {
    [e.u as u64, e.v as u64, e.weight]
}

#[derive(Debug, Serialize)]
pub struct ConfigJson {
    pub kind: String,
    pub vertices: Vec<usize>,
    pub edges: Vec<[u64; 3]>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub cycles: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pendant: Option<[u64; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connectors: Option<Vec<[u64; 3]>>,
}

impl From<&ForbiddenConfig> for ConfigJson {
    fn from(c: &ForbiddenConfig) -> Self {
        ConfigJson {
            kind: c.kind.to_string(),
            vertices: c.vertices.clone(),
            edges: c.edges.iter().map(edge).collect(),
            cycles: c.cycles.iter().map(|cy| cy.vertices().to_vec()).collect(),
            pendant: c.pendant.as_ref().map(edge),
            connectors: (c.kind == nil_core::classifier::ConfigKind::F5).then(|| c.connectors.iter().map(edge).collect()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CertificateJson {
    pub kind: String,
    pub vertices: Vec<usize>,
    pub t: u32,
    pub witness: ExponentJson,
    pub monomial: String,
    pub verified: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

pub fn verification_tag(v: Verification) -> &'static str {
    match v {
        Verification::Unverified => "unverified",
        Verification::Verified => "verified",
        Verification::FailedVerification => "failed",
    }
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        CertificateJson {
            kind: c.config.kind.to_string(),
            vertices: c.config.vertices.clone(),
            t: c.t,
            witness: ExponentJson(c.witness.clone()),
            monomial: c.witness.monomial(),
            verified: verification_tag(c.verified),
            diagnostic: c.diagnostic.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClassifyJson {
    pub integrally_closed: bool,
    pub normal: bool,
    pub configs: Vec<ConfigJson>,
    pub truncated: bool,
    pub certificate: Option<CertificateJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificates: Option<Vec<CertificateJson>>,
    pub notes: Vec<String>,
}

impl ClassifyJson {
    pub fn new(r: &ClassificationReport, primary: Option<&Certificate>, all: Option<&[Certificate]>) -> Self {
        ClassifyJson {
            integrally_closed: r.integrally_closed,
            normal: r.normal,
            configs: r.found.iter().map(ConfigJson::from).collect(),
            truncated: r.truncated,
            certificate: primary.map(CertificateJson::from),
            certificates: all.map(|cs| cs.iter().map(CertificateJson::from).collect()),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ClosureJson {
    pub k: u32,
    pub closure: Vec<ExponentJson>,
    pub power: Vec<ExponentJson>,
    pub difference: Vec<ExponentJson>,
    pub integrally_closed: bool,
}

impl ClosureJson {
    pub fn new(k: u32, closure: &MonomialIdeal, power: &MonomialIdeal, difference: Vec<Exponent>) -> Self {
        ClosureJson {
            k,
            closure: exps(closure),
            power: exps(power),
            integrally_closed: difference.is_empty(),
            difference: difference.into_iter().map(ExponentJson).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(tag = "verdict")]
pub enum NormalityJson {
    #[serde(rename = "normal_up_to")]
    NormalUpTo { t_max: u32, note: &'static str },
    #[serde(rename = "counterexample")]
    CounterexampleAt { t: u32, witness: ExponentJson, monomial: String },
}

pub const ONE_SIDED_NOTE: &str = "no counterexample for t <= t_max; this is not a proof of normality for larger t";

impl From<&NormalityVerdict> for NormalityJson {
    fn from(v: &NormalityVerdict) -> Self {
        match v {
            NormalityVerdict::NormalUpTo { t_max } => NormalityJson::NormalUpTo { t_max: *t_max, note: ONE_SIDED_NOTE },
            NormalityVerdict::CounterexampleAt { t, witness } => NormalityJson::CounterexampleAt {
                t: *t,
                witness: ExponentJson(witness.clone()),
                monomial: witness.monomial(),
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CompactJson {
    pub class: String,
    pub stems: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub even_path: Option<Vec<usize>>,
}

impl From<&CompactClass> for CompactJson {
    fn from(c: &CompactClass) -> Self {
        CompactJson { class: c.kind.to_string(), stems: c.stems.clone(), even_path: c.even_path.clone() }
    }
}

#[derive(Debug, Serialize)]
pub struct GraphIssueJson {
    pub graph: String,
    pub reason: String,
}

#[derive(Debug, Serialize)]
pub struct EnumerateJson {
    pub max_vertices: usize,
    pub weights: Vec<u64>,
    pub connected_only: bool,
    pub t_max: u32,
    pub graphs_checked: usize,
    pub not_integrally_closed: usize,
    pub integrally_closed_not_normal: usize,
    pub normal: usize,
    pub certificates_verified: usize,
    pub disagreements: Vec<GraphIssueJson>,
    pub skipped: Vec<GraphIssueJson>,
    pub note: String,
}

impl EnumerateJson {
    pub fn new(max_vertices: usize, weights: &[u64], connected_only: bool, r: &CrossValidationReport) -> Self {
        let issue = |g: &nil_core::wgraph::WeightedGraph, reason: &str| GraphIssueJson {
            graph: crate::graph_io::to_json(g),
            reason: reason.to_string(),
        };
        EnumerateJson {
            max_vertices,
            weights: weights.to_vec(),
            connected_only,
            t_max: r.t_max,
            graphs_checked: r.graphs_checked,
            not_integrally_closed: r.not_integrally_closed,
            integrally_closed_not_normal: r.integrally_closed_not_normal,
            normal: r.normal,
            certificates_verified: r.certificates_verified,
            disagreements: r.disagreements.iter().map(|d| issue(&d.graph, &d.reason)).collect(),
            skipped: r.skipped.iter().map(|s| issue(&s.graph, &s.reason)).collect(),
            note: format!(
                "\"normal\" verdicts were checked by the oracle only for t <= {}; normality for larger t rests on the classification theorem",
                r.t_max
            ),
        }
    }
}
