//! Verdicts on τ-tilting finiteness.
//!
//! An algebra is declared infinite only with a certificate that [`replay`]
//! re-checks, and finite only after a complete enumeration of its exchange graph.

mod detect;
mod enumerate;
mod report;

use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use detect::{
    check_hereditary_quotient, detect_hereditary_quotient, dynkin_classify, find_pattern, matches_pattern,
    underlying_graph, DeltaPattern, GraphClass, GraphType, HereditaryQuotient,
};
pub use enumerate::{count, exchange_graph, DualStack, EnumerationOptions, ExchangeGraph, NodeKey};
pub use report::{fingerprint, to_dot, to_json, ExchangeGraphReport};

use crate::algebra::{idempotent_truncation, verify_algebra_map, BoundQuiverAlgebra, FactorKind, Quiver};
use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_CAP: usize = 50_000;
/// Large enough for the nine vertices of a `~E8` quotient.
pub const DEFAULT_MAX_KEEP: usize = 10;
pub const DEFAULT_MAX_KILL: usize = 6;
/// How deep the search follows recorded factor algebras.
const FACTOR_DEPTH: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// The Gabriel quiver has `pattern` as a full subquiver on these vertices (in pattern order).
    DeltaSubquiver { pattern: DeltaPattern, vertices: Vec<String> },
    /// Killing these vertices and arrows leaves the path algebra of a non-Dynkin quiver.
    HereditaryQuotient { kill_vertices: Vec<String>, kill_arrows: Vec<String>, graph_type: String },
    /// The recorded surjection onto factor number `factor` leads to an infinite algebra.
    FactorPropagation { factor: usize, step: FactorKind, base: Box<Certificate> },
    /// The idempotent truncation at `keep` is infinite.
    TruncationPropagation { keep: Vec<String>, base: Box<Certificate> },
}

impl Certificate {
    /// The obstruction at the end of the propagation chain.
    pub fn root(&self) -> &Certificate {
        match self {
            Certificate::FactorPropagation { base, .. } | Certificate::TruncationPropagation { base, .. } => base.root(),
            c => c,
        }
    }

    pub fn summary(&self) -> String {
        match self {
            Certificate::DeltaSubquiver { pattern, vertices } => format!("{pattern} on {}", vertices.join(",")),
            Certificate::HereditaryQuotient { kill_vertices, kill_arrows, graph_type } => format!(
                "hereditary quotient of type {graph_type} (kill vertices [{}], arrows [{}])",
                kill_vertices.join(","),
                kill_arrows.join(",")
            ),
            Certificate::FactorPropagation { step, base, .. } => format!("factor {step:?}: {}", base.summary()),
            Certificate::TruncationPropagation { keep, base } => format!("truncation at [{}]: {}", keep.join(","), base.summary()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Finite(usize),
    Infinite(Certificate),
    /// Enumeration reached the cap without closing.
    Inconclusive { cap_hit: usize },
}

impl Verdict {
    pub fn word(&self) -> &'static str {
        match self {
            Verdict::Finite(_) => "finite",
            Verdict::Infinite(_) => "infinite",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn count(&self) -> Option<usize> {
        match self {
            Verdict::Finite(c) => Some(*c),
            _ => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Verdict::Infinite(c) => Some(c),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerdictConfig {
    pub cap: usize,
    pub max_keep: usize,
    pub max_kill: usize,
    /// Run both rigidity tests on every enumerated node.
    pub validate: bool,
    /// Record wall time; off by default so reports are reproducible.
    pub timing: bool,
    /// A certificate to replay before any search.
    pub certificate: Option<Certificate>,
}

impl Default for VerdictConfig {
    fn default() -> Self {
        VerdictConfig {
            cap: DEFAULT_ENUMERATION_CAP,
            max_keep: DEFAULT_MAX_KEEP,
            max_kill: DEFAULT_MAX_KILL,
            validate: false,
            timing: false,
            certificate: None,
        }
    }
}

/// Looks for a Δ1 or Δ2 full subquiver of the Gabriel quiver.
pub fn detect_delta(a: &BoundQuiverAlgebra) -> Option<Certificate> {
    delta_in_quiver(&a.gabriel_quiver(), &[DeltaPattern::Delta1, DeltaPattern::Delta2])
}

/// Hereditary-quotient search packaged as a certificate.
pub fn detect_hereditary(a: &BoundQuiverAlgebra, max_keep: usize, max_kill: usize) -> Option<Certificate> {
    let h = detect_hereditary_quotient(a, max_keep, max_kill)?;
    let quiver = a.quiver();
    let graph_type = match &h.class {
        GraphClass::Euclidean(t) => t.to_string(),
        _ => "wild".to_string(),
    };
    Some(Certificate::HereditaryQuotient {
        kill_vertices: h.kill_vertices.iter().map(|&v| quiver.vertices()[v].clone()).collect(),
        kill_arrows: h.kill_arrows.iter().map(|&x| quiver.arrow(x).name.clone()).collect(),
        graph_type,
    })
}

/// Looks for Δ subquivers, then obstructions on recorded factor algebras, then hereditary quotients.
pub fn detect(a: &BoundQuiverAlgebra, config: &VerdictConfig) -> Option<Certificate> {
    detect_at_depth(a, config, FACTOR_DEPTH)
}

fn detect_at_depth(a: &BoundQuiverAlgebra, config: &VerdictConfig, depth: usize) -> Option<Certificate> {
    if let Some(c) = detect_delta(a) {
        return Some(c);
    }
    // Recorded factors are usually smaller, so they are tried before the quotient search.
    if depth > 0 {
        let inherited = a.factors().iter().enumerate().find_map(|(i, f)| {
            let base = detect_at_depth(&f.algebra, config, depth - 1)?;
            Some(Certificate::FactorPropagation { factor: i, step: f.kind.clone(), base: Box::new(base) })
        });
        if inherited.is_some() {
            return inherited;
        }
    }
    detect_hereditary(a, config.max_keep, config.max_kill)
}

/// Re-checks a certificate against `a`.
pub fn replay(a: &BoundQuiverAlgebra, cert: &Certificate) -> Result<()> {
    let reject = |msg: String| Err(Error::CertificateRejected(msg));
    match cert {
        Certificate::DeltaSubquiver { pattern, vertices } => {
            let quiver = a.gabriel_quiver();
            let verts = vertex_indices(quiver.vertices(), vertices)?;
            if matches_pattern(&quiver, &verts, *pattern) {
                Ok(())
            } else {
                reject(format!("full subquiver on {vertices:?} is not {pattern}"))
            }
        }
        Certificate::HereditaryQuotient { kill_vertices, kill_arrows, graph_type } => {
            let quiver = a.quiver();
            let kv = vertex_indices(quiver.vertices(), kill_vertices)?;
            let ka = kill_arrows
                .iter()
                .map(|name| quiver.arrow_index(name).ok_or_else(|| Error::CertificateRejected(format!("no arrow {name}"))))
                .collect::<Result<Vec<_>>>()?;
            let found = match check_hereditary_quotient(a, &kv, &ka)? {
                GraphClass::Euclidean(t) => t.to_string(),
                _ => "wild".to_string(),
            };
            if found == *graph_type {
                Ok(())
            } else {
                reject(format!("quotient has type {found}, certificate claims {graph_type}"))
            }
        }
        Certificate::FactorPropagation { factor, step, base } => {
            let f = a
                .factors()
                .get(*factor)
                .ok_or_else(|| Error::CertificateRejected(format!("no recorded factor {factor}")))?;
            if f.kind != *step {
                return reject(format!("factor {factor} is {:?}, not {step:?}", f.kind));
            }
            if !verify_algebra_map(a, &f.algebra, &f.map) {
                return reject("recorded factor map is not a surjective algebra map".into());
            }
            replay(&f.algebra, base)
        }
        Certificate::TruncationPropagation { keep, base } => {
            let verts = vertex_indices(a.quiver().vertices(), keep)?;
            replay(&idempotent_truncation(a, &verts)?, base)
        }
    }
}

/// Re-checks a Δ certificate against a quiver given without an algebra.
pub fn replay_on_quiver(quiver: &Quiver, cert: &Certificate) -> Result<()> {
    match cert {
        Certificate::DeltaSubquiver { pattern, vertices } => {
            let verts = vertex_indices(quiver.vertices(), vertices)?;
            if matches_pattern(quiver, &verts, *pattern) {
                Ok(())
            } else {
                Err(Error::CertificateRejected(format!("full subquiver on {vertices:?} is not {pattern}")))
            }
        }
        _ => Err(Error::CertificateRejected("only subquiver certificates replay on a bare quiver".into())),
    }
}

/// Δ1 or Δ2 as a full subquiver of `quiver`.
pub fn delta_in_quiver(quiver: &Quiver, order: &[DeltaPattern]) -> Option<Certificate> {
    order.iter().copied().find_map(|pattern| {
        let verts = find_pattern(quiver, pattern)?;
        Some(Certificate::DeltaSubquiver {
            pattern,
            vertices: verts.iter().map(|&v| quiver.vertices()[v].clone()).collect(),
        })
    })
}

fn vertex_indices(all: &[String], names: &[String]) -> Result<Vec<usize>> {
    names
        .iter()
        .map(|name| all.iter().position(|v| v == name).ok_or_else(|| Error::CertificateRejected(format!("no vertex {name}"))))
        .collect()
}

/// Exchange-graph enumeration alone, without detectors.
pub fn enumerate(a: &BoundQuiverAlgebra, config: &VerdictConfig) -> Result<ExchangeGraphReport> {
    let start = Instant::now();
    let mut report = ExchangeGraphReport::new(a, config.cap);
    fill_from_enumeration(&mut report, a, config)?;
    if config.timing {
        report.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    Ok(report)
}

fn fill_from_enumeration(report: &mut ExchangeGraphReport, a: &BoundQuiverAlgebra, config: &VerdictConfig) -> Result<()> {
    let g = exchange_graph(a, EnumerationOptions { cap: config.cap, validate: config.validate })?;
    report.verdict = if g.complete { Verdict::Finite(g.nodes.len()) } else { Verdict::Inconclusive { cap_hit: config.cap } };
    report.dual_stack = g.dual_stack;
    report.nodes = g.nodes;
    report.edges = g.edges;
    Ok(())
}

/// The full pipeline: a supplied certificate, then the detectors, then enumeration under the cap.
pub fn verdict(a: &BoundQuiverAlgebra, config: &VerdictConfig) -> Result<ExchangeGraphReport> {
    let start = Instant::now();
    let mut report = ExchangeGraphReport::new(a, config.cap);
    let found = match &config.certificate {
        Some(c) => Some(c.clone()),
        None => detect(a, config),
    };
    if let Some(c) = found {
        replay(a, &c)?;
        report.verdict = Verdict::Infinite(c);
    } else {
        fill_from_enumeration(&mut report, a, config)?;
    }
    if config.timing {
        report.elapsed_ms = start.elapsed().as_millis() as u64;
    }
    Ok(report)
}
