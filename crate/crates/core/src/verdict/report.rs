//! Reports on exchange graphs and their JSON and DOT renderings.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use super::enumerate::{DualStack, NodeKey};
use super::Verdict;
use crate::algebra::BoundQuiverAlgebra;

#[derive(Debug, Clone, PartialEq)]
pub struct ExchangeGraphReport {
    /// Hash of the quiver, basis and structure constants.
    pub algebra: String,
    pub label: String,
    pub vertices: usize,
    pub verdict: Verdict,
    pub nodes: Vec<NodeKey>,
    /// `(upper, lower)` indices into `nodes`.
    pub edges: Vec<(usize, usize)>,
    pub cap: usize,
    pub elapsed_ms: u64,
    pub dual_stack: Option<DualStack>,
}

impl ExchangeGraphReport {
    pub fn new(a: &BoundQuiverAlgebra, cap: usize) -> Self {
        ExchangeGraphReport {
            algebra: fingerprint(a),
            label: a.label().to_string(),
            vertices: a.vertex_count(),
            verdict: Verdict::Inconclusive { cap_hit: cap },
            nodes: Vec::new(),
            edges: Vec::new(),
            cap,
            elapsed_ms: 0,
            dual_stack: None,
        }
    }
}

/// First 16 hex digits of a SHA-256 over the algebra's defining data.
pub fn fingerprint(a: &BoundQuiverAlgebra) -> String {
    let mut h = Sha256::new();
    let q = a.quiver();
    h.update(format!("{:?}\n", a.field()));
    for v in q.vertices() {
        h.update(format!("v {v}\n"));
    }
    for x in q.arrows() {
        h.update(format!("a {} {} {}\n", x.name, x.source, x.target));
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            for (k, c) in a.basis_product(i, j) {
                h.update(format!("m {i} {j} {k} {c}\n"));
            }
        }
    }
    h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// Canonical JSON; object keys are sorted, so equal reports give equal bytes.
pub fn to_json(r: &ExchangeGraphReport) -> String {
    let mut v = json!({
        "algebra": r.algebra,
        "label": r.label,
        "vertices": r.vertices,
        "verdict": r.verdict.word(),
        "edges": r.edges.iter().map(|(u, l)| json!([u, l, "down"])).collect::<Vec<_>>(),
        "cap": r.cap,
        "elapsed_ms": r.elapsed_ms,
    });
    let obj = v.as_object_mut().expect("object literal");
    match &r.verdict {
        Verdict::Finite(c) => {
            obj.insert("count".into(), json!(c));
        }
        Verdict::Infinite(cert) => {
            obj.insert("certificate".into(), serde_json::to_value(cert).expect("serializable"));
            obj.insert("summary".into(), json!(cert.summary()));
        }
        Verdict::Inconclusive { cap_hit } => {
            obj.insert("cap_hit".into(), json!(cap_hit));
        }
    }
    if !r.nodes.is_empty() {
        obj.insert("nodes".into(), json!(r.nodes));
    }
    if let Some(d) = r.dual_stack {
        obj.insert("dual_stack".into(), json!({ "checked": d.checked, "mismatches": d.mismatches }));
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(obj.clone())).expect("serializable");
    s.push('\n');
    s
}

/// Hasse diagram as a DOT digraph, edges pointing down.
pub fn to_dot(r: &ExchangeGraphReport) -> String {
    let mut s = String::from("digraph exchange {\n  node [shape=box];\n");
    for (i, key) in r.nodes.iter().enumerate() {
        let label: Vec<String> = key
            .iter()
            .map(|g| format!("({})", g.iter().map(i64::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        s.push_str(&format!("  n{i} [label=\"{}\"];\n", label.join(" ")));
    }
    for (u, l) in &r.edges {
        s.push_str(&format!("  n{u} -> n{l};\n"));
    }
    s.push_str("}\n");
    s
}
