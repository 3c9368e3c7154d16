//! Finiteness of 0-Hecke and 0-Schur algebras.

use std::collections::BTreeSet;

use super::{hecke_algebra, hecke_basic, hecke_quiver, subset_label, CoxeterSpec};
use crate::algebra::{build_algebra, idempotent_truncation, BoundQuiverAlgebra, Provenance, Quiver, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::linalg::ScalarField;
use crate::verdict::{count, DeltaPattern, delta_in_quiver, verdict, Certificate, ExchangeGraphReport, Verdict, VerdictConfig};

/// Largest `r` for which the 0-Schur algebra is built from `H_0(S_r)`.
pub const MAX_SCHUR_DEGREE: usize = 6;

// The classification reports the doubled-H obstruction when there is one.
const DELTA2_FIRST: [DeltaPattern; 2] = [DeltaPattern::Delta2, DeltaPattern::Delta1];

#[derive(Debug, Clone)]
pub struct HeckeClassification {
    pub spec: String,
    pub verdict: Verdict,
    /// Δ search on the combinatorial quiver `Q_W`.
    pub quiver_certificate: Option<Certificate>,
    /// The verdict engine on the basic presentation, when it was run.
    pub report: Option<ExchangeGraphReport>,
}

/// Δ search on `Q_W`; if that finds nothing, the verdict engine on the basic presentation.
pub fn classify_hecke(spec: &CoxeterSpec, config: &VerdictConfig) -> Result<HeckeClassification> {
    spec.validate()?;
    let quiver = hecke_quiver(spec);
    let quiver_certificate = delta_in_quiver(&quiver, &DELTA2_FIRST);
    if let Some(c) = &quiver_certificate {
        return Ok(HeckeClassification {
            spec: spec.to_string(),
            verdict: Verdict::Infinite(c.clone()),
            quiver_certificate,
            report: None,
        });
    }
    let basic = hecke_basic(&hecke_algebra(spec)?)?;
    let report = verdict(&basic.algebra, config)?;
    Ok(HeckeClassification { spec: spec.to_string(), verdict: report.verdict.clone(), quiver_certificate, report: Some(report) })
}

/// Subsets `J ⊆ {1, …, r-1}` with at most `n - 1` elements, in bitmask order.
pub fn schur_truncation(r: usize, n: usize) -> Vec<BTreeSet<usize>> {
    let rank = r.saturating_sub(1);
    super::subsets(rank).into_iter().filter(|j| j.len() < n).collect()
}

fn kept_masks(r: usize, n: usize) -> Vec<usize> {
    let rank = r.saturating_sub(1);
    (0..1usize << rank).filter(|m| (m.count_ones() as usize) < n).collect()
}

/// `e[n] H_0(S_r) e[n]` on the basic presentation of `H_0(S_r)`.
pub fn schur_algebra(n: usize, r: usize) -> Result<BoundQuiverAlgebra> {
    if n == 0 || r == 0 {
        return Err(Error::ParameterOutOfRange(format!("S0({n},{r})")));
    }
    if r > MAX_SCHUR_DEGREE {
        return Err(Error::UnsupportedType(format!("S0({n},{r}): degree above {MAX_SCHUR_DEGREE}")));
    }
    let label = format!("S0({n},{r})");
    if r == 1 {
        let q = Quiver::new(vec![subset_label(0, 0)], vec![])?;
        return Ok(build_algebra(q, vec![], ScalarField::Rationals, DEFAULT_CAP)?
            .with_label(label.clone())
            .with_provenance(Provenance::Presented(label)));
    }
    let spec = CoxeterSpec::Named { letter: 'A', rank: r - 1 };
    let full = hecke_basic(&hecke_algebra(&spec)?)?.algebra;
    let keep = kept_masks(r, n);
    let algebra = if keep.len() == full.vertex_count() { full } else { idempotent_truncation(&full, &keep)? };
    Ok(algebra.with_label(label.clone()).with_provenance(Provenance::Presented(label)))
}

/// Count on the block of `S_0(2, r)` through the singleton subsets, against `r!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingletonBlockCheck {
    pub vertices: Vec<String>,
    pub count: Option<usize>,
    /// `r!`, the order of the Weyl group of type `A_{r-1}`.
    pub expected: usize,
    pub matches: bool,
}

#[derive(Debug, Clone)]
pub struct SchurClassification {
    pub n: usize,
    pub r: usize,
    pub verdict: Verdict,
    pub quiver_certificate: Option<Certificate>,
    pub report: Option<ExchangeGraphReport>,
    /// Only for `n = 2`.
    pub singleton_block: Option<SingletonBlockCheck>,
}

/// Δ search on the full subquiver of `Q_W` at the kept subsets, and the verdict
/// engine on the truncated algebra when it can be built. A certificate found on
/// `Q_W` is replayed against the algebra rather than searched for again.
pub fn classify_schur(n: usize, r: usize, config: &VerdictConfig) -> Result<SchurClassification> {
    if n == 0 || r == 0 {
        return Err(Error::ParameterOutOfRange(format!("S0({n},{r})")));
    }
    let quiver_certificate = if r >= 2 {
        let q = hecke_quiver(&CoxeterSpec::Named { letter: 'A', rank: r - 1 });
        delta_in_quiver(&q.full_subquiver(&kept_masks(r, n)), &DELTA2_FIRST)
    } else {
        None
    };
    let mut out = SchurClassification { n, r, verdict: Verdict::Inconclusive { cap_hit: config.cap }, quiver_certificate, report: None, singleton_block: None };
    if r > MAX_SCHUR_DEGREE {
        // No element model: the quiver route is all there is.
        if let Some(c) = &out.quiver_certificate {
            out.verdict = Verdict::Infinite(c.clone());
        }
        return Ok(out);
    }
    let a = schur_algebra(n, r)?;
    // A certificate from Q_W must replay on the Gabriel quiver of the algebra itself.
    let config = VerdictConfig { certificate: out.quiver_certificate.clone(), ..config.clone() };
    let report = verdict(&a, &config)?;
    out.verdict = report.verdict.clone();
    out.report = Some(report);
    if n == 2 && r >= 2 {
        out.singleton_block = Some(singleton_block(&a, r, config.cap)?);
    }
    Ok(out)
}

fn singleton_block(a: &BoundQuiverAlgebra, r: usize, cap: usize) -> Result<SingletonBlockCheck> {
    let quiver = a.quiver();
    let start = quiver.vertex_index(&subset_label(1, r - 1)).expect("v{1} is kept");
    let block = quiver.components().into_iter().find(|c| c.contains(&start)).expect("every vertex lies in a component");
    let vertices = block.iter().map(|&v| quiver.vertices()[v].clone()).collect();
    let b = idempotent_truncation(a, &block)?;
    let found = count(&b, cap)?;
    let expected = (1..=r).product();
    Ok(SingletonBlockCheck { vertices, count: found, expected, matches: found == Some(expected) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn truncation_vertex_sets() {
        assert_eq!(schur_truncation(3, 3).len(), 4);
        let sets: Vec<Vec<usize>> = schur_truncation(3, 2).into_iter().map(|s| s.into_iter().collect()).collect();
        assert_eq!(sets, vec![vec![], vec![1], vec![2]]);
        let sets = schur_truncation(4, 3);
        assert_eq!(sets.len(), 7);
        assert!(!sets.contains(&BTreeSet::from([1, 2, 3])));
    }

    #[test]
    fn small_hecke_verdicts() {
        let cfg = VerdictConfig::default();
        let a1 = classify_hecke(&CoxeterSpec::parse("A1").unwrap(), &cfg).unwrap();
        assert_eq!(a1.verdict, Verdict::Finite(4));
        let a3 = classify_hecke(&CoxeterSpec::parse("A3").unwrap(), &cfg).unwrap();
        assert!(matches!(a3.verdict, Verdict::Infinite(Certificate::DeltaSubquiver { pattern: DeltaPattern::Delta2, .. })));
    }

    #[test]
    fn schur_of_degree_one_is_the_field() {
        let a = schur_algebra(1, 1).unwrap();
        assert_eq!((a.dim(), a.vertex_count()), (1, 1));
        assert_eq!(classify_schur(1, 1, &VerdictConfig::default()).unwrap().verdict, Verdict::Finite(2));
    }
}
