//! The algebra-definition JSON file.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{build_algebra, Arrow, BoundQuiverAlgebra, Quiver, Relation, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::linalg::{ScalarField, Q};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum FieldSpec {
    Named(String),
    Prime { prime: u64 },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ArrowSpec {
    name: String,
    from: String,
    to: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TermSpec {
    coeff: String,
    path: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    field: FieldSpec,
    vertices: Vec<String>,
    arrows: Vec<ArrowSpec>,
    #[serde(default)]
    relations: Vec<Vec<TermSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

/// Parses a coefficient such as `3`, `-1/2` or `+4/6`.
pub fn parse_coefficient(text: &str) -> Result<Q> {
    let t = text.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    let q = Q::from_str(t).map_err(|_| Error::Parse(format!("bad coefficient {text:?}")))?;
    Ok(q)
}

/// Builds the algebra described by an algebra-definition JSON document.
pub fn parse_algebra(text: &str) -> Result<BoundQuiverAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let field = match &file.field {
        FieldSpec::Named(s) if s == "Q" => ScalarField::Rationals,
        FieldSpec::Named(s) => return Err(Error::Parse(format!("unknown field {s:?}"))),
        FieldSpec::Prime { prime } => ScalarField::prime(*prime)?,
    };
    let vertex = |name: &str| {
        file.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::MalformedQuiver(format!("unknown vertex {name}")))
    };
    let arrows = file
        .arrows
        .iter()
        .map(|a| Ok(Arrow { name: a.name.clone(), source: vertex(&a.from)?, target: vertex(&a.to)? }))
        .collect::<Result<Vec<_>>>()?;
    let quiver = Quiver::new(file.vertices.clone(), arrows)?;
    let relations = file
        .relations
        .iter()
        .map(|terms| {
            let terms = terms
                .iter()
                .map(|t| Ok((parse_coefficient(&t.coeff)?, t.path.iter().map(String::as_str).collect())))
                .collect::<Result<Vec<(Q, Vec<&str>)>>>()?;
            Relation::from_names(&quiver, &terms)
        })
        .collect::<Result<Vec<_>>>()?;
    let a = build_algebra(quiver, relations, field, file.cap.unwrap_or(DEFAULT_CAP))?;
    Ok(match file.label {
        Some(l) => a.with_label(l),
        None => a,
    })
}

/// The algebra-definition JSON of `a`, pretty-printed with a trailing newline.
pub fn algebra_to_json(a: &BoundQuiverAlgebra) -> String {
    let q = a.quiver();
    let file = AlgebraFile {
        field: match a.field() {
            ScalarField::Rationals => FieldSpec::Named("Q".into()),
            ScalarField::Prime(p) => FieldSpec::Prime { prime: p },
        },
        vertices: q.vertices().to_vec(),
        arrows: q
            .arrows()
            .iter()
            .map(|x| ArrowSpec {
                name: x.name.clone(),
                from: q.vertices()[x.source].clone(),
                to: q.vertices()[x.target].clone(),
            })
            .collect(),
        relations: a
            .relations()
            .iter()
            .map(|r| {
                r.terms
                    .iter()
                    .map(|(c, p)| TermSpec { coeff: c.to_string(), path: p.iter().map(|&x| q.arrow(x).name.clone()).collect() })
                    .collect()
            })
            .collect(),
        cap: Some(DEFAULT_CAP.max(a.nilpotency_bound() + 1)),
        label: (!a.label().is_empty()).then(|| a.label().to_string()),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    s
}
