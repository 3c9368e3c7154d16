//! The parametric families of symmetric algebras and preprojective algebras of type A.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{build_algebra, BoundQuiverAlgebra, Provenance, Quiver, Relation, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::linalg::{q, ScalarField, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    Apq { p: usize, q: usize },
    Lambda { m: usize },
    Gamma { n: usize },
    Tpqr { p: usize, q: usize, r: usize },
    Tpq { p: usize, q: usize },
    T22rStar { r: usize },
    Omega { n: usize },
    PreprojA { rank: usize },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Apq { p, q } => write!(f, "A({p},{q})"),
            FamilySpec::Lambda { m } => write!(f, "Lambda({m})"),
            FamilySpec::Gamma { n } => write!(f, "Gamma({n})"),
            FamilySpec::Tpqr { p, q, r } => write!(f, "T({p},{q},{r})"),
            FamilySpec::Tpq { p, q } => write!(f, "T({p},{q})"),
            FamilySpec::T22rStar { r } => write!(f, "T(2,2,{r})*"),
            FamilySpec::Omega { n } => write!(f, "Omega({n})"),
            FamilySpec::PreprojA { rank } => write!(f, "Preproj(A{rank})"),
        }
    }
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            FamilySpec::Apq { p, q } | FamilySpec::Tpq { p, q } => 1 <= p && p <= q,
            FamilySpec::Lambda { m } => m >= 2,
            FamilySpec::Gamma { n } | FamilySpec::Omega { n } => n >= 1,
            FamilySpec::Tpqr { p, q, r } => 2 <= p && p <= q && q <= r,
            FamilySpec::T22rStar { r } => r >= 2,
            FamilySpec::PreprojA { rank } => rank >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::ParameterOutOfRange(self.to_string()))
        }
    }
}

/// Collects vertices, arrows and relations by name.
struct Builder {
    vertices: Vec<String>,
    arrows: Vec<(String, String, String)>,
    relations: Vec<Vec<(Q, Vec<String>)>>,
}

impl Builder {
    fn new() -> Self {
        Builder { vertices: Vec::new(), arrows: Vec::new(), relations: Vec::new() }
    }

    fn vertex(&mut self, v: &str) {
        self.vertices.push(v.to_string());
    }

    fn arrow(&mut self, name: &str, from: &str, to: &str) {
        self.arrows.push((name.to_string(), from.to_string(), to.to_string()));
    }

    /// Arrows `name1..name{len}` from `start` to `end` through fresh vertices `stop1..stop{len-1}`.
    fn chain(&mut self, name: &str, stop: &str, len: usize, start: &str, end: &str) {
        for i in 1..len {
            self.vertex(&format!("{stop}{i}"));
        }
        for i in 1..=len {
            let from = if i == 1 { start.to_string() } else { format!("{stop}{}", i - 1) };
            let to = if i == len { end.to_string() } else { format!("{stop}{i}") };
            self.arrow(&format!("{name}{i}"), &from, &to);
        }
    }

    fn zero(&mut self, path: Vec<String>) {
        self.relations.push(vec![(q(1), path)]);
    }

    fn equal(&mut self, lhs: Vec<String>, rhs: Vec<String>) {
        self.relations.push(vec![(q(1), lhs), (q(-1), rhs)]);
    }

    fn combination(&mut self, terms: Vec<(i64, Vec<String>)>) {
        self.relations.push(terms.into_iter().map(|(c, p)| (q(c), p)).collect());
    }

    fn build(self, label: String, field: ScalarField) -> Result<BoundQuiverAlgebra> {
        let vs: Vec<&str> = self.vertices.iter().map(String::as_str).collect();
        let arrows: Vec<(&str, &str, &str)> =
            self.arrows.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())).collect();
        let quiver = Quiver::from_names(&vs, &arrows)?;
        let relations = self
            .relations
            .iter()
            .map(|terms| {
                let terms: Vec<(Q, Vec<&str>)> =
                    terms.iter().map(|(c, p)| (c.clone(), p.iter().map(String::as_str).collect())).collect();
                Relation::from_names(&quiver, &terms)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(build_algebra(quiver, relations, field, DEFAULT_CAP)?
            .with_label(label.clone())
            .with_provenance(Provenance::Family(label)))
    }
}

/// `name{from}..name{to}` as arrow names; empty when `from > to`.
fn run(name: &str, from: usize, to: usize) -> Vec<String> {
    (from..=to).map(|i| format!("{name}{i}")).collect()
}

fn cat(parts: &[Vec<String>]) -> Vec<String> {
    parts.concat()
}

fn one(name: &str) -> Vec<String> {
    vec![name.to_string()]
}

pub fn build_family(spec: FamilySpec) -> Result<BoundQuiverAlgebra> {
    build_family_over(spec, ScalarField::Rationals)
}

/// As [`build_family`] over an arbitrary base field.
pub fn build_family_over(spec: FamilySpec, field: ScalarField) -> Result<BoundQuiverAlgebra> {
    spec.validate()?;
    let mut b = Builder::new();
    match spec {
        FamilySpec::Apq { p, q } => {
            b.vertex("0");
            b.chain("alpha", "a", p, "0", "0");
            b.chain("beta", "b", q, "0", "0");
            let (al, be) = (run("alpha", 1, p), run("beta", 1, q));
            b.equal(cat(&[al.clone(), be.clone()]), cat(&[be.clone(), al.clone()]));
            b.zero(cat(&[one(&format!("alpha{p}")), one("alpha1")]));
            b.zero(cat(&[one(&format!("beta{q}")), one("beta1")]));
            for i in 2..p {
                b.zero(cat(&[run("alpha", i, p), be.clone(), run("alpha", 1, i)]));
            }
            for j in 2..q {
                b.zero(cat(&[run("beta", j, q), al.clone(), run("beta", 1, j)]));
            }
        }
        FamilySpec::Lambda { m } => {
            b.vertex("0");
            b.arrow("alpha1", "0", "0");
            b.chain("beta", "b", m, "0", "0");
            let be = run("beta", 1, m);
            b.equal(vec!["alpha1".into(), "alpha1".into()], cat(&[be.clone(), be.clone()]));
            b.zero(vec!["alpha1".into(), "beta1".into()]);
            b.zero(vec![format!("beta{m}"), "alpha1".into()]);
            for j in 2..m {
                b.zero(cat(&[run("beta", j, m), be.clone(), run("beta", 1, j)]));
            }
        }
        FamilySpec::Gamma { n } => {
            // Vertex order: alpha-vertex, beta-vertex, hub, gamma chain.
            b.vertex("a1");
            b.vertex("b1");
            b.vertex("0");
            b.arrow("alpha1", "0", "a1");
            b.arrow("alpha2", "a1", "0");
            b.arrow("beta1", "0", "b1");
            b.arrow("beta2", "b1", "0");
            b.chain("gamma", "c", n, "0", "0");
            let ga = run("gamma", 1, n);
            let ga2 = cat(&[ga.clone(), ga.clone()]);
            b.equal(run("alpha", 1, 2), ga2.clone());
            b.equal(run("beta", 1, 2), ga2);
            let gn = format!("gamma{n}");
            for (x, y) in [
                ("alpha2", "gamma1"),
                ("beta2", "gamma1"),
                (gn.as_str(), "alpha1"),
                (gn.as_str(), "beta1"),
                ("alpha2", "beta1"),
                ("beta2", "alpha1"),
            ] {
                b.zero(vec![x.into(), y.into()]);
            }
            for j in 2..n {
                b.zero(cat(&[run("gamma", j, n), ga.clone(), run("gamma", 1, j)]));
            }
        }
        FamilySpec::Tpqr { p, q, r } => {
            b.vertex("0");
            b.chain("alpha", "a", p, "0", "0");
            b.chain("beta", "b", q, "0", "0");
            b.chain("gamma", "c", r, "0", "0");
            b.equal(run("alpha", 1, p), run("beta", 1, q));
            b.equal(run("beta", 1, q), run("gamma", 1, r));
            let (ap, bq, gr) = (format!("alpha{p}"), format!("beta{q}"), format!("gamma{r}"));
            for (x, y) in [(&ap, "gamma1"), (&bq, "gamma1"), (&gr, "alpha1"), (&gr, "beta1"), (&ap, "beta1"), (&bq, "alpha1")] {
                b.zero(vec![x.clone(), y.into()]);
            }
            for (name, len) in [("alpha", p), ("beta", q), ("gamma", r)] {
                for i in 2..len {
                    b.zero(cat(&[run(name, i, len), run(name, 1, i)]));
                }
            }
        }
        FamilySpec::Tpq { p, q } => {
            b.vertex("0");
            b.vertex("00");
            b.chain("alpha", "a", p, "0", "00");
            b.chain("beta", "b", q, "0", "00");
            b.arrow("gamma", "00", "0");
            b.arrow("sigma", "00", "0");
            let (al, be) = (run("alpha", 1, p), run("beta", 1, q));
            b.equal(cat(&[al.clone(), one("gamma")]), cat(&[be.clone(), one("sigma")]));
            b.equal(cat(&[one("gamma"), al.clone()]), cat(&[one("sigma"), be.clone()]));
            b.zero(vec![format!("alpha{p}"), "sigma".into()]);
            b.zero(vec!["sigma".into(), "alpha1".into()]);
            b.zero(vec![format!("beta{q}"), "gamma".into()]);
            b.zero(vec!["gamma".into(), "beta1".into()]);
            for i in 2..p {
                b.zero(cat(&[run("alpha", i, p), one("gamma"), run("alpha", 1, i)]));
            }
            for j in 2..q {
                b.zero(cat(&[run("beta", j, q), one("sigma"), run("beta", 1, j)]));
            }
        }
        FamilySpec::T22rStar { r } => {
            b.vertex("0");
            b.arrow("alpha1", "0", "a1");
            b.arrow("alpha2", "a1", "0");
            b.arrow("beta1", "0", "b1");
            b.arrow("beta2", "b1", "0");
            b.vertex("a1");
            b.vertex("b1");
            b.chain("gamma", "c", r, "0", "0");
            b.vertex("s1");
            b.arrow("sigma1", "0", "s1");
            // sigma2 ends where gamma2 ends.
            let end = if r == 2 { "0".to_string() } else { "c2".to_string() };
            b.arrow("sigma2", "s1", &end);
            b.equal(run("alpha", 1, 2), run("beta", 1, 2));
            b.equal(run("beta", 1, 2), run("gamma", 1, r));
            // The sigma path runs parallel to gamma1 gamma2; without this the sigma cycle is not nilpotent.
            b.equal(run("sigma", 1, 2), run("gamma", 1, 2));
            let gr = format!("gamma{r}");
            for (x, y) in [
                (gr.as_str(), "alpha1"),
                ("beta2", "alpha1"),
                (gr.as_str(), "beta1"),
                ("alpha2", "beta1"),
                ("alpha2", "gamma1"),
                ("alpha2", "sigma1"),
                ("beta2", "gamma1"),
                ("beta2", "sigma1"),
            ] {
                b.zero(vec![x.into(), y.into()]);
            }
            b.zero(vec!["alpha2".into(), "alpha1".into(), "alpha2".into()]);
            b.zero(vec!["beta2".into(), "beta1".into(), "beta2".into()]);
            b.zero(cat(&[run("gamma", 2, r), one("sigma1")]));
            b.zero(cat(&[one("sigma2"), run("gamma", 3, r), one("gamma1")]));
            if r == 2 {
                // sigma2 then lands on the hub and must obey the same zero relations as gamma2.
                for y in ["alpha1", "beta1"] {
                    b.zero(vec!["sigma2".into(), y.into()]);
                }
            }
            for k in 3..r {
                b.zero(cat(&[run("gamma", k, r), run("gamma", 1, k)]));
            }
        }
        FamilySpec::Omega { n } => {
            b.vertex("0");
            b.arrow("alpha1", "0", "0");
            b.chain("beta", "b", n, "0", "0");
            let be = run("beta", 1, n);
            b.combination(vec![(1, cat(&[one("alpha1"), be.clone()])), (1, cat(&[be.clone(), one("alpha1")]))]);
            b.combination(vec![(1, vec!["alpha1".into(), "alpha1".into()]), (-1, cat(&[one("alpha1"), be.clone()]))]);
            b.zero(vec![format!("beta{n}"), "beta1".into()]);
            for k in 2..n {
                b.zero(cat(&[run("beta", k, n), one("alpha1"), run("beta", 1, k)]));
            }
        }
        FamilySpec::PreprojA { rank } => return preprojective_a_over(rank, field),
    }
    b.build(spec.to_string(), field)
}

/// Preprojective algebra of type `A_rank`: the doubled chain with mesh relations.
pub fn preprojective_a(rank: usize) -> Result<BoundQuiverAlgebra> {
    preprojective_a_over(rank, ScalarField::Rationals)
}

fn preprojective_a_over(rank: usize, field: ScalarField) -> Result<BoundQuiverAlgebra> {
    FamilySpec::PreprojA { rank }.validate()?;
    let mut b = Builder::new();
    for i in 1..=rank {
        b.vertex(&i.to_string());
    }
    for i in 1..rank {
        b.arrow(&format!("a{i}"), &i.to_string(), &(i + 1).to_string());
        b.arrow(&format!("b{i}"), &(i + 1).to_string(), &i.to_string());
    }
    for i in 1..=rank {
        let out = (i < rank).then(|| vec![format!("a{i}"), format!("b{i}")]);
        let back = (i > 1).then(|| vec![format!("b{}", i - 1), format!("a{}", i - 1)]);
        match (out, back) {
            (Some(x), Some(y)) => b.combination(vec![(1, x), (-1, y)]),
            (Some(x), None) | (None, Some(x)) => b.zero(x),
            (None, None) => {}
        }
    }
    b.build(FamilySpec::PreprojA { rank }.to_string(), field)
}
