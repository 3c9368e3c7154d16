//! Acceptance criteria 1-12, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines are always printed.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use tautile::algebra::{
    build_algebra, idempotent_truncation, tensor_product, trivial_extension, BoundQuiverAlgebra, Quiver, Relation,
    DEFAULT_CAP,
};
use tautile::families::{build_family, preprojective_a, FamilySpec};
use tautile::hecke::{classify_hecke, classify_schur, hecke_algebra, hecke_basic, hecke_quiver, CoxeterSpec};
use tautile::linalg::{q, ScalarField};
use tautile::verdict::{
    detect_delta, enumerate, replay, replay_on_quiver, verdict, Certificate, DeltaPattern, ExchangeGraphReport,
    Verdict, VerdictConfig,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cfg() -> VerdictConfig {
    VerdictConfig::default()
}

fn validating() -> VerdictConfig {
    VerdictConfig { validate: true, ..VerdictConfig::default() }
}

fn dual_numbers() -> BoundQuiverAlgebra {
    let qv = Quiver::from_names(&["1"], &[("x", "1", "1")]).unwrap();
    let r = Relation::from_names(&qv, &[(q(1), vec!["x", "x"])]).unwrap();
    build_algebra(qv, vec![r], ScalarField::Rationals, DEFAULT_CAP).unwrap().with_label("k[x]/x^2")
}

fn path_a2() -> BoundQuiverAlgebra {
    let qv = Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap();
    build_algebra(qv, vec![], ScalarField::Rationals, DEFAULT_CAP).unwrap().with_label("kA2")
}

fn family(spec: FamilySpec) -> BoundQuiverAlgebra {
    build_family(spec).unwrap()
}

fn count_of(r: &ExchangeGraphReport) -> Result<usize, String> {
    r.verdict.count().ok_or_else(|| format!("{}: {:?}", r.label, r.verdict))
}

// Exact arithmetic oracles, independent of the engine's linear algebra.

type Frac = Ratio<i128>;

fn rank(mut rows: Vec<Vec<Frac>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c] / rows[r][c];
                for j in 0..cols {
                    let d = rows[r][j] * f;
                    rows[i][j] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Bareiss fraction-free determinant.
fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}

fn positive_definite(m: &[Vec<i64>]) -> bool {
    (1..=m.len()).all(|k| det(&m[..k].iter().map(|r| r[..k].to_vec()).collect::<Vec<_>>()) > 0)
}

/// A representation of a quiver by integer matrices; `maps[a]` is `dims[target] x dims[source]`.
struct Rep {
    dims: Vec<usize>,
    maps: Vec<Vec<Vec<i64>>>,
}

/// dim Hom(m, n) from the linear system `n_a f_s = f_t m_a` over all arrows.
fn hom_dim(arrows: &[(usize, usize)], m: &Rep, n: &Rep) -> usize {
    let mut offset = Vec::new();
    let mut unknowns = 0;
    for v in 0..m.dims.len() {
        offset.push(unknowns);
        unknowns += n.dims[v] * m.dims[v];
    }
    let var = |v: usize, i: usize, j: usize| offset[v] + i * m.dims[v] + j;
    let mut rows = Vec::new();
    for (a, &(s, t)) in arrows.iter().enumerate() {
        for i in 0..n.dims[t] {
            for j in 0..m.dims[s] {
                let mut row = vec![Frac::zero(); unknowns];
                for k in 0..n.dims[s] {
                    row[var(s, k, j)] += Frac::from(n.maps[a][i][k] as i128);
                }
                for k in 0..m.dims[t] {
                    row[var(t, i, k)] -= Frac::from(m.maps[a][k][j] as i128);
                }
                rows.push(row);
            }
        }
    }
    unknowns - rank(rows)
}

/// Support τ-tilting pairs by brute force over sets of indecomposables.
///
/// `tau[i]` is the index of τ of indecomposable `i`, or `None` for projectives.
fn brute_force_count(arrows: &[(usize, usize)], modules: &[Rep], tau: &[Option<usize>]) -> usize {
    let n = modules[0].dims.len();
    let k = modules.len();
    let hom: Vec<Vec<usize>> = (0..k).map(|i| (0..k).map(|j| hom_dim(arrows, &modules[i], &modules[j])).collect()).collect();
    let mut total = 0;
    for set in 0u32..1 << k {
        let members: Vec<usize> = (0..k).filter(|i| set >> i & 1 == 1).collect();
        let rigid = members.iter().all(|&i| members.iter().all(|&j| tau[j].map_or(true, |t| hom[i][t] == 0)));
        if !rigid {
            continue;
        }
        // Hom(P_v, M) = M_v, so the projective part sits outside the support.
        let support: BTreeSet<usize> = members.iter().flat_map(|&i| (0..n).filter(move |&v| modules[i].dims[v] > 0)).collect();
        if members.len() + (n - support.len()) == n {
            total += 1;
        }
    }
    total
}

fn scalar(x: i64) -> Vec<Vec<i64>> {
    vec![vec![x]]
}

fn empty(rows: usize, cols: usize) -> Vec<Vec<i64>> {
    vec![vec![0; cols]; rows]
}

/// kA2 on 1 -> 2: S1, S2, and the projective-injective (k -> k); τS1 = S2.
fn oracle_path_a2() -> usize {
    let arrows = [(0, 1)];
    let s1 = Rep { dims: vec![1, 0], maps: vec![empty(0, 1)] };
    let s2 = Rep { dims: vec![0, 1], maps: vec![empty(1, 0)] };
    let p1 = Rep { dims: vec![1, 1], maps: vec![scalar(1)] };
    brute_force_count(&arrows, &[s1, s2, p1], &[Some(1), None, None])
}

/// k(1 ⇄ 2)/(ab, ba): S1, S2 and the two uniserial projectives; τ swaps the simples.
fn oracle_preprojective_a2() -> usize {
    let arrows = [(0, 1), (1, 0)];
    let s1 = Rep { dims: vec![1, 0], maps: vec![empty(0, 1), empty(1, 0)] };
    let s2 = Rep { dims: vec![0, 1], maps: vec![empty(1, 0), empty(0, 1)] };
    let p1 = Rep { dims: vec![1, 1], maps: vec![scalar(1), scalar(0)] };
    let p2 = Rep { dims: vec![1, 1], maps: vec![scalar(0), scalar(1)] };
    brute_force_count(&arrows, &[s1, s2, p1, p2], &[Some(1), Some(0), None, None])
}

fn regular_graph(r: &ExchangeGraphReport) -> Result<(), String> {
    let n = r.vertices;
    let nodes = r.nodes.len();
    let label = &r.label;
    let mut adj = vec![Vec::new(); nodes];
    let mut indeg = vec![0; nodes];
    let mut outdeg = vec![0; nodes];
    for &(u, l) in &r.edges {
        adj[u].push(l);
        adj[l].push(u);
        outdeg[u] += 1;
        indeg[l] += 1;
    }
    ensure(adj.iter().all(|a| a.len() == n), || format!("{label}: not {n}-regular"))?;
    let mut seen = vec![false; nodes];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    ensure(seen.iter().all(|&s| s), || format!("{label}: disconnected"))?;
    ensure(indeg.iter().filter(|&&d| d == 0).count() == 1, || format!("{label}: maximum not unique"))?;
    ensure(outdeg.iter().filter(|&&d| d == 0).count() == 1, || format!("{label}: minimum not unique"))?;
    let distinct: BTreeSet<_> = r.nodes.iter().collect();
    ensure(distinct.len() == nodes, || format!("{label}: repeated g-matrix"))?;
    for key in &r.nodes {
        ensure(det(key).abs() == 1, || format!("{label}: g-matrix {key:?} not unimodular"))?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    for n in 1..=5 {
        let a = family(FamilySpec::Gamma { n });
        let c: Vec<Vec<i64>> = a
            .cartan_matrix()
            .to_integers()
            .ok_or("non-integral Cartan matrix")?
            .iter()
            .map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect())
            .collect();
        let size = n + 2;
        let expected: Vec<Vec<i64>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| match (i.min(j), i.max(j)) {
                        (0, 0) | (1, 1) => 2,
                        (0, 1) => 0,
                        (0, 2) | (1, 2) => 1,
                        (0, _) | (1, _) => 0,
                        (x, y) if x == y => 3,
                        _ => 2,
                    })
                    .collect()
            })
            .collect();
        ensure(c == expected, || format!("Gamma({n}) Cartan {c:?}"))?;
        ensure(det(&c) == 8, || format!("Gamma({n}) det {}", det(&c)))?;
        ensure(positive_definite(&c), || format!("Gamma({n}) not positive definite"))?;
    }
    Ok("n = 1..5: pattern matches, det = 8, positive definite".into())
}

fn criterion_2() -> Outcome {
    let mut parts = Vec::new();
    for a in [dual_numbers(), family(FamilySpec::Apq { p: 1, q: 1 }), family(FamilySpec::Omega { n: 1 })] {
        let r = enumerate(&a, &cfg()).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::Finite(2), || format!("{}: {:?}", a.label(), r.verdict))?;
        parts.push(format!("{}=2", a.label()));
    }
    Ok(parts.join(" "))
}

fn criterion_3() -> Outcome {
    let oracle_a2 = oracle_path_a2();
    let oracle_pre = oracle_preprojective_a2();
    ensure(oracle_a2 == 5 && oracle_pre == 6, || format!("oracles gave {oracle_a2}, {oracle_pre}"))?;
    let weyl_a3: usize = (1..=4).product();
    let cases = [(path_a2(), oracle_a2), (preprojective_a(2).unwrap(), oracle_pre), (preprojective_a(3).unwrap(), weyl_a3)];
    let mut parts = Vec::new();
    for (a, expected) in cases {
        let found = count_of(&enumerate(&a, &cfg()).map_err(|e| e.to_string())?)?;
        ensure(found == expected, || format!("{}: {found} against {expected}", a.label()))?;
        parts.push(format!("{}={found}", a.label()));
    }
    Ok(format!("{} (brute force 5, 6; |S4| = 24)", parts.join(" ")))
}

fn regularity_corpus() -> Vec<BoundQuiverAlgebra> {
    vec![
        dual_numbers(),
        family(FamilySpec::Apq { p: 1, q: 1 }),
        family(FamilySpec::Omega { n: 1 }),
        path_a2(),
        preprojective_a(2).unwrap(),
        preprojective_a(3).unwrap(),
        family(FamilySpec::Gamma { n: 1 }),
        family(FamilySpec::Lambda { m: 2 }),
        family(FamilySpec::Apq { p: 1, q: 2 }),
    ]
}

fn criterion_4() -> Outcome {
    let corpus = regularity_corpus();
    for a in &corpus {
        let r = enumerate(a, &cfg()).map_err(|e| e.to_string())?;
        count_of(&r)?;
        regular_graph(&r)?;
    }
    Ok(format!("{} exchange graphs connected, regular, bounded, unimodular", corpus.len()))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for a in regularity_corpus() {
        let r = enumerate(&a, &validating()).map_err(|e| e.to_string())?;
        let d = r.dual_stack.ok_or("no dual-stack record")?;
        ensure(d.mismatches == 0, || format!("{}: {} mismatches", a.label(), d.mismatches))?;
        ensure(d.checked >= r.nodes.len(), || format!("{}: {} of {} nodes checked", a.label(), d.checked, r.nodes.len()))?;
        checked += d.checked;
    }
    Ok(format!("{checked} nodes, 0 mismatches"))
}

fn criterion_6() -> Outcome {
    let cases = [
        (FamilySpec::Tpq { p: 1, q: 1 }, "~A1"),
        (FamilySpec::Tpq { p: 2, q: 2 }, "~A1"),
        (FamilySpec::T22rStar { r: 2 }, "~D4"),
        (FamilySpec::Tpqr { p: 3, q: 3, r: 3 }, "~E6"),
        (FamilySpec::Tpqr { p: 2, q: 3, r: 6 }, "~E8"),
    ];
    let mut parts = Vec::new();
    for (spec, expected) in cases {
        let a = family(spec);
        let r = verdict(&a, &cfg()).map_err(|e| e.to_string())?;
        let c = r.verdict.certificate().ok_or_else(|| format!("{spec}: {:?}", r.verdict))?;
        let ty = match c.root() {
            Certificate::HereditaryQuotient { graph_type, .. } => graph_type.clone(),
            other => return Err(format!("{spec}: {}", other.summary())),
        };
        ensure(ty == expected, || format!("{spec}: {ty} instead of {expected}"))?;
        replay(&a, c).map_err(|e| format!("{spec}: {e}"))?;
        parts.push(format!("{spec}:{ty}"));
    }
    Ok(parts.join(" "))
}

fn criterion_7() -> Outcome {
    let specs = [
        FamilySpec::Apq { p: 1, q: 1 },
        FamilySpec::Apq { p: 1, q: 2 },
        FamilySpec::Apq { p: 2, q: 2 },
        FamilySpec::Lambda { m: 2 },
        FamilySpec::Gamma { n: 1 },
        FamilySpec::Gamma { n: 2 },
        FamilySpec::Omega { n: 1 },
        FamilySpec::Omega { n: 2 },
    ];
    let mut counts = BTreeMap::new();
    for spec in specs {
        let r = enumerate(&family(spec), &cfg()).map_err(|e| e.to_string())?;
        counts.insert(spec.to_string(), count_of(&r)?);
    }
    for n in 1..=2 {
        let (o, a) = (counts[&format!("Omega({n})")], counts[&format!("A(1,{n})")]);
        ensure(o == a, || format!("Omega({n}) = {o} but A(1,{n}) = {a}"))?;
    }
    Ok(counts.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" "))
}

fn arrow_pairs(q: &Quiver) -> BTreeSet<(String, String)> {
    q.arrows().iter().map(|x| (q.vertices()[x.source].clone(), q.vertices()[x.target].clone())).collect()
}

fn doubled(pairs: &[(&str, &str)]) -> BTreeSet<(String, String)> {
    pairs.iter().flat_map(|&(a, b)| [(a.to_string(), b.to_string()), (b.to_string(), a.to_string())]).collect()
}

fn criterion_8() -> Outcome {
    let a3 = hecke_quiver(&CoxeterSpec::parse("A3").unwrap());
    ensure(a3.vertex_count() == 8 && a3.arrow_count() == 10, || format!("A3: {} vertices, {} arrows", a3.vertex_count(), a3.arrow_count()))?;
    ensure(a3.components().len() == 3, || format!("A3: {} components", a3.components().len()))?;
    let picture = doubled(&[
        ("v{1}", "v{2}"),
        ("v{2}", "v{3}"),
        ("v{2}", "v{1,3}"),
        ("v{1,2}", "v{1,3}"),
        ("v{1,3}", "v{2,3}"),
    ]);
    ensure(arrow_pairs(&a3) == picture, || format!("A3 adjacency {:?}", arrow_pairs(&a3)))?;
    let a2 = hecke_quiver(&CoxeterSpec::parse("A2").unwrap());
    ensure(a2.vertex_count() == 4 && arrow_pairs(&a2) == doubled(&[("v{1}", "v{2}")]) && a2.arrow_count() == 2, || {
        format!("A2 adjacency {:?}", arrow_pairs(&a2))
    })?;
    Ok("A3: 8 vertices, 10 arrows, 3 components, adjacency exact; A2: 4 vertices, v{1}<->v{2}".into())
}

fn criterion_9() -> Outcome {
    let mut parts = Vec::new();
    for ty in ["A1", "A2", "B2", "I2(5)", "I2(7)"] {
        let c = classify_hecke(&CoxeterSpec::parse(ty).unwrap(), &cfg()).map_err(|e| e.to_string())?;
        let n = c.verdict.count().ok_or_else(|| format!("{ty}: {:?}", c.verdict))?;
        parts.push(format!("{ty}={n}"));
    }
    for ty in ["A3", "A4", "B3", "D4", "F4", "H3"] {
        let spec = CoxeterSpec::parse(ty).unwrap();
        let c = classify_hecke(&spec, &cfg()).map_err(|e| e.to_string())?;
        match &c.verdict {
            Verdict::Infinite(cert @ Certificate::DeltaSubquiver { pattern: DeltaPattern::Delta2, .. }) => {
                replay_on_quiver(&hecke_quiver(&spec), cert).map_err(|e| format!("{ty}: {e}"))?;
            }
            other => return Err(format!("{ty}: {other:?}")),
        }
        parts.push(format!("{ty}=Delta2"));
    }
    // Product rule over the blocks of H_0(S_3).
    let basic = hecke_basic(&hecke_algebra(&CoxeterSpec::parse("A2").unwrap()).unwrap()).unwrap().algebra;
    let total = count_of(&enumerate(&basic, &cfg()).map_err(|e| e.to_string())?)?;
    let mut blocks = Vec::new();
    for comp in basic.quiver().components() {
        let b = idempotent_truncation(&basic, &comp).map_err(|e| e.to_string())?;
        blocks.push(count_of(&enumerate(&b, &cfg()).map_err(|e| e.to_string())?)?);
    }
    blocks.sort();
    ensure(blocks == [2, 2, 6] && total == 24, || format!("A2 blocks {blocks:?}, total {total}"))?;
    Ok(format!("{}; A2 total 24 = 2*6*2", parts.join(" ")))
}

fn criterion_10() -> Outcome {
    let mut mismatches = 0;
    for r in 2..=4 {
        let spec = CoxeterSpec::Named { letter: 'A', rank: r - 1 };
        let presented = hecke_basic(&hecke_algebra(&spec).unwrap()).map_err(|e| e.to_string())?.algebra;
        let combinatorial = hecke_quiver(&spec);
        let gabriel = presented.gabriel_quiver();
        for q in [presented.quiver(), &gabriel] {
            if q.vertices() != combinatorial.vertices() || q.arrow_counts() != combinatorial.arrow_counts() {
                mismatches += 1;
            }
        }
    }
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    Ok("r = 2, 3, 4: 0 mismatches".into())
}

fn criterion_11() -> Outcome {
    let mut parts = Vec::new();
    for (n, r) in [(3, 2), (3, 3), (4, 3), (2, 3), (2, 4), (2, 5)] {
        let c = classify_schur(n, r, &cfg()).map_err(|e| e.to_string())?;
        let count = c.verdict.count().ok_or_else(|| format!("S0({n},{r}): {:?}", c.verdict))?;
        let mut part = format!("S0({n},{r})={count}");
        if let Some(s) = &c.singleton_block {
            if (n, r) == (2, 4) {
                ensure(s.expected == 24, || "expected value for (2,4) is not 4!".into())?;
            }
            let flag = if s.matches { "" } else { " MISMATCH" };
            part.push_str(&format!("[singleton {:?}/{}{flag}]", s.count, s.expected));
        }
        parts.push(part);
    }
    for (n, r) in [(3, 4), (4, 4), (3, 5)] {
        let c = classify_schur(n, r, &cfg()).map_err(|e| e.to_string())?;
        ensure(
            matches!(&c.verdict, Verdict::Infinite(Certificate::DeltaSubquiver { pattern: DeltaPattern::Delta2, vertices }) if vertices.len() == 6),
            || format!("S0({n},{r}): {:?}", c.verdict),
        )?;
        parts.push(format!("S0({n},{r})=Delta2"));
    }
    Ok(parts.join(" "))
}

fn criterion_12() -> Outcome {
    let p = preprojective_a(2).unwrap();
    let t = tensor_product(&p, &p).map_err(|e| e.to_string())?;
    let c = detect_delta(&t).ok_or("no Delta on the tensor square")?;
    ensure(matches!(c, Certificate::DeltaSubquiver { pattern: DeltaPattern::Delta1, .. }), || c.summary())?;
    replay(&t, &c).map_err(|e| e.to_string())?;

    let star = Quiver::from_names(
        &["c", "1", "2", "3", "4"],
        &[("x1", "c", "1"), ("x2", "c", "2"), ("x3", "c", "3"), ("x4", "c", "4")],
    )
    .unwrap();
    let star = build_algebra(star, vec![], ScalarField::Rationals, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let triv = trivial_extension(&star).map_err(|e| e.to_string())?;
    let r = verdict(&triv, &cfg()).map_err(|e| e.to_string())?;
    let cert = r.verdict.certificate().ok_or_else(|| format!("Triv: {:?}", r.verdict))?;
    ensure(matches!(cert, Certificate::FactorPropagation { .. }), || cert.summary())?;
    replay(&triv, cert).map_err(|e| e.to_string())?;
    Ok(format!("tensor square: {}; Triv(~D4 star): {}", c.summary(), cert.summary()))
}

fn main() -> ExitCode {
    let criteria: [(&str, u64, fn() -> Outcome); 12] = [
        ("Gamma(n) Cartan matrices", 1, criterion_1),
        ("local-algebra baseline", 1, criterion_2),
        ("oracle counts", 10, criterion_3),
        ("exchange-graph regularity", 60, criterion_4),
        ("dual-stack equivalence", 60, criterion_5),
        ("infinite families", 30, criterion_6),
        ("finite families", 300, criterion_7),
        ("0-Hecke quiver ground truth", 1, criterion_8),
        ("0-Hecke classification", 300, criterion_9),
        ("pipeline consistency", 120, criterion_10),
        ("0-Schur classification", 600, criterion_11),
        ("tensor and trivial-extension lemmas", 30, criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(budget) => Err(format!("over time budget; {detail}")),
            other => other,
        };
        let (word, detail) = match &outcome {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        if outcome.is_err() {
            failed += 1;
        }
        println!("criterion {:>2} {word} [{:.2} s / {budget} s] {name}: {detail}", i + 1, elapsed.as_secs_f64());
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
