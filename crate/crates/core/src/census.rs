//! Exhaustive verification sweeps for structural claims about dominating
//! graphs. Each sweep returns a [`CensusReport`] naming the finite universe it
//! covered and any witnesses or counterexamples.
//!
//! Reports are deterministic: graphs are visited in generator order, per-graph
//! work may run in parallel, and results are merged in that same order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::domination::{
    count_dominating_sets, domination_number, domination_polynomial, gamma_sets,
    upper_domination_number,
};
use crate::error::{Error, Result};
use crate::formats::to_graph6;
use crate::gen::{generate_graphs, graphs_up_to, GraphClassFilter};
use crate::graph::{Graph, VertexSet};
use crate::iso::{canonical_form, is_isomorphic, CanonicalForm};
use crate::reconfig::{build_dominating_graph, degree_of_set, DominatingGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Verified,
    Counterexample,
}

/// What a verified verdict means for the underlying claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    /// The claim reduces to the finite universe checked; the sweep settles it.
    CompleteCheck,
    /// The claim quantifies over an infinite universe; the sweep is evidence.
    Evidence,
    /// No expected answer is pinned; the report is descriptive.
    Exploratory,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub details: String,
}

impl Witness {
    fn new(g: &Graph, k: Option<usize>, details: impl Into<String>) -> Self {
        Witness {
            graph6: to_graph6(g),
            k,
            details: details.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub claim_id: String,
    pub universe: String,
    pub kind: ClaimKind,
    pub tested: u64,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub counterexamples: Vec<Witness>,
    pub metadata: BTreeMap<String, String>,
    /// Wall-clock time; kept out of the JSON so reports stay byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CensusReport {
    pub fn is_verified(&self) -> bool {
        self.verdict == Verdict::Verified
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("## {}\n\n", self.claim_id);
        let _ = writeln!(out, "- universe: {}", self.universe);
        let _ = writeln!(out, "- kind: {}", kind_name(self.kind));
        let _ = writeln!(out, "- tested: {}", self.tested);
        let _ = writeln!(out, "- verdict: {}", verdict_name(self.verdict));
        for (key, value) in &self.metadata {
            let _ = writeln!(out, "- {key}: {value}");
        }
        for (title, list) in [
            ("Witnesses", &self.witnesses),
            ("Counterexamples", &self.counterexamples),
        ] {
            if list.is_empty() {
                continue;
            }
            let _ = writeln!(
                out,
                "\n### {title}\n\n| graph6 | k | details |\n|---|---|---|"
            );
            for w in list {
                let k = w.k.map(|k| k.to_string()).unwrap_or_default();
                let _ = writeln!(out, "| `{}` | {} | {} |", w.graph6, k, cell(&w.details));
            }
        }
        out
    }
}

fn cell(text: &str) -> String {
    text.replace('|', "\\|")
}

fn kind_name(kind: ClaimKind) -> &'static str {
    match kind {
        ClaimKind::CompleteCheck => "complete_check",
        ClaimKind::Evidence => "evidence",
        ClaimKind::Exploratory => "exploratory",
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Verified => "verified",
        Verdict::Counterexample => "counterexample",
    }
}

/// One summary row per report.
pub fn markdown_summary(reports: &[CensusReport]) -> String {
    let mut out = String::from(
        "| claim | kind | universe | tested | verdict | witnesses | counterexamples |\n|---|---|---|---|---|---|---|\n",
    );
    for r in reports {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} |",
            r.claim_id,
            kind_name(r.kind),
            cell(&r.universe),
            r.tested,
            verdict_name(r.verdict),
            r.witnesses.len(),
            r.counterexamples.len()
        );
    }
    out
}

/// Per-graph partial result, merged in generator order.
#[derive(Default)]
struct Findings {
    tested: u64,
    witnesses: Vec<Witness>,
    counterexamples: Vec<Witness>,
}

impl Findings {
    fn absorb(&mut self, other: Findings) {
        self.tested += other.tested;
        self.witnesses.extend(other.witnesses);
        self.counterexamples.extend(other.counterexamples);
    }

    fn check(&mut self, ok: bool, g: &Graph, k: Option<usize>, details: impl FnOnce() -> String) {
        self.tested += 1;
        if !ok {
            self.counterexamples.push(Witness::new(g, k, details()));
        }
    }
}

fn sweep<F>(graphs: &[Graph], per_graph: F) -> Result<Findings>
where
    F: Fn(&Graph) -> Result<Findings> + Sync + Send,
{
    let parts: Vec<Findings> = graphs
        .par_iter()
        .map(per_graph)
        .collect::<Result<Vec<_>>>()?;
    let mut all = Findings::default();
    for p in parts {
        all.absorb(p);
    }
    Ok(all)
}

struct Draft {
    claim_id: &'static str,
    universe: String,
    kind: ClaimKind,
    metadata: BTreeMap<String, String>,
    started: Instant,
}

impl Draft {
    fn new(claim_id: &'static str, universe: String, kind: ClaimKind) -> Self {
        Draft {
            claim_id,
            universe,
            kind,
            metadata: BTreeMap::new(),
            started: Instant::now(),
        }
    }

    fn meta(mut self, key: &str, value: impl ToString) -> Self {
        self.metadata.insert(key.to_string(), value.to_string());
        self
    }

    fn finish(self, findings: Findings) -> CensusReport {
        let verdict = if findings.counterexamples.is_empty() {
            Verdict::Verified
        } else {
            Verdict::Counterexample
        };
        CensusReport {
            claim_id: self.claim_id.to_string(),
            universe: self.universe,
            kind: self.kind,
            tested: findings.tested,
            verdict,
            witnesses: findings.witnesses,
            counterexamples: findings.counterexamples,
            metadata: self.metadata,
            elapsed: self.started.elapsed(),
        }
    }
}

fn check_census_order(n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::TooLargeForCensus { n, max })
    } else {
        Ok(())
    }
}

/// Bipartite with parity color classes for `γ ≤ k ≤ n`; `|D_n|` odd and
/// `|D_{n-1}|` even; `Δ(D_n(G)) = n` for connected `G` of order at least 2
/// (`D_1(K_1)` is a single vertex).
pub fn verify_basic_properties(n_max: usize) -> Result<CensusReport> {
    check_census_order(n_max, 7)?;
    let draft = Draft::new(
        "basic-properties",
        format!("all graphs of order 1..={n_max} up to isomorphism, every k with γ(G) ≤ k ≤ |G|"),
        ClaimKind::Evidence,
    );
    let graphs = graphs_up_to(n_max, GraphClassFilter::all)?;
    let findings = sweep(&graphs, |g| {
        let n = g.n();
        let mut f = Findings::default();
        for k in domination_number(g)..=n {
            let d = build_dominating_graph(g, k)?;
            f.check(
                d.is_bipartite() && d.parity_classes_are_proper(),
                g,
                Some(k),
                || "D_k is not 2-colored by cardinality parity".into(),
            );
        }
        let full = build_dominating_graph(g, n)?;
        let below = build_dominating_graph(g, n - 1)?;
        f.check(full.num_vertices() % 2 == 1, g, Some(n), || {
            format!("|D_n| = {} is even", full.num_vertices())
        });
        f.check(below.num_vertices() % 2 == 0, g, Some(n - 1), || {
            format!("|D_(n-1)| = {} is odd", below.num_vertices())
        });
        if n >= 2 && g.is_connected() {
            let top = full
                .index_of(VertexSet::full(n))
                .map(|i| full.degree(i))
                .unwrap_or(0);
            f.check(full.max_degree() == n && top == n, g, Some(n), || {
                format!("Δ(D_n) = {}, deg(V) = {top}", full.max_degree())
            });
        }
        Ok(f)
    })?;
    Ok(draft.meta("graphs", graphs.len()).finish(findings))
}

/// First graph of order `n` (generator order, isolates allowed) with exactly
/// `m` dominating sets.
pub fn search_odd_order_realization(n: usize, m: u64) -> Result<Option<Graph>> {
    check_census_order(n, 7)?;
    if m.is_multiple_of(2) {
        return Err(Error::InvalidParity {
            m,
            reason: "the number of dominating sets is always odd".into(),
        });
    }
    if n == 0 || m >= 1u64 << n {
        return Err(Error::InvalidParity {
            m,
            reason: format!("must lie strictly between 0 and 2^{n}"),
        });
    }
    for g in generate_graphs(GraphClassFilter::all(n))? {
        if count_dominating_sets(&g)? == m.into() {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Every odd `m < 2^n` is realized by some graph of order `n`, for `n ≤ n_max`.
pub fn odd_order_census(n_max: usize) -> Result<CensusReport> {
    check_census_order(n_max, 7)?;
    let draft = Draft::new(
        "odd-order-realization",
        format!("all graphs of order 1..={n_max}, every odd 0 < m < 2^n"),
        ClaimKind::CompleteCheck,
    );
    let mut f = Findings::default();
    for n in 1..=n_max {
        let graphs: Vec<Graph> = generate_graphs(GraphClassFilter::all(n))?.collect();
        let counts: Vec<u64> = graphs
            .par_iter()
            .map(|g| {
                let c = count_dominating_sets(g)?;
                Ok(u64::try_from(c).expect("order ≤ 7 keeps counts below 2^7"))
            })
            .collect::<Result<_>>()?;
        let mut first: BTreeMap<u64, &Graph> = BTreeMap::new();
        for (g, &c) in graphs.iter().zip(&counts) {
            first.entry(c).or_insert(g);
        }
        for m in (1..1u64 << n).step_by(2) {
            f.tested += 1;
            match first.get(&m) {
                Some(g) => f
                    .witnesses
                    .push(Witness::new(g, None, format!("n={n}, m={m}"))),
                None => f.counterexamples.push(Witness {
                    graph6: String::new(),
                    k: None,
                    details: format!("no graph of order {n} has exactly {m} dominating sets"),
                }),
            }
        }
    }
    Ok(draft.finish(f))
}

/// All `(G, k)` with `G ≅ D_k(G)` over isolate-free graphs of order
/// `2..=n_max`; the expected answer is the stars `K_{1,n−1}` (`n ≥ 4`) at `k = 2`.
pub fn self_isomorphism_census(n_max: usize) -> Result<CensusReport> {
    check_census_order(n_max, 6)?;
    let draft = Draft::new(
        "self-isomorphism",
        format!("isolate-free graphs of order 2..={n_max}, every k with γ(G) ≤ k ≤ |G|"),
        ClaimKind::Evidence,
    );
    let graphs: Vec<Graph> = (2..=n_max)
        .map(|n| generate_graphs(GraphClassFilter::isolate_free(n)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let findings = sweep(&graphs, |g| {
        let n = g.n();
        let poly = domination_polynomial(g)?;
        let mut f = Findings::default();
        for k in domination_number(g)..=n {
            if poly.count_up_to(k) != n.into() {
                continue;
            }
            f.tested += 1;
            let d = build_dominating_graph(g, k)?;
            if d.num_vertices() != n {
                f.counterexamples.push(Witness::new(
                    g,
                    Some(k),
                    format!("order filter disagrees: |D_k| = {}", d.num_vertices()),
                ));
                continue;
            }
            if is_isomorphic(g, &d.to_graph()?)? {
                let star = n >= 4 && k == 2 && is_isomorphic(g, &Graph::star(n)?)?;
                let w = Witness::new(g, Some(k), format!("G ≅ D_{k}(G), |G| = {n}"));
                if star {
                    f.witnesses.push(w);
                } else {
                    f.counterexamples.push(w);
                }
            }
        }
        Ok(f)
    })?;
    let mut findings = findings;
    let found: BTreeSet<usize> = findings
        .witnesses
        .iter()
        .filter_map(|w| crate::formats::parse_graph6(&w.graph6).ok().map(|g| g.n()))
        .collect();
    for n in 4..=n_max {
        if !found.contains(&n) {
            let star = Graph::star(n)?;
            findings.counterexamples.push(Witness::new(
                &star,
                Some(2),
                "expected D_2(K_{1,n-1}) ≅ K_{1,n-1} was not found",
            ));
        }
    }
    let candidates = findings.tested;
    Ok(draft
        .meta("graphs", graphs.len())
        .meta("candidates_after_order_filter", candidates)
        .finish(findings))
}

/// `D_2(G + K_1) ≅ K_{1,|G|}` for a graph with `γ(G) ≥ 3`.
pub fn star_realization_family(g: &Graph) -> Result<bool> {
    let gamma = domination_number(g);
    if gamma < 3 {
        return Err(Error::PreconditionGammaTooSmall { gamma });
    }
    if g.n() + 1 > 16 {
        return Err(Error::TooLargeForCanonical {
            n: g.n() + 1,
            max: 16,
        });
    }
    let joined = g.join(&Graph::complete(1)?)?;
    let d = build_dominating_graph(&joined, 2)?;
    if d.is_empty() {
        return Ok(false);
    }
    is_isomorphic(&d.to_graph()?, &Graph::star(g.n() + 1)?)
}

/// One way of realizing a class member as `D_k(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Realization {
    pub source_graph6: String,
    pub k: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassMember {
    pub certificate: CanonicalForm,
    pub order: usize,
    pub realizations: Vec<Realization>,
}

/// Pairwise non-isomorphic dominating graphs found by a census.
#[derive(Clone, Debug, Default, Serialize)]
pub struct DominatingGraphClass {
    pub members: Vec<ClassMember>,
}

impl DominatingGraphClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, h: &Graph) -> Result<bool> {
        let cf = canonical_form(h)?;
        Ok(self.members.iter().any(|m| m.certificate == cf))
    }

    pub fn member(&self, h: &Graph) -> Result<Option<&ClassMember>> {
        let cf = canonical_form(h)?;
        Ok(self.members.iter().find(|m| m.certificate == cf))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RegularCensusOptions {
    /// Quantify over all graphs of order ≤ 2r instead of connected ones.
    pub allow_isolates: bool,
}

/// Literature constants `c_r` with `γ(G) ≤ c_r |G|` for connected `G` with
/// `δ(G) = r`. Only `c_1` bounds the census universe.
const DOMINATION_CONSTANTS: [(&str, &str); 4] = [
    ("c_1", "1/2"),
    ("c_2", "2/5"),
    ("c_3", "3/8"),
    ("c_4", "4/11"),
];

pub fn regular_census(r: usize) -> Result<(DominatingGraphClass, CensusReport)> {
    regular_census_with(r, RegularCensusOptions::default())
}

/// Every connected `r`-regular `D_k(G)` over connected `G` with `|G| ≤ 2r`
/// and all `k`, deduplicated by isomorphism.
pub fn regular_census_with(
    r: usize,
    opts: RegularCensusOptions,
) -> Result<(DominatingGraphClass, CensusReport)> {
    if r == 0 {
        return Err(Error::InvalidArgument(
            "regularity must be at least 1".into(),
        ));
    }
    check_census_order(2 * r, 6)?;
    let kind = if r == 2 && !opts.allow_isolates {
        ClaimKind::CompleteCheck
    } else {
        ClaimKind::Exploratory
    };
    let scope = if opts.allow_isolates {
        "all"
    } else {
        "connected"
    };
    let mut draft = Draft::new(
        "regular-dominating-graphs",
        format!(
            "{scope} graphs G with |G| ≤ {}, every 1 ≤ k ≤ |G|; r = {r}",
            2 * r
        ),
        kind,
    )
    .meta("order_bound", "|G| ≤ 2r from γ(G) ≤ |G|/2");
    for (name, value) in DOMINATION_CONSTANTS {
        draft = draft.meta(&format!("constant_{name}"), value);
    }
    let graphs = graphs_up_to(2 * r, |n| GraphClassFilter {
        order: n,
        connected: !opts.allow_isolates,
        min_degree_at_least: 0,
    })?;

    type Hit = (CanonicalForm, Realization);
    let per_graph: Vec<(Findings, Vec<Hit>)> = graphs
        .par_iter()
        .map(|g| -> Result<(Findings, Vec<Hit>)> {
            let mut f = Findings::default();
            let mut hits = Vec::new();
            let gamma = domination_number(g);
            for k in 1..=g.n() {
                f.tested += 1;
                let d = build_dominating_graph(g, k)?;
                if d.is_empty() || d.regular_degree() != Some(r) || !d.is_connected()? {
                    continue;
                }
                if r != g.n() - gamma {
                    f.counterexamples.push(Witness::new(
                        g,
                        Some(k),
                        format!("r = {r} but |G| − γ(G) = {}", g.n() - gamma),
                    ));
                }
                let cf = canonical_form(&d.to_graph()?)?;
                hits.push((
                    cf,
                    Realization {
                        source_graph6: to_graph6(g),
                        k,
                    },
                ));
            }
            Ok((f, hits))
        })
        .collect::<Result<_>>()?;

    let mut findings = Findings::default();
    let mut classes: BTreeMap<CanonicalForm, Vec<Realization>> = BTreeMap::new();
    for (f, hits) in per_graph {
        findings.absorb(f);
        for (cf, real) in hits {
            classes.entry(cf).or_default().push(real);
        }
    }
    let class = DominatingGraphClass {
        members: classes
            .into_iter()
            .map(|(certificate, realizations)| ClassMember {
                order: certificate.order(),
                certificate,
                realizations,
            })
            .collect(),
    };
    for m in &class.members {
        for real in &m.realizations {
            findings.witnesses.push(Witness {
                graph6: real.source_graph6.clone(),
                k: Some(real.k),
                details: format!(
                    "{r}-regular on {} vertices, certificate {}",
                    m.order, m.certificate
                ),
            });
        }
    }

    if kind == ClaimKind::CompleteCheck {
        let c6 = canonical_form(&Graph::cycle(6)?)?;
        let c8 = canonical_form(&Graph::cycle(8)?)?;
        let certs: BTreeSet<&CanonicalForm> =
            class.members.iter().map(|m| &m.certificate).collect();
        let expected: BTreeSet<&CanonicalForm> = [&c6, &c8].into_iter().collect();
        if certs != expected {
            for m in &class.members {
                if m.certificate != c6 && m.certificate != c8 {
                    let source = crate::formats::parse_graph6(&m.realizations[0].source_graph6)?;
                    findings.counterexamples.push(Witness::new(
                        &source,
                        Some(m.realizations[0].k),
                        format!(
                            "unexpected 2-regular dominating graph on {} vertices",
                            m.order
                        ),
                    ));
                }
            }
            for (name, cf) in [("C_6", &c6), ("C_8", &c8)] {
                if !certs.contains(cf) {
                    findings.counterexamples.push(Witness {
                        graph6: String::new(),
                        k: None,
                        details: format!("{name} was not realized"),
                    });
                }
            }
        }
    }
    let members = class.len();
    Ok((class, draft.meta("members", members).finish(findings)))
}

fn is_path_graph(d: &DominatingGraph) -> Result<bool> {
    let m = d.num_vertices();
    Ok(m > 0 && d.num_edges() == m - 1 && d.max_degree() <= 2 && d.is_connected()?)
}

/// Paths arising as `D_k(G)` of connected `G` with `|G| ≤ 4`; the only path
/// classes expected are `P_1` and `P_3`, realized in particular by
/// `D_1(K_1)` and `D_2(K_2)`. For larger orders the
/// γ-set degree `|G| − γ(G)` must exceed 2, checked on connected graphs of
/// order 5..=7.
pub fn path_census() -> Result<CensusReport> {
    let draft = Draft::new(
        "path-dominating-graphs",
        "connected graphs of order 1..=4, every 1 ≤ k ≤ |G|; γ-set degree screen on connected orders 5..=7".into(),
        ClaimKind::CompleteCheck,
    );
    let small = graphs_up_to(4, GraphClassFilter::connected)?;
    let mut findings = sweep(&small, |g| {
        let mut f = Findings::default();
        for k in 1..=g.n() {
            f.tested += 1;
            let d = build_dominating_graph(g, k)?;
            if !d.is_empty() && is_path_graph(&d)? {
                let m = d.num_vertices();
                let w = Witness::new(g, Some(k), format!("D_{k}(G) ≅ P_{m}"));
                if m == 1 || m == 3 {
                    f.witnesses.push(w);
                } else {
                    f.counterexamples.push(w);
                }
            }
        }
        Ok(f)
    })?;
    // Other sources may realize P_1 or P_3 too (a unique universal vertex
    // gives D_1 ≅ P_1); the named pairs must be among them.
    let named = [
        (to_graph6(&Graph::complete(1)?), 1, "P_1 ≅ D_1(K_1)"),
        (to_graph6(&Graph::path(2)?), 2, "P_3 ≅ D_2(P_2)"),
    ];
    for (g6, k, name) in named {
        if !findings
            .witnesses
            .iter()
            .any(|w| w.graph6 == g6 && w.k == Some(k))
        {
            findings.counterexamples.push(Witness {
                graph6: g6,
                k: Some(k),
                details: format!("expected realization {name} was not found"),
            });
        }
    }
    let orders: BTreeSet<String> = findings
        .witnesses
        .iter()
        .filter_map(|w| w.details.rsplit("P_").next().map(str::to_string))
        .collect();
    let path_orders = orders.into_iter().collect::<Vec<_>>().join(",");
    let screen = (5..=7)
        .map(|n| generate_graphs(GraphClassFilter::connected(n)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    let screened = sweep(&screen, |g| {
        let mut f = Findings::default();
        let slack = g.n() - domination_number(g);
        f.check(slack > 2, g, None, || format!("|G| − γ(G) = {slack}"));
        Ok(f)
    })?;
    findings.absorb(screened);
    Ok(draft
        .meta("path_orders", path_orders)
        .meta("screened_graphs", screen.len())
        .finish(findings))
}

/// `D_3(K_2 ∪ K_2) ≅ C_8`, `D_3(K_2 ∪ K_1) ≅ P_3`, `D_4(K_2 ∪ K_1 ∪ K_1) ≅ P_3`.
pub fn disconnected_examples_check() -> Result<CensusReport> {
    let draft = Draft::new(
        "disconnected-sources",
        "three fixed disconnected source graphs".into(),
        ClaimKind::CompleteCheck,
    );
    let k1 = Graph::complete(1)?;
    let k2 = Graph::complete(2)?;
    let cases = [
        (k2.disjoint_union(&k2)?, 3, Graph::cycle(8)?, "C_8"),
        (k2.disjoint_union(&k1)?, 3, Graph::path(3)?, "P_3"),
        (
            k2.disjoint_union(&k1)?.disjoint_union(&k1)?,
            4,
            Graph::path(3)?,
            "P_3",
        ),
    ];
    let mut f = Findings::default();
    for (g, k, target, name) in &cases {
        let d = build_dominating_graph(g, *k)?;
        let ok = !d.is_empty() && is_isomorphic(&d.to_graph()?, target)?;
        f.tested += 1;
        let w = Witness::new(g, Some(*k), format!("D_{k}(G) ≅ {name}"));
        if ok {
            f.witnesses.push(w);
        } else {
            f.counterexamples.push(Witness {
                details: format!("D_{k}(G) is not isomorphic to {name}"),
                ..w
            });
        }
    }
    Ok(draft.finish(f))
}

/// Connectivity theorems over all graphs of order `1..=n_max`:
/// two disjoint edges and `k ≥ min{n−1, Γ+γ}` ⇒ `D_k` connected;
/// bipartite or chordal ⇒ `D_{Γ+1}` connected;
/// a matching of size `μ+1` ⇒ `D_{n−μ}` connected.
pub fn connectivity_threshold_census(n_max: usize) -> Result<CensusReport> {
    check_census_order(n_max, 6)?;
    let draft = Draft::new(
        "connectivity-thresholds",
        format!("all graphs of order 1..={n_max} up to isomorphism"),
        ClaimKind::Evidence,
    );
    let graphs = graphs_up_to(n_max, GraphClassFilter::all)?;
    let findings = sweep(&graphs, |g| {
        let n = g.n();
        let mut f = Findings::default();
        let gamma = domination_number(g);
        let upper = upper_domination_number(g)?;
        let nu = g.matching_number()?;
        let connected: Vec<Option<bool>> = (0..=n)
            .map(|k| {
                let d = build_dominating_graph(g, k)?;
                Ok(if d.is_empty() {
                    None
                } else {
                    Some(d.is_connected()?)
                })
            })
            .collect::<Result<_>>()?;
        let conn = |k: usize| connected[k.min(n)] == Some(true);

        if nu >= 2 {
            let threshold = (n - 1).min(upper + gamma);
            for k in threshold.max(gamma)..=n {
                f.check(conn(k), g, Some(k), || {
                    format!("two disjoint edges, k ≥ min(n−1, Γ+γ) = {threshold}, but D_k is disconnected")
                });
            }
        }
        if g.is_bipartite() || g.is_chordal() {
            f.check(conn(upper + 1), g, Some((upper + 1).min(n)), || {
                format!("bipartite or chordal with Γ = {upper}, but D_(Γ+1) is disconnected")
            });
        }
        for mu in 0..nu {
            f.check(conn(n - mu), g, Some(n - mu), || {
                format!(
                    "matching of size {nu} ≥ μ+1 = {}, but D_(n−μ) is disconnected",
                    mu + 1
                )
            });
        }
        if nu < 2 && n >= 4 && g.is_connected() && connected[n - 1] == Some(false) {
            f.witnesses.push(Witness::new(
                g,
                Some(n - 1),
                "no two disjoint edges; D_(n-1) is disconnected",
            ));
        }
        Ok(f)
    })?;
    Ok(draft.meta("graphs", graphs.len()).finish(findings))
}

/// `D_{n−1}(K_{1,n−1})` is disconnected and `D_k(K_{1,n−1})` connected for
/// `1 ≤ k ≤ n−2`, for `n` in the given range (`n ≥ 4`).
pub fn star_connectivity_check(n_lo: usize, n_hi: usize) -> Result<CensusReport> {
    if n_lo < 4 {
        return Err(Error::InvalidArgument("star orders start at 4".into()));
    }
    check_census_order(n_hi, 16)?;
    let draft = Draft::new(
        "star-connectivity",
        format!("K_(1,n-1) for n = {n_lo}..={n_hi}, every 1 ≤ k ≤ n−1"),
        ClaimKind::CompleteCheck,
    );
    let mut f = Findings::default();
    for n in n_lo..=n_hi {
        let star = Graph::star(n)?;
        for k in 1..n {
            let d = build_dominating_graph(&star, k)?;
            let connected = d.is_connected()?;
            let expected = k <= n - 2;
            f.check(connected == expected, &star, Some(k), || {
                format!("expected connected = {expected}, got {connected}")
            });
        }
    }
    Ok(draft.finish(f))
}

/// For connected `G` and `k = γ(G) + 1`, every γ-set has degree `|G| − γ(G)`
/// in `D_k(G)`, both by the local count and in the explicit graph.
pub fn degree_law_census(n_max: usize) -> Result<CensusReport> {
    check_census_order(n_max, 8)?;
    let draft = Draft::new(
        "gamma-set-degree",
        format!("connected graphs of order 1..={n_max}, k = γ(G)+1 (clamped to |G|)"),
        ClaimKind::Evidence,
    );
    let graphs = graphs_up_to(n_max, GraphClassFilter::connected)?;
    let findings = sweep(&graphs, |g| {
        let mut f = Findings::default();
        let gamma = domination_number(g);
        let k = (gamma + 1).min(g.n());
        let d = build_dominating_graph(g, k)?;
        for x in gamma_sets(g) {
            let local = degree_of_set(g, x, k)?;
            let explicit = d.index_of(x).map(|i| d.degree(i));
            f.check(
                local == g.n() - gamma && explicit == Some(local),
                g,
                Some(k),
                || {
                    format!(
                        "γ-set {x}: local degree {local}, explicit {explicit:?}, expected {}",
                        g.n() - gamma
                    )
                },
            );
        }
        Ok(f)
    })?;
    Ok(draft.meta("graphs", graphs.len()).finish(findings))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_properties_small() {
        let r = verify_basic_properties(4).unwrap();
        assert!(r.is_verified(), "{}", r.to_markdown());
        assert!(r.tested > 0);
        assert!(matches!(
            verify_basic_properties(8),
            Err(Error::TooLargeForCensus { .. })
        ));
    }

    #[test]
    fn odd_realizations() {
        assert_eq!(
            search_odd_order_realization(1, 1).unwrap().unwrap(),
            Graph::complete(1).unwrap()
        );
        let g = search_odd_order_realization(2, 3).unwrap().unwrap();
        assert!(is_isomorphic(&g, &Graph::complete(2).unwrap()).unwrap());
        let g = search_odd_order_realization(3, 7).unwrap().unwrap();
        assert!(is_isomorphic(&g, &Graph::complete(3).unwrap()).unwrap());
        assert!(matches!(
            search_odd_order_realization(3, 4),
            Err(Error::InvalidParity { .. })
        ));
        assert!(matches!(
            search_odd_order_realization(3, 9),
            Err(Error::InvalidParity { .. })
        ));
    }

    #[test]
    fn star_family() {
        assert!(star_realization_family(&Graph::cycle(9).unwrap()).unwrap());
        assert!(star_realization_family(&Graph::path(7).unwrap()).unwrap());
        assert_eq!(
            star_realization_family(&Graph::star(5).unwrap()),
            Err(Error::PreconditionGammaTooSmall { gamma: 1 })
        );
    }

    #[test]
    fn disconnected_examples() {
        let r = disconnected_examples_check().unwrap();
        assert!(r.is_verified());
        assert_eq!(r.witnesses.len(), 3);
    }

    #[test]
    fn report_json_is_deterministic() {
        let a = disconnected_examples_check().unwrap().to_json();
        let b = disconnected_examples_check().unwrap().to_json();
        assert_eq!(a, b);
        assert!(!a.contains("elapsed"));
        let md = markdown_summary(&[disconnected_examples_check().unwrap()]);
        assert!(md.contains("| disconnected-sources | complete_check |"));
    }
}
