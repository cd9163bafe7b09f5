//! Runs claims over corpora, computes class extrema with complete witness
//! sets, hunts and shrinks counterexamples, and aggregates reports.
//!
//! Reports are a pure function of (corpus spec, claim list, registry
//! version): no timestamps, deterministic ordering throughout, so two runs
//! with the same inputs serialize byte-identically.

use crate::canon;
use crate::claims::{
    self, claim_info, replay_witness, BoundMode, ClaimKind, ClaimOutcome, SubjectCtx, Verdict,
};
use crate::enumeration::GraphClass;
use crate::graph::{Graph, GraphError};
use crate::graph6::write_graph6;
use crate::invariants::{albertson, sigma, total_irregularity_pairwise};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum VerifyError {
    UnknownClaimId(String),
    BudgetExceeded(String),
    NotAFailure(String),
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::UnknownClaimId(id) => write!(f, "unknown claim id: {id}"),
            VerifyError::BudgetExceeded(what) => write!(f, "budget exceeded: {what}"),
            VerifyError::NotAFailure(why) => write!(f, "not a failure: {why}"),
        }
    }
}

impl std::error::Error for VerifyError {}

impl From<GraphError> for VerifyError {
    fn from(e: GraphError) -> Self {
        VerifyError::BudgetExceeded(e.to_string())
    }
}

/// Which index an extremal scan ranks by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IndexKind {
    Irr,
    Sigma,
    IrrT,
}

impl IndexKind {
    pub fn apply(self, g: &Graph) -> u64 {
        match self {
            IndexKind::Irr => albertson(g),
            IndexKind::Sigma => sigma(g),
            IndexKind::IrrT => total_irregularity_pairwise(g),
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IndexKind::Irr => "irr",
            IndexKind::Sigma => "sigma",
            IndexKind::IrrT => "irr_t",
        };
        write!(f, "{s}")
    }
}

impl std::str::FromStr for IndexKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "irr" => Ok(IndexKind::Irr),
            "sigma" => Ok(IndexKind::Sigma),
            "irr_t" => Ok(IndexKind::IrrT),
            other => Err(format!("unknown index {other:?} (expected irr|sigma|irr_t)")),
        }
    }
}

/// A witness graph in a report: always replayable from graph6; certificate
/// attached when the order is within the certificate budget.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessRef {
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

impl WitnessRef {
    fn of(g: &Graph) -> WitnessRef {
        WitnessRef {
            graph6: write_graph6(g),
            certificate: canon::certificate(g).ok().map(|c| c.hex()),
        }
    }
}

/// Exact min/max of one index over one class, with every attainer listed.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalResult {
    pub class: String,
    pub index: IndexKind,
    pub min: u64,
    pub max: u64,
    pub min_witnesses: Vec<WitnessRef>,
    pub max_witnesses: Vec<WitnessRef>,
}

/// Full enumeration scan: exact extrema and all attaining witnesses.
pub fn extremal_scan(class: &GraphClass, index: IndexKind) -> Result<ExtremalResult, VerifyError> {
    let graphs = class.graphs()?;
    if graphs.is_empty() {
        return Err(VerifyError::BudgetExceeded(format!("class {class} is empty")));
    }
    let values = crate::exec::map_collect(&graphs, |g| index.apply(g));
    let min = *values.iter().min().expect("nonempty");
    let max = *values.iter().max().expect("nonempty");
    let collect = |target: u64| {
        graphs
            .iter()
            .zip(&values)
            .filter(|(_, &v)| v == target)
            .map(|(g, _)| WitnessRef::of(g))
            .collect::<Vec<_>>()
    };
    Ok(ExtremalResult {
        class: class.to_string(),
        index,
        min,
        max,
        min_witnesses: collect(min),
        max_witnesses: collect(max),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RunMeta {
    pub corpus: Vec<String>,
    pub claims: Vec<String>,
    pub seed: Option<u64>,
    pub version: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub holds: usize,
    pub fails: usize,
    pub na: usize,
    pub marginal: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub run: RunMeta,
    pub outcomes: Vec<ClaimOutcome>,
    pub extremal: Vec<ExtremalResult>,
    pub summary: Summary,
}

impl Report {
    pub fn has_failures(&self) -> bool {
        self.summary.fails > 0
    }

    /// Per-claim verdict counts in first-appearance order.
    pub fn per_claim_counts(&self) -> Vec<(String, Summary)> {
        let mut order: Vec<String> = Vec::new();
        let mut counts: std::collections::HashMap<String, Summary> =
            std::collections::HashMap::new();
        for o in &self.outcomes {
            if !counts.contains_key(&o.claim) {
                order.push(o.claim.clone());
            }
            let c = counts.entry(o.claim.clone()).or_default();
            match o.verdict {
                Verdict::Holds => c.holds += 1,
                Verdict::Fails => c.fails += 1,
                Verdict::NotApplicable => c.na += 1,
                Verdict::Marginal => c.marginal += 1,
            }
        }
        order
            .into_iter()
            .map(|id| {
                let c = counts[&id];
                (id, c)
            })
            .collect()
    }
}

/// Suite configuration beyond corpus and claim list.
#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    /// Reading for the minimum-bound claims (C9, C10, C15, C16, C17).
    pub bound_mode: BoundMode,
}

/// Normalizes a claim filter: ids validated against the registry and put in
/// registry order, duplicates dropped. "all" selects everything.
pub fn normalize_claim_ids(requested: &[String]) -> Result<Vec<String>, VerifyError> {
    let registry = claims::registry();
    if requested.iter().any(|r| r == "all") {
        return Ok(registry.iter().map(|c| c.id.to_string()).collect());
    }
    for id in requested {
        if !registry.iter().any(|c| c.id == *id) {
            return Err(VerifyError::UnknownClaimId(id.clone()));
        }
    }
    Ok(registry
        .iter()
        .filter(|c| requested.iter().any(|r| r == c.id))
        .map(|c| c.id.to_string())
        .collect())
}

/// Evaluates every selected claim on every applicable subject of the corpus
/// and aggregates a deterministic report.
pub fn run_suite(
    corpus: &[GraphClass],
    claim_ids: &[String],
    opts: SuiteOptions,
) -> Result<Report, VerifyError> {
    let ids = normalize_claim_ids(claim_ids)?;
    let mut outcomes = Vec::new();

    // identity claims carry their own grids and run once per suite
    for id in &ids {
        if claim_info(id).expect("validated").kind == ClaimKind::Identity {
            outcomes.extend(claims::evaluate_identity(id));
        }
    }

    for class in corpus {
        let graphs = class.graphs()?;
        let declared_parts = class.declared_parts();
        let label = class.to_string();
        for id in &ids {
            let info = claim_info(id).expect("validated");
            let runs_per_graph =
                info.kind == ClaimKind::PerGraph || id == "C8";
            if runs_per_graph {
                let per_graph: Vec<Vec<ClaimOutcome>> =
                    crate::exec::map_range(0..graphs.len(), |i| {
                        let ctx = SubjectCtx {
                            label: format!("{label}[{i}]"),
                            declared_parts,
                            class_graphs: Some(&graphs),
                        };
                        claims::evaluate_per_graph(id, &graphs[i], &ctx)
                    });
                outcomes.extend(per_graph.into_iter().flatten());
            } else if info.kind != ClaimKind::Identity {
                outcomes.extend(claims::evaluate_on_class(id, class, &graphs, opts.bound_mode));
            }
        }
    }

    let mut summary = Summary::default();
    for o in &outcomes {
        match o.verdict {
            Verdict::Holds => summary.holds += 1,
            Verdict::Fails => summary.fails += 1,
            Verdict::NotApplicable => summary.na += 1,
            Verdict::Marginal => summary.marginal += 1,
        }
    }
    let seed = corpus.iter().find_map(|c| match c {
        GraphClass::Random { seed, .. } => Some(*seed),
        _ => None,
    });
    Ok(Report {
        run: RunMeta {
            corpus: corpus.iter().map(|c| c.to_string()).collect(),
            claims: ids,
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
        },
        outcomes,
        extremal: Vec::new(),
        summary,
    })
}

/// First `limit` FAILS outcomes of one claim over a corpus, in canonical
/// corpus order.
pub fn find_counterexamples(
    claim_id: &str,
    corpus: &[GraphClass],
    limit: usize,
) -> Result<Vec<ClaimOutcome>, VerifyError> {
    let report = run_suite(corpus, &[claim_id.to_string()], SuiteOptions::default())?;
    Ok(report
        .outcomes
        .into_iter()
        .filter(|o| o.verdict == Verdict::Fails)
        .take(limit)
        .collect())
}

fn witness_fails(claim_id: &str, g: &Graph, parts: Option<(usize, usize)>) -> Option<bool> {
    replay_witness(claim_id, g, parts)
        .map(|outs| outs.iter().any(|o| o.verdict == Verdict::Fails))
}

/// Greedy witness shrinking: repeatedly applies the first single-edge or
/// single-vertex deletion (lexicographic order) that keeps the claim
/// failing and its guard satisfied; stops at a local minimum.
pub fn shrink_counterexample(
    g: &Graph,
    claim_id: &str,
    declared_parts: Option<(usize, usize)>,
) -> Result<Graph, VerifyError> {
    if claim_info(claim_id).is_none() {
        return Err(VerifyError::UnknownClaimId(claim_id.to_string()));
    }
    match witness_fails(claim_id, g, declared_parts) {
        None => {
            return Err(VerifyError::NotAFailure(format!(
                "{claim_id} has no per-graph replay predicate"
            )))
        }
        Some(false) => {
            return Err(VerifyError::NotAFailure(format!(
                "witness does not fail {claim_id}"
            )))
        }
        Some(true) => {}
    }
    // class-extremal witnesses stay inside the claim instance they refuted:
    // the original order (and declared parts) are part of the guard, so a
    // move that changes them is rejected. per-graph claims re-derive their
    // own guards on each candidate.
    let class_pinned = claim_info(claim_id)
        .map(|c| c.kind == ClaimKind::ClassExtremal)
        .unwrap_or(false);
    let pinned_n = g.n();
    let still_fails = |candidate: &Graph, parts: Option<(usize, usize)>| {
        if class_pinned && candidate.n() != pinned_n {
            return false;
        }
        witness_fails(claim_id, candidate, parts) == Some(true)
    };
    let mut current = g.clone();
    let mut current_parts = declared_parts;
    'outer: loop {
        for (u, v) in current.edges() {
            let pairs: Vec<(usize, usize)> = current
                .edges()
                .into_iter()
                .filter(|&e| e != (u, v))
                .collect();
            let candidate =
                Graph::from_edge_list(current.n(), &pairs).expect("deletion stays valid");
            if still_fails(&candidate, current_parts) {
                current = candidate;
                continue 'outer;
            }
        }
        if current.n() > 1 {
            // vertex deletion shifts labels, so declared part roles stop
            // applying; replay then derives parts from the 2-coloring
            for victim in 0..current.n() {
                let pairs: Vec<(usize, usize)> = current
                    .edges()
                    .into_iter()
                    .filter(|&(u, v)| u != victim && v != victim)
                    .map(|(u, v)| {
                        let shift = |x: usize| if x > victim { x - 1 } else { x };
                        (shift(u), shift(v))
                    })
                    .collect();
                let candidate = Graph::from_edge_list(current.n() - 1, &pairs)
                    .expect("deletion stays valid");
                if still_fails(&candidate, None) {
                    current = candidate;
                    current_parts = None;
                    continue 'outer;
                }
            }
        }
        return Ok(current);
    }
}
