//! Degree-based irregularity indices.
//!
//! Everything here is exact integer arithmetic except [`general_albertson`],
//! whose p-th root is intrinsically real. The two total-irregularity routes
//! (pairwise definition and the rank formula) are kept separate on purpose:
//! their agreement is one of the identities the test suite checks.

use crate::graph::{DegreeSequence, Graph};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantError {
    /// sigma2 is undefined on complete graphs.
    CompleteGraph,
    /// general Albertson index needs p > 0.
    NonPositiveP,
    /// Caterpillar spine with an interior degree < 2 or end degree < 1.
    InvalidSpine(String),
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::CompleteGraph => {
                write!(f, "sigma2 undefined: graph is complete")
            }
            InvariantError::NonPositiveP => write!(f, "exponent p must be positive"),
            InvariantError::InvalidSpine(why) => write!(f, "invalid spine: {why}"),
        }
    }
}

impl std::error::Error for InvariantError {}

/// Albertson index: sum over edges of |deg(u) - deg(v)|.
pub fn albertson(g: &Graph) -> u64 {
    g.edges()
        .iter()
        .map(|&(u, v)| g.degree(u).abs_diff(g.degree(v)) as u64)
        .sum()
}

/// Sigma index: sum over edges of (deg(u) - deg(v))^2.
pub fn sigma(g: &Graph) -> u64 {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let d = g.degree(u).abs_diff(g.degree(v)) as u64;
            d * d
        })
        .sum()
}

/// General Albertson index: (sum |deg(u)-deg(v)|^p)^(1/p) for real p > 0.
/// Reduces to [`albertson`] at p = 1 and to sqrt([`sigma`]) at p = 2.
pub fn general_albertson(g: &Graph, p: f64) -> Result<f64, InvariantError> {
    if p.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
        return Err(InvariantError::NonPositiveP);
    }
    let total: f64 = g
        .edges()
        .iter()
        .map(|&(u, v)| (g.degree(u).abs_diff(g.degree(v)) as f64).powf(p))
        .sum();
    Ok(total.powf(1.0 / p))
}

/// Total irregularity by its definition: sum over all unordered vertex
/// pairs of |deg(u) - deg(v)|.
pub fn total_irregularity_pairwise(g: &Graph) -> u64 {
    let deg = g.degrees();
    let mut total = 0u64;
    for i in 0..deg.len() {
        for j in (i + 1)..deg.len() {
            total += deg[i].abs_diff(deg[j]) as u64;
        }
    }
    total
}

/// Total irregularity by the rank formula 2(n+1)m - 2 * sum(i * d_i) over the
/// descending degree sequence with 1-based ranks. Must agree with
/// [`total_irregularity_pairwise`] on every graph.
pub fn total_irregularity_formula(g: &Graph) -> u64 {
    let ds = DegreeSequence::of(g);
    let n = g.n() as i128;
    let m = g.m() as i128;
    let ranked: i128 = ds
        .degrees()
        .iter()
        .enumerate()
        .map(|(i, &d)| (i as i128 + 1) * d as i128)
        .sum();
    let value = 2 * (n + 1) * m - 2 * ranked;
    debug_assert!(value >= 0);
    value as u64
}

/// First Zagreb index: sum of squared degrees.
pub fn zagreb_m1(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| (d as u64) * (d as u64)).sum()
}

/// Second Zagreb index: sum over edges of deg(u) * deg(v).
pub fn zagreb_m2(g: &Graph) -> u64 {
    g.edges()
        .iter()
        .map(|&(u, v)| g.degree(u) as u64 * g.degree(v) as u64)
        .sum()
}

/// Minimum degree sum over non-adjacent distinct vertex pairs, including
/// pairs in different components. Undefined (error) on complete graphs.
pub fn sigma2_min_nonadjacent(g: &Graph) -> Result<u64, InvariantError> {
    if g.is_complete() {
        return Err(InvariantError::CompleteGraph);
    }
    let deg = g.degrees();
    let mut best = u64::MAX;
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if !g.has_edge(u, v) {
                best = best.min(deg[u] as u64 + deg[v] as u64);
            }
        }
    }
    Ok(best)
}

/// Literal reading of the sigma2 set-builder, which repeats deg(u): the
/// minimum of 2*deg(u) over vertices u in a non-adjacent pair. Kept for
/// audit next to the standard reading above.
pub fn sigma2_literal_repeated(g: &Graph) -> Result<u64, InvariantError> {
    if g.is_complete() {
        return Err(InvariantError::CompleteGraph);
    }
    let deg = g.degrees();
    let mut best = u64::MAX;
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            if !g.has_edge(u, v) {
                best = best.min(2 * deg[u] as u64).min(2 * deg[v] as u64);
            }
        }
    }
    Ok(best)
}

/// Average degree as the exact rational 2m/n.
pub fn average_degree(g: &Graph) -> BigRational {
    BigRational::new(BigInt::from(2 * g.m()), BigInt::from(g.n()))
}

/// Closed form for the Albertson index of the caterpillar realized from an
/// ordered spine degree list (d_1, ..., d_k):
///
/// (d_k - 1)^2 + (d_1 - 1)^2 + sum_{i=2}^{k-1} (d_i - 1)(d_i - 2)
///   + sum_{i=1}^{k-1} |d_i - d_{i+1}|
///
/// Ends need d >= 1, interior vertices d >= 2 (the construction hangs
/// d_i - 2 pendant leaves on interior spine vertices, d - 1 on ends).
pub fn caterpillar_irr_closed_form(spine: &[u32]) -> Result<u64, InvariantError> {
    check_spine(spine)?;
    let k = spine.len();
    let d1 = spine[0] as u64;
    let dk = spine[k - 1] as u64;
    let mut total = (dk - 1) * (dk - 1) + (d1 - 1) * (d1 - 1);
    for &d in &spine[1..k - 1] {
        let d = d as u64;
        total += (d - 1) * (d - 2);
    }
    for w in spine.windows(2) {
        total += w[0].abs_diff(w[1]) as u64;
    }
    Ok(total)
}

pub(crate) fn check_spine(spine: &[u32]) -> Result<(), InvariantError> {
    if spine.len() < 2 {
        return Err(InvariantError::InvalidSpine("length must be >= 2".into()));
    }
    if spine[0] < 1 || spine[spine.len() - 1] < 1 {
        return Err(InvariantError::InvalidSpine("end degree must be >= 1".into()));
    }
    if spine[1..spine.len() - 1].iter().any(|&d| d < 2) {
        return Err(InvariantError::InvalidSpine(
            "interior degree must be >= 2".into(),
        ));
    }
    Ok(())
}

/// All indices of one graph, computed in one place. `sigma2` is absent when
/// the graph is complete.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantBundle {
    pub n: usize,
    pub m: usize,
    pub min_degree: u32,
    pub max_degree: u32,
    pub irr: u64,
    pub sigma: u64,
    pub irr_t: u64,
    pub m1: u64,
    pub m2: u64,
    pub sigma2: Option<u64>,
    pub deg_ave: BigRational,
}

pub fn invariant_bundle(g: &Graph) -> InvariantBundle {
    let ds = DegreeSequence::of(g);
    InvariantBundle {
        n: g.n(),
        m: g.m(),
        min_degree: ds.min_degree(),
        max_degree: ds.max_degree(),
        irr: albertson(g),
        sigma: sigma(g),
        irr_t: total_irregularity_pairwise(g),
        m1: zagreb_m1(g),
        m2: zagreb_m2(g),
        sigma2: sigma2_min_nonadjacent(g).ok(),
        deg_ave: average_degree(g),
    }
}
